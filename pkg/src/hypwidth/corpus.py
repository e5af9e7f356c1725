"""Seeded random polygon generators shared by the experiments and the tests."""

from __future__ import annotations

import math

import numpy as np

from .errors import GeometryError, NonConvex
from .hcore import HPoint, geodesic_point, signed_dist
from .polygon import ConvexPolygon, make_polygon, side_line


def _polar_point(r: float, theta: float) -> HPoint:
    sh = math.sinh(r)
    return HPoint(sh * math.cos(theta), sh * math.sin(theta), math.cosh(r))


def random_convex_polygon(rng: np.random.Generator, n: int,
                          radius_range: tuple[float, float] = (0.45, 1.1)) -> ConvexPolygon:
    """Random strictly convex n-gon around the chart origin.

    Vertices sit at well separated angles with mildly varying radii; a draw
    that happens to be non-convex is simply retried.
    """
    for _ in range(500):
        gaps = rng.uniform(0.5, 1.0, size=n)
        angles = 2.0 * math.pi * np.cumsum(gaps) / np.sum(gaps)
        angles += rng.uniform(0.0, 2.0 * math.pi)
        radii = rng.uniform(*radius_range, size=n)
        try:
            return make_polygon([_polar_point(r, t) for r, t in zip(radii, angles)])
        except NonConvex:
            continue
    raise GeometryError("could not draw a convex polygon (bad generator parameters)")


def random_nonequilateral_triangle(rng: np.random.Generator,
                                   min_altitude_spread: float = 0.02) -> ConvexPolygon:
    """Random triangle whose three altitudes clearly differ."""
    for _ in range(500):
        T = random_convex_polygon(rng, 3, radius_range=(0.4, 1.0))
        alts = [abs(signed_dist(T.vertex(i), side_line(T, (i + 1) % 3)))
                for i in range(3)]
        if max(alts) - min(alts) >= min_altitude_spread:
            return T
    raise GeometryError("could not draw a non-equilateral triangle")


def nested_pair(rng: np.random.Generator) -> tuple[ConvexPolygon, ConvexPolygon]:
    """A pair (U, W) of convex polygons with U properly contained in W."""
    n = int(rng.integers(4, 10))
    W = random_convex_polygon(rng, n)
    if rng.random() < 0.5:
        lam = rng.uniform(0.35, 0.8)
        center = W.klein.mean(axis=0)
        shrunk = center + lam * (W.klein - center)
        d = np.sqrt(1.0 - shrunk[:, 0] ** 2 - shrunk[:, 1] ** 2)
        U = make_polygon([HPoint(x / dd, y / dd, 1.0 / dd)
                          for (x, y), dd in zip(shrunk, d)])
    else:
        drop = int(rng.integers(0, n))
        U = make_polygon([W.vertex(i) for i in range(n) if i != drop])
    return U, W


def perturbed_polygon(V: ConvexPolygon, rng: np.random.Generator,
                      radial: float = 0.03, angular: float = 0.02) -> ConvexPolygon:
    """Convex perturbation of V: vertices jittered in polar Klein coordinates.

    radial scales the relative radius jitter, angular the jitter as a
    fraction of the mean angular spacing.  Retries with shrinking magnitude
    until the result is convex.
    """
    k = V.klein
    r = np.hypot(k[:, 0], k[:, 1])
    theta = np.arctan2(k[:, 1], k[:, 0])
    spacing = 2.0 * math.pi / V.n
    for scale in (1.0, 0.5, 0.25, 0.1):
        rr = r * (1.0 + scale * radial * rng.uniform(-1.0, 1.0, size=V.n))
        tt = theta + scale * angular * spacing * rng.uniform(-1.0, 1.0, size=V.n)
        rr = np.clip(rr, 1e-6, 1.0 - 1e-9)
        xs = rr * np.cos(tt)
        ys = rr * np.sin(tt)
        d = np.sqrt(1.0 - rr * rr)
        try:
            return make_polygon([HPoint(x / dd, y / dd, 1.0 / dd)
                                 for x, y, dd in zip(xs, ys, d)])
        except NonConvex:
            continue
    raise GeometryError("perturbation kept breaking convexity")


def clip_vertex_cap(V: ConvexPolygon, k: int, depth: float) -> ConvexPolygon:
    """Cut off a small cap at vertex k with a geodesic line.

    The cut passes through the points at arc length ``depth`` from the vertex
    along its two incident sides, turning an n-gon into an (n+1)-gon.
    """
    n = V.n
    v = V.vertex(k)
    a = geodesic_point(v, V.vertex(k - 1), depth)
    b = geodesic_point(v, V.vertex(k + 1), depth)
    pts = []
    for i in range(n):
        if i % n == k % n:
            pts.extend([a, b])
        else:
            pts.append(V.vertex(i))
    return make_polygon(pts)
