"""Extremal quantities and ratio experiments over ordinary reduced polygons.

Enclosing and inscribed disks are found by direct descent in the Klein chart
(the objectives are geodesically convex resp. concave), and the grid scan
records diameter/thickness ratios together with perimeter, area and the two
radii.  Expected-but-unproved ratio bounds are logged as findings, never
raised: the scan is evidence gathering, not a proof checker.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .corpus import perturbed_polygon
from .errors import NumericalError
from .hcore import HPoint, chart_to_hyperboloid, unit_timelike
from .polygon import ConvexPolygon, area, make_polygon, perimeter
from .reduced import regular_ngon_with_thickness, solve_ordinary_reduced
from .width import diameter, thickness

log = logging.getLogger(__name__)

DISK_TOL = 1e-9

_MINK_DIAG = np.array([1.0, 1.0, -1.0])

# Compass directions for the refinement phase of the disk searches.
_COMPASS = np.array([
    [1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0],
    [1.0, 1.0], [1.0, -1.0], [-1.0, 1.0], [-1.0, -1.0],
]) / np.array([1.0, 1.0, 1.0, 1.0, math.sqrt(2), math.sqrt(2), math.sqrt(2), math.sqrt(2)])[:, None]


def _klein_to_vec(k: np.ndarray) -> np.ndarray:
    d = math.sqrt(1.0 - k[0] * k[0] - k[1] * k[1])
    return np.array([k[0] / d, k[1] / d, 1.0 / d])


def _descend(f: Callable[[np.ndarray], float],
             subgradient_target: Callable[[np.ndarray], np.ndarray],
             x0: np.ndarray, step0: float) -> tuple[np.ndarray, float]:
    """Minimize f over the open Klein disk by diminishing-step descent.

    Each scale first tries the move toward the subgradient target (for the
    minimax objectives: toward the farthest vertex, or away from the nearest
    side), then the eight compass directions; the step halves whenever no
    candidate improves.  Runs until the step underflows the coordinate noise
    floor.
    """
    x = x0.copy()
    fx = f(x)
    step = step0
    budget = 200_000  # safety cap; descent normally ends far earlier
    while step > 1e-14 and budget > 0:
        budget -= 1
        improved = False
        target = subgradient_target(x)
        norm = np.hypot(*(target - x)) if target is not None else 0.0
        candidates = []
        if norm > 1e-15:
            candidates.append((target - x) / norm)
        candidates.extend(_COMPASS)
        for d in candidates:
            xt = x + step * d
            if xt[0] * xt[0] + xt[1] * xt[1] >= 1.0 - 1e-12:
                continue
            ft = f(xt)
            if ft < fx:
                x, fx = xt, ft
                improved = True
                break
        if not improved:
            step *= 0.5
    return x, fx


def _klein_of_vec(c: np.ndarray) -> np.ndarray:
    return c[:2] / c[2]


_ACTIVE_LADDER = (1e-12, 1e-9, 1e-6, 1e-3, 1e-1)


def _polish_minimax(f: Callable[[np.ndarray], float],
                    values_at: Callable[[np.ndarray], np.ndarray],
                    candidates_for: Callable[[list[int]], list[np.ndarray]],
                    x: np.ndarray, fx: float) -> tuple[np.ndarray, float]:
    """Equalization polish for a stalled minimax descent.

    Descent with fixed directions can wedge inside the narrow cone between
    two nearly tied constraints; equalizing over the (small) active set jumps
    straight to the balanced point.  A candidate is accepted only when it
    strictly improves f, so this never degrades the descent result.
    """
    while True:
        vals = values_at(x)
        top = float(np.max(vals))
        order = [int(i) for i in np.argsort(-vals)]
        improved = False
        for eps in _ACTIVE_LADDER:
            active = [i for i in order if vals[i] >= top - eps][:8]
            if len(active) < 2:
                continue
            for cand in candidates_for(active):
                if cand is None:
                    continue
                k = _klein_of_vec(cand)
                if k[0] * k[0] + k[1] * k[1] >= 1.0 - 1e-12:
                    continue
                fc = f(k)
                if fc < fx:
                    x, fx = k, fc
                    improved = True
                    break
            if improved:
                break
        if not improved:
            return x, fx


def circumdisk(V: ConvexPolygon) -> tuple[HPoint, float]:
    """Smallest disk containing all vertices of V.

    Minimizes the farthest-vertex distance, a geodesically convex function,
    by diminishing-step descent from the Klein chart centroid, alternating
    with an active-set equalization polish (midpoint of a tied pair, or the
    equidistant point of a tied triple).  Every vertex ends up within
    radius + DISK_TOL of the returned center.
    """
    g = V.mink_rows
    m = V.vertex_matrix

    def radius_at(x: np.ndarray) -> float:
        c = _klein_to_vec(x)
        return math.acosh(max(float(np.max(-(g @ c))), 1.0))

    def distances(x: np.ndarray) -> np.ndarray:
        c = _klein_to_vec(x)
        return np.arccosh(np.maximum(-(g @ c), 1.0))

    def toward_farthest(x: np.ndarray) -> np.ndarray:
        c = _klein_to_vec(x)
        return V.klein[int(np.argmax(-(g @ c)))]

    def candidates(active: list[int]) -> list[np.ndarray]:
        cands: list[np.ndarray] = []
        for a in range(len(active)):
            for b in range(a + 1, len(active)):
                i, j = active[a], active[b]
                cands.append(unit_timelike(m[i] + m[j]).vec)
                for cidx in range(b + 1, len(active)):
                    k = active[cidx]
                    try:
                        w = np.linalg.solve(g[[i, j, k]], -np.ones(3))
                    except np.linalg.LinAlgError:
                        continue
                    if w[2] ** 2 - w[0] ** 2 - w[1] ** 2 <= 0.0:
                        continue
                    cands.append(unit_timelike(w).vec)
        return cands

    x0 = V.klein.mean(axis=0)
    spread = float(np.max(np.linalg.norm(V.klein - x0, axis=1)))
    x, r = _descend(radius_at, toward_farthest, x0, max(spread, 1e-3))
    for _ in range(4):
        x2, r2 = _polish_minimax(radius_at, distances, candidates, x, r)
        x2, r2 = _descend(radius_at, toward_farthest, x2, 1e-3)
        if r2 >= r - 1e-15:
            x, r = x2, r2
            break
        x, r = x2, r2
    return chart_to_hyperboloid(x[0], x[1], "klein"), r


def indisk(V: ConvexPolygon) -> tuple[HPoint, float]:
    """Largest disk inscribed in V.

    Maximizes the smallest distance to the side lines, concave over the
    interior, by diminishing-step ascent from the chart centroid plus the
    same equalization polish (tied side pairs are balanced along their
    bisector geodesic, tied triples by an exact equidistance solve).
    """
    normals = V.side_normals

    def neg_clearance(x: np.ndarray) -> float:
        c = _klein_to_vec(x) * _MINK_DIAG
        return -math.asinh(float(np.min(normals @ c)))

    def neg_side_distances(x: np.ndarray) -> np.ndarray:
        c = _klein_to_vec(x) * _MINK_DIAG
        return -np.arcsinh(normals @ c)

    def away_from_nearest(x: np.ndarray) -> np.ndarray:
        c = _klein_to_vec(x)
        j = int(np.argmin(normals @ (c * _MINK_DIAG)))
        u = normals[j]
        s = u[0] * c[0] + u[1] * c[1] - u[2] * c[2]
        fvec = c - s * u
        fk = fvec[:2] / fvec[2]
        return x + (x - fk)

    def candidates(active: list[int]) -> list[np.ndarray]:
        cands: list[np.ndarray] = []
        for a in range(len(active)):
            for b in range(a + 1, len(active)):
                i, j = active[a], active[b]
                cands.append(_bisector_optimum(normals, i, j, neg_clearance))
                for cidx in range(b + 1, len(active)):
                    k = active[cidx]
                    try:
                        w = np.linalg.solve(normals[[i, j, k]] * _MINK_DIAG,
                                            np.ones(3))
                    except np.linalg.LinAlgError:
                        continue
                    if w[2] ** 2 - w[0] ** 2 - w[1] ** 2 <= 0.0:
                        continue
                    cands.append(unit_timelike(w).vec)
        return cands

    x0 = V.klein.mean(axis=0)
    x, negr = _descend(neg_clearance, away_from_nearest, x0, 0.25)
    for _ in range(4):
        x2, negr2 = _polish_minimax(neg_clearance, neg_side_distances, candidates,
                                    x, negr)
        x2, negr2 = _descend(neg_clearance, away_from_nearest, x2, 1e-3)
        if negr2 >= negr - 1e-15:
            x, negr = x2, negr2
            break
        x, negr = x2, negr2
    return chart_to_hyperboloid(x[0], x[1], "klein"), -negr


def _bisector_optimum(normals: np.ndarray, i: int, j: int,
                      neg_clearance: Callable[[np.ndarray], float]) -> np.ndarray | None:
    """Best point on the bisector geodesic of two side lines.

    Points equidistant (with sign) from lines i and j satisfy
    B(c, u_i - u_j) = 0, a geodesic; the clearance is maximized along it by
    sampling plus golden-section refinement.
    """
    w = normals[i] - normals[j]
    nrm = w[0] * w[0] + w[1] * w[1] - w[2] * w[2]
    if nrm <= 1e-14:
        return None
    w = w / math.sqrt(nrm)
    wmink = w * _MINK_DIAG
    origin = np.array([0.0, 0.0, 1.0])
    s = float(origin @ wmink)
    p0v = origin - s * w
    p0 = unit_timelike(p0v).vec
    d = np.cross(w, p0)
    d[2] = -d[2]
    dn = d[0] * d[0] + d[1] * d[1] - d[2] * d[2]
    if dn <= 0.0:
        return None
    d = d / math.sqrt(dn)

    def point(tau: float) -> np.ndarray:
        return math.cosh(tau) * p0 + math.sinh(tau) * d

    taus = np.linspace(-3.0, 3.0, 61)
    vals = [neg_clearance(_klein_of_vec(point(t))) for t in taus]
    k = int(np.argmin(vals))
    lo, hi = taus[max(k - 1, 0)], taus[min(k + 1, len(taus) - 1)]
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    for _ in range(80):
        c1 = b - invphi * (b - a)
        c2 = a + invphi * (b - a)
        if neg_clearance(_klein_of_vec(point(c1))) < neg_clearance(_klein_of_vec(point(c2))):
            b = c2
        else:
            a = c1
    return point(0.5 * (a + b))


def rhombus(a: float, b: float) -> ConvexPolygon:
    """Convex hull of two perpendicular segments crossing at their midpoints.

    a and b are the half-lengths of the diagonals along the x and y axis
    geodesics.
    """
    if not (a > 0.0 and b > 0.0):
        raise ValueError("diagonal half-lengths must be positive")
    return make_polygon([
        HPoint(math.sinh(a), 0.0, math.cosh(a)),
        HPoint(0.0, math.sinh(b), math.cosh(b)),
        HPoint(-math.sinh(a), 0.0, math.cosh(a)),
        HPoint(0.0, -math.sinh(b), math.cosh(b)),
    ])


@dataclass(frozen=True)
class ScanRow:
    """One polygon of the ratio experiment grid."""

    n: int
    delta: float
    polygon_id: str
    diameter: float
    ratio: float
    perimeter: float
    area: float
    circumradius: float
    inradius: float


def _scan_row(P: ConvexPolygon, n: int, polygon_id: str) -> ScanRow:
    thick = thickness(P).thickness
    diam, _ = diameter(P)
    _, circ_r = circumdisk(P)
    _, in_r = indisk(P)
    row = ScanRow(n=n, delta=thick, polygon_id=polygon_id, diameter=diam,
                  ratio=diam / thick, perimeter=perimeter(P), area=area(P),
                  circumradius=circ_r, inradius=in_r)
    if not (1.0 < row.ratio < 2.0):
        log.warning("finding: ratio %.12g outside (1, 2) for %s", row.ratio, polygon_id)
    return row


def ratio_scan(ns: Sequence[int], deltas: Sequence[float], perturbations: int = 0,
               rng_seed: int = 0) -> list[ScanRow]:
    """Diameter/thickness ratios over a grid of regular and solved polygons.

    For each (n, delta) the regular polygon of that thickness is scanned,
    followed by ``perturbations`` solver-generated non-regular ordinary
    reduced polygons seeded from jittered copies of it.  Solver failures are
    logged and skipped without aborting the scan; whether non-regular
    diameters exceed the regular one is logged as evidence.
    """
    rng = np.random.default_rng(rng_seed)
    rows: list[ScanRow] = []
    for n in ns:
        for delta in deltas:
            reg = regular_ngon_with_thickness(n, delta)
            reg_row = _scan_row(reg, n, f"regular-n{n}-d{delta:g}")
            rows.append(reg_row)
            for k in range(perturbations):
                pid = f"perturbed-n{n}-d{delta:g}-{k:02d}"
                try:
                    seed_poly = perturbed_polygon(reg, rng)
                    sol = solve_ordinary_reduced(seed_poly, delta)
                except NumericalError as exc:
                    log.warning("skipping %s: %s", pid, exc)
                    continue
                row = _scan_row(sol, n, pid)
                rows.append(row)
                if row.diameter < reg_row.diameter - 1e-9:
                    log.warning(
                        "finding: non-regular diameter %.12g below regular %.12g (%s)",
                        row.diameter, reg_row.diameter, pid)
                else:
                    log.info("evidence: non-regular diameter %.12g >= regular %.12g (%s)",
                             row.diameter, reg_row.diameter, pid)
    return rows
