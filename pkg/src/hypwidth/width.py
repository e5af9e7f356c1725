"""Width, thickness and diameter of convex polygons.

The width determined by a supporting line L is the maximum distance from L to
a point of the polygon, which for polygons is attained at a vertex.  Thickness
minimizes and the dual diameter search maximizes that width over the full
family of supporting lines: the n side lines plus, at each vertex, the pencil
of supporting lines rotating between the two adjacent side lines.

Width along a single pencil is continuous but not assumed unimodal: every
pencil is first sampled at PENCIL_SAMPLES equispaced parameters and a
golden-section search then refines around the best sample.  Searches run in a
fixed index order so results are deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotSupporting
from .hcore import HLine, mink
from .polygon import ConvexPolygon

SUPPORT_TOL = 1e-9
SIDE_ATTAIN_TOL = 1e-9
PENCIL_SAMPLES = 64
GOLDEN_TOL = 1e-12

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class WidthReport:
    """Width determined by one supporting line, with the witnessing vertex."""

    line: HLine
    width: float
    farthest_vertex_index: int


@dataclass(frozen=True)
class ThicknessReport:
    """Minimum width over all supporting lines.

    achieved_on_side is the index of a side line attaining the minimum within
    SIDE_ATTAIN_TOL, or None when only a pencil-interior line attains it.
    Ties are not enumerated; one argmin line is reported.
    """

    thickness: float
    argmin_line: HLine
    achieved_on_side: int | None


def _golden_min(f, lo: float, hi: float, tol: float = GOLDEN_TOL):
    """Golden-section minimum of f on [lo, hi]; returns (x, f(x))."""
    a, b = lo, hi
    h = b - a
    if h <= tol:
        x = 0.5 * (a + b)
        return x, f(x)
    n = max(1, int(math.ceil(math.log(tol / h) / math.log(_INVPHI))))
    c = b - _INVPHI * h
    d = a + _INVPHI * h
    yc, yd = f(c), f(d)
    for _ in range(n):
        if yc < yd:
            b, d, yd = d, c, yc
            h *= _INVPHI
            c = b - _INVPHI * h
            yc = f(c)
        else:
            a, c, yc = c, d, yd
            h *= _INVPHI
            d = a + _INVPHI * h
            yd = f(d)
    return (c, yc) if yc < yd else (d, yd)


def _slerp(u0: np.ndarray, u1: np.ndarray, s) -> np.ndarray:
    """Arc interpolation between two unit normals in a vertex tangent plane.

    Both endpoints are interior-positive supporting normals at the same
    vertex, so every interpolant is one as well.  Scalar s gives a 3-vector,
    an array of m parameters a (3, m) matrix.
    """
    s = np.asarray(s, dtype=float)
    omega = math.acos(max(-1.0, min(1.0, mink(u0, u1))))
    if omega < 1e-12:
        if s.ndim == 0:
            return u0.copy()
        return np.repeat(u0[:, None], len(s), axis=1)
    return (np.multiply.outer(u0, np.sin((1.0 - s) * omega))
            + np.multiply.outer(u1, np.sin(s * omega))) / math.sin(omega)


def _pencil(V: ConvexPolygon, i: int) -> tuple[np.ndarray, np.ndarray]:
    """The two adjacent interior-positive side normals meeting at vertex i."""
    normals = V.side_normals
    return normals[(i - 1) % V.n], normals[i % V.n]


def pencil_line(V: ConvexPolygon, i: int, s: float) -> HLine:
    """Supporting line at vertex i, parametrized by s in [0, 1].

    s = 0 gives the side line ending at vertex i, s = 1 the one starting
    there; interior s touch the polygon at vertex i only.
    """
    u0, u1 = _pencil(V, i)
    u = _slerp(u0, u1, float(s))
    return HLine(u[0], u[1], u[2])


def _supported_width(V: ConvexPolygon, u: np.ndarray) -> float:
    """Width over an interior-positive supporting normal (no support check)."""
    return math.asinh(max(float(np.max(V.mink_rows @ u)), 0.0))


def _oriented_support_values(V: ConvexPolygon, L: HLine) -> np.ndarray:
    """B(v_j, u) for all vertices, after checking that L supports V.

    Returned values are flipped to the nonnegative side.  Raises
    NotSupporting when vertices lie strictly on both sides or none touches
    the line.
    """
    b = V.mink_rows @ L.vec
    if np.all(b >= -SUPPORT_TOL):
        pass
    elif np.all(b <= SUPPORT_TOL):
        b = -b
    else:
        raise NotSupporting("polygon has vertices strictly on both sides of the line")
    if float(np.min(b)) > SUPPORT_TOL:
        raise NotSupporting("no polygon vertex touches the line")
    return b


def width_line(V: ConvexPolygon, L: HLine) -> WidthReport:
    """Width of V determined by the supporting line L.

    For a polygon the farthest point from L is always a vertex, so this is a
    maximum of vertex distances.
    """
    b = _oriented_support_values(V, L)
    k = int(np.argmax(b))
    return WidthReport(line=L, width=math.asinh(float(b[k])), farthest_vertex_index=k)


def width_ultraparallel_oracle(V: ConvexPolygon, L: HLine) -> float:
    """Width of V at L via its definition over ultraparallel supporting lines.

    Sweeps the pencils of supporting lines at every vertex, keeps the lines
    ultraparallel to L, and maximizes the distance arccosh(|B(uL, u)|) along
    the common perpendicular by golden-section search per pencil.  Side lines
    are the pencil endpoints, so the full supporting family is covered.
    """
    _oriented_support_values(V, L)
    uL = L.vec

    best = 0.0
    for i in range(V.n):
        u0, u1 = _pencil(V, i)

        def gap(s: float) -> float:
            c = abs(mink(uL, _slerp(u0, u1, s)))
            # 0 whenever the lines are not ultraparallel; continuous in s.
            return math.acosh(c) if c > 1.0 else 0.0

        samples = np.linspace(0.0, 1.0, PENCIL_SAMPLES)
        U = _slerp(u0, u1, samples)
        cs = np.abs(uL[0] * U[0] + uL[1] * U[1] - uL[2] * U[2])
        vals = np.arccosh(np.maximum(cs, 1.0))
        k = int(np.argmax(vals))
        lo = samples[max(k - 1, 0)]
        hi = samples[min(k + 1, PENCIL_SAMPLES - 1)]
        _, neg = _golden_min(lambda s: -gap(s), lo, hi, tol=1e-10)
        best = max(best, float(vals[k]), -neg)
    return best


def _pencil_extremum(V: ConvexPolygon, i: int, sign: float):
    """Min (sign=+1) or max (sign=-1) of width over the pencil at vertex i."""
    u0, u1 = _pencil(V, i)
    samples = np.linspace(0.0, 1.0, PENCIL_SAMPLES)
    U = _slerp(u0, u1, samples)
    vals = np.arcsinh(np.maximum(V.mink_rows @ U, 0.0).max(axis=0))
    k = int(np.argmin(sign * vals))

    def f(s: float) -> float:
        return sign * _supported_width(V, _slerp(u0, u1, s))

    lo = samples[max(k - 1, 0)]
    hi = samples[min(k + 1, PENCIL_SAMPLES - 1)]
    s_star, f_star = _golden_min(f, lo, hi)
    if sign * vals[k] < f_star:
        s_star, f_star = samples[k], sign * vals[k]
    return float(s_star), float(sign * f_star)


def thickness(V: ConvexPolygon) -> ThicknessReport:
    """Minimum width over all supporting lines of V."""
    side_widths = [_supported_width(V, V.side_normals[j]) for j in range(V.n)]

    best_val = math.inf
    best_line: HLine | None = None
    for j in range(V.n):
        if side_widths[j] < best_val:
            best_val = side_widths[j]
            best_line = HLine.from_vec(V.side_normals[j])
    for i in range(V.n):
        s_star, w_star = _pencil_extremum(V, i, +1.0)
        if w_star < best_val:
            best_val = w_star
            best_line = pencil_line(V, i, s_star)

    achieved: int | None = None
    for j in range(V.n):
        if side_widths[j] <= best_val + SIDE_ATTAIN_TOL:
            achieved = j
            best_line = HLine.from_vec(V.side_normals[j])
            break
    return ThicknessReport(thickness=best_val, argmin_line=best_line,
                           achieved_on_side=achieved)


def diameter(V: ConvexPolygon) -> tuple[float, tuple[int, int]]:
    """Maximum vertex distance with a witnessing pair (lowest index pair wins ties)."""
    m = V.vertex_matrix
    cosh = -(V.mink_rows @ m.T)
    best = -math.inf
    pair = (0, 1)
    for i in range(V.n - 1):
        for j in range(i + 1, V.n):
            if cosh[i, j] > best:
                best = cosh[i, j]
                pair = (i, j)
    return math.acosh(max(best, 1.0)), pair


def diameter_via_width(V: ConvexPolygon) -> float:
    """Maximum width over all supporting lines; equals the diameter."""
    best = max(_supported_width(V, V.side_normals[j]) for j in range(V.n))
    for i in range(V.n):
        _, w_star = _pencil_extremum(V, i, -1.0)
        best = max(best, w_star)
    return best
