"""Monotonicity, extrema and one-sided derivatives of edge restrictions.

Everything here works on the restriction of a harmonic function to an edge
of the outer triangle, mapped onto [0, 1] via the edge permutations of
:mod:`sgharmonic.gasket`.  The classifications are decided by exact
rational (or Q(sqrt13)) comparisons only.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .exactarith import QuadExt
from .gasket import (
    BoundaryValues,
    CellAddress,
    bottom_cells,
    cell_values,
    child,
    extend_once,
    is_dyadic,
    on_edge,
)


class MonotonicityClass(enum.Enum):
    CONSTANT = "Constant"
    STRICTLY_INCREASING = "StrictlyIncreasing"
    STRICTLY_DECREASING = "StrictlyDecreasing"
    NON_MONOTONE = "NonMonotone"


class DerivClass(enum.Enum):
    PLUS_INFINITY = "PlusInfinity"
    MINUS_INFINITY = "MinusInfinity"
    ZERO = "Zero"


def _classify_triple(t: BoundaryValues) -> MonotonicityClass:
    a, b, g = t.alpha, t.beta, t.gamma
    if a == b == g:
        return MonotonicityClass.CONSTANT
    if b < g and 2 * b - g <= a <= 2 * g - b:
        return MonotonicityClass.STRICTLY_INCREASING
    if b > g and 2 * g - b <= a <= 2 * b - g:
        return MonotonicityClass.STRICTLY_DECREASING
    return MonotonicityClass.NON_MONOTONE


def classify_edge(bv: BoundaryValues, edge: str = "bottom") -> MonotonicityClass:
    """Monotonicity of the restriction to an edge: the increasing case is
    exactly beta < gamma together with 2*beta - gamma <= alpha <= 2*gamma - beta
    (closed inequalities), after mapping the edge onto [0, 1]."""
    return _classify_triple(on_edge(bv, edge))


def dsv_check(bv: BoundaryValues, edge: str = "bottom") -> bool:
    """The midpoint-ratio sufficient conditions for a strictly increasing
    restriction: beta < f(mid) < gamma and (gamma - f(mid))/(f(mid) - beta)
    in [1/4, 4].  Equivalent to the closed-form test in classify_edge."""
    t = on_edge(bv, edge)
    mid = extend_once(t)[0]
    if not (t.beta < mid < t.gamma):
        return False
    ratio = (t.gamma - mid) / (mid - t.beta)
    return Fraction(1, 4) <= ratio <= 4


def simultaneous_monotone(bv: BoundaryValues) -> bool:
    """True iff the restrictions to all three edges are strictly monotone:
    one of 2a = b+g, 2b = a+g, 2g = a+b holds."""
    if bv.is_constant():
        raise ValueError("simultaneous monotonicity is defined for nonconstant functions")
    a, b, g = bv.as_tuple()
    return 2 * a == b + g or 2 * b == a + g or 2 * g == a + b


@dataclass(frozen=True)
class ExtremumResult:
    """Bracket for the unique extremum of a non-monotone edge restriction.

    When the extremum sits exactly at a junction point, lo == hi == junction;
    otherwise [lo, hi] is a dyadic interval of width 2^-depth.
    """

    kind: str  # "max" or "min"
    lo: Fraction
    hi: Fraction
    junction: Fraction | None = None


def locate_extremum(bv: BoundaryValues, edge: str, depth: int) -> ExtremumResult:
    """Bisect a non-monotone edge restriction down to its unique extremum."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    t = on_edge(bv, edge)
    if _classify_triple(t) is not MonotonicityClass.NON_MONOTONE:
        raise ValueError("restriction is monotone; no extremum to locate")
    lo, hi = Fraction(0), Fraction(1)
    kind = None
    inc = MonotonicityClass.STRICTLY_INCREASING
    dec = MonotonicityClass.STRICTLY_DECREASING
    non = MonotonicityClass.NON_MONOTONE
    for _ in range(depth):
        left, right = child(t, 1), child(t, 2)
        cl, cr = _classify_triple(left), _classify_triple(right)
        mid = (lo + hi) / 2
        if MonotonicityClass.CONSTANT in (cl, cr):
            raise ArithmeticError(
                f"constant sub-cell at [{lo}, {hi}] for nonconstant input")
        if cl is non:
            if cr not in (inc, dec):
                raise ArithmeticError(f"two non-monotone children at [{lo}, {hi}]")
            kind = kind or ("max" if cr is dec else "min")
            t, hi = left, mid
        elif cr is non:
            kind = kind or ("max" if cl is inc else "min")
            t, lo = right, mid
        else:
            if cl is inc and cr is dec:
                return ExtremumResult("max", mid, mid, mid)
            if cl is dec and cr is inc:
                return ExtremumResult("min", mid, mid, mid)
            raise ArithmeticError(
                f"children both monotone in the same direction at [{lo}, {hi}]")
    return ExtremumResult(kind, lo, hi)


def _cell_at(t: BoundaryValues, k: int, m: int) -> BoundaryValues:
    """Depth-m cell covering [k/2^m, (k+1)/2^m] of the bottom edge of t."""
    for i in range(m - 1, -1, -1):
        t = child(t, 2 if (k >> i) & 1 else 1)
    return t


def _sign_class(diff: Fraction) -> DerivClass:
    if diff == 0:
        return DerivClass.ZERO
    return DerivClass.PLUS_INFINITY if diff > 0 else DerivClass.MINUS_INFINITY


def junction_derivative(
    bv: BoundaryValues, edge: str, position: Fraction
) -> tuple[DerivClass | None, DerivClass | None]:
    """One-sided derivative classes (left, right) at a dyadic edge point.

    With (a, b, c) the corner triple of the cell approached on the right of
    the point (the point being its bottom-left corner), the successive
    difference quotients toward the point behave like
    (6/5)^j * (a + c - 2b) plus a (2/5)^j term, so the right class is the
    sign of a + c - 2b (Zero when it vanishes).  Mirrored on the left side:
    the class is the sign of 2c - a - b on the cell whose bottom-right
    corner is the point.  The sign is invariant under descending further
    (each level scales it by 3/5), so the cell depth may be taken minimal.
    """
    x = Fraction(position)
    if not (0 <= x <= 1):
        raise ValueError(f"position {x} outside [0, 1]")
    if not is_dyadic(x):
        raise ValueError(f"position {x} is not dyadic")
    t = on_edge(bv, edge)
    m = x.denominator.bit_length() - 1
    k = x.numerator * (2 ** m // x.denominator)
    left = right = None
    if x < 1:
        c = _cell_at(t, k, m)
        if c.is_constant():
            raise ArithmeticError("restriction constant on the right approach cell")
        right = _sign_class(c.alpha + c.gamma - 2 * c.beta)
    if x > 0:
        c = _cell_at(t, k - 1, m)
        if c.is_constant():
            raise ArithmeticError("restriction constant on the left approach cell")
        left = _sign_class(2 * c.gamma - c.alpha - c.beta)
    return (left, right)


#: Stable labels for the corners of the outer triangle.
VERTICES = ("p0", "p1", "p2")

ZeroJunction = tuple  # ("vertex", "p0") or (edge_name, Fraction position)


def count_zero_junctions(
    bv: BoundaryValues, depth: int
) -> tuple[int, list[ZeroJunction]]:
    """Scan every junction point of the contour up to `depth` for a Zero
    one-sided derivative class; geometric points are counted once."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if bv.is_constant():
        raise ValueError("derivative classes are undefined for constant functions")
    a, b, g = bv.as_tuple()
    zeros: list[ZeroJunction] = []
    if 2 * a == b + g:
        zeros.append(("vertex", "p0"))
    if 2 * b == a + g:
        zeros.append(("vertex", "p1"))
    if 2 * g == a + b:
        zeros.append(("vertex", "p2"))
    n = 2 ** depth
    for edge in ("bottom", "left", "right"):
        cells = bottom_cells(on_edge(bv, edge), depth)
        for k in range(1, n):
            lc, rc = cells[k - 1], cells[k]
            if (2 * lc.gamma == lc.alpha + lc.beta
                    or rc.alpha + rc.gamma == 2 * rc.beta):
                zeros.append((edge, Fraction(k, n)))
    return len(zeros), zeros


# --------------------------------------------------------------------------
# Third-point machinery: the nested triangles closing in on x = 1/3 of the
# bottom edge, their exact recursion, and the Q(sqrt13) closed forms.
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class TriangleSequence:
    """Corner data of the m-th nested triangle approaching x = 1/3."""

    m: int
    alpha_m: Fraction
    beta_m: Fraction
    gamma_m: Fraction
    p1_m: Fraction  # position of the beta_m corner: 1/3 - (1/3)(1/4)^m
    p2_m: Fraction  # position of the gamma_m corner: 1/3 + (2/3)(1/4)^m


def conserved_combination(bv: BoundaryValues) -> Fraction:
    """5*alpha + 15*beta + 7*gamma, invariant along the nested triangles."""
    return 5 * bv.alpha + 15 * bv.beta + 7 * bv.gamma


def third_point_value(bv: BoundaryValues) -> Fraction:
    """f(1/3) on the bottom edge: (5*alpha + 15*beta + 7*gamma)/27."""
    return conserved_combination(bv) / 27


def triangle_sequence(bv: BoundaryValues, m: int) -> TriangleSequence:
    """Exact corner values of the m-th nested triangle (each step is the
    right third of the left third, i.e. the cell step "12")."""
    if m < 0:
        raise ValueError("m must be >= 0")
    a, b, g = bv.as_tuple()
    for _ in range(m):
        a, b, g = ((6 * a + 13 * b + 6 * g) / 25,
                   (4 * a + 16 * b + 5 * g) / 25,
                   (a + 2 * b + 2 * g) / 5)
    q = Fraction(1, 4 ** m)
    third = Fraction(1, 3)
    return TriangleSequence(m, a, b, g, third - third * q, third + 2 * third * q)


@dataclass(frozen=True)
class ThirdPointContext:
    """Constants of the Q(sqrt13) solution of the nested-triangle recursion."""

    c: Fraction
    u: Fraction
    v: QuadExt
    s: QuadExt
    h: QuadExt
    w: QuadExt
    t0: QuadExt
    l: QuadExt
    k: QuadExt
    A: QuadExt  # coefficient of h^m in gamma_m
    B: QuadExt  # coefficient of s^m in gamma_m, = k/(s-h)


def third_point_context(bv: BoundaryValues) -> ThirdPointContext:
    c = conserved_combination(bv)
    u = Fraction(10)
    v = QuadExt(1, -1)
    s = QuadExt(Fraction(7, 50), Fraction(1, 50))
    h = (v + 6) / 50
    w = QuadExt(Fraction(9, 25), Fraction(-1, 25)) * c
    t0 = 10 * bv.beta + v * bv.gamma
    l = QuadExt(c) / 25 + w / ((s - 1) * 50)
    k = -(w / (s - 1) + t0) / 50
    B = k / (s - h)
    A = l / (h - 1) - B + bv.gamma
    return ThirdPointContext(c, u, v, s, h, w, t0, l, k, A, B)


def gamma_closed_form(bv: BoundaryValues, m: int) -> Fraction:
    """gamma_m = A*h^m + B*s^m + c/27, evaluated in Q(sqrt13); the sqrt13
    part cancels exactly and the result matches the integer recursion."""
    if m < 0:
        raise ValueError("m must be >= 0")
    ctx = third_point_context(bv)
    val = ctx.A * ctx.h ** m + ctx.B * ctx.s ** m + QuadExt(ctx.c) / 27
    if val.root13_part != 0:
        raise ArithmeticError(f"sqrt13 part failed to cancel: {val}")
    return val.rational_part


def beta_closed_form(bv: BoundaryValues, m: int) -> Fraction:
    if m < 0:
        raise ValueError("m must be >= 0")
    ctx = third_point_context(bv)
    C = (ctx.w / (ctx.s - 1) - ctx.v * ctx.B + ctx.t0) / ctx.u
    D = -(ctx.v / QuadExt(ctx.u)) * ctx.A
    val = C * ctx.s ** m + D * ctx.h ** m + QuadExt(ctx.c) / 27
    if val.root13_part != 0:
        raise ArithmeticError(f"sqrt13 part failed to cancel: {val}")
    return val.rational_part


def third_point_quotients(bv: BoundaryValues, m: int, side: str) -> Fraction:
    """Difference quotient toward x = 1/3 along the nested triangle corners."""
    if m < 1:
        raise ValueError("m must be >= 1")
    seq = triangle_sequence(bv, m)
    f_third = third_point_value(bv)
    third = Fraction(1, 3)
    if side == "right":
        return (seq.gamma_m - f_third) / (seq.p2_m - third)
    if side == "left":
        return (seq.beta_m - f_third) / (seq.p1_m - third)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def third_point_of_subedge(
    bv: BoundaryValues, addr: CellAddress, which: Fraction
) -> tuple[Fraction, Fraction]:
    """Global position and exact value of the 1/3 (or 2/3) point of the
    bottom sub-edge of a {1,2}-word cell; the restriction's derivative
    vanishes there at every scale."""
    if any(ch not in "12" for ch in addr):
        raise ValueError(f"address must be a word over {{1,2}}, got {addr!r}")
    which = Fraction(which)
    if which not in (Fraction(1, 3), Fraction(2, 3)):
        raise ValueError("which must be 1/3 or 2/3")
    m = len(addr)
    k = 0
    for ch in addr:
        k = 2 * k + (1 if ch == "2" else 0)
    position = (k + which) / 2 ** m
    t = cell_values(bv, addr)
    if which == Fraction(1, 3):
        value = third_point_value(t)
    else:
        value = (5 * t.alpha + 7 * t.beta + 15 * t.gamma) / 27
    return (position, value)
