"""Independent verification path: the level-m graph and its exact linear solve.

Vertices carry exact rational coordinates (u, v) in the affine frame
p1 = (0,0), p2 = (1,0), p0 = (0,1).  A function is harmonic on the level-m
graph iff every interior vertex equals the mean of its four neighbors; the
five-point relation per minimal triangle is kept as a separate checker so
the two formulations cross-validate each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .gasket import BoundaryValues

Point = tuple[Fraction, Fraction]

MAX_LEVEL = 6  # 1095 vertices; guard against accidental blowup


@dataclass(frozen=True)
class GasketGraph:
    level: int
    vertices: tuple[Point, ...]
    index: dict
    # level -> tuple of (cell address, (apex, left, right) vertex indices)
    triangles: dict
    boundary: tuple[int, int, int]
    neighbors: tuple[tuple[int, ...], ...]


def _midpoint(p: Point, q: Point) -> Point:
    return ((p[0] + q[0]) / 2, (p[1] + q[1]) / 2)


@lru_cache(maxsize=None)
def build_graph(m: int) -> GasketGraph:
    """Exact level-m graph with per-level triangle incidence."""
    if m < 0:
        raise ValueError("level must be >= 0")
    if m > MAX_LEVEL:
        raise ValueError(f"level {m} exceeds guard {MAX_LEVEL}")
    p0: Point = (Fraction(0), Fraction(1))
    p1: Point = (Fraction(0), Fraction(0))
    p2: Point = (Fraction(1), Fraction(0))
    tris_by_level: dict[int, list[tuple[str, tuple[Point, Point, Point]]]] = {
        0: [("", (p0, p1, p2))]
    }
    for lvl in range(1, m + 1):
        nxt = []
        for addr, (a, b, c) in tris_by_level[lvl - 1]:
            mab, mac, mbc = _midpoint(a, b), _midpoint(a, c), _midpoint(b, c)
            nxt.append((addr + "0", (a, mab, mac)))
            nxt.append((addr + "1", (mab, b, mbc)))
            nxt.append((addr + "2", (mac, mbc, c)))
        tris_by_level[lvl] = nxt

    index: dict[Point, int] = {}
    vertices: list[Point] = []

    def idx(p: Point) -> int:
        i = index.get(p)
        if i is None:
            i = len(vertices)
            index[p] = i
            vertices.append(p)
        return i

    for corner in (p0, p1, p2):
        idx(corner)
    triangles = {}
    for lvl, tris in tris_by_level.items():
        triangles[lvl] = tuple(
            (addr, (idx(a), idx(b), idx(c))) for addr, (a, b, c) in tris
        )

    expected = 3 * (3 ** m + 1) // 2
    if len(vertices) != expected:
        raise AssertionError(f"vertex count {len(vertices)} != {expected}")

    nbr: list[set[int]] = [set() for _ in vertices]
    for _, (i, j, k) in triangles[m]:
        nbr[i].update((j, k))
        nbr[j].update((i, k))
        nbr[k].update((i, j))
    boundary = (index[p0], index[p1], index[p2])
    for i, ns in enumerate(nbr):
        want = 2 if i in boundary else 4
        if m >= 1 and len(ns) != want:
            raise AssertionError(f"vertex {i} has {len(ns)} neighbors, expected {want}")

    return GasketGraph(
        level=m,
        vertices=tuple(vertices),
        index=index,
        triangles=triangles,
        boundary=boundary,
        neighbors=tuple(tuple(sorted(ns)) for ns in nbr),
    )


def _solve_rows(rows: list[list[Fraction]], n: int, nrhs: int) -> list[list[Fraction]]:
    """Plain rational Gaussian elimination on an n x (n + nrhs) matrix."""
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if piv is None:
            raise ArithmeticError("singular harmonicity system")
        rows[col], rows[piv] = rows[piv], rows[col]
        prow = rows[col]
        inv = 1 / prow[col]
        for j in range(col, n + nrhs):
            prow[j] *= inv
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                row = rows[r]
                for j in range(col, n + nrhs):
                    row[j] -= f * prow[j]
    return [rows[r][n:] for r in range(n)]


@lru_cache(maxsize=None)
def _basis_solutions(m: int) -> tuple[tuple[Fraction, Fraction, Fraction], ...]:
    """Per-vertex coefficients of the solution on the three unit boundary triples."""
    g = build_graph(m)
    interior = [i for i in range(len(g.vertices)) if i not in g.boundary]
    pos = {v: r for r, v in enumerate(interior)}
    n = len(interior)
    zero = Fraction(0)
    rows = []
    for v in interior:
        row = [zero] * (n + 3)
        row[pos[v]] = Fraction(4)
        for u in g.neighbors[v]:
            if u in pos:
                row[pos[u]] -= 1
            else:
                row[n + g.boundary.index(u)] += 1
        rows.append(row)
    sol = _solve_rows(rows, n, 3)
    coeffs: list[tuple[Fraction, Fraction, Fraction]] = [None] * len(g.vertices)
    for j, b in enumerate(g.boundary):
        unit = [zero, zero, zero]
        unit[j] = Fraction(1)
        coeffs[b] = tuple(unit)
    for v, r in pos.items():
        coeffs[v] = tuple(sol[r])
    return tuple(coeffs)


def solve_harmonic(m: int, boundary: BoundaryValues) -> dict[int, Fraction]:
    """Unique exact solution of the discrete harmonicity constraints on the
    level-m graph with the three corner values fixed."""
    if m < 1:
        raise ValueError("m must be >= 1")
    coeffs = _basis_solutions(m)
    a, b, g = boundary.as_tuple()
    return {i: c0 * a + c1 * b + c2 * g for i, (c0, c1, c2) in enumerate(coeffs)}


def check_five_point(graph: GasketGraph, values: dict[int, Fraction]) -> bool:
    """True iff the five-point relation holds exactly for every minimal
    triangle of every level below graph.level."""
    missing = [i for i in range(len(graph.vertices)) if i not in values]
    if missing:
        raise ValueError(f"values missing for vertices {missing[:5]}")
    for lvl in range(graph.level):
        for _, (i, j, k) in graph.triangles[lvl]:
            pi, pj, pk = (graph.vertices[x] for x in (i, j, k))
            mij = graph.index[_midpoint(pi, pj)]
            mik = graph.index[_midpoint(pi, pk)]
            mjk = graph.index[_midpoint(pj, pk)]
            if values[i] + values[j] + values[mik] + values[mjk] - 4 * values[mij] != 0:
                return False
            if values[j] + values[k] + values[mij] + values[mik] - 4 * values[mjk] != 0:
                return False
            if values[i] + values[k] + values[mij] + values[mjk] - 4 * values[mik] != 0:
                return False
    return True
