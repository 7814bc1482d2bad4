"""Moment map and momentum polytopes of Gr_k(C^n).

The moment map sends a plane to the diagonal of its orthogonal projector; its
image is the hypersimplex Delta(k, n), the convex hull of the 0/1 indicator
vectors e_u of Schubert symbols.  Schubert varieties map to the sub-polytopes
spanned by the vertices below u in the closure order.

Membership in a vertex polytope is decided by exact rational linear
programming (a small phase-1 simplex over Fraction) for rational inputs, and
by a slack LP via scipy for floating inputs.  Face enumeration is brute force
with exact arithmetic, intended for at most 64 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np
from scipy.optimize import linprog

from .flows import GrassmannPoint, HeightSpectrum, flow, height_value, projector
from .symbols import SchubertSymbol, bruhat_leq, enumerate_symbols

MAX_FACE_VERTICES = 64


class CapacityError(ValueError):
    """Brute-force face enumeration refused a polytope with too many vertices."""


@dataclass(frozen=True)
class MomentPoint:
    """A point of R^n, typically diag(pi_V) with entries in [0,1] summing to k."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))

    @property
    def n(self) -> int:
        return len(self.coords)

    def to_json(self) -> list:
        return [float(x) for x in self.coords]


@dataclass(frozen=True)
class VertexPolytope:
    """Convex hull of a finite set of distinct rational points in R^n."""

    vertices: tuple[tuple, ...]
    k: int
    n: int

    def __post_init__(self):
        verts = tuple(tuple(v) for v in self.vertices)
        if len(set(verts)) != len(verts):
            raise ValueError("vertices must be pairwise distinct")
        object.__setattr__(self, "vertices", verts)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "vertices": [[float(x) for x in v] for v in self.vertices],
        }


def symbol_vertex(u: SchubertSymbol) -> tuple[int, ...]:
    """Indicator vector e_u = e_{u_1} + ... + e_{u_k}."""
    return tuple(1 if i in set(u.entries) else 0 for i in range(1, u.n + 1))


def moment_map(V: GrassmannPoint) -> MomentPoint:
    """mu(V) = diagonal of the orthogonal projector onto V."""
    return MomentPoint(tuple(float(x) for x in np.real(np.diag(projector(V)))))


def grassmannian_polytope(k: int, n: int) -> VertexPolytope:
    """The hypersimplex Delta(k, n): vertices e_u over all symbols."""
    return VertexPolytope(
        tuple(symbol_vertex(u) for u in enumerate_symbols(k, n)), k, n
    )


def schubert_polytope(u: SchubertSymbol) -> VertexPolytope:
    """Moment image of the Schubert variety X_u: hull of {e_v : v in closure of S_u}."""
    verts = tuple(
        symbol_vertex(v) for v in enumerate_symbols(u.k, u.n) if bruhat_leq(u, v)
    )
    return VertexPolytope(verts, u.k, u.n)


def _exact_feasible(a_rows: list[list[Fraction]], b: list[Fraction]) -> bool:
    """Whether A x = b has a solution with x >= 0 (phase-1 simplex, Bland's rule)."""
    m = len(a_rows)
    cols = len(a_rows[0]) if m else 0
    # make right-hand sides nonnegative
    rows = []
    rhs = []
    for row, bi in zip(a_rows, b):
        if bi < 0:
            rows.append([-x for x in row])
            rhs.append(-bi)
        else:
            rows.append(list(row))
            rhs.append(bi)
    # tableau with artificial basis; objective = sum of artificials
    total = cols + m
    t = [rows[i] + [Fraction(1) if j == i else Fraction(0) for j in range(m)] + [rhs[i]]
         for i in range(m)]
    basis = [cols + i for i in range(m)]
    obj = [Fraction(0)] * (total + 1)
    for i in range(m):
        for j in range(total + 1):
            obj[j] -= t[i][j]
    for i in range(m):
        # reduced cost of each basic artificial must start at its cost 1 - 1 = 0
        obj[cols + i] += 1
    while True:
        enter = next((j for j in range(total) if obj[j] < 0), None)
        if enter is None:
            break
        ratios = [
            (t[i][total] / t[i][enter], basis[i], i)
            for i in range(m)
            if t[i][enter] > 0
        ]
        if not ratios:
            break  # unbounded; cannot happen for a phase-1 problem
        _, _, leave = min(ratios, key=lambda r: (r[0], r[1]))
        piv = t[leave][enter]
        t[leave] = [x / piv for x in t[leave]]
        for i in range(m):
            if i != leave and t[i][enter] != 0:
                f = t[i][enter]
                t[i] = [x - f * y for x, y in zip(t[i], t[leave])]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [x - f * y for x, y in zip(obj, t[leave])]
        basis[leave] = enter
    return -obj[total] == 0


def membership(x, P: VertexPolytope, tol: float = 1e-9) -> bool:
    """Whether x lies in the convex hull of the vertices of P.

    Rational coordinates (int/Fraction) are decided exactly; floats via an
    LP that minimizes the l1 defect of the convex combination, accepted when
    the defect is below tol.
    """
    coords = x.coords if isinstance(x, MomentPoint) else tuple(x)
    if len(coords) != P.n:
        raise ValueError(f"point has {len(coords)} coordinates, polytope ambient is {P.n}")
    exact = all(isinstance(c, (int, Fraction)) for c in coords)
    verts = P.vertices
    if exact:
        a = [[Fraction(v[i]) for v in verts] for i in range(P.n)]
        a.append([Fraction(1)] * len(verts))
        b = [Fraction(c) for c in coords] + [Fraction(1)]
        return _exact_feasible(a, b)
    nv = len(verts)
    vt = np.array(verts, dtype=float).T  # n x nv
    # variables: lambda (nv), e_plus (n), e_minus (n)
    a_eq = np.hstack([vt, np.eye(P.n), -np.eye(P.n)])
    a_eq = np.vstack([a_eq, np.hstack([np.ones(nv), np.zeros(2 * P.n)])])
    b_eq = np.concatenate([np.array(coords, dtype=float), [1.0]])
    c = np.concatenate([np.zeros(nv), np.ones(2 * P.n)])
    res = linprog(c, A_eq=a_eq, b_eq=b_eq, bounds=(0, None), method="highs")
    if not res.success:
        return False
    return float(res.fun) <= tol * (1.0 + float(np.abs(b_eq).sum()))


def _affine_basis(verts: list[list[Fraction]]):
    """Row-reduced basis of span{v - v0} and coordinates of each vertex in it."""
    v0 = verts[0]
    diffs = [[x - y for x, y in zip(v, v0)] for v in verts[1:]]
    basis: list[list[Fraction]] = []
    pivots: list[int] = []
    for d in diffs:
        d = list(d)
        for b, p in zip(basis, pivots):
            if d[p] != 0:
                f = d[p]
                d = [x - f * y for x, y in zip(d, b)]
        p = next((i for i, x in enumerate(d) if x != 0), None)
        if p is None:
            continue
        d = [x / d[p] for x in d]
        basis.append(d)
        pivots.append(p)
    coords = []
    for v in verts:
        d = [x - y for x, y in zip(v, v0)]
        cs = []
        for b, p in zip(basis, pivots):
            c = d[p]
            cs.append(c)
            d = [x - c * y for x, y in zip(d, b)]
        coords.append(cs)
    return coords  # each vertex as a point of R^dim


def _affine_rank(points: list[tuple]) -> int:
    """Dimension of the affine hull of a point set (exact)."""
    pts = [[Fraction(x) for x in p] for p in points]
    if not pts:
        return -1
    coords = _affine_basis(pts)
    return len(coords[0]) if coords else 0


def face_counts(P: VertexPolytope) -> tuple[int, ...]:
    """f-vector (faces per dimension, including the polytope itself).

    Brute force with exact arithmetic: find facets as supporting hyperplanes
    through affinely independent vertex subsets, then close the facet vertex
    sets under intersection to get all proper faces.
    """
    if len(P.vertices) > MAX_FACE_VERTICES:
        raise CapacityError(
            f"{len(P.vertices)} vertices exceeds the brute-force cap {MAX_FACE_VERTICES}"
        )
    verts = [[Fraction(x) for x in v] for v in P.vertices]
    nv = len(verts)
    if nv == 1:
        return (1,)
    coords = _affine_basis(verts)
    d = len(coords[0])
    if d == 0:
        return (1,)

    facets: set[frozenset[int]] = set()
    for subset in combinations(range(nv), d):
        # hyperplane through the subset: normal in the d-dim hull coordinates
        base = coords[subset[0]]
        mat = [[coords[i][j] - base[j] for j in range(d)] for i in subset[1:]]
        normal = _nullspace_vector(mat, d)
        if normal is None:
            continue  # subset does not span a hyperplane
        offset = sum(n * b for n, b in zip(normal, base))
        signs = [sum(n * c for n, c in zip(normal, coords[i])) - offset for i in range(nv)]
        if all(s >= 0 for s in signs) or all(s <= 0 for s in signs):
            facets.add(frozenset(i for i, s in enumerate(signs) if s == 0))

    faces: set[frozenset[int]] = set(facets)
    frontier = set(facets)
    while frontier:
        new = set()
        for f in frontier:
            for g in facets:
                h = f & g
                if h and h not in faces:
                    new.add(h)
        faces |= new
        frontier = new

    counts = [0] * (d + 1)
    counts[d] = 1  # the polytope itself
    for f in faces:
        rank = _affine_rank([P.vertices[i] for i in sorted(f)])
        if rank < d:
            counts[rank] += 1
    return tuple(counts)


def _nullspace_vector(mat: list[list[Fraction]], d: int):
    """A nonzero kernel vector of the (d-1) x d matrix, or None if rank < d-1."""
    rows = [list(r) for r in mat]
    pivots = []
    reduced = []
    for r in rows:
        r = list(r)
        for b, p in zip(reduced, pivots):
            if r[p] != 0:
                f = r[p]
                r = [x - f * y for x, y in zip(r, b)]
        p = next((i for i, x in enumerate(r) if x != 0), None)
        if p is None:
            return None  # rank deficient: not a hyperplane spanner
        r = [x / r[p] for x in r]
        reduced.append(r)
        pivots.append(p)
    if len(reduced) != d - 1:
        return None
    free = next(i for i in range(d) if i not in pivots)
    vec = [Fraction(0)] * d
    vec[free] = Fraction(1)
    # back substitution against the reduced rows
    for b, p in zip(reversed(reduced), reversed(pivots)):
        vec[p] = -sum(b[j] * vec[j] for j in range(d) if j != p)
    return vec


def flow_moment_trace(
    V: GrassmannPoint, a: HeightSpectrum, ts
) -> list[MomentPoint]:
    """Sample mu along the gradient flow of V at the requested times."""
    out = []
    for t in ts:
        W = flow(V, a, float(t))
        out.append(moment_map(W))
    return out


def moment_height(x: MomentPoint, a: HeightSpectrum) -> float:
    """<a, mu(V)>; equals height_value(V, a) when x = moment_map(V)."""
    return float(sum(ai * xi for ai, xi in zip(a.a, x.coords)))
