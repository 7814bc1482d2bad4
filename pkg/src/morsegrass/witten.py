"""Witten chain complexes and exact integer homology.

A WittenComplex stores, per degree, a list of generator names (critical
points, graded by Morse index) and the integer boundary matrices between
adjacent degrees.  Homology is computed exactly: Smith normal form over the
integers, Gaussian elimination over GF(2) for the mod-2 variant.

Built-in complexes cover the standard small instances: circle height
functions with m maxima/minima, real projective spaces, the torus, and the
(boundary-free) Grassmannian complexes coming from perfect Morse functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .symbols import cell_dimension, enumerate_symbols


class ComplexValidationError(ValueError):
    """A chain complex whose boundary maps fail shape checks or dd = 0."""


Matrix = list[list[int]]


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        for t in range(inner):
            x = ai[t]
            if x:
                bt = b[t]
                oi = out[i]
                for j in range(cols):
                    oi[j] += x * bt[j]
    return out


def _identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(m: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form with transforms: returns (D, U, V) with U m V = D.

    D is diagonal with d_1 | d_2 | ...; U and V are unimodular.  Pivots are
    chosen by minimal absolute value to limit entry growth; everything is
    exact Python-int arithmetic.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    d = [row[:] for row in m]
    u = _identity(rows)
    v = _identity(cols)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, factor):
        d[dst] = [x + factor * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + factor * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, factor):
        for row in d:
            row[dst] += factor * row[src]
        for row in v:
            row[dst] += factor * row[src]

    def kill_row_entry(t, i):
        # unimodular 2x2 transform on rows t, i zeroing d[i][t] via extended gcd
        a, b = d[t][t], d[i][t]
        if b % a == 0:
            add_row(t, i, -(b // a))
            return
        g, x, y = _extgcd(a, b)
        p, q = a // g, b // g
        rt, ri = d[t], d[i]
        d[t] = [x * s + y * w for s, w in zip(rt, ri)]
        d[i] = [-q * s + p * w for s, w in zip(rt, ri)]
        st, si = u[t], u[i]
        u[t] = [x * s + y * w for s, w in zip(st, si)]
        u[i] = [-q * s + p * w for s, w in zip(st, si)]

    def kill_col_entry(t, j):
        a, b = d[t][t], d[t][j]
        if b % a == 0:
            add_col(t, j, -(b // a))
            return
        g, x, y = _extgcd(a, b)
        p, q = a // g, b // g
        for row in d:
            ct, cj = row[t], row[j]
            row[t] = x * ct + y * cj
            row[j] = -q * ct + p * cj
        for row in v:
            ct, cj = row[t], row[j]
            row[t] = x * ct + y * cj
            row[j] = -q * ct + p * cj

    t = 0
    while t < min(rows, cols):
        # pivot: minimal nonzero absolute value in the remaining block
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if d[i][j] != 0 and (pivot is None or abs(d[i][j]) < abs(d[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            for i in range(t + 1, rows):
                if d[i][t] != 0:
                    kill_row_entry(t, i)
            for j in range(t + 1, cols):
                if d[t][j] != 0:
                    kill_col_entry(t, j)
            if all(d[i][t] == 0 for i in range(t + 1, rows)) and \
                    all(d[t][j] == 0 for j in range(t + 1, cols)):
                break
        # enforce divisibility d_t | entries of the remaining block
        bad = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if d[i][j] % d[t][t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            add_row(bad, t, 1)
            continue
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return d, u, v


def _extgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with x a + y b = g = gcd(a, b), g > 0 for nonzero input."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def _rank_mod2(m: Matrix) -> int:
    rows = [sum((x & 1) << j for j, x in enumerate(row)) for row in m]
    rank = 0
    for col in range(len(m[0]) if m else 0):
        bit = 1 << col
        pivot = next((i for i in range(rank, len(rows)) if rows[i] & bit), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] & bit:
                rows[i] ^= rows[rank]
        rank += 1
    return rank


@dataclass
class WittenComplex:
    """Graded free abelian groups on named generators with integer boundaries.

    generators[i] lists the degree-i generator names; boundaries[i] is the
    matrix of d_i : C_i -> C_{i-1}, rows indexed by degree-(i-1) generators,
    columns by degree-i generators.  Degrees with no generators are simply
    absent from both maps.
    """

    generators: dict[int, list[str]] = field(default_factory=dict)
    boundaries: dict[int, Matrix] = field(default_factory=dict)

    @property
    def degrees(self) -> list[int]:
        return sorted(self.generators)

    def rank(self, i: int) -> int:
        return len(self.generators.get(i, []))

    def boundary(self, i: int) -> Matrix:
        """d_i as a rank(i-1) x rank(i) matrix (zero matrix if unstored)."""
        if i in self.boundaries:
            return self.boundaries[i]
        return [[0] * self.rank(i) for _ in range(self.rank(i - 1))]

    def check_shapes(self):
        for i, mat in self.boundaries.items():
            want_rows, want_cols = self.rank(i - 1), self.rank(i)
            rows = len(mat)
            cols = len(mat[0]) if mat else 0
            if mat and any(len(r) != cols for r in mat):
                raise ComplexValidationError(f"ragged boundary matrix in degree {i}")
            if (rows, cols) != (want_rows, want_cols) and not (want_rows == 0 and rows == 0):
                raise ComplexValidationError(
                    f"boundary d_{i} has shape {rows}x{cols}, expected {want_rows}x{want_cols}"
                )

    def morse_polynomial(self):
        from .polynomials import IntPolynomial

        out = IntPolynomial.zero
        for i in self.degrees:
            out = out + IntPolynomial.monomial(i, self.rank(i))
        return out

    def to_json(self) -> dict:
        return {
            "generators": {str(i): g for i, g in self.generators.items()},
            "boundaries": {str(i): m for i, m in self.boundaries.items()},
        }


@dataclass
class HomologyResult:
    """Per-degree free ranks and torsion coefficients (divisibility order)."""

    ranks: dict[int, int]
    torsion: dict[int, list[int]]
    mode: str = "integers"

    def group_str(self, i: int) -> str:
        parts = ["Z"] * self.ranks.get(i, 0)
        if self.mode == "mod2":
            parts = ["Z/2"] * self.ranks.get(i, 0)
        parts += [f"Z/{t}" for t in self.torsion.get(i, [])]
        return " + ".join(parts) if parts else "0"

    def poincare_polynomial(self):
        from .polynomials import IntPolynomial

        out = IntPolynomial.zero
        for i, r in self.ranks.items():
            if r:
                out = out + IntPolynomial.monomial(i, r)
        return out

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "ranks": {str(i): r for i, r in self.ranks.items()},
            "torsion": {str(i): t for i, t in self.torsion.items()},
        }


def validate_complex(c: WittenComplex) -> bool:
    """True iff all shapes are consistent and every composite dd is zero."""
    c.check_shapes()
    for i in c.degrees:
        lower = c.boundary(i)
        upper = c.boundary(i + 1)
        if not lower or not upper or not upper[0]:
            continue
        prod = _mat_mul(lower, upper)
        if any(any(row) for row in prod):
            return False
    return True


def homology(c: WittenComplex, mode: str = "integers") -> HomologyResult:
    """Homology of a validated complex, over Z (with torsion) or over GF(2)."""
    if mode not in ("integers", "mod2"):
        raise ValueError(f"mode must be 'integers' or 'mod2', got {mode!r}")
    if not validate_complex(c):
        raise ComplexValidationError("boundary maps do not satisfy dd = 0")

    ranks: dict[int, int] = {}
    torsion: dict[int, list[int]] = {}
    degs = list(c.degrees)
    span = range(min(degs), max(degs) + 1) if degs else range(0)
    for i in span:
        ci = c.rank(i)
        low = c.boundary(i)       # d_i : C_i -> C_{i-1}
        high = c.boundary(i + 1)  # d_{i+1} : C_{i+1} -> C_i
        if mode == "mod2":
            r_low = _rank_mod2(low) if low and low[0] else 0
            r_high = _rank_mod2(high) if high and high[0] else 0
            ranks[i] = ci - r_low - r_high
            torsion[i] = []
            continue
        d_low, _, _ = smith_normal_form(low) if low and low[0] else ([], None, None)
        d_high, _, _ = smith_normal_form(high) if high and high[0] else ([], None, None)
        r_low = sum(1 for t in range(min(len(d_low), len(d_low[0]) if d_low else 0)) if d_low[t][t])
        diag_high = [
            d_high[t][t]
            for t in range(min(len(d_high), len(d_high[0]) if d_high else 0))
            if d_high[t][t]
        ]
        ranks[i] = ci - r_low - len(diag_high)
        torsion[i] = [t for t in diag_high if t > 1]
    return HomologyResult(ranks=ranks, torsion=torsion, mode=mode)


def circle_complex(m: int) -> WittenComplex:
    """Height-style Morse function on the circle with m maxima and m minima.

    With the clockwise orientation convention, maximum j bounds
    minimum j minus minimum j+1 (indices mod m).
    """
    if m < 1:
        raise ValueError("need at least one maximum/minimum")
    minima = [f"A{j}" for j in range(m)]
    maxima = [f"M{j}" for j in range(m)]
    d1 = [[0] * m for _ in range(m)]
    for j in range(m):
        d1[j][j] += 1
        d1[(j + 1) % m][j] -= 1
    return WittenComplex(generators={0: minima, 1: maxima}, boundaries={1: d1})


def rp_complex(n: int) -> WittenComplex:
    """Real projective n-space: one generator per degree, d_i = (2) for even i."""
    if n < 1:
        raise ValueError("need n >= 1")
    gens = {i: [f"V{n - i}"] for i in range(n + 1)}
    bnds = {i: [[2 if i % 2 == 0 else 0]] for i in range(1, n + 1)}
    return WittenComplex(generators=gens, boundaries=bnds)


def grassmannian_complex(k: int, n: int) -> WittenComplex:
    """Perfect Morse function on Gr_k(C^n): all generators in even degree, d = 0."""
    gens: dict[int, list[str]] = {}
    for u in enumerate_symbols(k, n):
        gens.setdefault(2 * cell_dimension(u), []).append(str(u))
    return WittenComplex(generators=gens, boundaries={})


def torus_complex() -> WittenComplex:
    """Standard Morse-Smale height function on the 2-torus; boundaries vanish.

    The zero boundary is a recorded fixture (the signed flow-line counts
    cancel in pairs for the Morse-Smale tilt of the height function), not a
    geometric computation.
    """
    return WittenComplex(
        generators={0: ["min"], 1: ["saddle1", "saddle2"], 2: ["max"]},
        boundaries={1: [[0, 0]], 2: [[0], [0]]},
    )


def dump_complex(c: WittenComplex) -> str:
    """Serialize to the plain-text chain-complex format (see load_complex)."""
    degrees = c.degrees
    lo, hi = (degrees[0], degrees[-1]) if degrees else (0, 0)
    lines = [f"degrees: {lo} {hi}"]
    for i in range(lo, hi + 1):
        lines.append(f"gens {i}: " + " ".join(c.generators.get(i, [])))
    for i in range(lo + 1, hi + 1):
        mat = c.boundary(i)
        if not mat or not mat[0]:
            continue
        lines.append(f"d {i}:")
        for row in mat:
            lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def load_complex(text: str) -> WittenComplex:
    """Parse the plain-text chain-complex format and validate the result.

    Format: a "degrees: lo hi" header, one "gens <i>: name ..." line per
    degree, then blocks "d <i>:" followed by the rows of the boundary matrix
    (targets x sources).
    """
    lines = text.splitlines()
    gens: dict[int, list[str]] = {}
    bnds: dict[int, Matrix] = {}
    lo = hi = None
    idx = 0

    def fail(lineno, msg):
        raise ComplexValidationError(f"line {lineno + 1}: {msg}")

    while idx < len(lines):
        line = lines[idx].strip()
        if not line or line.startswith("#"):
            idx += 1
            continue
        if line.startswith("degrees:"):
            parts = line.split()
            if len(parts) != 3:
                fail(idx, "expected 'degrees: lo hi'")
            lo, hi = int(parts[1]), int(parts[2])
            idx += 1
        elif line.startswith("gens"):
            head, _, names = line.partition(":")
            try:
                deg = int(head.split()[1])
            except (IndexError, ValueError):
                fail(idx, "expected 'gens <degree>: names'")
            gens[deg] = names.split()
            idx += 1
        elif line.startswith("d"):
            head, _, _ = line.partition(":")
            try:
                deg = int(head.split()[1])
            except (IndexError, ValueError):
                fail(idx, "expected 'd <degree>:'")
            idx += 1
            rows: Matrix = []
            want = len(gens.get(deg - 1, []))
            for _ in range(want):
                if idx >= len(lines):
                    fail(idx - 1, f"boundary d {deg}: expected {want} rows")
                try:
                    row = [int(x) for x in lines[idx].split()]
                except ValueError:
                    fail(idx, "boundary rows must be integers")
                if len(row) != len(gens.get(deg, [])):
                    fail(idx, f"boundary d {deg}: row width {len(row)}, "
                              f"expected {len(gens.get(deg, []))}")
                rows.append(row)
                idx += 1
            bnds[deg] = rows
        else:
            fail(idx, f"unrecognized line {line!r}")
    if lo is None:
        raise ComplexValidationError("missing 'degrees:' header")
    gens = {i: g for i, g in gens.items() if g}
    c = WittenComplex(generators=gens, boundaries=bnds)
    if not validate_complex(c):
        for i in c.degrees:
            prod = _mat_mul(c.boundary(i), c.boundary(i + 1))
            if prod and prod[0] and any(any(row) for row in prod):
                raise ComplexValidationError(f"dd != 0 between degrees {i + 1} and {i - 1}")
        raise ComplexValidationError("dd != 0")
    return c
