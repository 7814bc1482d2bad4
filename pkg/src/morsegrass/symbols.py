"""Schubert symbols, cells, indices and the Bruhat order on Gr_k(C^n).

A Schubert symbol is a strictly increasing k-tuple u = (u_1, ..., u_k) with
entries in 1..n.  It labels the coordinate k-plane V_u spanned by the basis
vectors e_{u_1}, ..., e_{u_k}, which is a critical point of every diagonal
height function, and the Schubert cell S_u of planes limiting to V_u.

Generalized symbols handle the Morse-Bott case, where the height spectrum has
repeated values and critical points come in manifolds indexed by how many
dimensions of the plane sit in each eigenspace block.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class AmbientMismatchError(ValueError):
    """Two symbols from different Grassmannians were combined."""


@dataclass(frozen=True)
class SchubertSymbol:
    """Strictly increasing k-tuple indexing a cell of Gr_k(C^n)."""

    entries: tuple[int, ...]
    n: int

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        k = len(entries)
        if k > self.n or self.n < 0:
            raise ValueError(f"ambient (k={k}, n={self.n}) is invalid")
        if any(b <= a for a, b in zip(entries, entries[1:])):
            raise ValueError(f"entries {entries} not strictly increasing")
        if entries and (entries[0] < 1 or entries[-1] > self.n):
            raise ValueError(f"entries {entries} out of range 1..{self.n}")

    @property
    def k(self) -> int:
        return len(self.entries)

    @property
    def ambient(self) -> tuple[int, int]:
        return (self.k, self.n)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        return "(" + ",".join(str(e) for e in self.entries) + ")"

    def to_json(self) -> dict:
        return {"entries": list(self.entries), "k": self.k, "n": self.n}


@dataclass(frozen=True)
class GeneralizedSchubertSymbol:
    """Occupancy counts c_j of a k-plane against eigenspace blocks of sizes m_j."""

    counts: tuple[int, ...]
    blocks: tuple[int, ...]

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        blocks = tuple(int(m) for m in self.blocks)
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "blocks", blocks)
        if len(counts) != len(blocks):
            raise ValueError("counts and blocks must have equal length")
        if any(m <= 0 for m in blocks):
            raise ValueError(f"block sizes {blocks} must be positive")
        if any(c < 0 or c > m for c, m in zip(counts, blocks)):
            raise ValueError(f"counts {counts} out of range for blocks {blocks}")

    @property
    def k(self) -> int:
        return sum(self.counts)

    @property
    def n(self) -> int:
        return sum(self.blocks)

    def to_json(self) -> dict:
        return {"blocks": list(self.blocks), "counts": list(self.counts)}


@dataclass(frozen=True)
class PartialFlagSpectrum:
    """Distinct height values b_1 > ... > b_l >= 0 with eigenspace multiplicities."""

    eigenvalues: tuple[float, ...]
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        evs = tuple(float(b) for b in self.eigenvalues)
        mults = tuple(int(m) for m in self.multiplicities)
        object.__setattr__(self, "eigenvalues", evs)
        object.__setattr__(self, "multiplicities", mults)
        if len(evs) != len(mults):
            raise ValueError("eigenvalues and multiplicities must have equal length")
        if any(evs[i] <= evs[i + 1] for i in range(len(evs) - 1)):
            raise ValueError(f"eigenvalues {evs} not strictly decreasing")
        if evs and evs[-1] < 0:
            raise ValueError("eigenvalues must be nonnegative")
        if any(m <= 0 for m in mults):
            raise ValueError("multiplicities must be positive")

    @property
    def n(self) -> int:
        return sum(self.multiplicities)


def enumerate_symbols(k: int, n: int) -> list[SchubertSymbol]:
    """All C(n, k) Schubert symbols of Gr_k(C^n), in lexicographic order."""
    if k < 0 or n < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return [SchubertSymbol(c, n) for c in itertools.combinations(range(1, n + 1), k)]


def cell_dimension(u: SchubertSymbol) -> int:
    """Complex dimension of the Schubert cell S_u: sum of u_i - i."""
    return sum(e - i for i, e in enumerate(u.entries, start=1))


def critical_index(u: SchubertSymbol, sign: str = "for_minus_f") -> int:
    """Morse index of the critical point V_u, for the height function or its negative.

    Indices are real (even) dimensions: twice the complex dimension of the
    unstable manifold of the chosen function.
    """
    d = cell_dimension(u)
    top = u.k * (u.n - u.k)
    if sign == "for_minus_f":
        return 2 * d
    if sign == "for_f":
        return 2 * (top - d)
    raise ValueError(f"sign must be 'for_f' or 'for_minus_f', got {sign!r}")


def schubert_conditions(u: SchubertSymbol) -> tuple[int, ...]:
    """Jump sequence v_i = dim(V cap C^i) characterizing the cell of u."""
    return tuple(sum(1 for e in u.entries if e <= i) for i in range(1, u.n + 1))


def complement(u: SchubertSymbol) -> SchubertSymbol:
    """Dual symbol u^c = (n - u_k + 1, ..., n - u_1 + 1)."""
    return SchubertSymbol(tuple(u.n - e + 1 for e in reversed(u.entries)), u.n)


def _check_same_ambient(u1: SchubertSymbol, u2: SchubertSymbol):
    if u1.ambient != u2.ambient:
        raise AmbientMismatchError(
            f"symbols live in different Grassmannians: {u1.ambient} vs {u2.ambient}"
        )


def bruhat_leq(u1: SchubertSymbol, u2: SchubertSymbol) -> bool:
    """Closure order: u1 <= u2 iff the closure of S_{u1} contains S_{u2}.

    Equivalently (componentwise form): (u2)_j <= (u1)_j for every j.
    """
    _check_same_ambient(u1, u2)
    return all(b <= a for a, b in zip(u1.entries, u2.entries))


def flow_line_exists(u_from: SchubertSymbol, u_to: SchubertSymbol) -> bool:
    """Whether a gradient flow line runs from the cell of u_from down to u_to."""
    _check_same_ambient(u_from, u_to)
    return bruhat_leq(u_from, u_to) and u_from != u_to


def enumerate_generalized_symbols(
    blocks: tuple[int, ...] | list[int], k: int
) -> list[GeneralizedSchubertSymbol]:
    """All occupancy vectors (c_1, ..., c_l) with 0 <= c_j <= m_j and sum k."""
    blocks = tuple(int(m) for m in blocks)
    if any(m <= 0 for m in blocks):
        raise ValueError(f"block sizes {blocks} must be positive")
    n = sum(blocks)
    if k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n = {n}, got k={k}")

    out = []

    def rec(j, remaining, prefix):
        if j == len(blocks):
            if remaining == 0:
                out.append(GeneralizedSchubertSymbol(tuple(prefix), blocks))
            return
        tail = sum(blocks[j + 1:])
        lo = max(0, remaining - tail)
        hi = min(blocks[j], remaining)
        for c in range(lo, hi + 1):
            rec(j + 1, remaining - c, prefix + [c])

    rec(0, k, [])
    return out


def generalized_index(c: GeneralizedSchubertSymbol) -> int:
    """Morse-Bott index (for -f) of the critical manifold labelled by c.

    Equals the minimum, over Morse refinements of c, of the Morse index for -f;
    in closed form 2 * sum_{i<j} c_j (m_i - c_i).
    """
    counts, blocks = c.counts, c.blocks
    total = 0
    for j in range(len(blocks)):
        above = sum(blocks[i] - counts[i] for i in range(j))
        total += counts[j] * above
    return 2 * total


def ndcm_shape(c: GeneralizedSchubertSymbol) -> list[tuple[int, int]]:
    """Factors (c_j, m_j) of the critical manifold Gr_{c_1}(E_1) x ... x Gr_{c_l}(E_l)."""
    return list(zip(c.counts, c.blocks))


def ndcm_dimension(c: GeneralizedSchubertSymbol) -> int:
    """Complex dimension of the critical manifold of c."""
    return sum(cj * (mj - cj) for cj, mj in zip(c.counts, c.blocks))


def morse_refinements(c: GeneralizedSchubertSymbol) -> list[SchubertSymbol]:
    """Schubert symbols compatible with c: pick c_j rows inside each block."""
    n = c.n
    offsets = [0]
    for m in c.blocks:
        offsets.append(offsets[-1] + m)
    per_block = [
        list(itertools.combinations(range(offsets[j] + 1, offsets[j + 1] + 1), c.counts[j]))
        for j in range(len(c.blocks))
    ]
    return [
        SchubertSymbol(tuple(itertools.chain.from_iterable(choice)), n)
        for choice in itertools.product(*per_block)
    ]
