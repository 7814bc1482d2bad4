"""Integer polynomials in t and the Poincare / Morse / Morse-Bott polynomials.

Three independent routes to the Poincare polynomial of Gr_k(C^n) are provided
(cell enumeration, the deletion recurrence, and the closed product formula),
plus the Morse-inequality factorization M(t) - P(t) = (1 + t) Q(t).

Grading convention: all polynomials here live in real degrees.  Complex cell
dimensions are doubled by the callers in the symbol layer, never here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .symbols import (
    GeneralizedSchubertSymbol,
    cell_dimension,
    enumerate_symbols,
    generalized_index,
)


class IntPolynomial:
    """Polynomial in t with integer coefficients, indexed by degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coefficient])

    zero: "IntPolynomial"
    one: "IntPolynomial"

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(
            [self.coefficient(i) + other.coefficient(i) for i in range(n)]
        )

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([other * c for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def divide_exact(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """Long division, raising ValueError unless the remainder is zero."""
        if not divisor.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.coeffs[-1]
        q = [0] * (max(len(rem) - dd, 0) or 1)
        for i in range(len(rem) - 1, dd - 1, -1):
            if rem[i] == 0:
                continue
            if rem[i] % lead != 0:
                raise ValueError("inexact polynomial division (leading coefficient)")
            factor = rem[i] // lead
            q[i - dd] = factor
            for j, b in enumerate(divisor.coeffs):
                rem[i - dd + j] -= factor * b
        if any(rem):
            raise ValueError("inexact polynomial division (nonzero remainder)")
        return IntPolynomial(q)

    def __call__(self, t: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * t + c
        return value

    def substitute_power(self, p: int) -> "IntPolynomial":
        """Replace t by t^p."""
        out = [0] * (p * len(self.coeffs) or 1)
        for d, c in enumerate(self.coeffs):
            out[p * d] = c
        return IntPolynomial(out)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if d == 0:
                terms.append(str(c))
            else:
                var = "t" if d == 1 else f"t^{d}"
                if c == 1:
                    terms.append(var)
                elif c == -1:
                    terms.append(f"-{var}")
                else:
                    terms.append(f"{c}{var}")
        text = " + ".join(terms)
        return text.replace("+ -", "- ")

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> "IntPolynomial":
        return cls(data["coeffs"])


IntPolynomial.zero = IntPolynomial([])
IntPolynomial.one = IntPolynomial([1])


@dataclass(frozen=True)
class MorseViolation:
    """Witness that a (M, P) pair cannot come from a Morse function.

    Either the division of M - P by 1 + t left a remainder, or some
    coefficient of the quotient Q is negative.
    """

    reason: str
    degree: int

    def __bool__(self):
        return False

    def __str__(self):
        return f"Morse inequality violation in degree {self.degree}: {self.reason}"


def morse_polynomial_by_cells(k: int, n: int) -> IntPolynomial:
    """Morse polynomial of -f on Gr_k(C^n), one term t^(2 dim S_u) per cell."""
    out = IntPolynomial.zero
    for u in enumerate_symbols(k, n):
        out = out + IntPolynomial.monomial(2 * cell_dimension(u))
    return out


def partition_count(d: int, k: int, cap: int) -> int:
    """Partitions of d into at most k parts, each part at most cap."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    if k < 0 or cap < 0:
        raise ValueError("k and cap must be nonnegative")

    @lru_cache(maxsize=None)
    def count(rem, parts, largest):
        if rem == 0:
            return 1
        if parts == 0 or largest == 0:
            return 0
        return sum(count(rem - p, parts - 1, p) for p in range(1, min(largest, rem) + 1))

    return count(d, k, cap)


def gaussian_generating(k: int, n: int) -> IntPolynomial:
    """Gaussian binomial [n choose k]_t as a polynomial (exact division)."""
    if k < 0 or n < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    num = IntPolynomial.one
    den = IntPolynomial.one
    for i in range(1, k + 1):
        num = num * (IntPolynomial.one - IntPolynomial.monomial(n - k + i))
        den = den * (IntPolynomial.one - IntPolynomial.monomial(i))
    return num.divide_exact(den)


def poincare_recurrence(k: int, n: int) -> IntPolynomial:
    """Poincare polynomial of Gr_k(C^n) via P_{k,n} = P_{k,n-1} + t^{2(n-k)} P_{k-1,n-1}."""
    if k < 0 or n < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")

    @lru_cache(maxsize=None)
    def rec(kk, nn):
        if kk == 0 or kk == nn:
            return IntPolynomial.one
        return rec(kk, nn - 1) + IntPolynomial.monomial(2 * (nn - kk)) * rec(kk - 1, nn - 1)

    return rec(k, n)


def poincare_closed(k: int, n: int) -> IntPolynomial:
    """Poincare polynomial of Gr_k(C^n) via the closed product formula."""
    if k < 0 or n < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return gaussian_generating(k, n).substitute_power(2)


def mb_polynomial(cs: list[GeneralizedSchubertSymbol]) -> IntPolynomial:
    """Morse-Bott polynomial: sum over critical manifolds of t^index * P(manifold)."""
    if not cs:
        return IntPolynomial.zero
    blocks = cs[0].blocks
    k = cs[0].k
    if any(c.blocks != blocks or c.k != k for c in cs):
        raise ValueError("all generalized symbols must share blocks and k")
    out = IntPolynomial.zero
    for c in cs:
        factor = IntPolynomial.monomial(generalized_index(c))
        for cj, mj in zip(c.counts, c.blocks):
            factor = factor * poincare_closed(cj, mj)
        out = out + factor
    return out


def morse_inequalities(m_poly: IntPolynomial, p_poly: IntPolynomial):
    """Factor M(t) - P(t) as (1 + t) Q(t) with Q >= 0, or report the failure.

    Returns Q as an IntPolynomial on success, a MorseViolation otherwise.
    """
    diff = m_poly - p_poly
    one_plus_t = IntPolynomial([1, 1])
    try:
        q = diff.divide_exact(one_plus_t)
    except ValueError:
        return MorseViolation(
            f"M - P is not divisible by 1 + t (remainder {diff(-1)})", degree=0
        )
    for d, c in enumerate(q.coeffs):
        if c < 0:
            return MorseViolation(f"Q coefficient {c} is negative", degree=d)
    return q


def euler_characteristic(m_poly: IntPolynomial) -> int:
    """Alternating sum of coefficients: the polynomial evaluated at t = -1."""
    return m_poly(-1)


def is_lacunary_perfect(m_poly: IntPolynomial) -> bool:
    """Whether every odd-degree coefficient vanishes (lacunary principle)."""
    return all(c == 0 for d, c in enumerate(m_poly.coeffs) if d % 2 == 1)
