"""
Exact integer sequences and finite-difference fits.

All arithmetic is arbitrary precision; polynomial coefficients are exact
rationals recovered from difference tables.  No floating point is used
anywhere, so fits can never be corrupted by rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class IntSequence:
    """A contiguously indexed integer sequence: terms[i] is the value at n = start + i."""

    start: int
    terms: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def end(self) -> int:
        """Index one past the last term."""
        return self.start + len(self.terms)

    def at(self, n: int) -> int:
        if not self.start <= n < self.end:
            raise IndexError(f"index {n} outside [{self.start}, {self.end})")
        return self.terms[n - self.start]


@dataclass(frozen=True)
class PolynomialFit:
    """An exact polynomial p with p(n) = term(n) for every sampled n >= onset.

    coefficients[i] is the coefficient of n**i; trailing zeros are trimmed.
    """

    coefficients: tuple[Fraction, ...]
    onset: int

    @property
    def degree(self) -> int:
        return max(len(self.coefficients) - 1, 0)

    def evaluate(self, n: int) -> Fraction:
        total = Fraction(0)
        power = Fraction(1)
        for c in self.coefficients:
            total += c * power
            power *= n
        return total


def fibonacci(n: int) -> int:
    """F_1 = 1, F_2 = 2, F_n = F_{n-1} + F_{n-2}: the number of ordered sums of 1's and 2's."""
    if n < 1:
        raise ValueError(f"fibonacci defined for n >= 1, got {n}")
    a, b = 1, 2
    for _ in range(n - 1):
        a, b = b, a + b
    return a


def fibonacci_sequence(n_max: int) -> IntSequence:
    return IntSequence(1, tuple(fibonacci(n) for n in range(1, n_max + 1)))


def skew_merged_series(n_max: int) -> IntSequence:
    """
    Coefficients a_1..a_N of (1 - 3x) / ((1 - 2x) * sqrt(1 - 4x)), the counting
    series of the permutations that split into an increasing plus a decreasing
    subsequence.  Computed by exact Cauchy products: 1/sqrt(1-4x) has the
    central binomial coefficients, 1/(1-2x) the powers of two.
    """
    if n_max < 1:
        raise ValueError(f"need n_max >= 1, got {n_max}")
    central = [math.comb(2 * i, i) for i in range(n_max + 1)]
    h = [sum(central[i] << (j - i) for i in range(j + 1)) for j in range(n_max + 1)]
    terms = [h[j] - 3 * h[j - 1] for j in range(1, n_max + 1)]
    return IntSequence(1, tuple(terms))


def difference_table(terms: Sequence[int], order: int) -> list[list[int]]:
    """Rows 0..order of forward differences of terms."""
    rows = [list(terms)]
    for _ in range(order):
        prev = rows[-1]
        rows.append([b - a for a, b in zip(prev, prev[1:])])
    return rows


def _binomial_poly(shift: int, j: int) -> list[Fraction]:
    # Coefficients of C(n - shift, j) = (n-shift)(n-shift-1)...(n-shift-j+1)/j!
    coeffs = [Fraction(1)]
    for i in range(j):
        root = shift + i
        coeffs = [Fraction(0)] + coeffs
        coeffs = [coeffs[d] - root * (coeffs[d + 1] if d + 1 < len(coeffs) else 0) for d in range(len(coeffs))]
    fact = math.factorial(j)
    return [c / fact for c in coeffs]


def _newton_coefficients(heads: Sequence[int], n0: int) -> tuple[Fraction, ...]:
    # p(n) = sum_j heads[j] * C(n - n0, j), expanded into the power basis.
    degree = len(heads) - 1
    coeffs = [Fraction(0)] * (degree + 1)
    for j, head in enumerate(heads):
        if head == 0:
            continue
        for d, c in enumerate(_binomial_poly(n0, j)):
            coeffs[d] += head * c
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def fit_polynomial(seq: IntSequence, min_stable: int | None = None) -> PolynomialFit | None:
    """
    Fit the least-degree polynomial that eventually matches seq exactly.

    A degree-d candidate is accepted when its order-(d+1) forward differences
    are zero on a trailing run of at least `min_stable` consecutive entries
    (default d + 3, guarding against coincidental stabilisation).  The onset
    is the first index of that run; the returned polynomial agrees with every
    term from the onset on.  Returns None when nothing stabilises.
    """
    terms = seq.terms
    length = len(terms)
    diffs = list(terms)
    for d in range(length):
        need = min_stable if min_stable is not None else d + 3
        if need < 1:
            raise ValueError(f"min_stable must be >= 1, got {min_stable}")
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]  # order d+1
        if len(diffs) < need:
            return None
        run = 0
        for value in reversed(diffs):
            if value != 0:
                break
            run += 1
        if run < need:
            continue
        j0 = len(diffs) - run
        heads = [row[0] for row in difference_table(terms[j0 : j0 + d + 1], d)]
        n0 = seq.start + j0
        return PolynomialFit(_newton_coefficients(heads, n0), n0)
    return None


def dominates_fibonacci(seq: IntSequence) -> bool:
    """True iff term(n) >= F_n for every available n; seq must start at n = 1."""
    if seq.start != 1:
        raise ValueError(f"sequence must start at n = 1, got start = {seq.start}")
    a, b = 1, 2
    for term in seq.terms:
        if term < a:
            return False
        a, b = b, a + b
    return True
