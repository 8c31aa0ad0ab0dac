"""
Permutations of {1, ..., n} in one-line notation.

A permutation is stored as the tuple (pi(1), ..., pi(n)); the empty
permutation is allowed and compares below everything in the containment
order.  Text form is comma-separated one-line notation ("3,9,1,8,6,7,4,5,2");
a compact digit string ("391867452") is accepted on input only when n <= 9.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ParseError

SymmetryName = str  # "inverse" | "reverse" | "complement"


class Permutation:
    """A permutation of {1, ..., n}, immutable and hashable."""

    __slots__ = ("values",)

    def __init__(self, values: Iterable[int] = ()):
        values = tuple(values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"not a permutation of 1..{len(values)}: {values!r}")
        object.__setattr__(self, "values", values)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, i: int) -> int:
        """Value at 1-based index i."""
        if not 1 <= i <= len(self.values):
            raise IndexError(f"index {i} out of range 1..{len(self.values)}")
        return self.values[i - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __lt__(self, other: "Permutation"):
        # Sort key only (length, then lexicographic); not the containment order.
        return (len(self.values), self.values) < (len(other.values), other.values)

    def __repr__(self) -> str:
        return f"Permutation({self.values!r})"

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values)


EMPTY = Permutation(())


@dataclass(frozen=True)
class PointSet:
    """The plot of a permutation: the set of points (index, value) in [n] x [n]."""

    points: frozenset[tuple[int, int]]

    @classmethod
    def from_permutation(cls, pi: Permutation) -> "PointSet":
        return cls(frozenset((i, v) for i, v in enumerate(pi.values, start=1)))

    def to_permutation(self) -> Permutation:
        values = [v for _, v in sorted(self.points)]
        return Permutation(values)


def identity(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def decreasing(n: int) -> Permutation:
    return Permutation(range(n, 0, -1))


def is_increasing(pi: Permutation) -> bool:
    return all(a < b for a, b in zip(pi.values, pi.values[1:]))


def is_decreasing(pi: Permutation) -> bool:
    return all(a > b for a, b in zip(pi.values, pi.values[1:]))


def parse_permutation(text: str) -> Permutation:
    """
    Parse comma-separated one-line notation; all-digit compact form is
    accepted only for n <= 9 (longer compact strings are ambiguous).
    """
    text = text.strip()
    if text == "":
        return EMPTY
    try:
        if "," in text:
            return Permutation(int(part) for part in text.split(","))
        if text.isdigit():
            if len(text) > 9:
                raise ParseError(
                    f"compact digit form only allowed for n <= 9: {text!r}"
                )
            return Permutation(int(ch) for ch in text)
        return Permutation([int(text)])
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(f"bad permutation {text!r}: {exc}") from exc


def pattern_of(seq: Sequence[int]) -> Permutation:
    """The unique permutation order-isomorphic to a sequence of distinct integers."""
    if len(set(seq)) != len(seq):
        raise ValueError(f"sequence has duplicate entries: {seq!r}")
    rank = {v: r for r, v in enumerate(sorted(seq), start=1)}
    return Permutation(rank[v] for v in seq)


def contains(pi: Permutation, sigma: Permutation) -> bool:
    """
    True iff pi has a subsequence in the same relative order as sigma.

    Backtracking over occurrence prefixes.  Because a matched prefix is
    order-isomorphic to the corresponding prefix of sigma, the admissible
    values for the next entry form an open window bounded by the matched
    entries closest to it in value; the window endpoints are precomputed.
    """
    n, k = len(pi), len(sigma)
    if k == 0:
        return True
    if k > n:
        return False
    pv = pi.values
    sv = sigma.values

    # below[j] / above[j]: index jj < j whose entry is the tightest bound
    # sv[jj] < sv[j] / sv[jj] > sv[j], or -1 when there is none.
    below = [-1] * k
    above = [-1] * k
    for j in range(k):
        lo_val, hi_val = 0, k + 1
        for jj in range(j):
            if lo_val < sv[jj] < sv[j]:
                lo_val, below[j] = sv[jj], jj
            elif sv[j] < sv[jj] < hi_val:
                hi_val, above[j] = sv[jj], jj

    chosen = [0] * k

    def extend(j: int, start: int) -> bool:
        if j == k:
            return True
        lo = chosen[below[j]] if below[j] >= 0 else 0
        hi = chosen[above[j]] if above[j] >= 0 else n + 1
        for i in range(start, n - (k - j) + 1):
            v = pv[i]
            if lo < v < hi:
                chosen[j] = v
                if extend(j + 1, i + 1):
                    return True
        return False

    return extend(0, 0)


def subgrid(pi: Permutation, indices: tuple[int, int], values: tuple[int, int]) -> tuple[int, ...]:
    """
    The subsequence of pi with indices in the closed interval `indices` and
    values in the closed interval `values`, in index order (raw values).
    An interval with hi < lo is empty.
    """
    a, b = indices
    lo, hi = values
    n = len(pi)
    return tuple(
        v
        for v in pi.values[max(a, 1) - 1 : min(b, n)]
        if lo <= v <= hi
    )


def direct_sum(pi: Permutation, sigma: Permutation) -> Permutation:
    """Place sigma above and to the right of pi."""
    m = len(pi)
    return Permutation(pi.values + tuple(v + m for v in sigma.values))


def skew_sum(pi: Permutation, sigma: Permutation) -> Permutation:
    """Place sigma below and to the right of pi."""
    n = len(sigma)
    return Permutation(tuple(v + n for v in pi.values) + sigma.values)


def sum_power(base: Permutation, k: int, kind: str) -> Permutation:
    """k-fold iterated direct or skew sum of base; k = 0 gives the empty permutation."""
    if k < 0:
        raise ValueError(f"sum power needs k >= 0, got {k}")
    if kind not in ("direct", "skew"):
        raise ValueError(f"kind must be 'direct' or 'skew', got {kind!r}")
    op = direct_sum if kind == "direct" else skew_sum
    result = EMPTY
    for _ in range(k):
        result = op(result, base)
    return result


def inverse(pi: Permutation) -> Permutation:
    inv = [0] * len(pi)
    for i, v in enumerate(pi.values, start=1):
        inv[v - 1] = i
    return Permutation(inv)


def reverse(pi: Permutation) -> Permutation:
    return Permutation(pi.values[::-1])


def complement(pi: Permutation) -> Permutation:
    n = len(pi)
    return Permutation(n + 1 - v for v in pi.values)


_SYMMETRIES = {"inverse": inverse, "reverse": reverse, "complement": complement}


def symmetry(pi: Permutation, which: SymmetryName) -> Permutation:
    """Apply one of the involutive plot symmetries: inverse, reverse, complement."""
    try:
        return _SYMMETRIES[which](pi)
    except KeyError:
        raise ValueError(f"unknown symmetry {which!r}") from None


def longest_monotone(pi: Permutation) -> tuple[int, int]:
    """Exact lengths of the longest increasing and longest decreasing subsequences."""
    n = len(pi)
    if n == 0:
        return (0, 0)
    pv = pi.values
    inc = [1] * n
    dec = [1] * n
    for i in range(n):
        for j in range(i):
            if pv[j] < pv[i] and inc[j] + 1 > inc[i]:
                inc[i] = inc[j] + 1
            elif pv[j] > pv[i] and dec[j] + 1 > dec[i]:
                dec[i] = dec[j] + 1
    return (max(inc), max(dec))


def sub_patterns(pi: Permutation, max_len: int | None = None) -> set[Permutation]:
    """All patterns contained in pi (optionally only those of length <= max_len)."""
    n = len(pi)
    top = n if max_len is None else min(max_len, n)
    found: set[Permutation] = {EMPTY} if (max_len is None or max_len >= 0) else set()
    for k in range(1, top + 1):
        for combo in itertools.combinations(pi.values, k):
            found.add(pattern_of(combo))
    return found


def all_permutations(n: int) -> Iterator[Permutation]:
    """All n! permutations of {1, ..., n} in lexicographic order."""
    for values in itertools.permutations(range(1, n + 1)):
        yield Permutation(values)
