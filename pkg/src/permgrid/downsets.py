"""
Downsets of N^m under the product order (x <= y iff x_i <= y_i for all i).

A downset is represented by the minimal vectors of its complement upset
("forbidden" vectors): x belongs to the downset iff no forbidden vector is
componentwise <= x.  Inputs are reduced to an antichain on construction.
Text form: "m=2; forbidden=(1,1),(3,0)".
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable

from .errors import ParseError, StabilisationError
from .series import IntSequence, PolynomialFit, fit_polynomial

Vector = tuple[int, ...]


def vector_leq(x: Vector, y: Vector) -> bool:
    return all(a <= b for a, b in zip(x, y))


def reduce_antichain(vectors: Iterable[Vector]) -> frozenset[Vector]:
    """Keep only the minimal vectors under the product order."""
    vecs = set(vectors)
    return frozenset(
        v for v in vecs if not any(w != v and vector_leq(w, v) for w in vecs)
    )


@dataclass(frozen=True)
class VecDownset:
    """A downset of N^m given by the antichain of minimal forbidden vectors."""

    m: int
    forbidden: frozenset[Vector]

    def __init__(self, m: int, forbidden: Iterable[Vector] = ()):
        if m < 1:
            raise ValueError(f"dimension must be >= 1, got {m}")
        vecs = [tuple(int(e) for e in v) for v in forbidden]
        for v in vecs:
            if len(v) != m:
                raise ValueError(f"vector {v} does not have dimension {m}")
            if any(e < 0 for e in v):
                raise ValueError(f"vector {v} has a negative entry")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "forbidden", reduce_antichain(vecs))


def member(downset: VecDownset, x: Vector) -> bool:
    """True iff x lies in the downset (no forbidden vector is <= x)."""
    x = tuple(x)
    if len(x) != downset.m:
        raise ValueError(f"vector {x} does not have dimension {downset.m}")
    return not any(vector_leq(f, x) for f in downset.forbidden)


def count_weight(downset: VecDownset, n: int) -> int:
    """
    The exact number of downset members with coordinate sum n.

    Inclusion-exclusion over subsets S of the forbidden antichain: the vectors
    above the componentwise maximum of S and of weight n are counted by stars
    and bars, C(n - w + m - 1, m - 1) with w the weight of that maximum.
    Subsets whose maximum already outweighs n contribute nothing, so the
    subset recursion prunes on weight.
    """
    if n < 0:
        raise ValueError(f"weight must be >= 0, got {n}")
    m = downset.m
    forbidden = sorted(downset.forbidden)

    def expand(i: int, join: Vector, sign: int) -> int:
        total = sign * math.comb(n - sum(join) + m - 1, m - 1)
        for j in range(i, len(forbidden)):
            bigger = tuple(max(a, b) for a, b in zip(join, forbidden[j]))
            if sum(bigger) <= n:
                total += expand(j + 1, bigger, -sign)
        return total

    return expand(0, (0,) * m, 1)


def weight_counts(downset: VecDownset, n_max: int) -> IntSequence:
    return IntSequence(0, tuple(count_weight(downset, n) for n in range(n_max + 1)))


def eventual_polynomial(downset: VecDownset, window: range) -> PolynomialFit:
    """
    The polynomial that counts members by weight for all large n, located by
    finite differences over the given window of weights.

    The fit is only accepted once at least m + 2 consecutive differences have
    stabilised; with fewer the window is deemed too short and a
    StabilisationError is raised rather than guessing.
    """
    if window.step != 1:
        raise ValueError("window must have step 1")
    if len(window) == 0 or window.start < 0:
        raise ValueError(f"window must be a nonempty range of weights >= 0: {window}")
    counts = IntSequence(
        window.start, tuple(count_weight(downset, n) for n in window)
    )
    fit = fit_polynomial(counts, min_stable=downset.m + 2)
    if fit is None:
        raise StabilisationError(
            f"weight counts did not stabilise on window {window}; "
            f"extend it past the forbidden vectors"
        )
    if fit.degree > downset.m - 1 and any(fit.coefficients):
        raise AssertionError(
            f"fit degree {fit.degree} exceeds m - 1 = {downset.m - 1}"
        )
    return fit


_DOWNSET_RE = re.compile(r"^\s*m\s*=\s*(\d+)\s*(?:;\s*forbidden\s*=\s*(.*))?$")


def parse_downset(text: str) -> VecDownset:
    """Parse "m=2; forbidden=(1,1),(3,0)"; the forbidden part may be empty."""
    match = _DOWNSET_RE.match(text.strip())
    if not match:
        raise ParseError(f"bad downset {text!r}; expected 'm=<dim>; forbidden=(..),(..)'")
    m = int(match.group(1))
    body = (match.group(2) or "").strip()
    vectors = []
    if body and body != "()":
        for part in re.findall(r"\(([^()]*)\)", body):
            entries = [p.strip() for p in part.split(",") if p.strip() != ""]
            if len(entries) != m or not all(e.lstrip("-").isdigit() for e in entries):
                raise ParseError(f"bad forbidden vector ({part}) for dimension {m}")
            vectors.append(tuple(int(e) for e in entries))
        if not vectors:
            raise ParseError(f"could not read any vectors from {body!r}")
    try:
        return VecDownset(m, vectors)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_downset(downset: VecDownset) -> str:
    vecs = ",".join(
        "(" + ",".join(str(e) for e in v) + ")" for v in sorted(downset.forbidden)
    )
    return f"m={downset.m}; forbidden={vecs}"
