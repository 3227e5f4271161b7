"""Brute-force enumeration of multiset permutations and their descent statistics.

This module is the ground-truth oracle: it walks every permutation of the
multiset {1^m1, ..., n^mn} in lexicographic order (in-place next-permutation,
constant memory per word) and aggregates ascent/descent/plateau counts with
the boundary convention pi_0 = pi_{m+1} = 0.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .polys import BiPoly, UniPoly

DEFAULT_BUDGET = 20_000_000
BUDGET_ENV_VAR = "MULTISET_EULERIAN_BUDGET"


class EmptySpec(ValueError):
    """Enumeration over the empty multiset was requested (use A_empty = x)."""


class BudgetExceeded(RuntimeError):
    """The spec's word count exceeds the enumeration budget."""

    def __init__(self, count: int, budget: int):
        super().__init__(f"{count} words exceed enumeration budget {budget}")
        self.count = count
        self.budget = budget


def default_budget() -> int:
    return int(os.environ.get(BUDGET_ENV_VAR, DEFAULT_BUDGET))


@dataclass(frozen=True)
class MultisetSpec:
    """Multiplicity sequence (m1, ..., mn) for the multiset {1^m1, ..., n^mn}.

    Normalized on construction: letters with multiplicity 0 are dropped (the
    surviving letters are relabeled 1..n by position, which leaves all descent
    statistics unchanged).
    """

    multiplicities: tuple[int, ...]

    def __post_init__(self):
        mults = tuple(int(v) for v in self.multiplicities)
        if any(v < 0 for v in mults):
            raise ValueError(f"negative multiplicity in {mults}")
        object.__setattr__(self, "multiplicities", tuple(v for v in mults if v > 0))

    @classmethod
    def parse(cls, text: str) -> "MultisetSpec":
        """Parse "2,1,2" (comma form) or "1^3 2^4" (compressed power form).

        "1^3 2^4" means three letters of multiplicity 1 followed by four
        letters of multiplicity 2.  The empty string is the empty spec.
        """
        text = text.strip()
        if not text:
            return cls(())
        if "^" in text:
            mults: list[int] = []
            for token in text.split():
                value, _, repeat = token.partition("^")
                mults.extend([int(value)] * (int(repeat) if repeat else 1))
            return cls(tuple(mults))
        return cls(tuple(int(tok) for tok in text.split(",") if tok.strip() != ""))

    @property
    def m(self) -> int:
        return sum(self.multiplicities)

    @property
    def n(self) -> int:
        return len(self.multiplicities)

    def word_count(self) -> int:
        count = math.factorial(self.m)
        for mult in self.multiplicities:
            count //= math.factorial(mult)
        return count

    def canonical(self) -> "MultisetSpec":
        return MultisetSpec(tuple(sorted(self.multiplicities, reverse=True)))

    def as_text(self) -> str:
        return ",".join(str(v) for v in self.multiplicities)

    def initial_word(self) -> list[int]:
        word: list[int] = []
        for letter, mult in enumerate(self.multiplicities, start=1):
            word.extend([letter] * mult)
        return word


@dataclass(frozen=True)
class StatTriple:
    """Ascent/descent/plateau counts; always asc + des + plat = m + 1."""

    asc: int
    des: int
    plat: int


def _next_permutation(word: list[int]) -> bool:
    """Advance to the lexicographically next arrangement; False at the last."""
    i = len(word) - 2
    while i >= 0 and word[i] >= word[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(word) - 1
    while word[j] <= word[i]:
        j -= 1
    word[i], word[j] = word[j], word[i]
    word[i + 1:] = word[:i:-1]
    return True


def iterate_words(spec: MultisetSpec) -> Iterator[tuple[int, ...]]:
    """Yield each multiset permutation exactly once, in lexicographic order."""
    if spec.m == 0:
        raise EmptySpec("cannot enumerate the empty multiset")
    word = spec.initial_word()
    while True:
        yield tuple(word)
        if not _next_permutation(word):
            return


def statistics(word: Sequence[int]) -> StatTriple:
    """Count ascents/descents/plateaux of the word padded with boundary zeros."""
    if not word:
        raise EmptySpec("statistics of the empty word are undefined")
    m = len(word)
    asc = 1  # 0 < word[0]
    des = 1  # word[-1] > 0
    prev = word[0]
    for k in range(1, m):
        v = word[k]
        if prev > v:
            des += 1
        elif prev < v:
            asc += 1
        prev = v
    return StatTriple(asc=asc, des=des, plat=m + 1 - asc - des)


def _descent_histogram(spec: MultisetSpec, budget: Optional[int] = None) -> list[int]:
    """des-histogram over the full enumeration; asserts asc/des agreement."""
    m = spec.m
    if m == 0:
        raise EmptySpec("cannot enumerate the empty multiset")
    if budget is None:
        budget = default_budget()
    count = spec.word_count()
    if count > budget:
        raise BudgetExceeded(count, budget)

    word = spec.initial_word()
    des_hist = [0] * (m + 2)
    asc_hist = [0] * (m + 2)
    nxt = _next_permutation
    while True:
        d = 1
        a = 1
        prev = word[0]
        for k in range(1, m):
            v = word[k]
            if prev > v:
                d += 1
            elif prev < v:
                a += 1
            prev = v
        des_hist[d] += 1
        asc_hist[a] += 1
        if not nxt(word):
            break
    if des_hist != asc_hist:
        raise AssertionError(
            f"ascent and descent histograms differ for {spec}: {asc_hist} vs {des_hist}"
        )
    if sum(des_hist) != count:
        raise AssertionError(f"enumeration visited {sum(des_hist)} of {count} words")
    return des_hist


def descent_polynomial_brute(spec: MultisetSpec, budget: Optional[int] = None) -> UniPoly:
    """Sum of x^des over all words; cross-checked against the ascent version."""
    hist = _descent_histogram(spec, budget)
    return UniPoly(dict(enumerate(hist)))


def bivariate_brute(spec: MultisetSpec, budget: Optional[int] = None) -> BiPoly:
    """Sum of x^des y^{m+1-des}; homogeneous of degree m + 1."""
    hist = _descent_histogram(spec, budget)
    m = spec.m
    return BiPoly({(d, m + 1 - d): c for d, c in enumerate(hist) if c})
