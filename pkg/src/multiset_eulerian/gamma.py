"""Gamma-expansions, symmetric decompositions and positivity certification.

A polynomial symmetric about n/2 expands uniquely in the basis
x^k (1+x)^(n-2k) (bivariate: (xy)^k (x+y)^(n-2k)); the expansion is computed
by peeling coefficients low-to-high.  Any f with deg f <= n splits uniquely
as f = a + x b with a symmetric about n/2 and b about (n-1)/2:

    a(x) = (f(x) - x^(n+1) f(1/x)) / (1 - x),
    b(x) = (x^n f(1/x) - f(x)) / (1 - x).

f is bi-gamma-positive when both parts are gamma-positive; that implies the
alternatingly increasing chain f_0 <= f_n <= f_1 <= f_{n-1} <= ..., which in
turn implies unimodality.  The implication chain is asserted on every report
rather than assumed.

The center parameter n is always explicit, never inferred from deg f:
theorem-level checks on a multiset with m letters use n = m even when
deg A < m (all-2 specs).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .enumeration import MultisetSpec
from .operators import UnsupportedMultiplicity
from .polys import BiPoly, DegreeExceedsN, ONE_PLUS_X, UniPoly, X_PLUS_Y, XY


class NotSymmetric(ValueError):
    """gamma_expansion applied to a polynomial that is not symmetric about n/2."""

    def __init__(self, n: int, residual: UniPoly):
        super().__init__(f"polynomial is not symmetric about {n}/2; residual {residual!r}")
        self.n = n
        self.residual = residual


class NotHomogeneous(ValueError):
    pass


class NotXYSymmetric(ValueError):
    pass


class NegativeCoefficient(ValueError):
    pass


class ExpansionTypeMismatch(RuntimeError):
    """The polynomial's symmetry pattern contradicts its multiplicity pattern
    (signals a computation bug, not a user error)."""


class InternalDivisionFailure(RuntimeError):
    """Division by (1 - x) left a remainder (mathematically impossible)."""


@dataclass(frozen=True)
class GammaVector:
    """Coefficients gamma_0..gamma_floor(n/2) of the basis x^k (1+x)^(n-2k)."""

    n: int
    gammas: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.gammas) != self.n // 2 + 1:
            raise ValueError(
                f"expected {self.n // 2 + 1} gamma coefficients for n={self.n}, "
                f"got {len(self.gammas)}"
            )
        object.__setattr__(self, "gammas", tuple(Fraction(g) for g in self.gammas))

    def is_nonnegative(self) -> bool:
        return all(g >= 0 for g in self.gammas)

    def reconstruct(self) -> UniPoly:
        total = UniPoly.zero()
        for k, g in enumerate(self.gammas):
            if g:
                total = total + (UniPoly.monomial(k, g) * ONE_PLUS_X ** (self.n - 2 * k))
        return total

    def reconstruct_bivariate(self, y_prefixed: bool = False) -> BiPoly:
        total = BiPoly.zero()
        for k, g in enumerate(self.gammas):
            if g:
                total = total + (XY**k * X_PLUS_Y ** (self.n - 2 * k)).scale(g)
        if y_prefixed:
            total = total * BiPoly.monomial(0, 1)
        return total

    def to_json(self) -> dict:
        return {"n": self.n, "gammas": [_fraction_str(g) for g in self.gammas]}


@dataclass(frozen=True)
class SymmetricDecomposition:
    """f = a + x b with a symmetric about n/2 and b about (n-1)/2."""

    n: int
    a: UniPoly
    b: UniPoly

    def recompose(self) -> UniPoly:
        return self.a + UniPoly.x() * self.b

    def to_json(self) -> dict:
        return {"n": self.n, "a": self.a.to_json(), "b": self.b.to_json()}


def _fraction_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def gamma_expansion(f: UniPoly, n: int) -> GammaVector:
    """Peel f into the basis x^k (1+x)^(n-2k); the gammas may be negative.

    Raises NotSymmetric (with the residual attached) iff f is not symmetric
    about n/2.
    """
    d = f.degree
    if d is not None and d > n:
        raise DegreeExceedsN(f"degree {d} exceeds n={n}")
    residual = f
    gammas = []
    for k in range(n // 2 + 1):
        g = residual.coeff(k)
        gammas.append(g)
        if g:
            residual = residual - UniPoly.monomial(k, g) * ONE_PLUS_X ** (n - 2 * k)
    if residual:
        raise NotSymmetric(n, residual)
    return GammaVector(n, tuple(gammas))


def bivariate_gamma_expansion(p: BiPoly) -> GammaVector:
    """Expand a homogeneous xy-symmetric polynomial in (xy)^k (x+y)^(n-2k).

    Cross-checked against the univariate expansion of p at y = 1.
    """
    n = p.homogeneous_degree()
    if n is None:
        raise NotHomogeneous(f"{p!r} is not homogeneous")
    if not p.is_xy_symmetric():
        raise NotXYSymmetric(f"{p!r} is not invariant under swapping x and y")
    residual = p
    gammas = []
    for k in range(n // 2 + 1):
        g = residual.coeff(k, n - k)
        gammas.append(g)
        if g:
            residual = residual - (XY**k * X_PLUS_Y ** (n - 2 * k)).scale(g)
    if residual:
        raise InternalDivisionFailure(
            f"symmetric homogeneous peel left residual {residual!r}"
        )
    vector = GammaVector(n, tuple(gammas))
    if vector != gamma_expansion(p.set_y_to_one(), n):
        raise AssertionError("bivariate and dehomogenized gamma expansions disagree")
    return vector


def _divide_by_one_minus_x(p: UniPoly) -> UniPoly:
    """Exact synthetic division by (1 - x); q_i = p_i + q_{i-1}."""
    d = p.degree
    if d is None:
        return UniPoly.zero()
    quotient: dict[int, Fraction] = {}
    running = Fraction(0)
    for i in range(d + 1):
        running += p.coeff(i)
        quotient[i] = running
    if running != 0:
        raise InternalDivisionFailure(f"(1-x) does not divide {p!r}")
    quotient.pop(d)  # top entry is the (zero) remainder accumulator
    return UniPoly(quotient)


def symmetric_decomposition(f: UniPoly, n: int) -> SymmetricDecomposition:
    """Unique f = a + x b with a symmetric about n/2, b about (n-1)/2."""
    d = f.degree
    if d is not None and d > n:
        raise DegreeExceedsN(f"degree {d} exceeds n={n}")
    rev = f.reciprocal(n)
    a = _divide_by_one_minus_x(f - UniPoly.x() * rev)
    b = _divide_by_one_minus_x(rev - f)
    if a + UniPoly.x() * b != f:
        raise InternalDivisionFailure("decomposition does not recompose to f")
    if not a.is_symmetric(n) or not b.is_symmetric(n - 1):
        raise InternalDivisionFailure("decomposition parts lost symmetry")
    return SymmetricDecomposition(n, a, b)


@dataclass(frozen=True)
class BiGammaResult:
    """Verdict plus the witnesses backing it."""

    positive: bool
    decomposition: SymmetricDecomposition
    gamma_a: GammaVector
    gamma_b: GammaVector


def is_bi_gamma_positive(f: UniPoly, n: int) -> BiGammaResult:
    """True iff both parts of the symmetric decomposition are gamma-positive."""
    decomposition = symmetric_decomposition(f, n)
    gamma_a = gamma_expansion(decomposition.a, n)
    gamma_b = gamma_expansion(decomposition.b, n - 1)
    positive = gamma_a.is_nonnegative() and gamma_b.is_nonnegative()
    return BiGammaResult(positive, decomposition, gamma_a, gamma_b)


def is_alternatingly_increasing(f: UniPoly, n: int) -> bool:
    """f_0 <= f_n <= f_1 <= f_{n-1} <= ... <= f_{floor((n+1)/2)}."""
    d = f.degree
    if d is not None and d > n:
        raise DegreeExceedsN(f"degree {d} exceeds n={n}")
    chain = []
    lo, hi = 0, n
    while lo <= hi:
        chain.append(lo)
        if hi != lo:
            chain.append(hi)
        lo += 1
        hi -= 1
    values = [f.coeff(i) for i in chain]
    return all(u <= v for u, v in zip(values, values[1:]))


def unimodality(f: UniPoly) -> tuple[bool, frozenset[int]]:
    """(unimodal?, mode set).  Modes are the argmax indices; the mode set is
    empty when the coefficient sequence is not rise-then-fall."""
    coeffs = f.coeff_list()
    if any(c < 0 for c in coeffs):
        raise NegativeCoefficient(f"{f!r} has a negative coefficient")
    if not coeffs:
        return True, frozenset()
    rising = True
    for prev, cur in zip(coeffs, coeffs[1:]):
        if cur > prev:
            if not rising:
                return False, frozenset()
        elif cur < prev:
            rising = False
    peak = max(coeffs)
    return True, frozenset(i for i, c in enumerate(coeffs) if c == peak)


@dataclass(frozen=True)
class PositivityReport:
    """All verdicts for one polynomial at one center parameter, with the
    witnesses needed to re-verify each claim independently."""

    n: int
    polynomial: UniPoly
    symmetric: bool
    gamma_positive: Optional[bool]
    bi_gamma_positive: bool
    alternatingly_increasing: bool
    unimodal: bool
    modes: frozenset[int]
    gamma_full: Optional[GammaVector]
    decomposition: SymmetricDecomposition
    gamma_a: GammaVector
    gamma_b: GammaVector

    def __post_init__(self):
        if self.bi_gamma_positive and not self.alternatingly_increasing:
            raise AssertionError("bi-gamma-positive but not alternatingly increasing")
        if self.alternatingly_increasing and not self.unimodal:
            raise AssertionError("alternatingly increasing but not unimodal")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "polynomial": self.polynomial.to_json(),
            "symmetric": self.symmetric,
            "gamma_positive": self.gamma_positive,
            "bi_gamma_positive": self.bi_gamma_positive,
            "alternatingly_increasing": self.alternatingly_increasing,
            "unimodal": self.unimodal,
            "modes": sorted(self.modes),
            "gamma_full": self.gamma_full.to_json() if self.gamma_full else None,
            "decomposition": self.decomposition.to_json(),
            "gamma_a": self.gamma_a.to_json(),
            "gamma_b": self.gamma_b.to_json(),
        }


def positivity_report(f: UniPoly, n: int) -> PositivityReport:
    """Full certification of f at center parameter n (f must be coefficient-
    nonnegative; descent polynomials always are)."""
    unimodal, modes = unimodality(f)  # raises NegativeCoefficient early
    symmetric = f.is_symmetric(n)
    gamma_full = gamma_expansion(f, n) if symmetric else None
    gamma_positive = gamma_full.is_nonnegative() if gamma_full is not None else None
    bi = is_bi_gamma_positive(f, n)
    return PositivityReport(
        n=n,
        polynomial=f,
        symmetric=symmetric,
        gamma_positive=gamma_positive,
        bi_gamma_positive=bi.positive,
        alternatingly_increasing=is_alternatingly_increasing(f, n),
        unimodal=unimodal,
        modes=modes,
        gamma_full=gamma_full,
        decomposition=bi.decomposition,
        gamma_a=bi.gamma_a,
        gamma_b=bi.gamma_b,
    )


class ExpansionType(enum.Enum):
    TYPE_I = "I"     # xy-symmetric (all multiplicities 1)
    TYPE_II = "II"   # A/y xy-symmetric (all multiplicities 2)
    TYPE_III = "III"  # mixed


def classify_expansion_type(spec: MultisetSpec, p: BiPoly) -> ExpansionType:
    """Classify A(x, y) by its symmetry pattern and cross-check it against
    the spec's multiplicity pattern; a contradiction raises
    ExpansionTypeMismatch."""
    if spec.m == 0:
        raise ValueError("classification needs a nonempty spec")
    if any(mult not in (1, 2) for mult in spec.multiplicities):
        raise UnsupportedMultiplicity(f"classification covers multiplicities 1 and 2 only")
    if p.is_xy_symmetric():
        observed = ExpansionType.TYPE_I
    elif p.is_divisible_by_y() and p.divided_by_y().is_xy_symmetric():
        observed = ExpansionType.TYPE_II
    else:
        observed = ExpansionType.TYPE_III
    if all(mult == 1 for mult in spec.multiplicities):
        expected = ExpansionType.TYPE_I
    elif all(mult == 2 for mult in spec.multiplicities):
        expected = ExpansionType.TYPE_II
    else:
        expected = ExpansionType.TYPE_III
    if observed is not expected:
        raise ExpansionTypeMismatch(
            f"spec {spec.multiplicities} should be type {expected.value} "
            f"but the polynomial is type {observed.value}"
        )
    return observed


def recurrence_tilde_a(gv: GammaVector) -> GammaVector:
    """One T-step on the gamma vector of an all-1 spec: input has center
    (m+1)/2, output center (m+2)/2, with

        out_k = k * in_k + 2(m + 3 - 2k) * in_{k-1}.
    """
    m = gv.n - 1

    def a(k: int) -> Fraction:
        return gv.gammas[k] if 0 <= k < len(gv.gammas) else Fraction(0)

    out = tuple(
        k * a(k) + 2 * (m + 3 - 2 * k) * a(k - 1)
        for k in range((m + 2) // 2 + 1)
    )
    return GammaVector(m + 2, out)


def recurrence_tilde_b(gv: GammaVector) -> GammaVector:
    """The y-prefixed part of one T-step on an all-2 spec: input is the gamma
    vector of A/y in the basis (xy)^k (x+y)^(m-2k), output has center
    (m+1)/2, with

        out_k = k * in_k + 2(m - 2k + 2) * in_{k-1}.
    """
    m = gv.n

    def b(k: int) -> Fraction:
        return gv.gammas[k] if 0 <= k < len(gv.gammas) else Fraction(0)

    out = tuple(
        k * b(k) + 2 * (m - 2 * k + 2) * b(k - 1)
        for k in range((m + 1) // 2 + 1)
    )
    return GammaVector(m + 1, out)
