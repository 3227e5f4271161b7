"""Differential operators on bivariate descent polynomials.

Two operators act on A(x, y):

    T = xy (d/dx + d/dy)                       inserts one copy of a new
                                               largest letter,
    G = xy^2 (d/dx + d/dy)
      + (x^2 y^2 / 2) (d2/dx2 + d2/dy2)
      + x^2 y^2 d2/dxdy                        inserts two copies.

T raises the homogeneous degree by 1, G by 2, and the two operators commute,
so any multiset with multiplicities in {1, 2} is reachable from A = x by
applying T and G in any order.

The module also implements the closed-form composed operator TG = GT as a
direct transcription (so a transcription error surfaces against the actual
composition in tests), and the action of T and G on the two gamma-basis
families, implemented from the coefficient formulas rather than by
differentiation; their agreement with the raw operators is itself a test
target, not an assumption.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable

from .enumeration import MultisetSpec
from .polys import BiPoly, X, XY, X_PLUS_Y

HALF = Fraction(1, 2)


class UnsupportedMultiplicity(ValueError):
    """The operator route only covers multiplicities 1 and 2."""


def apply_T(p: BiPoly) -> BiPoly:
    """xy (dp/dx + dp/dy)."""
    return XY * (p.partial_derivative("x") + p.partial_derivative("y"))


def apply_G_part(p: BiPoly, part: str) -> BiPoly:
    """One of the three summands of G applied alone: "G1", "G2" or "G3"."""
    if part == "G1":
        return BiPoly.monomial(1, 2) * (p.partial_derivative("x") + p.partial_derivative("y"))
    if part == "G2":
        pxx = p.partial_derivative("x").partial_derivative("x")
        pyy = p.partial_derivative("y").partial_derivative("y")
        return BiPoly.monomial(2, 2, HALF) * (pxx + pyy)
    if part == "G3":
        pxy = p.partial_derivative("x").partial_derivative("y")
        return BiPoly.monomial(2, 2) * pxy
    raise ValueError(f"unknown G part {part!r}")


def apply_G(p: BiPoly) -> BiPoly:
    """G1(p) + G2(p) + G3(p).

    The 1/2 in G2 always cancels on integer input (second derivatives carry
    even factors i(i-1)); integrality of the output is asserted.
    """
    out = apply_G_part(p, "G1") + apply_G_part(p, "G2") + apply_G_part(p, "G3")
    if p.has_integer_coefficients() and not out.has_integer_coefficients():
        raise AssertionError(f"G produced non-integer output on integer input {p!r}")
    return out


def apply_TG_closed(p: BiPoly) -> BiPoly:
    """The expanded third-order operator equal to both TG and GT."""
    px = p.partial_derivative("x")
    py = p.partial_derivative("y")
    pxx = px.partial_derivative("x")
    pyy = py.partial_derivative("y")
    pxy = px.partial_derivative("y")
    pxxx = pxx.partial_derivative("x")
    pyyy = pyy.partial_derivative("y")
    pxxy = pxx.partial_derivative("y")
    pyyx = pyy.partial_derivative("x")

    first = BiPoly({(1, 3): 1, (2, 2): 2})
    pure_second = BiPoly({(2, 3): 2, (3, 2): 1})
    mixed_second = BiPoly({(2, 3): 4, (3, 2): 2})
    pure_third = BiPoly.monomial(3, 3, HALF)
    mixed_third = BiPoly.monomial(3, 3, Fraction(3, 2))

    return (
        first * (px + py)
        + pure_second * (pxx + pyy)
        + mixed_second * pxy
        + pure_third * (pxxx + pyyy)
        + mixed_third * (pxxy + pyyx)
    )


def commutator_is_zero(p: BiPoly) -> bool:
    """True iff T(G(p)) = G(T(p))."""
    return apply_T(apply_G(p)) == apply_G(apply_T(p))


def polynomial_via_operators(spec: MultisetSpec) -> BiPoly:
    """A(x, y) built from A_empty = x by one T per multiplicity-1 letter and
    one G per multiplicity-2 letter, applied in spec order."""
    p = X
    for mult in spec.multiplicities:
        if mult == 1:
            p = apply_T(p)
        elif mult == 2:
            p = apply_G(p)
        else:
            raise UnsupportedMultiplicity(
                f"multiplicity {mult} has no insertion operator (only 1 and 2)"
            )
    return p


# -- gamma-basis actions -----------------------------------------------------

TYPE1 = "type1"  # c * (xy)^k (x+y)^(n-2k)
TYPE2 = "type2"  # c * y (xy)^k (x+y)^(n-2k)


@dataclass(frozen=True)
class GammaBasisTerm:
    """One scaled gamma-basis element; ``n`` is the degree of the
    (xy)^k (x+y)^(n-2k) part (a type2 term has total degree n + 1)."""

    kind: str
    k: int
    n: int
    coefficient: Fraction

    def __post_init__(self):
        if self.kind not in (TYPE1, TYPE2):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.k < 0 or 2 * self.k > self.n:
            raise ValueError(f"need 0 <= 2k <= n, got k={self.k}, n={self.n}")
        if self.coefficient == 0:
            raise ValueError("zero coefficient")

    def expand(self) -> BiPoly:
        base = XY**self.k * X_PLUS_Y ** (self.n - 2 * self.k)
        if self.kind == TYPE2:
            base = base * BiPoly.monomial(0, 1)
        return base.scale(self.coefficient)


def expand_terms(terms: Iterable[GammaBasisTerm]) -> BiPoly:
    total = BiPoly.zero()
    for term in terms:
        total = total + term.expand()
    return total


def _collect(kind_k_n_coeff: Iterable[tuple[str, int, int, Fraction]]) -> list[GammaBasisTerm]:
    acc: dict[tuple[str, int, int], Fraction] = {}
    for kind, k, n, c in kind_k_n_coeff:
        key = (kind, k, n)
        acc[key] = acc.get(key, Fraction(0)) + Fraction(c)
    return [
        GammaBasisTerm(kind, k, n, c)
        for (kind, k, n), c in sorted(acc.items())
        if c != 0
    ]


def t_on_type1_basis(k: int, n: int) -> list[GammaBasisTerm]:
    """T((xy)^k (x+y)^(n-2k)) = k (xy)^k (x+y)^(n+1-2k)
                                + 2(n-2k) (xy)^(k+1) (x+y)^(n-1-2k)."""
    if not (1 <= 2 * k <= n):
        raise ValueError(f"need 1 <= 2k <= n, got k={k}, n={n}")
    return _collect([
        (TYPE1, k, n + 1, Fraction(k)),
        (TYPE1, k + 1, n + 1, Fraction(2 * (n - 2 * k))),
    ])


def g_on_type1_basis(k: int, n: int) -> list[GammaBasisTerm]:
    """G on (xy)^k (x+y)^(n-2k): the G1 part contributes y-prefixed (type2)
    terms of degree n+1, the G2+G3 part plain (type1) terms of degree n+2."""
    if not (1 <= 2 * k <= n):
        raise ValueError(f"need 1 <= 2k <= n, got k={k}, n={n}")
    r = n - 2 * k
    return _collect([
        (TYPE2, k, n + 1, Fraction(k)),
        (TYPE2, k + 1, n + 1, Fraction(2 * r)),
        (TYPE1, k, n + 2, Fraction(comb(k, 2))),
        (TYPE1, k + 1, n + 2, Fraction(k)),
        (TYPE1, k + 1, n + 2, Fraction(2 * k * r)),
        (TYPE1, k + 2, n + 2, Fraction(2 * r * (r - 1))),
    ])


def g_on_type2_basis(p: int, q: int) -> list[GammaBasisTerm]:
    """G on y (xy)^p (x+y)^q, as type2 terms of degree 2p + q + 2:

        C(p+1,2) y (xy)^p (x+y)^(q+2)
      + (1+p)(1+2q) y (xy)^(p+1) (x+y)^q
      + 4 C(q,2) y (xy)^(p+2) (x+y)^(q-2).

    The last coefficient vanishes for q < 2, so no negative exponent ever
    materializes.
    """
    if p < 0 or q < 0:
        raise ValueError(f"need p, q >= 0, got p={p}, q={q}")
    n_out = 2 * p + q + 2
    return _collect([
        (TYPE2, p, n_out, Fraction(comb(p + 1, 2))),
        (TYPE2, p + 1, n_out, Fraction((1 + p) * (1 + 2 * q))),
        (TYPE2, p + 2, n_out, Fraction(4 * comb(q, 2))),
    ])
