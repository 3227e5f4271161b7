"""Descent polynomials via coefficient extraction from the classical
generating-function identity

    A(x) / (1-x)^{1+m}  =  sum_{k>=0}  prod_i C(k + m_i, m_i) x^{k+1},

where m = m1 + ... + mn.  Multiplying the truncated series by (1-x)^{m+1}
recovers A(x) exactly, since the coefficient of x^j in the product only
depends on series terms of exponent <= j.  This route accepts arbitrary
multiplicities and scales far beyond enumeration.
"""

from __future__ import annotations

from math import comb

from .enumeration import MultisetSpec
from .polys import UniPoly


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient; 0 outside the range 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def _series_term(spec: MultisetSpec, k: int) -> int:
    value = 1
    for mult in spec.multiplicities:
        value *= binomial(k + mult, mult)
    return value


def _one_minus_x_power(e: int) -> UniPoly:
    return UniPoly({0: 1, 1: -1}) ** e


def macmahon_polynomial(spec: MultisetSpec) -> UniPoly:
    """The descent polynomial A(x) of the spec; the empty spec gives x."""
    m = spec.m
    if m == 0:
        return UniPoly.x()
    series = UniPoly({k + 1: _series_term(spec, k) for k in range(m + 1)})
    return (series * _one_minus_x_power(m + 1)).truncate(m)


def polynomiality_check(spec: MultisetSpec, extra: int) -> bool:
    """Extend the series by ``extra`` terms and verify that all product
    coefficients in degrees m+1 .. m+extra vanish (the truncation in
    macmahon_polynomial is verified, not assumed)."""
    m = spec.m
    series = UniPoly({k + 1: _series_term(spec, k) for k in range(m + extra + 1)})
    product = series * _one_minus_x_power(m + 1)
    # the empty spec gives A(x) = x, one degree above m
    start = max(m, 1) + 1
    return all(product.coeff(d) == 0 for d in range(start, m + extra + 1))
