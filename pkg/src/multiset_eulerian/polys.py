"""Exact sparse polynomial arithmetic in one and two variables.

Coefficients are arbitrary-precision rationals (``fractions.Fraction``), so
every operation in this package is exact: polynomial equality is term-set
equality and there is no rounding anywhere.

Representation:

  UniPoly:  dict mapping exponent i        -> nonzero Fraction
  BiPoly:   dict mapping exponent pair (i, j) -> nonzero Fraction

Zero-coefficient terms are never stored; the zero polynomial is the empty
dict and its degree is ``None`` (callers must handle it explicitly, there is
no -inf sentinel).  Both classes are immutable values: every operation
returns a fresh polynomial, so instances are safely shareable.

Term iteration and JSON serialization use graded lexicographic order
(total degree first, then x-degree) so output is deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

Rational = Union[int, Fraction]


class DegreeExceedsN(ValueError):
    """The reflection degree n is smaller than the polynomial's degree."""


def _clean(acc: dict) -> dict:
    return {e: c for e, c in acc.items() if c != 0}


class UniPoly:
    """Polynomial in one variable x with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, Rational] | Iterable[tuple[int, Rational]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, Fraction] = {}
        for i, c in items:
            i = int(i)
            if i < 0:
                raise ValueError(f"negative exponent {i}")
            acc[i] = acc.get(i, Fraction(0)) + Fraction(c)
        self._coeffs = _clean(acc)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls()

    @classmethod
    def one(cls) -> "UniPoly":
        return cls({0: 1})

    @classmethod
    def x(cls) -> "UniPoly":
        return cls({1: 1})

    @classmethod
    def monomial(cls, i: int, c: Rational = 1) -> "UniPoly":
        return cls({i: c})

    @classmethod
    def from_coeff_list(cls, coeffs: Iterable[Rational]) -> "UniPoly":
        return cls(dict(enumerate(coeffs)))

    # -- inspection --------------------------------------------------------

    @property
    def degree(self) -> Optional[int]:
        return max(self._coeffs) if self._coeffs else None

    def coeff(self, i: int) -> Fraction:
        return self._coeffs.get(i, Fraction(0))

    def items(self) -> list[tuple[int, Fraction]]:
        return sorted(self._coeffs.items())

    def coeff_list(self, upto: Optional[int] = None) -> list[Fraction]:
        """Coefficients [f_0, ..., f_d]; ``upto`` pads/extends to that index."""
        d = self.degree
        top = d if upto is None else upto
        if top is None:
            return []
        return [self.coeff(i) for i in range(top + 1)]

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs.values())

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "UniPoly") -> "UniPoly":
        acc = dict(self._coeffs)
        for i, c in other._coeffs.items():
            acc[i] = acc.get(i, Fraction(0)) + c
        out = UniPoly.__new__(UniPoly)
        out._coeffs = _clean(acc)
        return out

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __neg__(self) -> "UniPoly":
        out = UniPoly.__new__(UniPoly)
        out._coeffs = {i: -c for i, c in self._coeffs.items()}
        return out

    def __mul__(self, other: Union["UniPoly", Rational]) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        acc: dict[int, Fraction] = {}
        for i, a in self._coeffs.items():
            for j, b in other._coeffs.items():
                k = i + j
                acc[k] = acc.get(k, Fraction(0)) + a * b
        out = UniPoly.__new__(UniPoly)
        out._coeffs = _clean(acc)
        return out

    __rmul__ = __mul__

    def scale(self, c: Rational) -> "UniPoly":
        c = Fraction(c)
        if c == 0:
            return UniPoly.zero()
        out = UniPoly.__new__(UniPoly)
        out._coeffs = {i: a * c for i, a in self._coeffs.items()}
        return out

    def __pow__(self, e: int) -> "UniPoly":
        if e < 0:
            raise ValueError("negative power")
        result = UniPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def evaluate(self, v: Rational) -> Fraction:
        v = Fraction(v)
        return sum((c * v**i for i, c in self._coeffs.items()), Fraction(0))

    def truncate(self, max_degree: int) -> "UniPoly":
        out = UniPoly.__new__(UniPoly)
        out._coeffs = {i: c for i, c in self._coeffs.items() if i <= max_degree}
        return out

    # -- reflection / symmetry ---------------------------------------------

    def reciprocal(self, n: int) -> "UniPoly":
        """x^n * f(1/x): coefficient i of the result is coefficient n-i of f."""
        d = self.degree
        if d is not None and d > n:
            raise DegreeExceedsN(f"degree {d} exceeds n={n}")
        out = UniPoly.__new__(UniPoly)
        out._coeffs = {n - i: c for i, c in self._coeffs.items()}
        return out

    def is_symmetric(self, n: int) -> bool:
        """True iff f_i = f_{n-i} for all i (center of symmetry n/2)."""
        d = self.degree
        if d is not None and d > n:
            return False
        return self == self.reciprocal(n)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> list[dict]:
        return [
            {"i": i, "num": str(c.numerator), "den": str(c.denominator)}
            for i, c in self.items()
        ]

    @classmethod
    def from_json(cls, terms: list[dict]) -> "UniPoly":
        return cls({t["i"]: Fraction(int(t["num"]), int(t["den"])) for t in terms})

    def __repr__(self) -> str:
        if not self._coeffs:
            return "UniPoly(0)"
        parts = []
        for i, c in self.items():
            if i == 0:
                parts.append(str(c))
            else:
                cs = "" if c == 1 else f"{c}*"
                parts.append(f"{cs}x^{i}" if i > 1 else f"{cs}x")
        return "UniPoly(" + " + ".join(parts) + ")"


class BiPoly:
    """Polynomial in two variables x, y with exact rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Mapping[tuple[int, int], Rational] | Iterable[tuple[tuple[int, int], Rational]] = (),
    ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in items:
            i, j = int(i), int(j)
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent ({i}, {j})")
            acc[(i, j)] = acc.get((i, j), Fraction(0)) + Fraction(c)
        self._terms = _clean(acc)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def one(cls) -> "BiPoly":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, i: int, j: int, c: Rational = 1) -> "BiPoly":
        return cls({(i, j): c})

    # -- inspection --------------------------------------------------------

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def items(self) -> list[tuple[tuple[int, int], Fraction]]:
        # graded lexicographic: total degree, then degree in x
        return sorted(self._terms.items(), key=lambda t: (t[0][0] + t[0][1], t[0][0]))

    @property
    def total_degree(self) -> Optional[int]:
        if not self._terms:
            return None
        return max(i + j for i, j in self._terms)

    def homogeneous_degree(self) -> Optional[int]:
        """n if every term has i + j = n, else None.  Zero gives None."""
        degrees = {i + j for i, j in self._terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "BiPoly") -> "BiPoly":
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, Fraction(0)) + c
        out = BiPoly.__new__(BiPoly)
        out._terms = _clean(acc)
        return out

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __neg__(self) -> "BiPoly":
        out = BiPoly.__new__(BiPoly)
        out._terms = {e: -c for e, c in self._terms.items()}
        return out

    def __mul__(self, other: Union["BiPoly", Rational]) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        acc: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), a in self._terms.items():
            for (i2, j2), b in other._terms.items():
                e = (i1 + i2, j1 + j2)
                acc[e] = acc.get(e, Fraction(0)) + a * b
        out = BiPoly.__new__(BiPoly)
        out._terms = _clean(acc)
        return out

    __rmul__ = __mul__

    def scale(self, c: Rational) -> "BiPoly":
        c = Fraction(c)
        if c == 0:
            return BiPoly.zero()
        out = BiPoly.__new__(BiPoly)
        out._terms = {e: a * c for e, a in self._terms.items()}
        return out

    def __pow__(self, e: int) -> "BiPoly":
        if e < 0:
            raise ValueError("negative power")
        result = BiPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- calculus and substitution -----------------------------------------

    def partial_derivative(self, var: str) -> "BiPoly":
        """Formal partial derivative with respect to "x" or "y"."""
        if var not in ("x", "y"):
            raise ValueError(f"unknown variable {var!r}")
        acc: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in self._terms.items():
            if var == "x":
                if i > 0:
                    acc[(i - 1, j)] = acc.get((i - 1, j), Fraction(0)) + c * i
            else:
                if j > 0:
                    acc[(i, j - 1)] = acc.get((i, j - 1), Fraction(0)) + c * j
        out = BiPoly.__new__(BiPoly)
        out._terms = _clean(acc)
        return out

    def set_y_to_one(self) -> UniPoly:
        """Substitute y = 1, collecting like powers of x."""
        acc: dict[int, Fraction] = {}
        for (i, _j), c in self._terms.items():
            acc[i] = acc.get(i, Fraction(0)) + c
        out = UniPoly.__new__(UniPoly)
        out._coeffs = _clean(acc)
        return out

    def swap_xy(self) -> "BiPoly":
        out = BiPoly.__new__(BiPoly)
        out._terms = {(j, i): c for (i, j), c in self._terms.items()}
        return out

    def is_xy_symmetric(self) -> bool:
        return self == self.swap_xy()

    def is_divisible_by_y(self) -> bool:
        return all(j >= 1 for _i, j in self._terms)

    def divided_by_y(self) -> "BiPoly":
        if not self.is_divisible_by_y():
            raise ValueError("polynomial is not divisible by y")
        out = BiPoly.__new__(BiPoly)
        out._terms = {(i, j - 1): c for (i, j), c in self._terms.items()}
        return out

    def evaluate(self, vx: Rational, vy: Rational) -> Fraction:
        vx, vy = Fraction(vx), Fraction(vy)
        return sum((c * vx**i * vy**j for (i, j), c in self._terms.items()), Fraction(0))

    # -- serialization -----------------------------------------------------

    def to_json(self) -> list[dict]:
        return [
            {"i": i, "j": j, "num": str(c.numerator), "den": str(c.denominator)}
            for (i, j), c in self.items()
        ]

    @classmethod
    def from_json(cls, terms: list[dict]) -> "BiPoly":
        return cls({(t["i"], t["j"]): Fraction(int(t["num"]), int(t["den"])) for t in terms})

    def __repr__(self) -> str:
        if not self._terms:
            return "BiPoly(0)"
        parts = []
        for (i, j), c in self.items():
            mono = "*".join(
                p
                for p in (
                    (f"x^{i}" if i > 1 else "x") if i else "",
                    (f"y^{j}" if j > 1 else "y") if j else "",
                )
                if p
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return "BiPoly(" + " + ".join(parts) + ")"


# Handy atoms.
X = BiPoly.monomial(1, 0)
Y = BiPoly.monomial(0, 1)
XY = BiPoly.monomial(1, 1)
X_PLUS_Y = X + Y
ONE_PLUS_X = UniPoly({0: 1, 1: 1})
