from fractions import Fraction

from hypothesis import strategies as st

from multiset_eulerian.polys import BiPoly, UniPoly

coefficients = st.integers(min_value=-9, max_value=9)


def bipolys(max_exp: int = 5, max_terms: int = 6):
    term = st.tuples(
        st.tuples(st.integers(0, max_exp), st.integers(0, max_exp)),
        coefficients,
    )
    return st.lists(term, max_size=max_terms).map(BiPoly)


def unipolys(max_exp: int = 8, max_terms: int = 6):
    term = st.tuples(st.integers(0, max_exp), coefficients)
    return st.lists(term, max_size=max_terms).map(UniPoly)


def rationals():
    return st.builds(
        Fraction,
        st.integers(min_value=-20, max_value=20),
        st.integers(min_value=1, max_value=12),
    )
