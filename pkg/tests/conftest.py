from fractions import Fraction

from hypothesis import settings, strategies as st

from archtrop import LaurentPoly
from archtrop.polynomial import RationalComplex

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

EX12 = "1 + x1^3 + x2^2 - 10*x1*x2"
G62 = "x1^4 + 4*x1^3 + 6*x1^2 + 4*x1 + 1 + x2"

nonzero_fractions = st.fractions(min_value=Fraction(-1000), max_value=Fraction(1000), max_denominator=1000).filter(
    lambda q: q != 0
)
positive_fractions = st.fractions(min_value=Fraction(1, 1000), max_value=Fraction(1000), max_denominator=1000)


@st.composite
def coefficients(draw):
    re = draw(st.fractions(min_value=-100, max_value=100, max_denominator=100))
    im = draw(st.one_of(st.just(Fraction(0)), st.fractions(min_value=-100, max_value=100, max_denominator=100)))
    if re == 0 and im == 0:
        re = Fraction(1)
    return RationalComplex(re, im)


@st.composite
def laurent_polys(draw, n=None, min_terms=1, max_terms=6, max_exp=8):
    n = draw(st.integers(1, 3)) if n is None else n
    exps = draw(
        st.lists(st.tuples(*[st.integers(-max_exp, max_exp)] * n), min_size=min_terms, max_size=max_terms, unique=True)
    )
    return LaurentPoly.from_terms(n, [(e, draw(coefficients())) for e in exps])
