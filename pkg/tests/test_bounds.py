import math

import pytest
from hypothesis import given

from archtrop import (
    InvalidArity,
    ZeroLeading,
    amoeba_1d,
    annulus_certificate,
    cauchy_annulus,
    gap_counts,
    hausdorff_upper,
    hausdorff_upper_for,
    jensen_epsilon,
    montel_bound,
    montel_sharp_polynomial,
    parse_laurent,
    roots_1d,
    smallest_root_bracket,
)

from conftest import laurent_polys


def by_name(bounds):
    return {b.name: b for b in bounds}


def test_hausdorff_bound_values():
    b = by_name(hausdorff_upper(5, 1, ell=3))
    assert b["general"].value == pytest.approx(7 * math.log(4))
    assert b["few_points"].value == pytest.approx(5 * math.log(4))
    assert b["three_points"].value == pytest.approx(1 + 3 * math.log(4))
    assert b["amoeba_to_archtrop"].value == pytest.approx(math.log(4))
    assert by_name(hausdorff_upper(2, 1, ell=1))["containment"].value == 0.0


def test_middle_flat_bound():
    b = by_name(hausdorff_upper(20, 1, ell=1, d=100))
    assert b["middle_flat"].value == pytest.approx(-math.log1p(-2 * math.log(20) / 99))


def test_invalid_arity():
    with pytest.raises(InvalidArity):
        hausdorff_upper(1, 1)
    with pytest.raises(InvalidArity):
        hausdorff_upper(2, 2)


def test_bounds_for_polynomial_use_its_shape():
    names = by_name(hausdorff_upper_for(parse_laurent("x1^2 - x1 - 1")))
    assert "flat" in names and names["general"].value == pytest.approx(3 * math.log(2))


@given(laurent_polys(n=1, min_terms=2, max_terms=6, max_exp=12))
def test_cauchy_annulus_holds(f):
    A = cauchy_annulus(f)
    for r in roots_1d(f).roots:
        assert A.contains(r.log_norm, r.log_error)


@given(laurent_polys(n=1, min_terms=2, max_terms=6, max_exp=12))
def test_smallest_root_bracket(f):
    B = smallest_root_bracket(f)
    logs = [r.log_norm for r in roots_1d(f).roots]
    errs = [r.log_error for r in roots_1d(f).roots]
    k = min(range(len(logs)), key=logs.__getitem__)
    assert B.contains(logs[k], errs[k])
    assert all(x + e >= float(B.inner) - B.inner.err for x, e in zip(logs, errs))


@pytest.mark.parametrize("p, q", [(1, 1), (2, 3), (4, 4)])
def test_montel_sharp(p, q):
    f = montel_sharp_polynomial(p, q, radius=3)
    c = dict(zip((e[0] for e in f.support), f.coefficients))
    assert montel_bound(c[0], c[p], p, q) == pytest.approx(3.0, rel=1e-12)
    assert min(abs(r.value) for r in roots_1d(f).roots) == pytest.approx(3.0, rel=1e-9)


def test_montel_zero_leading():
    with pytest.raises(ZeroLeading):
        montel_bound(1, 0, 2, 1)


@pytest.mark.parametrize(
    "text, counts",
    [
        ("1 + x1 + 10^-20*x1^2", [1, 1]),
        ("1 + x1 + 10^-20*x1^2 + 10^-60*x1^3", [1, 1, 1]),
        ("x1^2 + 2*x1 + 1", []),
    ],
)
def test_gap_counts(text, counts):
    rep = gap_counts(parse_laurent(text))
    assert [r.count for r in rep.counts] == counts


def test_gap_count_regions_hold_the_roots():
    f = parse_laurent("2 - 3*x1 + 10^-15*x1^3 + 10^-40*x1^5")
    rep = gap_counts(f)
    counts = [0] * len(rep.counts)
    for r in roots_1d(f).roots:
        (k,) = [k for k, reg in enumerate(rep.counts) if reg.contains(r.log_norm, r.log_error)]
        counts[k] += r.multiplicity
    assert counts == [reg.count for reg in rep.counts]


def test_jensen_annulus_binomial():
    A = annulus_certificate(parse_laurent("1 - x1^100"))
    lo, hi = A.radii
    assert lo == pytest.approx(1 - 2 * math.log(2) / 99, rel=1e-12)
    assert hi == pytest.approx(1 / (1 - 2 * math.log(2) / 99), rel=1e-12)
    pts = amoeba_1d(parse_laurent("1 - x1^100"))
    assert all(A.contains(p.log_norm, p.error_radius) for p in pts)


def test_jensen_epsilon_and_inapplicable():
    assert float(jensen_epsilon(20, 5)) == pytest.approx(2 * math.log(20) / 4)
    assert annulus_certificate(parse_laurent("1 + x1 + x1^2")) is None
