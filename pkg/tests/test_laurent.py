import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from enhanced_alexander.laurent import (
    ONE,
    ONE_MINUS_T,
    T,
    ZERO,
    LaurentPoly,
    NotDivisible,
    RatPoly,
    gcd_laurent,
    gcd_rat,
    parse_poly,
)

from conftest import laurent_polys

t = sympy.Symbol("t")


def to_sympy(p: LaurentPoly):
    return sympy.expand(sum(c * t**k for k, c in p.terms().items()))


@given(laurent_polys, laurent_polys)
def test_ring_operations_match_sympy(a, b):
    assert to_sympy(a + b) == sympy.expand(to_sympy(a) + to_sympy(b))
    assert to_sympy(a - b) == sympy.expand(to_sympy(a) - to_sympy(b))
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))


@given(laurent_polys)
def test_format_parse_round_trip(p):
    assert parse_poly(str(p)) == p


@given(laurent_polys)
def test_canonical_form_is_hashable_and_unique(p):
    q = LaurentPoly(list(p.coeffs) + [0, 0], p.low)
    assert q == p and hash(q) == hash(p)


def test_printing():
    assert str(ONE - T + T * T) == "1 - t + t^2"
    assert str(LaurentPoly([2], -1)) == "2*t^-1"
    assert str(ZERO) == "0"


@given(laurent_polys)
def test_augmentation_is_value_at_one(p):
    assert p.augment() == p.evaluate(1)


@given(laurent_polys)
def test_exact_division_by_one_minus_t(p):
    q = (ONE_MINUS_T * p).div_exact_one_minus_t()
    assert q == p


def test_division_rejects_nonzero_augmentation():
    with pytest.raises(NotDivisible):
        (ONE + T).div_exact_one_minus_t()


def test_units_and_inverse():
    u = LaurentPoly([-1], 3)
    assert u.is_unit()
    assert u * u.unit_inverse() == ONE
    assert not (ONE + T).is_unit()


def test_unit_normalize():
    assert LaurentPoly([-1, 1, -1], -4).unit_normalize() == ONE - T + T * T


def test_evaluate_mod_p_with_negative_powers():
    p = LaurentPoly([1, 0, 1], -1)  # t^-1 + t
    assert p.evaluate(2, 5) == (3 + 2) % 5


@settings(max_examples=50)
@given(st.lists(laurent_polys, min_size=1, max_size=4))
def test_gcd_matches_sympy(ps):
    ps = [p for p in ps if p]
    if not ps:
        return
    ours = gcd_laurent(ps)
    shifted = [sympy.Poly(list(reversed(p.coeffs)), t) for p in ps]
    g = shifted[0]
    for s in shifted[1:]:
        g = sympy.gcd(g, s)
    expected = LaurentPoly([int(c) for c in reversed(g.all_coeffs())]).unit_normalize()
    assert ours == expected


def test_rational_gcd():
    a = RatPoly([-1, 0, 1])  # t^2 - 1
    b = RatPoly([1, -2, 1])  # (t - 1)^2
    assert gcd_rat([a, b]) == RatPoly([-1, 1])
