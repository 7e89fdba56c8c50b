import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from multithreshold.exactnum import (
    EQUAL,
    GREATER,
    LESS,
    Basis,
    FieldElement,
    RationalInterval,
    basis_from_json,
    basis_to_json,
    element_from_json,
    element_to_json,
    first_primes,
    fraction_from_str,
    fraction_to_str,
    is_prime,
    min_positive_gap,
    sqrt_symbol,
)


def test_first_primes():
    assert first_primes(0) == ()
    assert first_primes(8) == (2, 3, 5, 7, 11, 13, 17, 19)


def test_is_prime_small_cases():
    primes_below_30 = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29}
    for n in range(-3, 30):
        assert is_prime(n) == (n in primes_below_30)


def test_sqrt_symbol():
    assert sqrt_symbol(2) == "sqrt(2)"
    assert sqrt_symbol(13) == "sqrt(13)"


def test_basis_construction_and_lookup():
    b = Basis([2, 3, 5])
    assert len(b) == 4
    assert b.symbols == ("1", "sqrt(2)", "sqrt(3)", "sqrt(5)")
    assert b.sqrt_of(3).coeffs == (0, 0, 1, 0)
    with pytest.raises(ValueError):
        b.sqrt_of(7)
    with pytest.raises(ValueError):
        Basis([4])
    with pytest.raises(ValueError):
        Basis([3, 3])


def test_rational_basis():
    b = Basis(())
    x = b.rational(Fraction(3, 7))
    assert x.is_rational
    assert x.as_rational() == Fraction(3, 7)


def test_arithmetic_identities():
    b = Basis([2, 3])
    r2, r3 = b.sqrt_of(2), b.sqrt_of(3)
    one = b.rational(1)
    x = one + r2
    y = b.rational(2) - r2
    assert (x + y).coeffs == (3, 0, 0)
    assert (x - x).coeffs == (0, 0, 0)
    assert (-x).coeffs == (-1, -1, 0)
    assert (r2 * 3).coeffs == (0, 3, 0)
    assert (r3 * Fraction(1, 2) + r3 * Fraction(1, 2)) == r3
    assert (r2 / 2).coeffs == (0, Fraction(1, 2), 0)
    assert (x * Fraction(2, 5)).coeffs == (Fraction(2, 5), Fraction(2, 5), 0)


def test_mixed_rational_operands():
    b = Basis([2])
    r2 = b.sqrt_of(2)
    assert (r2 + 1).coeffs == (1, 1)
    assert (1 + r2).coeffs == (1, 1)
    assert (r2 - Fraction(1, 2)).coeffs == (Fraction(-1, 2), 1)
    assert (Fraction(1, 2) - r2).coeffs == (Fraction(1, 2), -1)


def test_mismatched_bases_rejected():
    a = Basis([2]).sqrt_of(2)
    b = Basis([3]).sqrt_of(3)
    with pytest.raises(ValueError):
        a + b
    with pytest.raises(ValueError):
        a.compare(b)


def test_compare_known_orderings():
    b = Basis([2, 3, 5, 11])
    r2, r3, r5, r11 = (b.sqrt_of(p) for p in (2, 3, 5, 11))
    assert (r2 + r3).compare(r5) == GREATER
    assert (r2 + r3).compare(r11) == LESS
    assert r2.compare(r2) == EQUAL
    assert (r2 * 2).compare(r2) == GREATER
    assert b.zero().compare(b.rational(Fraction(-1, 10**12))) == GREATER


def test_compare_close_pair():
    # sqrt(2)+sqrt(3) = 3.14626436994... straddled at the 8th decimal
    b = Basis([2, 3])
    s = b.sqrt_of(2) + b.sqrt_of(3)
    assert s.compare(b.rational(Fraction(31462643, 10**7))) == GREATER
    assert s.compare(b.rational(Fraction(31462644, 10**7))) == LESS


def test_compare_agrees_with_float_when_far_apart():
    b = Basis(first_primes(4))
    vals = []
    for c0 in (-2, 0, 3):
        for c1 in (-1, 0, 2):
            e = b.rational(c0) + b.sqrt_of(2) * c1 + b.sqrt_of(7)
            vals.append(e)
    for x in vals:
        for y in vals:
            fx, fy = x.approx_float(), y.approx_float()
            if abs(fx - fy) > 1e-6:
                assert x.compare(y) == (LESS if fx < fy else GREATER)


def test_equality_is_coefficient_equality():
    b = Basis([2])
    assert b.rational(2) != b.sqrt_of(2)
    assert b.sqrt_of(2) == b.element([0, 1])
    assert hash(b.sqrt_of(2)) == hash(b.element([0, 1]))


def test_rich_comparisons():
    b = Basis([2])
    r2 = b.sqrt_of(2)
    assert b.rational(1) < r2 < b.rational(2)
    assert r2 <= r2
    assert r2 >= r2
    assert not r2 < r2
    assert b.rational(Fraction(141, 100)) < r2 < b.rational(Fraction(142, 100))


def test_sorting_uses_exact_order():
    b = Basis([2, 3])
    xs = [b.sqrt_of(3), b.rational(Fraction(17, 10)), b.sqrt_of(2), b.zero()]
    assert sorted(xs) == [b.zero(), b.sqrt_of(2), b.rational(Fraction(17, 10)), b.sqrt_of(3)]


def test_enclosure_contains_value():
    b = Basis([2, 3])
    e = b.sqrt_of(2) + b.sqrt_of(3) * Fraction(1, 3) - Fraction(5, 7)
    approx = math.sqrt(2) + math.sqrt(3) / 3 - 5 / 7
    for prec in (16, 64, 128):
        iv = e.enclosure(prec)
        assert iv.width <= Fraction(1, 2**prec)
        assert float(iv.lo) <= approx + 1e-9
        assert float(iv.hi) >= approx - 1e-9
    assert e.enclosure(128).width < Fraction(1, 2**64)
    exact = b.rational(Fraction(5, 9)).enclosure(4)
    assert exact.lo == exact.hi == Fraction(5, 9)
    with pytest.raises(ValueError):
        e.enclosure(0)


def test_is_rational_and_as_rational():
    b = Basis([2])
    x = b.rational(Fraction(4, 6))
    assert x.is_rational and x.as_rational() == Fraction(2, 3)
    y = b.sqrt_of(2)
    assert not y.is_rational
    with pytest.raises(ValueError):
        y.as_rational()


def test_decompose():
    b = Basis([2])
    e = b.rational(3) + b.sqrt_of(2) * Fraction(1, 2)
    assert e.decompose() == (("1", Fraction(3)), ("sqrt(2)", Fraction(1, 2)))


def test_min_positive_gap_basic():
    b = Basis(())
    vals = [b.rational(1), b.rational(1), b.rational(Fraction(3, 2))]
    gap = min_positive_gap(vals)
    assert 0 < gap <= Fraction(1, 2)


def test_min_positive_gap_all_equal():
    b = Basis([2])
    assert min_positive_gap([b.sqrt_of(2), b.sqrt_of(2)]) is None
    assert min_positive_gap([b.zero()]) is None
    with pytest.raises(ValueError):
        min_positive_gap([])


def test_min_positive_gap_irrational_near_tie():
    # 2*sqrt(2) and 17/6 - tiny: gap must stay positive and below the truth
    b = Basis([2])
    close = b.rational(Fraction(5741, 4060))  # convergent of sqrt(2)
    vals = [b.sqrt_of(2), close, b.rational(3)]
    gap = min_positive_gap(vals)
    true_gap = abs(math.sqrt(2) - 5741 / 4060)
    assert gap is not None and 0 < float(gap) <= true_gap + 1e-12


@given(
    st.lists(
        st.fractions(min_value=-5, max_value=5, max_denominator=60),
        min_size=2,
        max_size=8,
    )
)
@settings(max_examples=200, deadline=None)
def test_min_positive_gap_bounds_rational_lists(qs):
    b = Basis(())
    gap = min_positive_gap([b.rational(q) for q in qs])
    distinct = sorted(set(qs))
    if len(distinct) < 2:
        assert gap is None
    else:
        true_gap = min(y - x for x, y in zip(distinct, distinct[1:]))
        assert gap is not None and 0 < gap <= true_gap


@given(
    st.fractions(min_value=-9, max_value=9, max_denominator=40),
    st.fractions(min_value=-9, max_value=9, max_denominator=40),
    st.fractions(min_value=-9, max_value=9, max_denominator=40),
    st.fractions(min_value=-9, max_value=9, max_denominator=40),
)
@settings(max_examples=150, deadline=None)
def test_order_is_translation_invariant(c0, c1, d0, d1):
    b = Basis([2])
    x = b.element([c0, c1])
    y = b.element([d0, d1])
    shift = b.element([Fraction(1, 3), Fraction(-2, 7)])
    assert x.compare(y) == (x + shift).compare(y + shift)
    assert x.compare(y) == -y.compare(x)


@given(
    st.lists(
        st.tuples(
            st.fractions(min_value=-4, max_value=4, max_denominator=20),
            st.fractions(min_value=-4, max_value=4, max_denominator=20),
        ),
        min_size=3,
        max_size=3,
    )
)
@settings(max_examples=150, deadline=None)
def test_order_transitive(coeff_rows):
    b = Basis([3])
    xs = sorted(b.element(row) for row in coeff_rows)
    assert xs[0] <= xs[1] <= xs[2]
    assert xs[0] <= xs[2]


def test_fraction_strings():
    assert fraction_to_str(Fraction(-3, 7)) == "-3/7"
    assert fraction_from_str("-3/7") == Fraction(-3, 7)
    assert fraction_from_str("5") == Fraction(5)
    with pytest.raises(ValueError):
        fraction_from_str("a/b")


def test_element_json_round_trip():
    b = Basis([2, 5])
    e = b.rational(Fraction(-7, 3)) + b.sqrt_of(5) * Fraction(22, 7)
    obj = element_to_json(e)
    assert obj["basis"] == ["1", "sqrt(2)", "sqrt(5)"]
    back = element_from_json(obj)
    assert back == e and back.basis == e.basis


def test_basis_json_round_trip():
    b = Basis([2, 3, 11])
    assert basis_from_json(basis_to_json(b)) == b
    with pytest.raises(ValueError):
        basis_from_json(["sqrt(2)"])
    with pytest.raises(ValueError):
        basis_from_json(["1", "cbrt(2)"])


def test_interval_sanity():
    iv = RationalInterval(Fraction(0), Fraction(1, 2))
    assert Fraction(1, 4) in iv
    assert Fraction(3, 4) not in iv
    with pytest.raises(ValueError):
        RationalInterval(Fraction(1), Fraction(0))
