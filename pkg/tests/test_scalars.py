from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from skewhecke.scalars import (
    NotAUnitError,
    PrimeField,
    Rationals,
    field_make,
    is_prime,
)

Q = Rationals()
F5 = PrimeField(5)
F97 = PrimeField(97)

rationals = st.fractions(
    min_value=Fraction(-100), max_value=Fraction(100), max_denominator=50
)


def mod_elements(field):
    return st.integers(min_value=0, max_value=field.p - 1)


@settings(max_examples=1000)
@given(rationals, rationals, rationals)
def test_rationals_field_axioms(a, b, c):
    f = Q
    assert f.add(a, b) == f.add(b, a)
    assert f.mul(a, b) == f.mul(b, a)
    assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(a, f.neg(a)) == f.zero
    assert f.mul(a, f.one) == a
    if not f.is_zero(a):
        assert f.mul(a, f.inv(a)) == f.one


@settings(max_examples=1000)
@given(mod_elements(F97), mod_elements(F97), mod_elements(F97))
def test_prime_field_axioms(a, b, c):
    f = F97
    assert f.add(a, b) == f.add(b, a)
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(a, f.neg(a)) == f.zero
    if not f.is_zero(a):
        assert f.mul(a, f.inv(a)) == f.one


@given(rationals)
def test_rationals_parse_format_roundtrip(a):
    assert Q.parse(Q.format(a)) == a


@given(mod_elements(F5))
def test_prime_field_parse_format_roundtrip(a):
    assert F5.parse(F5.format(a)) == a


def test_prime_field_rejects_composites():
    with pytest.raises(ValueError):
        PrimeField(6)
    with pytest.raises(ValueError):
        PrimeField(1)


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 97, 101}
    for n in range(2, 110):
        assert is_prime(n) == (n in primes or all(n % d for d in range(2, n)))


def test_inv_of_zero_raises():
    with pytest.raises(NotAUnitError):
        Q.inv(Q.zero)
    with pytest.raises(NotAUnitError):
        F5.inv(F5.zero)


def test_characteristic_arithmetic():
    f = PrimeField(2)
    assert f.add(f.one, f.one) == f.zero
    assert f.from_int(-1) == f.one
    with pytest.raises(NotAUnitError):
        f.inv(f.from_int(2))


def test_field_make():
    assert field_make("rationals").characteristic == 0
    assert field_make("prime_field(7)").p == 7
    assert field_make("gf(2)").p == 2
    with pytest.raises(ValueError):
        field_make("octonions")
