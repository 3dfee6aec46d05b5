from fractions import Fraction

import numpy as np
import pytest

from maxcomm.errors import IncompatibleFieldError, MalformedInputError
from maxcomm.fields import ModP, PrimeField, Rationals, is_prime, parse_field


def test_parse_field_tags():
    assert parse_field('Q') == Rationals()
    assert parse_field('fp:101') == PrimeField(101)
    assert parse_field('Fp:7') == PrimeField(7)


@pytest.mark.parametrize('tag', ['R', 'fp:4', 'fp:1', ''])
def test_bad_field_tags(tag):
    with pytest.raises(MalformedInputError):
        parse_field(tag)


def test_modp_arithmetic():
    a, b = ModP(3, 7), ModP(5, 7)
    assert a * b == ModP(1, 7)
    assert a / b * b == a
    assert -a == ModP(4, 7)
    assert a - b == 5
    with pytest.raises(ZeroDivisionError):
        a / ModP(0, 7)


def test_modp_refuses_other_characteristic():
    with pytest.raises(IncompatibleFieldError):
        ModP(1, 5) + ModP(1, 7)


def test_coerce_rational_strings():
    assert Rationals().coerce("3/2") == Fraction(3, 2)
    f7 = PrimeField(7)
    assert f7.coerce("1/2") * 2 == f7.one
    with pytest.raises(MalformedInputError):
        f7.coerce("1/7")
    with pytest.raises(MalformedInputError):
        Rationals().coerce("pi")


def test_random_elements_are_in_range():
    rng = np.random.default_rng(0)
    values = {Rationals().random_element(rng) for _ in range(200)}
    assert values <= {Fraction(k) for k in range(-2, 3)}
    assert all(0 <= PrimeField(11).random_element(rng).value < 11 for _ in range(50))


def test_is_prime():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
