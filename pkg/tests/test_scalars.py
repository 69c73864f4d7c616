from fractions import Fraction
import random

import pytest

from tetrahedral.scalars import Field, FieldError, Scalar, is_prime


def test_is_prime_small_values():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(1000003)


def test_field_parse_and_str():
    assert str(Field.parse("fp:7")) == "fp:7"
    assert str(Field.parse("q")) == "q"
    assert Field.parse("fp") == Field.prime()
    with pytest.raises(ValueError):
        Field.parse("fp:8")
    with pytest.raises(ValueError):
        Field.parse("reals")


def test_prime_field_arithmetic():
    f = Field.prime(7)
    assert f.add(5, 4) == 2
    assert f.mul(3, 5) == 1
    assert f.inv(3) == 5
    assert f.div(1, 3) == 5
    assert f.neg(2) == 5
    assert f.pow(3, -1) == 5
    assert f.canon(Fraction(1, 2)) == 4
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


def test_rational_field_arithmetic():
    q = Field.rational()
    assert q.div(1, 3) == Fraction(1, 3)
    assert q.parse_value("-2/6") == Fraction(-1, 3)
    assert q.to_str(Fraction(-1, 3)) == "-1/3"


def test_parse_value_prime():
    f = Field.prime(7)
    assert f.parse_value("1/2") == 4
    assert f.parse_value("-1") == 6
    with pytest.raises(ZeroDivisionError):
        f.parse_value("1/7")
    with pytest.raises(ValueError):
        f.parse_value("x")


def test_nth_root_prime_field_is_smallest_root():
    f = Field.prime(1000003)
    rng = random.Random(3)
    for n in (3, 6, 8):
        for _ in range(5):
            a = f.random(rng, nonzero=True)
            t = f.pow(a, n)
            r = f.nth_root(t, n)
            assert f.pow(r, n) == t
            assert r <= a


def test_nth_root_rationals():
    q = Field.rational()
    assert q.nth_root(Fraction(8, 27), 3) == Fraction(2, 3)
    assert q.nth_root(Fraction(-8), 3) == -2
    assert q.nth_root(Fraction(2), 2) is None
    assert q.nth_root(Fraction(-4), 2) is None


def test_scalar_wrapper():
    f = Field.prime(11)
    a = Scalar(f, 3)
    assert a + 9 == 1
    assert a * a.inverse() == 1
    assert (a / 3) == 1
    assert -a == 8
    assert a ** 10 == 1
    assert str(a) == "3"
    with pytest.raises(FieldError):
        a + Scalar(Field.prime(13), 1)
