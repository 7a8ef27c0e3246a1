from __future__ import annotations

import pytest
from gmpy2 import mpq
from hypothesis import given, strategies as st

from sasakispin.scalars import (HALF_SQRT2, I, ONE, SQRT2, ZERO, Scalar,
                                rational, rational_sqrt)

rationals = st.builds(mpq, st.integers(-50, 50), st.integers(1, 20))
scalars = st.builds(Scalar, rationals, rationals, rationals, rationals)
nonzero_scalars = scalars.filter(lambda z: not z.is_zero())


class TestFieldAxioms:
    @given(scalars, scalars, scalars)
    def test_add_associative(self, x, y, z):
        assert (x + y) + z == x + (y + z)

    @given(scalars, scalars, scalars)
    def test_mul_associative(self, x, y, z):
        assert (x * y) * z == x * (y * z)

    @given(scalars, scalars)
    def test_commutative(self, x, y):
        assert x + y == y + x
        assert x * y == y * x

    @given(scalars, scalars, scalars)
    def test_distributive(self, x, y, z):
        assert x * (y + z) == x * y + x * z

    @given(scalars)
    def test_identities(self, x):
        assert x + ZERO == x
        assert x * ONE == x
        assert x - x == ZERO

    @given(nonzero_scalars)
    def test_inverse(self, x):
        assert x * x.inverse() == ONE
        assert x / x == ONE

    @given(scalars, scalars)
    def test_conjugation_multiplicative(self, x, y):
        assert (x * y).conjugate() == x.conjugate() * y.conjugate()
        assert (x * y).sqrt2_conjugate() == x.sqrt2_conjugate() * y.sqrt2_conjugate()

    @given(scalars)
    def test_norm_real(self, x):
        assert x.norm_squared().is_real()

    @given(scalars)
    def test_serialization_roundtrip(self, x):
        assert Scalar.parse(x.serialize()) == x


def test_generators():
    assert I * I == -ONE
    assert SQRT2 * SQRT2 == Scalar(2)
    assert (I * SQRT2) ** 2 == Scalar(-2)
    assert HALF_SQRT2 * SQRT2 == ONE


def test_inverse_of_one_plus_sqrt2():
    # (1 + sqrt2)^-1 = -1 + sqrt2
    assert (ONE + SQRT2).inverse() == -ONE + SQRT2


def test_inverse_mixed():
    z = Scalar(1, 2, 3, mpq(-4, 5))
    assert z * z.inverse() == ONE


def test_zero_division():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_int_mixing():
    assert 2 * I - I == I
    assert (ONE + 1) == Scalar(2)
    assert 1 - I == Scalar(1, -1)
    assert (2 / (ONE + ONE)) == ONE


def test_pow():
    assert (ONE + SQRT2) ** 0 == ONE
    assert (ONE + SQRT2) ** 2 == Scalar(3, 0, 2)
    assert (ONE + SQRT2) ** -1 == -ONE + SQRT2


def test_float_rejected():
    with pytest.raises(TypeError):
        rational(0.5)


def test_rational_parsing():
    assert rational("3/4") == mpq(3, 4)
    assert rational("-2") == mpq(-2)
    with pytest.raises(ValueError):
        rational("1.5")
    with pytest.raises(ValueError):
        rational("sqrt2")


def test_rational_sqrt():
    assert rational_sqrt(mpq(4, 9)) == mpq(2, 3)
    assert rational_sqrt(4) == 2
    assert rational_sqrt(mpq(1, 2)) is None
    assert rational_sqrt(-4) is None


def test_serialize_format():
    assert Scalar(1, mpq(-1, 2)).serialize() == "(1) + (-1/2)i + (0)r2 + (0)ir2"


def test_str():
    assert str(ZERO) == "0"
    assert str(ONE - I) == "1 - i"
    assert str(HALF_SQRT2) == "1/2*r2"
