"""
Copyright (c) 2026 Proton AG

This file is part of Proton Stubborn Cert.

Proton Stubborn Cert is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

Proton Stubborn Cert is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with Proton Stubborn Cert.  If not, see <https://www.gnu.org/licenses/>.
"""
from fractions import Fraction
import random

from mpmath import mp
import pytest

from proton.stubborn.exceptions import NegativeRadicand
from proton.stubborn.poly.field import (
    FieldElem, base_precision, configure_precision, format_scalar, sqrt
)


@pytest.fixture
def restore_precision():
    yield
    configure_precision(64, 10)


def test_rational_arithmetic_stays_exact():
    value = FieldElem(Fraction(1, 3)) + FieldElem("1/6")

    assert value == Fraction(1, 2)
    assert value.is_rational()
    assert value.depth == 0


def test_sqrt_of_square_is_rational():
    assert sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert sqrt(Fraction(9, 4)).is_rational()


def test_sqrt_adjoins_generator_that_squares_back():
    root = sqrt(2)

    assert root.depth == 1
    assert root * root == 2
    assert not root.is_rational()


def test_sqrt_reuses_existing_generator():
    assert sqrt(8) == 2 * sqrt(2)


def test_nested_radical_is_denested():
    assert sqrt(3 - 2 * sqrt(2)) == sqrt(2) - 1


def test_inverse_rationalizes_denominator():
    value = 1 + sqrt(2)

    assert value.inverse() == sqrt(2) - 1
    assert value * value.inverse() == 1


def test_elements_from_different_towers_combine():
    value = (sqrt(2) + sqrt(3)) ** 2

    assert value == 5 + 2 * sqrt(6)


@pytest.mark.parametrize("value, expected", [
    (sqrt(2) - Fraction(141421, 100000), 1),
    (sqrt(2) - Fraction(141422, 100000), -1),
    (sqrt(3) - sqrt(2) - Fraction(31, 100), 1),
    (sqrt(2) * sqrt(3) - sqrt(6), 0),
])
def test_sign_is_certified(value, expected):
    assert value.sign() == expected


def test_ordering_uses_exact_sign():
    assert sqrt(2) < Fraction(3, 2)
    assert sqrt(3) > sqrt(2)
    assert abs(1 - sqrt(2)) == sqrt(2) - 1


def test_sqrt_of_negative_number_raises():
    with pytest.raises(NegativeRadicand):
        sqrt(1 - sqrt(2))


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        sqrt(2) / FieldElem(0)


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        FieldElem(0.5)


@pytest.mark.parametrize("value, text", [
    (FieldElem(Fraction(-3, 4)), "-3/4"),
    (sqrt(2), "sqrt(2)"),
    (1 - 2 * sqrt(2), "1-2*sqrt(2)"),
])
def test_format_scalar(value, text):
    assert format_scalar(value) == text
    assert str(value) == text


def test_float_conversion_is_close():
    assert float(sqrt(2)) == pytest.approx(1.4142135623730951)


def test_configure_precision_changes_base(restore_precision):
    configure_precision(128, 3)

    assert base_precision() == 128
    assert sqrt(5) - Fraction(2236, 1000) > 0


@pytest.mark.parametrize("bits, doublings", [(52, 1), (64, -1)])
def test_configure_precision_rejects_bad_values(bits, doublings, restore_precision):
    with pytest.raises(ValueError):
        configure_precision(bits, doublings)


def _random_element(rng: random.Random) -> FieldElem:
    radicals = [FieldElem(1), sqrt(2), sqrt(3), sqrt(2) * sqrt(3), sqrt(5)]
    return sum(
        (Fraction(rng.randint(-20, 20), rng.randint(1, 9)) * radical
         for radical in rng.sample(radicals, 3)),
        FieldElem(0)
    )


@pytest.mark.parametrize("seed", range(5))
def test_field_axioms_on_random_elements(seed):
    rng = random.Random(seed)
    for _ in range(10):
        a, b, c = (_random_element(rng) for _ in range(3))

        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert (a - a).is_zero()
        if not a.is_zero():
            assert a * a.inverse() == 1
            assert (b / a) * a == b


@pytest.mark.parametrize("seed", range(4))
def test_sign_of_near_cancellations_agrees_with_high_precision(seed):
    rng = random.Random(seed)
    for _ in range(25):
        q = rng.choice([-1, 1]) * rng.randint(1, 10 ** 6)
        r = rng.randint(-10 ** 6, 10 ** 6)
        with mp.workdps(100):
            irrational = q * mp.sqrt(2) + r * mp.sqrt(3)
            p = -Fraction(mp.nstr(irrational, rng.randint(10, 30)))
            reference = p.numerator / mp.mpf(p.denominator) + irrational
            expected = (reference > 0) - (reference < 0)

        assert (p + q * sqrt(2) + r * sqrt(3)).sign() == expected
