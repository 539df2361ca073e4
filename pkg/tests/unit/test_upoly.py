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

import pytest

from proton.stubborn.poly.field import sqrt
from proton.stubborn.poly.upoly import UPoly


def t_minus(value) -> UPoly:
    return UPoly([-value, 1])


def test_trailing_zeros_are_dropped():
    poly = UPoly([1, 2, 0, 0])

    assert poly.degree == 1
    assert UPoly().degree == -1
    assert UPoly([0, 0]).is_zero()


def test_division_with_remainder():
    quotient, remainder = divmod(UPoly([1, 0, 0, 1]), UPoly([1, 1]))

    assert quotient == UPoly([1, -1, 1])
    assert remainder.is_zero()
    assert UPoly([2, 0, 1]) % UPoly([0, 1]) == 2


def test_exact_division_with_remainder_raises():
    with pytest.raises(ValueError):
        UPoly([1, 0, 1]).exact_div(UPoly([-1, 1]))


def test_gcd_is_monic():
    first = t_minus(1) * t_minus(2) * 3
    second = t_minus(1) * t_minus(5)

    assert first.gcd(second) == t_minus(1)


def test_extended_gcd_identity():
    first, second = UPoly([-2, 0, 1]), UPoly([1, 1])
    g, s, t = first.extended_gcd(second)

    assert g == 1
    assert s * first + t * second == g


def test_inverse_mod():
    modulus = UPoly([-2, 0, 1])

    assert (UPoly.x() * UPoly.x().inverse_mod(modulus)) % modulus == 1


def test_squarefree_decomposition():
    poly = t_minus(1) ** 2 * t_minus(-2) ** 3 * 7

    assert poly.squarefree_decomposition() == [(t_minus(1), 2), (t_minus(-2), 3)]
    assert poly.squarefree_part() == t_minus(1) * t_minus(-2)


def test_evaluate_at_tower_element():
    poly = UPoly([-2, 0, 1])

    assert poly.evaluate(sqrt(2)) == 0
    assert poly(3) == 7
    assert poly.sign_at(Fraction(1, 2)) == -1
    assert poly.sign_at(sqrt(3)) == 1


def test_sign_at_infinity():
    cubic = UPoly([0, 0, 0, -1])

    assert cubic.sign_at_infinity(1) == -1
    assert cubic.sign_at_infinity(-1) == 1


def test_shift_and_scale_variable():
    poly = UPoly([0, 0, 1])

    assert poly.shift(1) == UPoly([1, 2, 1])
    assert poly.scale_variable(3) == UPoly([0, 0, 9])
    assert UPoly([1, 2, 3]).reverse() == UPoly([3, 2, 1])


def test_trailing_order_is_multiplicity_of_zero():
    assert UPoly([0, 0, 5, 1]).trailing_order() == 2
    assert UPoly([1]).trailing_order() == 0
    assert UPoly().trailing_order() == -1


def test_monomial():
    assert UPoly.monomial(3, 2) == UPoly([0, 0, 0, 2])
