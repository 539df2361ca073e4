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
from unittest.mock import Mock, patch

import pytest

from proton.stubborn.exceptions import PreconditionError
from proton.stubborn.poly.mpoly import MPoly
from proton.stubborn.poly.parser import parse_poly
from proton.stubborn.sos.engine import NOT_SOS, SOS, SosResult, sphere
from proton.stubborn.certify.lifting import (
    FOUND, NOT_FOUND, lift_necessary_system, lift_sos_search
)

CIRCLE = parse_poly("x^2+y^2-z^2")
QUARTIC = parse_poly("y^4")
LIFTED_QUARTIC = parse_poly("y^4+(x^2+y^2-z^2)*(x+2*z)^2")
MULTIPLIER = parse_poly("(x+2*z)^2")


def test_lift_system_for_a_fourth_power_on_the_circle():
    system = lift_necessary_system(QUARTIC, CIRCLE, lift_degree=2)

    assert system.variable_count == 6
    assert len(system.equations) == 2
    assert all(value.is_zero() for value in system.rhs)
    assert system.consistent
    assert sorted(point["multiplicity"] for point in system.points) == [4, 4]


def test_zero_multiplier_satisfies_a_homogeneous_system():
    system = lift_necessary_system(QUARTIC, CIRCLE)

    assert all(value.is_zero() for value in system.residual(MPoly(3, {})))


def test_lift_degree_must_match():
    with pytest.raises(PreconditionError):
        lift_necessary_system(QUARTIC, CIRCLE, lift_degree=3)


def test_lift_degree_may_name_the_lift_itself():
    by_multiplier = lift_necessary_system(QUARTIC, CIRCLE, lift_degree=2)
    by_lift = lift_necessary_system(QUARTIC, CIRCLE, lift_degree=4)

    assert by_lift.monomials == by_multiplier.monomials
    assert by_lift.equations == by_multiplier.equations


def test_form_degree_must_cover_the_curve():
    with pytest.raises(PreconditionError):
        lift_necessary_system(CIRCLE, QUARTIC)


@patch("proton.stubborn.certify.lifting.is_sos_mod")
def test_lift_search_raises_the_multiplier(is_sos_mod_mock):
    certificate = Mock()
    certificate.cofactor = parse_poly("y^2")
    is_sos_mod_mock.side_effect = [SosResult(NOT_SOS), SosResult(SOS, certificate=certificate)]

    result = lift_sos_search(QUARTIC, CIRCLE, r_max=2)

    assert result.status == FOUND
    assert result.r == 1
    assert result.attempts == [NOT_SOS, SOS]
    assert result.lift == parse_poly("y^2*z^2-x^2*y^2")
    form, ideal, _ = is_sos_mod_mock.call_args.args
    assert form == QUARTIC * sphere(3)
    assert ideal == CIRCLE * sphere(3)


@patch("proton.stubborn.certify.lifting.is_sos_mod")
def test_lift_search_gives_up_after_r_max(is_sos_mod_mock):
    is_sos_mod_mock.return_value = SosResult(NOT_SOS)

    result = lift_sos_search(QUARTIC, CIRCLE, r_max=1)

    assert result.status == NOT_FOUND
    assert result.attempts == [NOT_SOS, NOT_SOS]
    assert result.to_dict()["lift"] is None


@pytest.mark.slow
def test_lift_of_x3z3_on_the_stengle_cubic():
    form = parse_poly("x^3*z^3")
    cubic = parse_poly("y^2*z-x^3-z^2*x")

    result = lift_sos_search(form, cubic, lift_degree=6, r_max=2)

    assert result.status == FOUND, result.attempts
    assert result.certificate.verify()
    assert result.lift == form - cubic * result.certificate.cofactor
    assert result.lift.degree == 6


def test_known_multiplier_satisfies_the_lift_system():
    system = lift_necessary_system(LIFTED_QUARTIC, CIRCLE)

    assert system.consistent
    assert not all(value.is_zero() for value in system.rhs)
    assert all(value.is_zero() for value in system.residual(MULTIPLIER))


@pytest.mark.parametrize("seed", range(3))
def test_lift_system_is_invariant_under_scaling(seed):
    rng = random.Random(seed)
    form_scale = Fraction(rng.randint(1, 30), rng.randint(1, 30))
    curve_scale = Fraction(rng.choice([-1, 1]) * rng.randint(1, 30), rng.randint(1, 30))
    reference = lift_necessary_system(LIFTED_QUARTIC, CIRCLE)

    scaled = lift_necessary_system(LIFTED_QUARTIC.scale(form_scale), CIRCLE.scale(curve_scale))

    assert (scaled.rank, scaled.augmented_rank) == (reference.rank, reference.augmented_rank)
    assert all(value.is_zero()
               for value in scaled.residual(MULTIPLIER.scale(form_scale / curve_scale)))
