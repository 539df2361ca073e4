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

import numpy
import pytest

from proton.stubborn.config import GeometryConfig
from proton.stubborn.exceptions import PreconditionError, SingularCurve
from proton.stubborn.poly.parser import parse_poly
from proton.stubborn.curves.cells import (
    NONNEG_CERTIFIED_EXACT, certify_nonnegative_on_curve, certify_nonnegative_plane,
    sample_points, smooth_real_point
)
from proton.stubborn.curves.sign import (
    INDEFINITE_BY_ODD_MULT, NONNEG_CERTIFIED_SAMPLES, SIGN_CHANGE, numerical_falsifier,
    sign_on_curve
)
from proton.stubborn.curves.torsion import two_torsion_real
from proton.stubborn.poly.upoly import UPoly

CIRCLE = parse_poly("x^2+y^2-z^2")


def test_sign_on_curve_finds_odd_multiplicity():
    report = sign_on_curve(parse_poly("y*z"), CIRCLE, slice_count=4)

    assert report.verdict == INDEFINITE_BY_ODD_MULT
    assert report.is_proof


def test_sign_on_curve_samples_nonnegative_form():
    report = sign_on_curve(parse_poly("y^2"), CIRCLE, slice_count=4)

    assert report.verdict == NONNEG_CERTIFIED_SAMPLES
    assert report.samples > 0
    assert not report.is_proof
    assert report.to_dict()["grade"] == "evidence"


def test_sign_on_curve_finds_negative_sample():
    report = sign_on_curve(parse_poly("-y^2"), CIRCLE, slice_count=8)

    assert report.verdict == SIGN_CHANGE
    assert report.witness is not None


def test_falsifier_confirms_negative_value():
    result = numerical_falsifier(parse_poly("x^2-y^2-z^2"), seed=3)

    assert result.found
    assert result.value < 0
    assert parse_poly("x^2-y^2-z^2").evaluate(result.point) == result.value


def test_falsifier_on_positive_definite_form():
    result = numerical_falsifier(parse_poly("x^2+y^2+z^2"))

    assert not result.found
    assert result.minimum > 0


def test_sample_points_separate_roots():
    samples = sample_points(UPoly([0, -1, 0, 1]))

    assert len(samples) == 4
    assert samples[0] < -1 < samples[1] < 0 < samples[2] < 1 < samples[3]


def test_exact_nonnegativity_on_curve():
    report = certify_nonnegative_on_curve(parse_poly("y^2"), CIRCLE)

    assert report.verdict == NONNEG_CERTIFIED_EXACT
    assert report.nonnegative
    assert report.cells > 0


def test_exact_sign_change_on_curve():
    report = certify_nonnegative_on_curve(parse_poly("x^2-y^2"), CIRCLE)

    assert report.verdict == SIGN_CHANGE
    assert report.witness is not None


def test_exact_nonnegativity_in_the_plane():
    assert certify_nonnegative_plane(parse_poly("(x^2+y^2-z^2)^2")).nonnegative
    assert not certify_nonnegative_plane(parse_poly("x^2-y^2")).nonnegative


def test_odd_degree_is_rejected():
    with pytest.raises(PreconditionError):
        certify_nonnegative_plane(parse_poly("x^3"))


def test_smooth_real_point():
    assert smooth_real_point(CIRCLE) is not None
    assert smooth_real_point(parse_poly("x^2+y^2+z^2")) is None
    assert smooth_real_point(parse_poly("x-z")) == {"line": True}


def test_config_seed_changes_nothing_in_the_outcome():
    report = certify_nonnegative_on_curve(parse_poly("y^2"), CIRCLE, GeometryConfig(seed=7))

    assert report.nonnegative


@pytest.mark.parametrize("a, b, count", [
    (-1, 0, 3),
    (1, 0, 1),
    (0, -2, 1),
    (-3, 1, 3),
])
def test_real_two_torsion(a, b, count):
    assert two_torsion_real(a, b).real_nontrivial_count == count


def test_two_torsion_report():
    data = two_torsion_real(Fraction(-1), 0).to_dict()

    assert data["discriminant"] == "64"
    assert data["real_nontrivial_count"] == 3


def test_singular_weierstrass_cubic_raises():
    with pytest.raises(SingularCurve):
        two_torsion_real(0, 0)


def test_two_torsion_of_random_weierstrass_cubics():
    rng = random.Random(0)
    checked = 0
    while checked < 100:
        a = Fraction(rng.randint(-30, 30), rng.randint(1, 4))
        b = Fraction(rng.randint(-30, 30), rng.randint(1, 4))
        if 4 * a ** 3 + 27 * b ** 2 == 0:
            continue
        report = two_torsion_real(a, b)
        roots = numpy.roots([1, 0, float(a), float(b)])

        assert report.real_nontrivial_count == (3 if report.discriminant > 0 else 1)
        assert report.real_nontrivial_count == sum(abs(r.imag) < 1e-7 for r in roots)
        checked += 1


def test_two_torsion_with_three_rational_roots():
    rng = random.Random(1)
    for _ in range(20):
        first, second = rng.sample(range(-20, 21), 2)
        third = -first - second
        if third in (first, second):
            continue
        a = first * second + first * third + second * third
        b = -first * second * third

        assert two_torsion_real(a, b).real_nontrivial_count == 3
