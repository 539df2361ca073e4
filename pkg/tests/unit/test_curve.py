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
from unittest.mock import Mock, patch

import pytest

from proton.stubborn.config import CertifyConfig
from proton.stubborn.exceptions import NotTotallyReal, PreconditionError, SeparationFailure
from proton.stubborn.poly.parser import parse_poly
from proton.stubborn.sos.engine import NOT_SOS, SosResult, UNDECIDED as SOS_UNDECIDED
from proton.stubborn.certify.curve import check_totally_real, curve_stubborn
from proton.stubborn.certify.verdict import (
    BASIS_NEGATIVE, BASIS_NONREAL_ZEROS, BASIS_REAL_ROOTED, BASIS_SOS_MOD,
    NOT_STUBBORN, SOS, STUBBORN, UNDECIDED
)

CIRCLE = parse_poly("x^2+y^2-z^2")


@pytest.fixture
def nonnegative():
    report = Mock()
    report.nonnegative = True
    report.to_dict.return_value = {"verdict": "NONNEG_CERTIFIED_EXACT", "grade": "proof"}
    return report


@pytest.fixture
def profile():
    profile_mock = Mock()
    profile_mock.nonreal_multiplicity = 0
    profile_mock.real_points = [Mock(smooth_on_h=True), Mock(smooth_on_h=True)]
    profile_mock.to_dict.return_value = {"real_points": 2}
    return profile_mock


def test_totally_real_curve_gets_one_witness_per_component():
    witnesses = check_totally_real(parse_poly("(x^2+y^2-z^2)*y"))

    assert len(witnesses) == 2


def test_curve_without_real_points_is_rejected():
    with pytest.raises(NotTotallyReal):
        check_totally_real(parse_poly("x^2+y^2+z^2"))


def test_nonreduced_curve_is_rejected():
    with pytest.raises(PreconditionError):
        check_totally_real(parse_poly("y^2*z"))


def test_sos_modulo_the_curve():
    verdict = curve_stubborn(parse_poly("y^2"), CIRCLE)

    assert verdict.verdict == SOS
    assert verdict.basis == BASIS_SOS_MOD
    assert verdict.evidence["sos_mod"]["certificate"]["type"] == "sos"


def test_negative_form_is_not_stubborn():
    verdict = curve_stubborn(parse_poly("x^2-y^2"), CIRCLE)

    assert verdict.verdict == NOT_STUBBORN
    assert verdict.basis == BASIS_NEGATIVE


def test_odd_degree_form_is_rejected():
    with pytest.raises(PreconditionError):
        curve_stubborn(parse_poly("y"), CIRCLE)


@patch("proton.stubborn.certify.curve.intersection_profile")
@patch("proton.stubborn.certify.curve.is_sos_mod")
@patch("proton.stubborn.certify.curve.certify_nonnegative_on_curve")
def test_real_rooted_form_is_stubborn(certify_mock, sos_mod_mock, profile_mock,
                                      nonnegative, profile):
    certify_mock.return_value = nonnegative
    sos_mod_mock.return_value = SosResult(NOT_SOS)
    profile_mock.return_value = profile

    verdict = curve_stubborn(parse_poly("y^2"), CIRCLE)

    assert verdict.verdict == STUBBORN
    assert verdict.basis == BASIS_REAL_ROOTED
    assert "nonnegativity_grade" not in verdict.evidence


@patch("proton.stubborn.certify.curve.is_smooth")
@patch("proton.stubborn.certify.curve.intersection_profile")
@patch("proton.stubborn.certify.curve.is_sos_mod")
@patch("proton.stubborn.certify.curve.certify_nonnegative_on_curve")
def test_nonreal_zeros_on_smooth_curve(certify_mock, sos_mod_mock, profile_mock, smooth_mock,
                                       nonnegative, profile):
    certify_mock.return_value = nonnegative
    sos_mod_mock.return_value = SosResult(NOT_SOS)
    profile.nonreal_multiplicity = 2
    profile_mock.return_value = profile
    smooth_mock.return_value = True

    verdict = curve_stubborn(parse_poly("y^2"), CIRCLE)

    assert verdict.verdict == NOT_STUBBORN
    assert verdict.basis == BASIS_NONREAL_ZEROS


@patch("proton.stubborn.certify.curve.is_smooth")
@patch("proton.stubborn.certify.curve.intersection_profile")
@patch("proton.stubborn.certify.curve.is_sos_mod")
@patch("proton.stubborn.certify.curve.certify_nonnegative_on_curve")
def test_nonreal_zeros_on_singular_curve_is_undecided(certify_mock, sos_mod_mock, profile_mock,
                                                      smooth_mock, nonnegative, profile):
    certify_mock.return_value = nonnegative
    sos_mod_mock.return_value = SosResult(NOT_SOS)
    profile.nonreal_multiplicity = 2
    profile_mock.return_value = profile
    smooth_mock.return_value = False

    verdict = curve_stubborn(parse_poly("y^2"), CIRCLE)

    assert verdict.verdict == UNDECIDED
    assert verdict.undecided_reasons == ["F has nonreal zeros on a singular curve"]


@patch("proton.stubborn.certify.curve.is_sos_mod")
@patch("proton.stubborn.certify.curve.certify_nonnegative_on_curve")
def test_undecided_sos_question_stops_the_pipeline(certify_mock, sos_mod_mock, nonnegative):
    certify_mock.return_value = nonnegative
    sos_mod_mock.return_value = SosResult(SOS_UNDECIDED, reason="no exact Gram certificate")

    verdict = curve_stubborn(parse_poly("y^2"), CIRCLE)

    assert verdict.verdict == UNDECIDED
    assert verdict.undecided_reasons == [
        "sum of squares modulo the curve: no exact Gram certificate"
    ]


@patch("proton.stubborn.certify.curve.intersection_profile")
@patch("proton.stubborn.certify.curve.is_sos_mod")
@patch("proton.stubborn.certify.curve.certify_nonnegative_on_curve")
def test_computation_error_is_reported_with_its_step(certify_mock, sos_mod_mock, profile_mock,
                                                     nonnegative):
    certify_mock.return_value = nonnegative
    sos_mod_mock.return_value = SosResult(NOT_SOS)
    profile_mock.side_effect = SeparationFailure("no separating change")

    verdict = curve_stubborn(parse_poly("y^2"), CIRCLE)

    assert verdict.verdict == UNDECIDED
    assert verdict.undecided_reasons == ["intersection profile: no separating change"]


@patch("proton.stubborn.certify.curve.intersection_profile")
@patch("proton.stubborn.certify.curve.is_sos_mod")
@patch("proton.stubborn.certify.curve.sign_on_curve")
def test_lenient_mode_marks_sampled_nonnegativity(sign_mock, sos_mod_mock, profile_mock, profile):
    sampled = Mock()
    sampled.is_proof = False
    sampled.to_dict.return_value = {"verdict": "NONNEG_CERTIFIED_SAMPLES", "grade": "evidence"}
    sign_mock.return_value = sampled
    sos_mod_mock.return_value = SosResult(NOT_SOS)
    profile_mock.return_value = profile

    verdict = curve_stubborn(parse_poly("y^2"), CIRCLE, CertifyConfig(strict=False))

    assert verdict.verdict == STUBBORN
    assert verdict.evidence["nonnegativity_grade"] == "evidence"
