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
import pytest

from proton.stubborn.exceptions import ZeroPolynomial
from proton.stubborn.poly.upoly import UPoly
from proton.stubborn.certify.descartes import (
    SUPPORT, X_PARAMETER, descartes_bound_at_zero, descartes_curve_check, pullback, random_conics
)


def test_line_meets_the_curve_at_the_cusp_only():
    report = descartes_curve_check((0, 0, 0, 0, 1, 0))

    assert report.case == "line"
    assert report.degree == 11
    assert report.real_roots == 9
    assert report.descartes_bound == 9
    assert report.holds


def test_large_circle_has_few_real_intersections():
    report = descartes_curve_check((1, 0, 1, 0, 0, -10 ** 6))

    assert report.case == "y^2 term"
    assert report.degree == 22
    assert report.real_roots == 2
    assert report.holds
    assert set(report.support) <= SUPPORT


def test_conic_in_x_only():
    report = descartes_curve_check((1, 0, 0, 0, 0, 0))

    assert report.case == "x only"
    assert report.degree == 8
    assert report.real_roots == 0
    assert report.at_infinity == 14
    assert report.to_dict()["holds"] is True


def test_pullback_of_x_is_the_parametrization():
    assert pullback((0, 0, 0, 1, 0, 0)) == X_PARAMETER


def test_descartes_bound_counts_the_root_at_zero():
    assert descartes_bound_at_zero(UPoly([0, 0, 1, -1])) == 3


def test_conic_needs_six_coefficients():
    with pytest.raises(ValueError):
        descartes_curve_check((1, 0, 1))


def test_zero_conic_is_rejected():
    with pytest.raises(ZeroPolynomial):
        descartes_curve_check((0, 0, 0, 0, 0, 0))


def test_random_conics_are_reproducible():
    first = random_conics(5, seed=7, height=10)

    assert first == random_conics(5, seed=7, height=10)
    assert len(first) == 5
    assert all(any(conic[:3]) for conic in first)
