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

import pytest
import sympy

from proton.stubborn.poly.mpoly import MPoly
from proton.stubborn.poly.parser import parse_poly
from proton.stubborn.exceptions import NonIsolatedZero, PositiveDimensional
from proton.stubborn.curves.delta import (
    delta_at_projective, delta_real_at, delta_real_total, singular_support
)
from proton.stubborn.curves.singular import is_smooth, real_singular_zeros


def germ(text: str) -> MPoly:
    return parse_poly(text, ["x", "y"])


@pytest.mark.parametrize("text, delta", [
    ("y - x^2", 0),
    ("y^2 - x^2", 1),
    ("y^2 + x^2", 1),
    ("y^2 - x^3", 1),
    ("y^2 - x^4", 2),
    ("y^2 + x^6", 3),
    ("x*y*(x - y)", 3),
])
def test_delta_of_germs_at_origin(text, delta):
    assert delta_real_at(germ(text)).delta == delta


def test_delta_at_translated_point():
    assert delta_real_at(germ("y^2 - (x - 1)^3"), [1, 0]).delta == 1


def test_point_off_the_curve_has_no_delta():
    tree = delta_real_at(germ("y^2 - x^3"), [1, 0])

    assert tree.multiplicity == 0
    assert tree.delta == 0


def test_tacnode_tree_has_one_infinitely_near_node():
    tree = delta_real_at(germ("y^2 - x^4"))

    assert tree.multiplicity == 2
    assert [child.delta for child in tree.children] == [1]


def test_non_reduced_germ_raises():
    with pytest.raises(NonIsolatedZero):
        delta_real_at(germ("y^2"), max_depth=4)


def test_germ_must_be_bivariate():
    with pytest.raises(ValueError):
        delta_real_at(parse_poly("x^2-y^2"))


def test_delta_at_projective_point():
    nodal = parse_poly("y^2*z-x^2*(x+z)")

    tree = delta_at_projective(nodal, [0, 0, 1], 2)

    assert tree.delta == 1
    assert tree.chart == "z"


def test_delta_at_projective_point_needs_its_chart():
    with pytest.raises(ValueError):
        delta_at_projective(parse_poly("y^2*z-x^3"), [0, 0, 1], 0)


@pytest.mark.parametrize("text, total", [
    ("x^2+y^2-z^2", 0),
    ("y^2*z-x^2*(x+z)", 1),
    ("y^2*z+x^2*(x+z)", 1),
    ("y^2*z-x^3", 1),
    ("x*y*z", 3),
])
def test_real_delta_total(text, total):
    report = delta_real_total(parse_poly(text))

    assert report.total == total
    assert report.to_dict()["total"] == total


def test_smoothness():
    assert is_smooth(parse_poly("x^2+y^2-z^2"))
    assert is_smooth(parse_poly("y^2*z-x^3-x*z^2"))
    assert not is_smooth(parse_poly("y^2*z-x^3"))


def test_real_singular_zeros_of_nodal_cubic():
    points = real_singular_zeros(parse_poly("y^2*z-x^2*(x+z)"))

    assert len(points) == 1
    coordinates = points[0].exact_coordinates()
    assert coordinates[0] == 0 and coordinates[1] == 0
    assert not coordinates[2].is_zero()

def test_doubled_real_curve_has_no_isolated_singularities():
    doubled = parse_poly("(x^2+y^2-z^2)^2")

    with pytest.raises(PositiveDimensional):
        real_singular_zeros(doubled)
    with pytest.raises(PositiveDimensional):
        delta_real_total(doubled)


def test_doubled_factor_without_real_branch_keeps_its_point():
    form = parse_poly("(x^2+y^2)^2*(x^2+y^2+z^2)")

    report = delta_real_total(form)

    assert len(report.points) == 1
    assert report.points[0].tree.multiplicity == 4
    assert report.total == 6


def test_singular_support_of_a_squarefree_form_is_the_form():
    form = parse_poly("y^2*z-x^3-x^2*z")

    assert singular_support(form) == form


@pytest.mark.parametrize("text, delta", [
    ("y^2*z-x^3", 1),
    ("y^2*z+x^2*(x+z)", 1),
    ("y^2*z^2-x^4", 2),
    ("y^2*z^4+x^6", 3),
    ("x*y*(x-y)", 3),
])
def test_delta_does_not_depend_on_the_chart(text, delta):
    rng = random.Random(7)
    for _ in range(3):
        matrix = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(3)]
        if sympy.Matrix(matrix).det() == 0:
            continue
        # the singular point (0:0:1) moves to the last column of the inverse
        point = [Fraction(str(value)) for value in sympy.Matrix(matrix).inv()[:, 2]]
        form = parse_poly(text).linear_change(matrix)

        charts = [i for i in range(3) if point[i] != 0]
        assert [delta_at_projective(form, point, chart).delta for chart in charts] == \
            [delta] * len(charts)
