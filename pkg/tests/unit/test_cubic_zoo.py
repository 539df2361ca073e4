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

import random
from unittest.mock import patch

import pytest

from proton.stubborn.config import GeometryConfig
from proton.stubborn.exceptions import NotTotallyReal, PreconditionError, SeparationFailure
from proton.stubborn.poly.parser import parse_poly
from proton.stubborn.certify.cubic_zoo import (
    COMPUTED, CONCURRENT_LINES, CONIC_PASSING, CONIC_SECANT, CONIC_TANGENT, CUSPIDAL,
    GENERAL_LINES, NODAL_CONNECTED, REPEATED_LINES, SMOOTH, SOLITARY_NODE, THEOREM,
    WITNESS_MISMATCH, check_witness, conic_matrix, cubic_zoo
)
from proton.stubborn.certify.verdict import NOT_STUBBORN, STUBBORN, UNDECIDED, StubbornVerdict


TAXONOMY = [
    ("x*y*z", GENERAL_LINES),
    ("x*y*(x+y)", CONCURRENT_LINES),
    ("x^2*y", REPEATED_LINES),
    ("(x^2+y^2-z^2)*y", CONIC_SECANT),
    ("(x^2+y^2-z^2)*(y-z)", CONIC_TANGENT),
    ("(x^2+y^2-z^2)*(x-2*z)", CONIC_PASSING),
    ("y^2*z-x^3", CUSPIDAL),
    ("y^2*z-x^2*(x+z)", NODAL_CONNECTED),
    ("y^2*z+x^2*(x+z)", SOLITARY_NODE),
    ("y^2*z-x^3-x*z^2", SMOOTH),
]


@pytest.mark.parametrize("expression, tag", TAXONOMY)
def test_cubic_taxonomy(expression, tag):
    result = cubic_zoo(parse_poly(expression))

    assert result.tag == tag
    assert result.provenance == "theorem"


def test_stubborn_quadric_classes():
    result = cubic_zoo(parse_poly("x*y*z")).to_dict()

    assert result["stubborn_quadric"] is True
    assert result["no_stubborn_form"] is False


def test_classes_without_stubborn_forms():
    result = cubic_zoo(parse_poly("y^2*z-x^3")).to_dict()

    assert result["stubborn_quadric"] is False
    assert result["stubborn_quartic"] is False
    assert result["no_stubborn_form"] is True


def test_conic_without_real_points_is_rejected():
    with pytest.raises(NotTotallyReal):
        cubic_zoo(parse_poly("(x^2+y^2+z^2)*x"))


def test_only_cubics_are_classified():
    with pytest.raises(PreconditionError):
        cubic_zoo(parse_poly("x^2+y^2-z^2"))


def test_conic_matrix_halves_mixed_terms():
    matrix = conic_matrix(parse_poly("x^2+4*x*y-z^2"))

    assert [[str(entry) for entry in row] for row in matrix] == [
        ["1", "2", "0"],
        ["2", "0", "0"],
        ["0", "0", "-1"],
    ]


def test_rows_are_theorem_citations_by_default():
    with patch("proton.stubborn.certify.cubic_zoo.curve_stubborn") as curve_mock:
        result = cubic_zoo(parse_poly("y^2*z-x^2*(x+z)"))

    assert result.provenance == THEOREM
    assert "witness" not in result.evidence
    curve_mock.assert_not_called()


@pytest.mark.parametrize("outcome, provenance", [
    (STUBBORN, COMPUTED),
    (NOT_STUBBORN, WITNESS_MISMATCH),
    (UNDECIDED, THEOREM),
])
def test_witness_run_sets_the_provenance(outcome, provenance):
    with patch("proton.stubborn.certify.cubic_zoo.curve_stubborn") as curve_mock:
        curve_mock.return_value = StubbornVerdict(outcome)
        result = cubic_zoo(parse_poly("y^2*z-x^2*(x+z)"), witness=True)

    assert result.provenance == provenance
    assert result.to_dict()["provenance"] == provenance
    assert result.evidence["witness"]["verdict"] == outcome
    form, cubic, _ = curve_mock.call_args.args
    assert form == parse_poly("y^2-6*x^2+3*x*z+9*z^2")
    assert cubic == parse_poly("y^2*z-x^2*(x+z)")


def test_failed_witness_run_keeps_the_theorem():
    with patch("proton.stubborn.certify.cubic_zoo.curve_stubborn") as curve_mock:
        curve_mock.side_effect = SeparationFailure("no separating change")
        provenance, entry = check_witness(SMOOTH)

    assert provenance == THEOREM
    assert entry["error"] == "no separating change"


def test_classes_without_witness_stay_theorem_citations():
    assert check_witness(CUSPIDAL) == (THEOREM, {})


@pytest.mark.slow
def test_nodal_witness_is_computed():
    result = cubic_zoo(parse_poly("y^2*z-x^2*(x+z)"), witness=True)

    assert result.provenance == COMPUTED


def _random_invertible(rng: random.Random):
    while True:
        matrix = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        determinant = (
            matrix[0][0] * (matrix[1][1] * matrix[2][2] - matrix[1][2] * matrix[2][1])
            - matrix[0][1] * (matrix[1][0] * matrix[2][2] - matrix[1][2] * matrix[2][0])
            + matrix[0][2] * (matrix[1][0] * matrix[2][1] - matrix[1][1] * matrix[2][0])
        )
        if determinant:
            return matrix


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(20))
def test_taxonomy_ignores_seed_and_coordinates(seed):
    rng = random.Random(seed)
    matrix = _random_invertible(rng)
    for expression, tag in TAXONOMY:
        cubic = parse_poly(expression).linear_change(matrix)

        assert cubic_zoo(cubic, GeometryConfig(seed=seed)).tag == tag
