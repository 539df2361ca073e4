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
import numpy as np
import pytest

from proton.stubborn.exceptions import PreconditionError
from proton.stubborn.poly.mpoly import MPoly
from proton.stubborn.poly.parser import parse_poly
from proton.stubborn.sos.engine import (
    EXHAUSTED, FOUND, NOT_SOS, SOS, UNDECIDED, SosResult, canonical_rows, facial_reduction, is_sos,
    is_sos_mod, multiplier_sos, newton_basis, power_sos_search, prune_basis, sphere
)
from proton.stubborn.sos.gram import GramProblem, monomials_of_degree
from proton.stubborn.sos.sdp import PrimalSolution

CIRCLE = parse_poly("x^2+y^2-z^2")


@pytest.mark.parametrize("text", ["x^2+y^2+z^2", "x^2+x*y+y^2", "x^2+y^2+z^2+x*y+y*z"])
def test_sums_of_squares_get_exact_certificates(text):
    result = is_sos(parse_poly(text))

    assert result.verdict == SOS
    assert result.certificate.verify()
    assert result.certificate.target == parse_poly(text)


def test_indefinite_form_gets_separating_functional():
    result = is_sos(parse_poly("x^2-y^2"))

    assert result.verdict == NOT_SOS
    assert result.certificate.verify()
    assert result.certificate.value < 0


def test_zero_form_is_trivially_sos():
    assert is_sos(MPoly.zero(3)).is_sos


def test_tower_coefficients_are_left_undecided():
    result = is_sos(parse_poly("x^2+sqrt(2)*y^2"))

    assert result.verdict == UNDECIDED
    assert not result.is_decided


@pytest.mark.parametrize("text", ["x^3", "x^2+y"])
def test_odd_or_inhomogeneous_forms_are_rejected(text):
    with pytest.raises(PreconditionError):
        is_sos(parse_poly(text))


def test_newton_polytope_prunes_the_basis():
    target = parse_poly("x^4*y^2+x^2*y^4+z^6-3*x^2*y^2*z^2")
    candidates = monomials_of_degree(3, 3)

    kept = prune_basis(target, newton_basis(target, candidates))

    assert (3, 0, 0) not in kept
    assert (0, 0, 3) in kept
    assert len(kept) < len(candidates)


def test_sos_modulo_the_circle():
    target = parse_poly("2*z^2-y^2")

    assert is_sos(target).verdict == NOT_SOS
    result = is_sos_mod(target, CIRCLE)
    assert result.verdict == SOS
    assert result.certificate.ideal == CIRCLE
    assert result.certificate.verify()


def test_sos_mod_needs_a_form():
    with pytest.raises(PreconditionError):
        is_sos_mod(parse_poly("x^2"), parse_poly("x+1"))


def test_multiplier_search_stops_at_first_success():
    result = multiplier_sos(parse_poly("x^2+y^2+z^2"), r_max=2)

    assert result.found
    assert result.r == 0
    assert result.to_dict()["attempts"] == [SOS]


def test_sphere():
    x, y, z = MPoly.gens(3)

    assert sphere(3) == x ** 2 + y ** 2 + z ** 2


def test_power_search_finds_first_power():
    result = power_sos_search(parse_poly("x^2+y^2"), k_max=3)

    assert result.status == FOUND
    assert result.k == 1
    assert result.tried == [(1, SOS)]


def test_power_search_exhausts_on_indefinite_form():
    result = power_sos_search(parse_poly("x^2-y^2"), k_max=1)

    assert result.status == EXHAUSTED
    assert result.k is None


@pytest.mark.parametrize("k_max", [0, 2])
def test_power_search_needs_positive_odd_bound(k_max):
    with pytest.raises(PreconditionError):
        power_sos_search(parse_poly("x^2"), k_max=k_max)


def test_result_serialization():
    data = SosResult(UNDECIDED, reason="no exact Gram certificate").to_dict()

    assert data == {"verdict": UNDECIDED, "reason": "no exact Gram certificate",
                    "certificate": None}


def test_echelon_form_of_a_rotated_kernel():
    rotated = np.array([[1.0, 0.0, 1.0], [1.0, 0.0, -1.0]]) / np.sqrt(2)

    canonical = canonical_rows(rotated)

    assert np.allclose(canonical, [[1.0, 0.0, 0.0], [0.0, 0.0, 1.0]])


def _solution(gram):
    return PrimalSolution(gram=np.array(gram, dtype=float), free=np.zeros(0), margin=0.0,
                          residual=0.0, solver="CLARABEL")


def test_facial_reduction_keeps_exact_face():
    x, y, z = MPoly.gens(3)
    problem = GramProblem((x - y) ** 2, [x, y, z])
    noise = 1e-9
    solution = _solution([[1.0, -1.0 + noise, 0.0], [-1.0 + noise, 1.0, noise], [0.0, noise, 0.0]])

    reduced = facial_reduction(problem, solution)

    assert reduced.size == 1
    assert reduced.basis[0] in (x - y, y - x)


def test_facial_reduction_skips_a_face_without_exact_solution():
    x, y, z = MPoly.gens(3)
    problem = GramProblem(x ** 2 + y ** 2, [x, y, z])

    assert facial_reduction(problem, _solution([[0.0, 0, 0], [0, 1.0, 0], [0, 0, 1.0]])) is None


def test_sos_modulo_a_reducible_cubic_on_a_face():
    x, y, _ = MPoly.gens(3)

    result = is_sos_mod(x ** 3 * y ** 3, x * y * (x - y))

    assert result.verdict == SOS
    assert result.certificate.verify()


@pytest.mark.parametrize("power", [3, 5])
def test_power_of_a_degenerate_quadric_is_sos(power):
    x, y, z = MPoly.gens(3)

    result = is_sos(((x - y) ** 2 + z ** 2) ** power)

    assert result.verdict == SOS
    assert result.certificate.verify()
