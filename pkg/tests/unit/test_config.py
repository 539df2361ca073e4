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
import json

from proton.stubborn.config import CertifyConfig, GeometryConfig, SolverConfig


def test_defaults():
    config = CertifyConfig()

    assert (config.k_max, config.r_max, config.strict) == (5, 2, True)
    assert config.descartes_random == 1000
    assert config.geometry == GeometryConfig(
        seed=0, coefficient_range=9, retry_budget=8, recursion_depth=32,
        slice_count=200, precision=64, box_doublings=10
    )
    assert config.solver.solvers == ["CLARABEL", "SCS"]


def test_configuration_survives_json():
    config = CertifyConfig(k_max=7, strict=False,
                           geometry=GeometryConfig(seed=11, slice_count=50),
                           solver=SolverConfig(max_iterations=20))

    restored = CertifyConfig.from_dict(json.loads(json.dumps(config.to_dict())))

    assert restored == config


def test_missing_sections_take_defaults():
    assert CertifyConfig.from_dict({"r_max": 4}) == CertifyConfig(r_max=4)


def test_older_documents_without_the_conic_count_take_the_default():
    data = CertifyConfig(descartes_random=5).to_dict()
    del data["descartes_random"]

    assert CertifyConfig.from_dict(data).descartes_random == 1000
