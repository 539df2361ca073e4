"""
Tunable parameters of the solvers and deciders.


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
from dataclasses import dataclass, field, asdict
from typing import List


@dataclass
class SolverConfig:  # pylint: disable=missing-class-docstring
    margin_tolerance: float = 1e-7
    residual_tolerance: float = 1e-9
    max_iterations: int = 200
    denominator_exponents: List[int] = field(
        default_factory=lambda: [10, 20, 30, 40, 50, 60]
    )
    facial_reduction_rounds: int = 4
    solvers: List[str] = field(default_factory=lambda: ["CLARABEL", "SCS"])


@dataclass
class GeometryConfig:  # pylint: disable=missing-class-docstring
    seed: int = 0
    coefficient_range: int = 9
    retry_budget: int = 8
    recursion_depth: int = 32
    slice_count: int = 200
    precision: int = 64
    box_doublings: int = 10


@dataclass
class CertifyConfig:
    """Options shared by every decider, echoed into each JSON verdict."""
    k_max: int = 5
    r_max: int = 2
    strict: bool = True
    descartes_random: int = 1000
    solver: SolverConfig = field(default_factory=SolverConfig)
    geometry: GeometryConfig = field(default_factory=GeometryConfig)

    def to_dict(self) -> dict:
        """Returns a JSON-ready view of the configuration."""
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "CertifyConfig":
        """Rebuilds the configuration echoed into a JSON verdict."""
        data = dict(data)
        solver = SolverConfig(**data.pop("solver", {}))
        geometry = GeometryConfig(**data.pop("geometry", {}))
        return cls(solver=solver, geometry=geometry, **data)
