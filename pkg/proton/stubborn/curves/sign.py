"""
Sign of a form on a plane curve, and a numerical search for negative values.


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
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

import numpy as np
from scipy.optimize import minimize

from proton.stubborn.config import GeometryConfig
from proton.stubborn.poly.mpoly import MPoly
from proton.stubborn.poly.resultant import bivariate_resultant
from proton.stubborn.poly.upoly import UPoly
from proton.stubborn.roots.algebraic import AlgebraicReal
from proton.stubborn.roots.sturm import cauchy_bound, isolate_real_roots
from proton.stubborn.curves import elimination
from proton.stubborn.curves.intersection import intersection_profile
from proton.stubborn.curves.points import Change, format_fraction

logger = logging.getLogger(__name__)

NONNEG_CERTIFIED_SAMPLES = "NONNEG_CERTIFIED_SAMPLES"
SIGN_CHANGE = "SIGN_CHANGE"
INDEFINITE_BY_ODD_MULT = "INDEFINITE_BY_ODD_MULT"


@dataclass
class SignReport:
    """Outcome of the sign analysis; only the two negative outcomes are proofs."""
    verdict: str
    samples: int = 0
    witness: Optional[dict] = None

    @property
    def is_proof(self) -> bool:
        return self.verdict != NONNEG_CERTIFIED_SAMPLES

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "grade": "proof" if self.is_proof else "evidence",
            "samples": self.samples,
            "witness": self.witness,
        }


def fibre(coefficients: List[UPoly], abscissa: Fraction) -> UPoly:
    """The polynomial in y obtained by fixing x."""
    return UPoly([c.evaluate(abscissa) for c in coefficients])


def working_point(change: Change, x: Fraction, y_interval) -> dict:
    """Witness description of a point (x, y, 1) of the working frame."""
    low, high = y_interval
    approx_y = float((low + high) / 2)
    approx = [float(row[0]) * float(x) + float(row[1]) * approx_y + float(row[2]) for row in change]
    return {
        "x": format_fraction(x),
        "y_low": format_fraction(low),
        "y_high": format_fraction(high),
        "change": [[format_fraction(v) for v in row] for row in change],
        "approx": [round(v, 12) for v in approx],
    }


def sign_on_curve(f: MPoly, h: MPoly, slice_count: Optional[int] = None,
                  config: Optional[GeometryConfig] = None) -> SignReport:
    """Odd-multiplicity test, then certified signs on rational vertical slices."""
    config = config or GeometryConfig()
    slice_count = slice_count or config.slice_count
    profile = intersection_profile(f, h, config)
    for point in profile.real_points:
        if point.multiplicity % 2 and point.smooth_on_h:
            logger.info("Odd intersection multiplicity at a smooth point: F changes sign")
            return SignReport(INDEFINITE_BY_ODD_MULT, witness=point.to_dict())

    change = profile.coordinate_change
    fa = elimination.affine_chart(elimination.to_working_frame(f, change))
    ha = elimination.affine_chart(elimination.to_working_frame(h, change))
    critical = bivariate_resultant(ha, ha.derivative(1), 1, 0)
    bound = cauchy_bound(critical) if critical.degree > 0 else Fraction(10)
    f_coefficients, h_coefficients = elimination.y_coefficients(fa), elimination.y_coefficients(ha)

    samples = 0
    for index in range(slice_count):
        x = -bound + 2 * bound * Fraction(2 * index + 1, 2 * slice_count)
        on_line = fibre(h_coefficients, x).squarefree_part()
        f_line = fibre(f_coefficients, x)
        for low, high in isolate_real_roots(on_line):
            samples += 1
            if AlgebraicReal(on_line, low, high).sign_of(f_line) < 0:
                return SignReport(SIGN_CHANGE, samples, working_point(change, x, (low, high)))
    logger.debug(f"Certified nonnegative signs at {samples} sampled curve points")
    return SignReport(NONNEG_CERTIFIED_SAMPLES, samples)


@dataclass
class FalsifierResult:  # pylint: disable=missing-class-docstring
    found: bool
    minimum: float
    point: List[Fraction] = field(default_factory=list)
    value: Optional[Fraction] = None

    def to_dict(self) -> dict:
        return {
            "found": self.found,
            "minimum": self.minimum,
            "point": [format_fraction(v) for v in self.point],
            "value": None if self.value is None else format_fraction(self.value),
        }


def numerical_falsifier(form: MPoly, seed: int = 0, starts: int = 24) -> FalsifierResult:
    """Multistart minimisation on the sphere; negative values are confirmed exactly."""
    exponents, coefficients = form.numeric_arrays()
    rng = np.random.default_rng(seed)

    def objective(vector):
        unit = vector / max(np.linalg.norm(vector), 1e-300)
        return float(coefficients @ np.prod(unit ** exponents, axis=1))

    best_value, best_point = np.inf, None
    for _ in range(starts):
        start = rng.standard_normal(form.nvars)
        result = minimize(objective, start, method="BFGS")
        if result.fun < best_value:
            best_value, best_point = result.fun, result.x / np.linalg.norm(result.x)

    if best_point is not None and best_value < 0 and form.is_rational():
        for denominator in (10 ** 3, 10 ** 6, 10 ** 9):
            point = [Fraction(float(v)).limit_denominator(denominator) for v in best_point]
            value = form.evaluate(point).to_fraction()
            if value < 0:
                logger.info(f"Falsifier found a negative value {float(value):.3e}")
                return FalsifierResult(True, float(best_value), point, value)
    return FalsifierResult(False, float(best_value))
