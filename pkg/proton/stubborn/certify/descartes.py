"""
Real intersections of conics with the rational curve t ↦ (1 + t² + t⁴, t⁹·(1 + t²)).


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


The curve has degree 11 and no conic meets it in 22 real points counted
with multiplicity. The check pulls a conic back to a univariate polynomial q
of degree at most 22, counts its real roots exactly and reproduces the sign
variation bound of the case the conic falls into.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import List, Optional, Sequence

from proton.stubborn.exceptions import ZeroPolynomial
from proton.stubborn.poly.upoly import UPoly
from proton.stubborn.roots.profile import root_profile
from proton.stubborn.roots.sturm import sign_variations
from proton.stubborn.curves.points import format_fraction

logger = logging.getLogger(__name__)

CURVE_DEGREE = 11
SUPPORT = frozenset({0, 2, 4, 6, 8, 9, 11, 13, 15, 18, 20, 22})

# Case label, expected degree of q and the bound on its real roots.
CASE_QUADRATIC_Y = ("y^2 term", 22, 18)
CASE_MIXED = ("xy term without y^2", 15, 14)
CASE_LINEAR_Y = ("y term without xy, y^2", 11, 10)
CASE_X_ONLY = ("x only", 8, 6)
CASE_LINE = ("line", None, None)

X_PARAMETER = UPoly([1, 0, 1, 0, 1])
Y_PARAMETER = UPoly.monomial(9) + UPoly.monomial(11)


@dataclass
class DescartesReport:  # pylint: disable=missing-class-docstring,too-many-instance-attributes
    coefficients: List[Fraction]
    case: str
    degree: int
    support: List[int]
    real_roots: int
    at_infinity: int
    descartes_bound: int
    case_bound: Optional[int]

    @property
    def total_real(self) -> int:
        return self.real_roots + self.at_infinity

    @property
    def intersection_number(self) -> int:
        return CURVE_DEGREE if self.case == CASE_LINE[0] else 2 * CURVE_DEGREE

    @property
    def holds(self) -> bool:
        """Fewer real intersections than the intersection number, within every bound."""
        within_case = self.case_bound is None or self.real_roots <= self.case_bound
        return (self.total_real < self.intersection_number
                and self.real_roots <= self.descartes_bound
                and within_case
                and set(self.support) <= SUPPORT)

    def to_dict(self) -> dict:
        return {
            "conic": [format_fraction(c) for c in self.coefficients],
            "case": self.case,
            "degree": self.degree,
            "support": self.support,
            "real_roots": self.real_roots,
            "at_infinity": self.at_infinity,
            "total_real": self.total_real,
            "descartes_bound": self.descartes_bound,
            "case_bound": self.case_bound,
            "holds": self.holds,
        }


def pullback(coefficients: Sequence) -> UPoly:
    """q(t) for a11·x² + a12·xy + a22·y² + a1·x + a2·y + a0."""
    a11, a12, a22, a1, a2, a0 = (Fraction(c) for c in coefficients)
    x, y = X_PARAMETER, Y_PARAMETER
    return (x * x).scale(a11) + (x * y).scale(a12) + (y * y).scale(a22) \
        + x.scale(a1) + y.scale(a2) + UPoly([a0])


def _case(coefficients: List[Fraction]):
    a11, a12, a22, _, a2, _ = coefficients
    if a22:
        return CASE_QUADRATIC_Y
    if a12:
        return CASE_MIXED
    if not a11:
        return CASE_LINE
    if a2:
        return CASE_LINEAR_Y
    return CASE_X_ONLY


def descartes_bound_at_zero(poly: UPoly) -> int:
    """k + V(q̃(t)) + V(q̃(−t)) for q = t^k·q̃ with q̃(0) ≠ 0."""
    k = poly.trailing_order()
    rest = UPoly(poly.coeffs[k:])
    return k + sign_variations(rest.coeffs) + sign_variations(rest.scale_variable(-1).coeffs)


def descartes_curve_check(coefficients: Sequence) -> DescartesReport:
    """Exact real root count of the pulled back conic, checked against every bound."""
    coefficients = [Fraction(c) for c in coefficients]
    if len(coefficients) != 6:
        raise ValueError("A conic has six coefficients")
    if not any(coefficients):
        raise ZeroPolynomial("The conic is identically zero")
    q = pullback(coefficients)
    label, expected_degree, case_bound = _case(coefficients)
    if q.is_zero():
        raise ZeroPolynomial("The conic contains the curve")
    if expected_degree is not None and q.degree != expected_degree:
        raise ValueError(f"Pullback of degree {q.degree}, expected {expected_degree}")

    total = CURVE_DEGREE if label == CASE_LINE[0] else 2 * CURVE_DEGREE
    report = DescartesReport(
        coefficients=coefficients,
        case=label,
        degree=q.degree,
        support=[i for i, c in enumerate(q.coeffs) if not c.is_zero()],
        real_roots=root_profile(q).real_multiplicity if q.degree > 0 else 0,
        at_infinity=total - q.degree,
        descartes_bound=descartes_bound_at_zero(q),
        case_bound=case_bound,
    )
    logger.debug(f"Conic pullback: {report.real_roots} real roots of degree {q.degree}")
    return report


def random_conics(count: int, seed: int = 0, height: int = 50) -> List[List[Fraction]]:
    """Seeded random rational conics, numerators in [-height, height], with a quadratic term."""
    rng = Random(seed)
    conics = []
    while len(conics) < count:
        conic = [Fraction(rng.randint(-height, height), rng.randint(1, height)) for _ in range(6)]
        if any(conic[:3]):
            conics.append(conic)
    return conics
