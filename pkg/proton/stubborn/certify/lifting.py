"""
Extending forms from a plane curve to globally nonnegative forms.


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
from typing import List, Optional

from proton.stubborn.config import CertifyConfig
from proton.stubborn.exceptions import NotTangent, PreconditionError, UnresolvedBox
from proton.stubborn.poly import linalg
from proton.stubborn.poly.field import FieldElem, format_scalar
from proton.stubborn.poly.mpoly import MPoly, Monomial
from proton.stubborn.curves.intersection import check_plane_form, intersection_profile
from proton.stubborn.sos.certificates import SosCertificate
from proton.stubborn.sos.engine import SOS, is_sos_mod, sphere
from proton.stubborn.sos.gram import monomials_of_degree

logger = logging.getLogger(__name__)

FOUND = "FOUND"
NOT_FOUND = "NOT_FOUND"


@dataclass
class LiftSystem:
    """H(pᵢ) = λᵢ over the coefficients of the multiplier H, one row per contact point.

    λᵢ is signed: ∇F(pᵢ) = λᵢ·∇G(pᵢ) at the representative pᵢ."""
    monomials: List[Monomial]
    points: List[dict] = field(default_factory=list)
    equations: List[List[FieldElem]] = field(default_factory=list)
    rhs: List[FieldElem] = field(default_factory=list)
    rank: int = 0
    augmented_rank: int = 0

    @property
    def consistent(self) -> bool:
        return self.rank == self.augmented_rank

    @property
    def variable_count(self) -> int:
        return len(self.monomials)

    def residual(self, multiplier: MPoly) -> List[FieldElem]:
        """Row residuals of a candidate multiplier; all zero when it satisfies the system."""
        values = [multiplier.coefficient(m) for m in self.monomials]
        return [
            sum((a * v for a, v in zip(row, values)), FieldElem(0)) - b
            for row, b in zip(self.equations, self.rhs)
        ]

    def to_dict(self) -> dict:
        return {
            "variables": self.variable_count,
            "equations": len(self.equations),
            "rank": self.rank,
            "augmented_rank": self.augmented_rank,
            "consistent": self.consistent,
            "points": self.points,
            "rows": [[format_scalar(v) for v in row] for row in self.equations],
            "rhs": [format_scalar(v) for v in self.rhs],
        }


def _multiplier_degree(form: MPoly, curve: MPoly, lift_degree: Optional[int]) -> int:
    """Degree of H in F - G·H; lift_degree names either H or the lift itself."""
    degree = form.degree - curve.degree
    if degree < 0:
        raise PreconditionError("deg F must be at least deg G")
    if lift_degree is not None and lift_degree not in (degree, form.degree):
        raise PreconditionError(
            f"The lift degree must be deg F - deg G = {degree} for the multiplier "
            f"or deg F = {form.degree} for the lift, not {lift_degree}"
        )
    return degree


def _proportionality(gradient_f: List[FieldElem], gradient_g: List[FieldElem]) -> FieldElem:
    pivot = next((i for i, v in enumerate(gradient_g) if not v.is_zero()), None)
    if pivot is None:
        raise PreconditionError("A contact point is singular on the curve")
    ratio = gradient_f[pivot] / gradient_g[pivot]
    if any(f != ratio * g for f, g in zip(gradient_f, gradient_g)):
        raise NotTangent("The gradients of F and G are not proportional at a contact point")
    return ratio


def _power_product(point: List[FieldElem], monomial: Monomial) -> FieldElem:
    value = FieldElem(1)
    for coordinate, exponent in zip(point, monomial):
        value = value * coordinate ** exponent
    return value


def lift_necessary_system(form: MPoly, curve: MPoly, lift_degree: Optional[int] = None,
                          config: Optional[CertifyConfig] = None) -> LiftSystem:
    """Linear conditions on H for F - G·H to have vanishing gradient at every contact point."""
    config = config or CertifyConfig()
    check_plane_form(form, "F")
    check_plane_form(curve, "G")
    degree = _multiplier_degree(form, curve, lift_degree)
    profile = intersection_profile(form, curve, config.geometry)
    if profile.nonreal_multiplicity:
        raise PreconditionError("F and G must meet in real points only")

    system = LiftSystem(monomials=monomials_of_degree(3, degree))
    gradient_f, gradient_g = form.gradient(), curve.gradient()
    for contact in profile.real_points:
        if contact.multiplicity % 2 or not contact.smooth_on_h:
            raise PreconditionError("Contacts must have even multiplicity at smooth points of G")
        point = contact.point.exact_coordinates()
        if point is None:
            raise UnresolvedBox("A contact point has no exact coordinates")
        ratio = _proportionality([g.evaluate(point) for g in gradient_f],
                                 [g.evaluate(point) for g in gradient_g])
        system.points.append({
            "point": [format_scalar(v) for v in point],
            "multiplicity": contact.multiplicity,
            "lambda": format_scalar(ratio),
        })
        system.equations.append([_power_product(point, m) for m in system.monomials])
        system.rhs.append(ratio)

    system.rank, system.augmented_rank = linalg.rank_pair(system.equations, system.rhs)
    logger.info(
        f"Lift system: {len(system.equations)} equations in {system.variable_count} "
        f"unknowns, ranks {system.rank}/{system.augmented_rank}"
    )
    return system


@dataclass
class LiftResult:
    """A nonnegative extension F + G·c with (x²+y²+z²)^r·(F + G·c) a certified sum of squares."""
    status: str
    r: Optional[int] = None
    lift: Optional[MPoly] = None
    certificate: Optional[SosCertificate] = None
    attempts: List[str] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.status == FOUND

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "r": self.r,
            "lift": None if self.lift is None else self.lift.format(),
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
            "attempts": self.attempts,
            "scope": "plane curves only, through a single cofactor semidefinite program",
        }


def lift_sos_search(form: MPoly, curve: MPoly, lift_degree: Optional[int] = None,
                    r_max: Optional[int] = None,
                    config: Optional[CertifyConfig] = None) -> LiftResult:
    """Searches r <= r_max and a cofactor c with (F + G·c)·(x²+y²+z²)^r a sum of squares."""
    config = config or CertifyConfig()
    r_max = config.r_max if r_max is None else r_max
    check_plane_form(form, "F")
    check_plane_form(curve, "G")
    _multiplier_degree(form, curve, lift_degree)

    result = LiftResult(status=NOT_FOUND)
    multiplier = MPoly.constant(3, 1)
    for r in range(r_max + 1):
        outcome = is_sos_mod(form * multiplier, curve * multiplier, config.solver)
        result.attempts.append(outcome.verdict)
        if outcome.verdict == SOS:
            certificate = outcome.certificate
            result.status, result.r, result.certificate = FOUND, r, certificate
            result.lift = form - curve * certificate.cofactor
            logger.info(f"Nonnegative lift found with r = {r}")
            return result
        multiplier = multiplier * sphere(3)
    return result
