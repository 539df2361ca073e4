"""
Intersection profiles of two plane curves.


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

from proton.stubborn.config import GeometryConfig
from proton.stubborn.exceptions import (
    CommonComponent, IdentityMismatch, PreconditionError, SeparationFailure
)
from proton.stubborn.poly.mpoly import MPoly
from proton.stubborn.poly.resultant import bivariate_resultant
from proton.stubborn.roots.algebraic import AlgebraicReal
from proton.stubborn.roots.sturm import isolate_real_roots
from proton.stubborn.curves import elimination
from proton.stubborn.curves.points import Change, CurvePoint, format_fraction

logger = logging.getLogger(__name__)


@dataclass
class IntersectionPoint:  # pylint: disable=missing-class-docstring
    point: CurvePoint
    multiplicity: int
    smooth_on_h: bool
    smooth_on_f: bool

    def to_dict(self) -> dict:
        return {
            "point": self.point.to_dict(),
            "multiplicity": self.multiplicity,
            "smooth_on_h": self.smooth_on_h,
            "smooth_on_f": self.smooth_on_f,
        }


@dataclass
class IntersectionProfile:
    """Real intersection points with multiplicities, plus the nonreal total."""
    f: MPoly
    h: MPoly
    coordinate_change: Change
    bezout: int
    real_points: List[IntersectionPoint] = field(default_factory=list)
    nonreal_multiplicity: int = 0
    attempts: int = 1

    @property
    def real_multiplicity(self) -> int:
        return sum(p.multiplicity for p in self.real_points)

    def multiplicities(self) -> List[int]:
        return sorted(p.multiplicity for p in self.real_points)

    def to_dict(self) -> dict:
        return {
            "f": self.f.format(),
            "h": self.h.format(),
            "coordinate_change": [[format_fraction(v) for v in row]
                                  for row in self.coordinate_change],
            "bezout": self.bezout,
            "real_points": [p.to_dict() for p in self.real_points],
            "nonreal_multiplicity": self.nonreal_multiplicity,
        }


def check_plane_form(form: MPoly, name: str):
    if form.nvars != 3 or form.is_zero() or not form.is_homogeneous():
        raise PreconditionError(f"{name} must be a nonzero ternary form")


def _profile_in_frame(f: MPoly, h: MPoly, change: Change) -> Optional[List]:
    """Real intersection data in one working frame, or None if the frame is unusable."""
    fw = elimination.to_working_frame(f, change)
    hw = elimination.to_working_frame(h, change)
    if not (elimination.avoids_centre(fw) and elimination.avoids_centre(hw)):
        return None
    fa, ha = elimination.affine_chart(fw), elimination.affine_chart(hw)
    eliminant = bivariate_resultant(fa, ha, 1, 0)
    if eliminant.is_zero():
        raise CommonComponent("The curves share a component")
    if eliminant.degree != f.degree * h.degree:
        return None

    f_coefficients = elimination.y_coefficients(fa)
    h_coefficients = elimination.y_coefficients(ha)
    found = []
    for piece, multiplicity in elimination.real_pieces(eliminant):
        for modulus, gcd in elimination.branch_gcd(piece, f_coefficients, h_coefficients):
            if len(gcd) != 2:
                return None
            ordinate = elimination.linear_ordinate(gcd)
            for low, high in isolate_real_roots(modulus):
                abscissa = AlgebraicReal(modulus, low, high)
                found.append((CurvePoint(abscissa, modulus, ordinate, change), multiplicity))
    return found


def intersection_profile(f: MPoly, h: MPoly,
                         config: Optional[GeometryConfig] = None) -> IntersectionProfile:
    """Real and nonreal intersection multiplicities of two plane curves."""
    config = config or GeometryConfig()
    check_plane_form(f, "F")
    check_plane_form(h, "H")
    bezout = f.degree * h.degree

    attempts = 0
    for change in elimination.candidate_changes(
            config.seed, config.coefficient_range, config.retry_budget):
        attempts += 1
        found = _profile_in_frame(f, h, change)
        if found is None:
            logger.warning(f"Coordinate change {attempts} does not separate the points, resampling")
            continue

        gradient_f, gradient_h = f.gradient(), h.gradient()
        points = [
            IntersectionPoint(
                point=point,
                multiplicity=multiplicity,
                smooth_on_h=not all(point.vanishes(p) for p in gradient_h),
                smooth_on_f=not all(point.vanishes(p) for p in gradient_f),
            )
            for point, multiplicity in found
        ]
        profile = IntersectionProfile(
            f=f, h=h, coordinate_change=change, bezout=bezout, real_points=points,
            attempts=attempts,
        )
        profile.nonreal_multiplicity = bezout - profile.real_multiplicity
        if profile.nonreal_multiplicity < 0 or profile.nonreal_multiplicity % 2:
            raise IdentityMismatch("Intersection multiplicities violate the Bezout count")
        logger.debug(
            f"Intersection profile: real {profile.multiplicities()}, "
            f"nonreal {profile.nonreal_multiplicity}, bezout {bezout}"
        )
        return profile

    raise SeparationFailure(f"No separating coordinate change in {config.retry_budget} attempts")


def is_real_rooted_on(f: MPoly, h: MPoly, config: Optional[GeometryConfig] = None) -> bool:
    return intersection_profile(f, h, config).nonreal_multiplicity == 0
