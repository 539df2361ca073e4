"""
Singular points of plane curves.


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
from typing import List, Optional

from proton.stubborn.config import GeometryConfig
from proton.stubborn.exceptions import PositiveDimensional, SeparationFailure
from proton.stubborn.poly.factor import factor_rational
from proton.stubborn.poly.mpoly import MPoly
from proton.stubborn.poly.resultant import bivariate_resultant
from proton.stubborn.poly.upoly import UPoly
from proton.stubborn.roots.algebraic import AlgebraicReal
from proton.stubborn.roots.sturm import isolate_real_roots
from proton.stubborn.curves import elimination
from proton.stubborn.curves.intersection import check_plane_form
from proton.stubborn.curves.points import Change, CurvePoint

logger = logging.getLogger(__name__)


def _restricted_to_y(form: MPoly) -> UPoly:
    """form(1, y, 0) as a univariate polynomial in y."""
    coefficients = {}
    for monomial, coefficient in form.terms.items():
        if monomial[2] == 0:
            coefficients[monomial[1]] = coefficients.get(monomial[1], 0) + coefficient
    size = max(coefficients, default=-1) + 1
    return UPoly([coefficients.get(i, 0) for i in range(size)])


def _infinity_gcd(form: MPoly) -> UPoly:
    """gcd of the partials on the line z = 0, with x = 1.

    [0:1:0] is assumed off the curve, so its roots are exactly the singular
    points at infinity."""
    common = UPoly()
    for partial in form.gradient():
        common = common.gcd(_restricted_to_y(partial))
    if common.is_zero():
        raise PositiveDimensional("The line at infinity is a multiple component")
    return common


def _singular_branches(form: MPoly):
    """Branches (modulus, gcd) of the affine singular locus in the working frame."""
    affine = elimination.affine_chart(form)
    eliminant = bivariate_resultant(affine, affine.derivative(1), 1, 0)
    if eliminant.is_zero():
        raise PositiveDimensional("The curve has a repeated component")
    lists = [elimination.y_coefficients(p) for p in (affine, affine.derivative(0),
                                                     affine.derivative(1))]
    branches = []
    for piece, _ in elimination.real_pieces(eliminant):
        branches.extend(elimination.multi_branch_gcd(piece, lists))
    return branches


def is_smooth(form: MPoly, config: Optional[GeometryConfig] = None) -> bool:
    """Decides that the curve has no singular point over the complex numbers."""
    config = config or GeometryConfig()
    check_plane_form(form, "F")
    for change in elimination.candidate_changes(
            config.seed, config.coefficient_range, config.retry_budget):
        working = elimination.to_working_frame(form, change)
        if not elimination.avoids_centre(working):
            continue
        if _infinity_gcd(working).degree > 0:
            return False
        try:
            branches = _singular_branches(working)
        except PositiveDimensional:
            return False
        return all(len(gcd) <= 1 for _, gcd in branches)
    raise SeparationFailure("No coordinate change moves [0:1:0] off the curve")


def _frame_zeros(form: MPoly, change: Change) -> Optional[List[CurvePoint]]:
    working = elimination.to_working_frame(form, change)
    if not elimination.avoids_centre(working) or _infinity_gcd(working).degree > 0:
        return None
    points = []
    for modulus, gcd in _singular_branches(working):
        if not gcd:
            raise PositiveDimensional("The singular locus contains a vertical line")
        if len(gcd) == 1:
            continue
        if len(gcd) != 2:
            return None
        ordinate = elimination.linear_ordinate(gcd)
        for low, high in isolate_real_roots(modulus):
            points.append(CurvePoint(AlgebraicReal(modulus, low, high), modulus, ordinate, change))
    return points


def real_singular_zeros(form: MPoly, config: Optional[GeometryConfig] = None) -> List[CurvePoint]:
    """All real points where the form and its gradient vanish.

    The form must be squarefree: every point of a repeated factor is singular."""
    config = config or GeometryConfig()
    check_plane_form(form, "F")
    if form.is_rational() and any(k > 1 for _, k in factor_rational(form).factors):
        raise PositiveDimensional("The form has a repeated factor")
    attempt = 0
    for change in elimination.candidate_changes(
            config.seed, config.coefficient_range, config.retry_budget):
        attempt += 1
        points = _frame_zeros(form, change)
        if points is None:
            logger.warning(f"Coordinate change {attempt} does not separate singular points")
            continue
        logger.debug(f"Found {len(points)} real singular points")
        return points
    raise SeparationFailure(f"No separating coordinate change in {config.retry_budget} attempts")
