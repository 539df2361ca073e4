"""
Exact nonnegativity by cylindrical cell decomposition.


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


Both deciders work in a frame where [0:1:0] avoids the curves involved, so
over every open interval between critical abscissae the real zeros in y
move continuously without meeting. One rational sample per interval, and one
per cylinder between consecutive zeros, then decides the sign everywhere.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from proton.stubborn.config import GeometryConfig
from proton.stubborn.exceptions import (
    CommonComponent, PreconditionError, SeparationFailure, UnsupportedCoefficients
)
from proton.stubborn.poly.factor import squarefree_rational
from proton.stubborn.poly.mpoly import MPoly
from proton.stubborn.poly.resultant import bivariate_resultant
from proton.stubborn.poly.upoly import UPoly
from proton.stubborn.roots.algebraic import AlgebraicReal
from proton.stubborn.roots.sturm import isolate_real_roots, refine_interval
from proton.stubborn.curves import elimination
from proton.stubborn.curves.intersection import check_plane_form
from proton.stubborn.curves.points import Change, format_fraction
from proton.stubborn.curves.sign import SIGN_CHANGE, fibre, working_point
from proton.stubborn.curves.singular import real_singular_zeros

logger = logging.getLogger(__name__)

NONNEG_CERTIFIED_EXACT = "NONNEG_CERTIFIED_EXACT"


@dataclass
class CellReport:
    """Exact outcome of a cell decomposition."""
    verdict: str
    cells: int
    change: Change
    witness: Optional[dict] = None

    @property
    def nonnegative(self) -> bool:
        return self.verdict == NONNEG_CERTIFIED_EXACT

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "grade": "proof",
            "cells": self.cells,
            "change": [[format_fraction(v) for v in row] for row in self.change],
            "witness": self.witness,
        }


def sample_points(poly: UPoly) -> List[Fraction]:
    """One rational point in every open interval cut out by the real roots."""
    if poly.degree <= 0:
        return [Fraction(0)]
    intervals = isolate_real_roots(poly)
    if not intervals:
        return [Fraction(0)]
    samples = [intervals[0][0] - 1]
    for index in range(len(intervals) - 1):
        samples.append(_between(poly, intervals, index))
    samples.append(intervals[-1][1] + 1)
    return samples


def _between(poly: UPoly, intervals: List[Tuple[Fraction, Fraction]], index: int) -> Fraction:
    left, right = intervals[index], intervals[index + 1]
    while True:
        middle = (left[1] + right[0]) / 2
        if left[1] < right[0] or poly.sign_at(middle) != 0:
            return middle
        # The shared endpoint is an exact root: shrink the open neighbour.
        if left[0] != left[1]:
            left = refine_interval(poly, left, (left[1] - left[0]) / 2)
        else:
            right = refine_interval(poly, right, (right[1] - right[0]) / 2)


def _frame(forms: List[MPoly], config: GeometryConfig):
    for change in elimination.candidate_changes(
            config.seed, config.coefficient_range, config.retry_budget):
        working = [elimination.to_working_frame(form, change) for form in forms]
        if all(elimination.avoids_centre(form) for form in working):
            return change, [elimination.affine_chart(form) for form in working]
    raise SeparationFailure("No coordinate change moves [0:1:0] off the curves")


def _check_even(form: MPoly):
    check_plane_form(form, "F")
    if form.degree % 2:
        raise PreconditionError("Nonnegativity is only meaningful for even degree forms")


def certify_nonnegative_on_curve(f: MPoly, h: MPoly,
                                 config: Optional[GeometryConfig] = None) -> CellReport:
    """Decides exactly whether F >= 0 on the real points of the curve H = 0."""
    config = config or GeometryConfig()
    _check_even(f)
    check_plane_form(h, "H")
    change, (fa, ha) = _frame([f, h], config)

    discriminant = bivariate_resultant(ha, ha.derivative(1), 1, 0)
    if discriminant.is_zero():
        raise PreconditionError("The curve form must be squarefree")
    eliminant = bivariate_resultant(ha, fa, 1, 0)
    if eliminant.is_zero():
        raise CommonComponent("F vanishes on a component of the curve")
    critical = (discriminant * eliminant).squarefree_part()

    f_coefficients, h_coefficients = elimination.y_coefficients(fa), elimination.y_coefficients(ha)
    cells = 0
    for x in sample_points(critical):
        on_line = fibre(h_coefficients, x).squarefree_part()
        f_line = fibre(f_coefficients, x)
        for low, high in isolate_real_roots(on_line):
            cells += 1
            if AlgebraicReal(on_line, low, high).sign_of(f_line) < 0:
                return CellReport(SIGN_CHANGE, cells, change, working_point(change, x, (low, high)))

    for point in real_singular_zeros(h, config):
        cells += 1
        if point.sign_of(f) < 0:
            return CellReport(SIGN_CHANGE, cells, change, point.to_dict())

    logger.debug(f"F is nonnegative on the curve, {cells} cells checked")
    return CellReport(NONNEG_CERTIFIED_EXACT, cells, change)


def certify_nonnegative_plane(f: MPoly, config: Optional[GeometryConfig] = None) -> CellReport:
    """Decides exactly whether the form is nonnegative on the real projective plane."""
    config = config or GeometryConfig()
    _check_even(f)
    if not f.is_rational():
        raise UnsupportedCoefficients("The plane cell decomposition needs rational coefficients")
    change, (fa,) = _frame([f], config)
    reduced = squarefree_rational(fa)
    critical = bivariate_resultant(reduced, reduced.derivative(1), 1, 0).squarefree_part() \
        if reduced.degree_in(1) > 0 else UPoly([1])

    f_coefficients = elimination.y_coefficients(fa)
    g_coefficients = elimination.y_coefficients(reduced)
    cells = 0
    for x in sample_points(critical):
        f_line = fibre(f_coefficients, x)
        for y in sample_points(fibre(g_coefficients, x).squarefree_part()):
            cells += 1
            if f_line.evaluate(y).sign() < 0:
                return CellReport(SIGN_CHANGE, cells, change, working_point(change, x, (y, y)))
    logger.debug(f"F is nonnegative on the plane, {cells} cells checked")
    return CellReport(NONNEG_CERTIFIED_EXACT, cells, change)


def smooth_real_point(form: MPoly, config: Optional[GeometryConfig] = None) -> Optional[dict]:
    """A real point where the curve is smooth, or None when the curve has none.

    Over a generic rational abscissa every real zero of the fibre is simple,
    hence smooth; sampling every interval between discriminant roots misses
    no one-dimensional real branch."""
    config = config or GeometryConfig()
    check_plane_form(form, "H")
    if form.degree == 1:
        return {"line": True}
    change, (fa,) = _frame([form], config)
    discriminant = bivariate_resultant(fa, fa.derivative(1), 1, 0)
    if discriminant.is_zero():
        raise PreconditionError("The curve form must be squarefree")
    coefficients = elimination.y_coefficients(fa)
    for x in sample_points(discriminant.squarefree_part()):
        on_line = fibre(coefficients, x)
        roots = isolate_real_roots(on_line)
        if roots:
            return working_point(change, x, roots[0])
    return None
