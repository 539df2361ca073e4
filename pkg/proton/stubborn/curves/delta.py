"""
The real delta invariant of plane curve singularities, by iterated blow-ups.


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
from itertools import combinations
from typing import List, Optional, Sequence

from proton.stubborn.config import GeometryConfig
from proton.stubborn.exceptions import (
    NonIsolatedZero, PositiveDimensional, RecursionBudget, UnresolvedBox
)
from proton.stubborn.poly.factor import factor_rational
from proton.stubborn.poly.field import FieldElem
from proton.stubborn.poly.mpoly import MPoly
from proton.stubborn.poly.upoly import UPoly
from proton.stubborn.roots.profile import root_profile
from proton.stubborn.curves.cells import smooth_real_point
from proton.stubborn.curves.points import CurvePoint
from proton.stubborn.curves.singular import real_singular_zeros

logger = logging.getLogger(__name__)

CHART_NAMES = ("x", "y", "z")


@dataclass
class DeltaTree:
    """One infinitely near point: its multiplicity, its real successors and δ."""
    multiplicity: int
    delta: int
    chart: str = "origin"
    direction: Optional[str] = None
    children: List["DeltaTree"] = field(default_factory=list)
    kind: str = "blow-up"

    def to_dict(self) -> dict:
        return {
            "multiplicity": self.multiplicity,
            "delta": self.delta,
            "chart": self.chart,
            "direction": self.direction,
            "kind": self.kind,
            "children": [child.to_dict() for child in self.children],
        }


@dataclass
class PointDelta:  # pylint: disable=missing-class-docstring
    point: CurvePoint
    chart: str
    tree: DeltaTree

    def to_dict(self) -> dict:
        return {"point": self.point.to_dict(), "chart": self.chart, "tree": self.tree.to_dict()}


@dataclass
class DeltaReport:
    """Total real δ with its per-point breakdown."""
    total: int
    points: List[PointDelta] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"total": self.total, "points": [p.to_dict() for p in self.points]}


def _tangent_cone(germ: MPoly, multiplicity: int) -> UPoly:
    """cone(1, t): the coefficient of x^(m-b)·y^b becomes that of t^b."""
    coefficients = {m[1]: c for m, c in germ.homogeneous_part(multiplicity).terms.items()}
    return UPoly([coefficients.get(b, 0) for b in range(multiplicity + 1)])


def _vertical_order(germ: MPoly, multiplicity: int) -> int:
    """Multiplicity of the direction x = 0 as a root of the tangent cone."""
    cone = germ.homogeneous_part(multiplicity)
    return min(m[0] for m in cone.terms)


def _chart_x(germ: MPoly, multiplicity: int) -> MPoly:
    """Strict transform in the chart (x, y) = (x, x·t), variables (x, t)."""
    return MPoly(2, {(a + b - multiplicity, b): c for (a, b), c in germ.terms.items()})


def _chart_y(germ: MPoly, multiplicity: int) -> MPoly:
    """Strict transform in the chart (x, y) = (s·y, y), variables (s, y)."""
    return MPoly(2, {(a, a + b - multiplicity): c for (a, b), c in germ.terms.items()})


def _is_squarefree(germ: MPoly) -> bool:
    if not germ.is_rational():
        return True
    return all(k == 1 for _, k in factor_rational(germ).factors)


def _blow_up(germ: MPoly, depth: int, budget: int, chart: str,
             direction: Optional[str]) -> DeltaTree:
    multiplicity = germ.order()
    if multiplicity <= 1:
        return DeltaTree(max(multiplicity, 0), 0, chart, direction)
    if depth >= budget:
        if not _is_squarefree(germ):
            raise NonIsolatedZero("The germ vanishes along a curve through the point")
        raise RecursionBudget(f"Blow-up recursion exceeded depth {budget}")

    children = []
    cone = _tangent_cone(germ, multiplicity)
    strict_x = None
    if cone.degree > 0:
        for real in root_profile(cone).real_roots:
            label = str(real.root.exact) if real.root.exact is not None else repr(real.root)
            if real.multiplicity == 1:
                children.append(DeltaTree(1, 0, "x", label))
                continue
            if real.root.exact is None:
                raise UnresolvedBox("Repeated tangent direction without an exact value")
            strict_x = strict_x or _chart_x(germ, multiplicity)
            shifted = strict_x.translate((0, real.root.exact))
            children.append(_blow_up(shifted, depth + 1, budget, "x", label))

    vertical = _vertical_order(germ, multiplicity)
    if vertical == 1:
        children.append(DeltaTree(1, 0, "y", "vertical"))
    elif vertical > 1:
        children.append(_blow_up(_chart_y(germ, multiplicity), depth + 1, budget, "y", "vertical"))

    delta = multiplicity * (multiplicity - 1) // 2 + sum(child.delta for child in children)
    return DeltaTree(multiplicity, delta, chart, direction, children)


def delta_real_at(germ: MPoly, point: Optional[Sequence[object]] = None,
                  max_depth: int = 32) -> DeltaTree:
    """Real δ of the affine curve germ at ``point`` (default: the origin)."""
    if germ.nvars != 2:
        raise ValueError("Delta invariants are computed for affine plane curves")
    if point is not None:
        germ = germ.translate([FieldElem.coerce(v) for v in point])
    if not germ.constant_term().is_zero():
        return DeltaTree(0, 0)
    return _blow_up(germ, 0, max_depth, "origin", None)


def is_ordinary_double_point(form: MPoly, point: CurvePoint) -> bool:
    """At a singular point, a Hessian of rank two means an A1 singularity."""
    gradient = form.gradient()
    hessian = [[partial.derivative(j) for j in range(3)] for partial in gradient]
    for rows in combinations(range(3), 2):
        for columns in combinations(range(3), 2):
            minor = (hessian[rows[0]][columns[0]] * hessian[rows[1]][columns[1]]
                     - hessian[rows[0]][columns[1]] * hessian[rows[1]][columns[0]])
            if not point.vanishes(minor):
                return True
    return False


def delta_at_projective(form: MPoly, coordinates: Sequence[FieldElem], chart: int,
                        max_depth: int = 32) -> DeltaTree:
    """δ at an exact projective point, computed in the affine chart ``chart``."""
    scale = FieldElem.coerce(coordinates[chart])
    if scale.is_zero():
        raise ValueError("The point is not in the requested chart")
    affine_point = [FieldElem.coerce(c) / scale for i, c in enumerate(coordinates) if i != chart]
    tree = delta_real_at(form.dehomogenize(chart), affine_point, max_depth)
    tree.chart = CHART_NAMES[chart]
    return tree


def singular_support(form: MPoly, config: Optional[GeometryConfig] = None) -> MPoly:
    """Squarefree form with the same real singular points as ``form``.

    A repeated factor is allowed only when its real points are isolated, so
    they are singular points of the factor itself."""
    config = config or GeometryConfig()
    if not form.is_rational():
        return form
    factors = factor_rational(form).factors
    if all(multiplicity == 1 for _, multiplicity in factors):
        return form
    reduced = MPoly.constant(form.nvars, 1)
    for factor, multiplicity in factors:
        if multiplicity > 1 and smooth_real_point(factor, config) is not None:
            raise PositiveDimensional(
                f"The repeated factor {factor.format()} vanishes along a real branch"
            )
        reduced = reduced * factor
    logger.debug(f"Singular points taken from the squarefree part {reduced.format()}")
    return reduced


def delta_real_total(form: MPoly, config: Optional[GeometryConfig] = None) -> DeltaReport:
    """Sum of the real δ over the real singular points of the curve."""
    config = config or GeometryConfig()
    report = DeltaReport(total=0)
    for point in real_singular_zeros(singular_support(form, config), config):
        coordinates = point.exact_coordinates()
        if coordinates is not None:
            chart = max(i for i in range(3) if not coordinates[i].is_zero())
            tree = delta_at_projective(form, coordinates, chart, config.recursion_depth)
            name = CHART_NAMES[chart]
        elif is_ordinary_double_point(form, point):
            tree = DeltaTree(2, 1, kind="ordinary double point")
            name = "box"
        else:
            raise UnresolvedBox("Non-ordinary singular point without exact coordinates")
        report.points.append(PointDelta(point=point, chart=name, tree=tree))
        report.total += tree.delta
    logger.info(f"Real delta invariant {report.total} over {len(report.points)} points")
    return report
