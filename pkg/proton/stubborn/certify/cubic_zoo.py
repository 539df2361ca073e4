"""
Taxonomy of totally real plane cubics and which stubborn forms they admit.


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


The taxonomy is computed exactly (factorization, conic matrices, tangent
cones at the singular point). What each class admits is looked up from the
classification of totally real cubics; those entries are theorem citations
unless a corpus witness has been verified for the class.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from proton.stubborn.config import CertifyConfig, GeometryConfig
from proton.stubborn.exceptions import (
    IdentityMismatch, NotTotallyReal, PreconditionError, StubbornError, UnsupportedCoefficients
)
from proton.stubborn.poly import linalg
from proton.stubborn.poly.factor import factor_rational
from proton.stubborn.poly.field import FieldElem
from proton.stubborn.poly.mpoly import MPoly
from proton.stubborn.poly.parser import parse_poly
from proton.stubborn.roots.profile import root_profile
from proton.stubborn.curves.intersection import check_plane_form, intersection_profile
from proton.stubborn.curves.singular import is_smooth, real_singular_zeros
from proton.stubborn.certify.curve import curve_stubborn
from proton.stubborn.certify.verdict import STUBBORN, UNDECIDED

logger = logging.getLogger(__name__)

SMOOTH = "smooth cubic"
NODAL_CONNECTED = "nodal cubic with connected real locus"
CONIC_SECANT = "smooth conic and secant line"
GENERAL_LINES = "three lines in general position"
CONIC_TANGENT = "smooth conic and tangent line"
CONIC_PASSING = "smooth conic and passing line"
CONCURRENT_LINES = "three concurrent lines"
CUSPIDAL = "cuspidal cubic"
SOLITARY_NODE = "nodal cubic with a solitary node"
REPEATED_LINES = "repeated lines"

# (stubborn quadric, stubborn quartic, no stubborn form of any degree);
# None where the classification states nothing.
ZOO_ROWS = {
    SMOOTH: (True, None, False),
    NODAL_CONNECTED: (True, None, False),
    CONIC_SECANT: (True, None, False),
    GENERAL_LINES: (True, None, False),
    CONIC_TANGENT: (False, True, False),
    CONIC_PASSING: (False, True, False),
    CONCURRENT_LINES: (False, True, False),
    CUSPIDAL: (False, False, True),
    SOLITARY_NODE: (False, False, True),
    REPEATED_LINES: (False, False, True),
}

THEOREM = "theorem"
COMPUTED = "computed"
WITNESS_MISMATCH = "witness mismatch"

# Worked example of a class: (cubic, form on it, expected verdict).
WITNESSES = {
    SMOOTH: ("y^2*z-x^3-z^2*x", "x^3*z^3", STUBBORN),
    NODAL_CONNECTED: ("y^2*z-x^2*(x+z)", "y^2-6*x^2+3*x*z+9*z^2", STUBBORN),
}


@dataclass
class CubicClass:
    """Taxonomy tag of a cubic with the stubborn forms its class admits."""
    tag: str
    zoo_row: Tuple[Optional[bool], Optional[bool], Optional[bool]]
    provenance: str = THEOREM
    evidence: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        quadric, quartic, none = self.zoo_row
        return {
            "tag": self.tag,
            "stubborn_quadric": quadric,
            "stubborn_quartic": quartic,
            "no_stubborn_form": none,
            "provenance": self.provenance,
            "evidence": self.evidence,
        }


def conic_matrix(conic: MPoly) -> List[List[FieldElem]]:
    """Symmetric matrix A with conic = vᵀ·A·v."""
    matrix = [[FieldElem(0)] * 3 for _ in range(3)]
    for monomial, coefficient in conic.terms.items():
        indices = [i for i, e in enumerate(monomial) for _ in range(e)]
        i, j = indices
        if i == j:
            matrix[i][i] = coefficient
        else:
            matrix[i][j] = matrix[j][i] = coefficient / 2
    return matrix


def _determinant(matrix) -> FieldElem:
    a, b, c = matrix
    return (a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))


def _principal_minors(matrix) -> List[FieldElem]:
    return [
        matrix[i][i] * matrix[j][j] - matrix[i][j] * matrix[j][i]
        for i, j in ((0, 1), (0, 2), (1, 2))
    ]


def _is_definite(matrix) -> bool:
    first = matrix[0][0]
    second = matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    third = _determinant(matrix)
    signs = (first.sign(), second.sign(), third.sign())
    return signs in ((1, 1, 1), (-1, 1, -1))


def _linear_coefficients(line: MPoly) -> List[FieldElem]:
    return [line.coefficient(tuple(int(i == j) for j in range(3))) for i in range(3)]


def _three_lines(lines: List[MPoly]) -> str:
    matrix = [_linear_coefficients(line) for line in lines]
    return CONCURRENT_LINES if _determinant(matrix).is_zero() else GENERAL_LINES


def _conic_and_line(conic: MPoly, line: MPoly, config: GeometryConfig) -> Tuple[str, dict]:
    matrix = conic_matrix(conic)
    if _determinant(matrix).is_zero():
        if sum(_principal_minors(matrix), FieldElem(0)) >= 0:
            raise NotTotallyReal("The quadratic factor is a pair of conjugate lines")
        # A pair of real lines through the vertex, the kernel of A.
        vertex = linalg.nullspace(matrix, 3)[0]
        through = line.evaluate(vertex).is_zero()
        return (CONCURRENT_LINES if through else GENERAL_LINES), {"line_pair": conic.format()}
    if _is_definite(matrix):
        raise NotTotallyReal("The conic has no real points")
    profile = intersection_profile(line, conic, config)
    evidence = {"intersection": profile.multiplicities()}
    if profile.nonreal_multiplicity:
        return CONIC_PASSING, evidence
    if len(profile.real_points) == 1:
        return CONIC_TANGENT, evidence
    return CONIC_SECANT, evidence


def _local_parts(cubic: MPoly, coordinates) -> Tuple[MPoly, MPoly]:
    """Quadratic and cubic parts of the curve in an affine chart centred at the point."""
    chart = max(i for i in range(3) if not coordinates[i].is_zero())
    scale = coordinates[chart]
    centre = [c / scale for i, c in enumerate(coordinates) if i != chart]
    local = cubic.dehomogenize(chart).translate(centre)
    return local.homogeneous_part(2), local.homogeneous_part(3)


def _irreducible(cubic: MPoly, config: GeometryConfig) -> Tuple[str, dict]:
    if is_smooth(cubic, config):
        return SMOOTH, {}
    points = real_singular_zeros(cubic, config)
    evidence = {"singular_points": [p.to_dict() for p in points]}
    if len(points) == 3:
        return GENERAL_LINES, evidence
    if len(points) != 1:
        raise IdentityMismatch(f"A singular cubic with {len(points)} real singular points")
    coordinates = points[0].exact_coordinates()
    if coordinates is None:
        # The unique singular point of an irreducible cubic is rational; an
        # irrational one is the vertex of two conjugate lines.
        raise NotTotallyReal("The cubic contains a pair of conjugate lines")

    quadratic, cubic_part = _local_parts(cubic, coordinates)
    if quadratic.is_zero():
        cone = cubic_part.dehomogenize(1).to_upoly(0)
        # A root at infinity shows up as a drop in degree.
        if root_profile(cone).distinct_real + 3 - cone.degree != 3:
            raise NotTotallyReal("The cubic is a cone over nonreal points")
        return CONCURRENT_LINES, evidence
    a = quadratic.coefficient((2, 0))
    b = quadratic.coefficient((1, 1))
    c = quadratic.coefficient((0, 2))
    discriminant = b * b - 4 * a * c
    evidence["tangent_cone_discriminant"] = str(discriminant)
    if discriminant.is_zero():
        return CUSPIDAL, evidence
    if discriminant > 0:
        return NODAL_CONNECTED, evidence
    return SOLITARY_NODE, evidence


def check_witness(tag: str, config: Optional[CertifyConfig] = None) -> Tuple[str, dict]:
    """Runs curve_stubborn on the worked example of the class, if it has one.

    Returns the provenance of the class row with the evidence of the run."""
    if tag not in WITNESSES:
        return THEOREM, {}
    cubic, form, expected = WITNESSES[tag]
    entry = {"cubic": cubic, "form": form, "expected": expected}
    try:
        verdict = curve_stubborn(parse_poly(form), parse_poly(cubic), config)
    except StubbornError as error:
        entry["error"] = str(error)
        return THEOREM, entry
    entry["verdict"] = verdict.verdict
    if verdict.verdict == UNDECIDED:
        entry["undecided_reasons"] = verdict.undecided_reasons
        return THEOREM, entry
    if verdict.verdict != expected:
        logger.warning(f"Witness for {tag} gave {verdict.verdict}, expected {expected}")
        return WITNESS_MISMATCH, entry
    return COMPUTED, entry


def cubic_zoo(cubic: MPoly, config: Optional[GeometryConfig] = None,
              witness: bool = False) -> CubicClass:
    """Classifies a totally real plane cubic.

    With ``witness`` the worked example of the class is re-run and the row is
    marked computed when it agrees."""
    config = config or GeometryConfig()
    check_plane_form(cubic, "H")
    if cubic.degree != 3:
        raise PreconditionError("H must be a ternary cubic")
    if not cubic.is_rational():
        raise UnsupportedCoefficients("The cubic must have rational coefficients")

    factors = factor_rational(cubic).factors
    evidence = {"factors": [{"factor": f.format(), "multiplicity": k} for f, k in factors]}
    degrees = sorted(f.degree for f, _ in factors)
    if any(k > 1 for _, k in factors):
        tag = REPEATED_LINES
    elif degrees == [1, 1, 1]:
        tag = _three_lines([f for f, _ in factors])
    elif degrees == [1, 2]:
        line = next(f for f, _ in factors if f.degree == 1)
        conic = next(f for f, _ in factors if f.degree == 2)
        tag, extra = _conic_and_line(conic, line, config)
        evidence.update(extra)
    else:
        tag, extra = _irreducible(cubic, config)
        evidence.update(extra)
    logger.info(f"Cubic classified as {tag}")
    result = CubicClass(tag=tag, zoo_row=ZOO_ROWS[tag], evidence=evidence)
    if witness:
        result.provenance, evidence["witness"] = check_witness(tag, CertifyConfig(geometry=config))
    return result
