"""
Classification of nonnegative ternary sextics by their real delta invariant.


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


The pipeline runs in a fixed order: global sum of squares, factorization,
certified nonnegativity, real delta invariant. Nine is the threshold: a
nonnegative sextic that is not a sum of squares is stubborn exactly when
its real singularities add up to a delta invariant of at least nine.
"""
import logging
from fractions import Fraction
from typing import List, Optional

from proton.stubborn.config import CertifyConfig
from proton.stubborn.exceptions import (
    ComputationError, NonIsolatedZero, PositiveDimensional, PreconditionError, StubbornError
)
from proton.stubborn.poly import linalg
from proton.stubborn.poly.factor import Factorization, factor_rational
from proton.stubborn.poly.field import FieldElem
from proton.stubborn.poly.mpoly import MPoly
from proton.stubborn.curves.cells import certify_nonnegative_plane, smooth_real_point
from proton.stubborn.curves.delta import delta_real_total, is_ordinary_double_point
from proton.stubborn.curves.intersection import check_plane_form
from proton.stubborn.curves.points import CurvePoint
from proton.stubborn.curves.sign import numerical_falsifier
from proton.stubborn.sos.engine import (
    NOT_SOS, SOS as SOS_VERDICT, is_sos, multiplier_sos, power_sos_search
)
from proton.stubborn.sos.binomial import gram_from_squares
from proton.stubborn.sos.certificates import SosCertificate
from proton.stubborn.sos.gram import monomials_of_degree
from proton.stubborn.certify.curve import curve_stubborn
from proton.stubborn.certify.verdict import (
    BASIS_DELTA_LARGE, BASIS_DELTA_SMALL, BASIS_NEGATIVE, BASIS_SOS,
    NOT_STUBBORN, SOS, STUBBORN, UNDECIDED, StubbornVerdict
)

logger = logging.getLogger(__name__)

DELTA_THRESHOLD = 9


def inheriting_cubic(zeros: List[CurvePoint]) -> Optional[MPoly]:
    """A cubic through nine exact real double points, if they impose independent conditions."""
    exact = [p.exact_coordinates() for p in zeros]
    exact = [c for c in exact if c is not None][:DELTA_THRESHOLD]
    if len(exact) < DELTA_THRESHOLD:
        return None
    monomials = monomials_of_degree(3, 3)
    matrix = [[_power_product(point, m) for m in monomials] for point in exact]
    kernel = linalg.nullspace(matrix, len(monomials))
    if len(kernel) != 1:
        logger.debug(f"Cubics through the zeros form a family of dimension {len(kernel)}")
        return None
    cubic = MPoly(3, dict(zip(monomials, kernel[0])))
    return cubic.primitive() if cubic.is_rational() else cubic


def _power_product(point, monomial) -> FieldElem:
    value = FieldElem(1)
    for coordinate, exponent in zip(point, monomial):
        value = value * coordinate ** exponent
    return value


def _certify_nonnegative(form: MPoly, config: CertifyConfig, verdict: StubbornVerdict) -> str:
    """Returns "nonnegative", "negative" or "unknown" and records how it was decided."""
    multiplier = multiplier_sos(form, config.r_max, config.solver, start=1)
    verdict.evidence["multiplier_sos"] = multiplier.to_dict()
    if multiplier.found:
        return "nonnegative"

    falsifier = numerical_falsifier(form, seed=config.geometry.seed)
    verdict.evidence["falsifier"] = falsifier.to_dict()
    if falsifier.found:
        return "negative"

    if form.is_rational():
        cells = certify_nonnegative_plane(form, config.geometry)
        verdict.evidence["cells"] = cells.to_dict()
        return "nonnegative" if cells.nonnegative else "negative"
    return "unknown"


def _corroborate_large(form: MPoly, report, config: CertifyConfig, verdict: StubbornVerdict):
    zeros = [p.point for p in report.points if p.tree.delta == 1]
    cubic = inheriting_cubic(zeros)
    if cubic is None:
        verdict.evidence["inheriting_cubic"] = None
        return
    entry = {"cubic": cubic.format()}
    try:
        entry["curve_stubborn"] = curve_stubborn(form, cubic, config).to_dict()
    except StubbornError as error:
        entry["error"] = str(error)
    verdict.evidence["inheriting_cubic"] = entry


def factor_certificate(form: MPoly, factorization: Factorization,
                       config: CertifyConfig) -> Optional[SosCertificate]:
    """Sum of squares certificate assembled from the rational factors of the form.

    Even powers are squares already; each factor of odd multiplicity must be a
    sum of squares up to sign."""
    square = MPoly.constant(form.nvars, 1)
    pieces = []
    for factor, multiplicity in factorization.factors:
        if multiplicity > 1:
            square = square * factor ** (multiplicity // 2)
        if multiplicity % 2:
            pieces.append(factor)
    if len(pieces) == 1 and square.degree == 0:
        return None

    sign = factorization.content
    squares = [(Fraction(1), square)]
    for piece in pieces:
        if piece.degree % 2:
            return None
        outcome = is_sos(piece, config.solver)
        if outcome.verdict != SOS_VERDICT:
            outcome = is_sos(-piece, config.solver)
            sign = -sign
        if outcome.verdict != SOS_VERDICT:
            return None
        squares = [(w * v, p * q) for w, p in squares for v, q in outcome.certificate.squares()]
    if sign <= 0:
        return None
    certificate = gram_from_squares(form, [(w * sign, p) for w, p in squares])
    return certificate if certificate.verify() else None


def zero_set_factor(factorization: Factorization, config: CertifyConfig) -> Optional[MPoly]:
    """The repeated factor whose real points form a curve, if any."""
    for factor, multiplicity in factorization.factors:
        if multiplicity > 1 and smooth_real_point(factor, config.geometry) is not None:
            return factor
    return None


def _reducible_branch(form: MPoly, factorization: Optional[Factorization], config: CertifyConfig,
                      verdict: StubbornVerdict, reason: str) -> StubbornVerdict:
    """A reducible nonnegative sextic, or one vanishing on a curve, is a sum of squares."""
    if factorization is None:
        return verdict.undecided(f"{reason}, and the coefficients cannot be factored")
    try:
        carrier = zero_set_factor(factorization, config)
    except ComputationError as error:
        logger.warning(f"Real branches of the repeated factors not decided: {error}")
        carrier = None
    if carrier is not None:
        verdict.evidence["zero_set_factor"] = carrier.format()
    certificate = factor_certificate(form, factorization, config)
    if certificate is None:
        return verdict.undecided(f"{reason} without an exact certificate")
    verdict.evidence["factor_certificate"] = certificate.to_dict()
    verdict.verdict, verdict.basis = SOS, BASIS_SOS
    logger.info(f"Sum of squares assembled from {len(factorization.factors)} factors")
    return verdict


def classify_sextic(form: MPoly, config: Optional[CertifyConfig] = None,
                    corroborate: bool = False) -> StubbornVerdict:
    """Decides stubbornness of a ternary sextic."""
    config = config or CertifyConfig()
    check_plane_form(form, "F")
    if form.degree != 6:
        raise PreconditionError("F must be a ternary sextic")
    verdict = StubbornVerdict(UNDECIDED)

    outcome = is_sos(form, config.solver)
    verdict.evidence["sos"] = outcome.to_dict()
    if outcome.verdict == SOS_VERDICT:
        verdict.verdict, verdict.basis = SOS, BASIS_SOS
        return verdict

    factorization = None
    reducible = False
    if form.is_rational():
        factorization = factor_rational(form)
        reducible = not factorization.is_irreducible()
        verdict.evidence["factors"] = [
            {"factor": f.format(), "multiplicity": k} for f, k in factorization.factors
        ]

    try:
        nonnegativity = _certify_nonnegative(form, config, verdict)
    except ComputationError as error:
        return verdict.undecided(f"nonnegativity: {error}")
    if nonnegativity == "negative":
        verdict.verdict, verdict.basis = NOT_STUBBORN, BASIS_NEGATIVE
        return verdict
    if nonnegativity == "unknown":
        return verdict.undecided("nonnegativity could not be certified")
    if outcome.verdict != NOT_SOS:
        if reducible:
            return _reducible_branch(form, factorization, config, verdict, "reducible sextic")
        return verdict.undecided(f"sum of squares: {outcome.reason}")

    try:
        report = delta_real_total(form, config.geometry)
    except (PositiveDimensional, NonIsolatedZero) as error:
        logger.warning(f"Real zeros are not isolated ({error}), trying the factors")
        return _reducible_branch(form, factorization, config, verdict,
                                 f"real zeros are not isolated: {error}")
    except ComputationError as error:
        return verdict.undecided(f"delta invariant: {error}")
    verdict.evidence["delta"] = report.to_dict()

    # Zeros of a nonnegative sextic that is not a sum of squares are double points.
    higher = [p.tree.multiplicity for p in report.points if p.tree.multiplicity != 2]
    if higher:
        return verdict.undecided(
            f"real zeros of multiplicity {sorted(set(higher))} contradict a sextic that is "
            f"not a sum of squares"
        )

    if report.total >= DELTA_THRESHOLD:
        verdict.verdict, verdict.basis = STUBBORN, BASIS_DELTA_LARGE
        if corroborate and all(is_ordinary_double_point(form, p.point) for p in report.points):
            _corroborate_large(form, report, config, verdict)
    else:
        verdict.verdict, verdict.basis = NOT_STUBBORN, BASIS_DELTA_SMALL
        if corroborate:
            verdict.evidence["power_search"] = power_sos_search(
                form, config.k_max, config.solver
            ).to_dict()
    logger.info(f"Sextic classified {verdict.verdict} with real delta {report.total}")
    return verdict
