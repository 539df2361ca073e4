"""
Stubbornness of forms on totally real plane curves.


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

from proton.stubborn.config import CertifyConfig
from proton.stubborn.exceptions import (
    ComputationError, NotTotallyReal, PreconditionError, UnsupportedCoefficients
)
from proton.stubborn.poly.factor import factor_rational
from proton.stubborn.poly.mpoly import MPoly
from proton.stubborn.curves.cells import certify_nonnegative_on_curve, smooth_real_point
from proton.stubborn.curves.intersection import check_plane_form, intersection_profile
from proton.stubborn.curves.sign import sign_on_curve
from proton.stubborn.curves.singular import is_smooth
from proton.stubborn.sos.engine import NOT_SOS, SOS as SOS_VERDICT, is_sos_mod
from proton.stubborn.certify.verdict import (
    BASIS_NEGATIVE, BASIS_NONREAL_ZEROS, BASIS_REAL_ROOTED, BASIS_SOS_MOD,
    NOT_STUBBORN, SOS, STUBBORN, UNDECIDED, StubbornVerdict
)

logger = logging.getLogger(__name__)


def check_totally_real(curve: MPoly, config: Optional[CertifyConfig] = None) -> List[dict]:
    """One smooth real point per irreducible factor; raises NotTotallyReal otherwise."""
    config = config or CertifyConfig()
    check_plane_form(curve, "H")
    if not curve.is_rational():
        raise UnsupportedCoefficients("Curves are given by rational forms")
    witnesses = []
    for factor, multiplicity in factor_rational(curve).factors:
        if multiplicity > 1:
            raise PreconditionError("The curve form must be squarefree")
        witness = smooth_real_point(factor, config.geometry)
        if witness is None:
            raise NotTotallyReal(f"The component {factor} has no smooth real point")
        witnesses.append({"component": factor.format(), "point": witness})
    return witnesses


def _check_nonnegative(form: MPoly, curve: MPoly, config: CertifyConfig,
                       verdict: StubbornVerdict) -> bool:
    """Records the nonnegativity evidence; False once F is shown to change sign."""
    if config.strict:
        report = certify_nonnegative_on_curve(form, curve, config.geometry)
        verdict.evidence["nonnegativity"] = report.to_dict()
        return report.nonnegative
    report = sign_on_curve(form, curve, config=config.geometry)
    verdict.evidence["nonnegativity"] = report.to_dict()
    return not report.is_proof


def curve_stubborn(form: MPoly, curve: MPoly,
                   config: Optional[CertifyConfig] = None) -> StubbornVerdict:
    """Decides whether ``form`` is stubborn on the curve ``curve = 0``."""
    config = config or CertifyConfig()
    check_plane_form(form, "F")
    if form.degree % 2:
        raise PreconditionError("F must have even degree")
    verdict = StubbornVerdict(UNDECIDED)
    verdict.evidence["totally_real"] = check_totally_real(curve, config)

    step = "nonnegativity"
    try:
        if not _check_nonnegative(form, curve, config, verdict):
            verdict.verdict, verdict.basis = NOT_STUBBORN, BASIS_NEGATIVE
            logger.info("F takes negative values on the curve")
            return verdict

        step = "sum of squares modulo the curve"
        outcome = is_sos_mod(form, curve, config.solver)
        verdict.evidence["sos_mod"] = outcome.to_dict()
        if outcome.verdict == SOS_VERDICT:
            verdict.verdict, verdict.basis = SOS, BASIS_SOS_MOD
            return verdict
        if outcome.verdict != NOT_SOS:
            return verdict.undecided(f"{step}: {outcome.reason}")

        step = "intersection profile"
        profile = intersection_profile(form, curve, config.geometry)
        verdict.evidence["intersection"] = profile.to_dict()
        if profile.nonreal_multiplicity:
            step = "smoothness of the curve"
            if is_smooth(curve, config.geometry):
                verdict.verdict, verdict.basis = NOT_STUBBORN, BASIS_NONREAL_ZEROS
                return verdict
            return verdict.undecided("F has nonreal zeros on a singular curve")
        if not all(point.smooth_on_h for point in profile.real_points):
            return verdict.undecided("F vanishes at a singular point of the curve")
    except ComputationError as error:
        return verdict.undecided(f"{step}: {error}")

    verdict.verdict, verdict.basis = STUBBORN, BASIS_REAL_ROOTED
    if verdict.evidence["nonnegativity"].get("grade") != "proof":
        verdict.evidence["nonnegativity_grade"] = "evidence"
    logger.info("F is stubborn on the curve")
    return verdict
