"""
Jobs: what a command line invocation asked for, and how it is run.


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


A JobSpec holds everything a run depends on, so any verdict document can be
reproduced from the JobSpec echoed inside it.
"""
import logging
import time
from dataclasses import dataclass, field, asdict
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from proton.stubborn import __version__
from proton.stubborn.config import CertifyConfig
from proton.stubborn.exceptions import ComputationError
from proton.stubborn.poly.field import configure_precision, format_scalar
from proton.stubborn.poly.mpoly import MPoly
from proton.stubborn.poly.parser import parse_poly
from proton.stubborn.curves.delta import CHART_NAMES, delta_at_projective, delta_real_total
from proton.stubborn.curves.points import format_fraction
from proton.stubborn.curves.torsion import two_torsion_real
from proton.stubborn.sos.engine import is_sos, is_sos_mod, power_sos_search
from proton.stubborn.certify.corpus import verify_corpus
from proton.stubborn.certify.cubic_zoo import cubic_zoo
from proton.stubborn.certify.curve import curve_stubborn
from proton.stubborn.certify.descartes import descartes_curve_check, random_conics
from proton.stubborn.certify.lifting import lift_necessary_system, lift_sos_search
from proton.stubborn.certify.sextic import classify_sextic
from proton.stubborn.certify.verdict import UNDECIDED

logger = logging.getLogger(__name__)

# (verdict, basis, evidence)
Outcome = Tuple[Optional[str], Optional[str], dict]


@dataclass
class JobSpec:
    """A command, its resolved inputs and every option it runs with."""
    command: str
    inputs: Dict[str, str] = field(default_factory=dict)
    variables: List[str] = field(default_factory=lambda: ["x", "y", "z"])
    parameters: dict = field(default_factory=dict)
    options: CertifyConfig = field(default_factory=CertifyConfig)
    out: Optional[str] = None
    svg: Optional[str] = None

    @property
    def seed(self) -> int:
        return self.options.geometry.seed

    def form(self, name: str) -> MPoly:
        return parse_poly(self.inputs[name], self.variables)

    def to_dict(self) -> dict:
        data = asdict(self)
        data["options"] = self.options.to_dict()
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "JobSpec":
        data = dict(data)
        options = CertifyConfig.from_dict(data.pop("options", {}))
        return cls(options=options, **data)


def _sos_outcome(result) -> Outcome:
    return result.verdict, None, result.to_dict()


def _check_sos(job: JobSpec) -> Outcome:
    return _sos_outcome(is_sos(job.form("F"), job.options.solver))


def _check_sos_mod(job: JobSpec) -> Outcome:
    return _sos_outcome(is_sos_mod(job.form("F"), job.form("H"), job.options.solver))


def _power_search(job: JobSpec) -> Outcome:
    result = power_sos_search(job.form("F"), job.options.k_max, job.options.solver)
    return result.status, None, result.to_dict()


def _delta(job: JobSpec) -> Outcome:
    form = job.form("F")
    report = delta_real_total(form, job.options.geometry)
    evidence = report.to_dict()
    chart = job.parameters.get("chart")
    if chart is not None:
        index = CHART_NAMES.index(chart)
        recomputed = []
        for point in report.points:
            coordinates = point.point.exact_coordinates()
            if coordinates is None or coordinates[index].is_zero():
                continue
            tree = delta_at_projective(
                form, coordinates, index, job.options.geometry.recursion_depth
            )
            recomputed.append({
                "point": [format_scalar(c) for c in coordinates],
                "delta": tree.delta,
                "matches": tree.delta == point.tree.delta,
            })
        evidence["chart_check"] = {"chart": chart, "points": recomputed}
    return str(report.total), None, evidence


def _stubborn_outcome(verdict) -> Outcome:
    data = verdict.to_dict()
    evidence = dict(data["evidence"])
    if data["undecided_reasons"]:
        evidence["undecided_reasons"] = data["undecided_reasons"]
    return data["verdict"], data["basis"], evidence


def _classify_sextic(job: JobSpec) -> Outcome:
    return _stubborn_outcome(classify_sextic(
        job.form("F"), job.options, corroborate=job.parameters.get("corroborate", False)
    ))


def _curve_stubborn(job: JobSpec) -> Outcome:
    return _stubborn_outcome(curve_stubborn(job.form("F"), job.form("H"), job.options))


def _cubic_zoo(job: JobSpec) -> Outcome:
    result = cubic_zoo(job.form("H"), job.options.geometry,
                       witness=job.parameters.get("check_witness", False))
    return result.tag, result.provenance, result.to_dict()


def _descartes(job: JobSpec) -> Outcome:
    conics = [[Fraction(c) for c in conic] for conic in job.parameters.get("conics", [])]
    conics += random_conics(job.parameters.get("random", 0), seed=job.seed)
    reports = [descartes_curve_check(conic).to_dict() for conic in conics]
    holds = all(report["holds"] for report in reports)
    return ("HOLDS" if holds else "VIOLATED"), None, {"reports": reports}


def _lift_system(job: JobSpec) -> Outcome:
    system = lift_necessary_system(
        job.form("F"), job.form("G"), job.parameters.get("lift_degree"), job.options
    )
    return ("CONSISTENT" if system.consistent else "INCONSISTENT"), None, system.to_dict()


def _lift_search(job: JobSpec) -> Outcome:
    result = lift_sos_search(
        job.form("F"), job.form("G"), job.parameters.get("lift_degree"),
        job.options.r_max, job.options
    )
    return result.status, None, result.to_dict()


def _two_torsion(job: JobSpec) -> Outcome:
    report = two_torsion_real(Fraction(job.inputs["a"]), Fraction(job.inputs["b"]))
    return str(report.real_nontrivial_count), None, report.to_dict()


def _verify_paper(job: JobSpec) -> Outcome:
    report = verify_corpus(job.options, job.parameters.get("items"))
    return ("PASS" if report["passed"] else "FAIL"), None, report


COMMANDS: Dict[str, Callable[[JobSpec], Outcome]] = {
    "check-sos": _check_sos,
    "check-sos-mod": _check_sos_mod,
    "power-search": _power_search,
    "delta": _delta,
    "classify-sextic": _classify_sextic,
    "curve-stubborn": _curve_stubborn,
    "cubic-zoo": _cubic_zoo,
    "descartes": _descartes,
    "lift-system": _lift_system,
    "lift-search": _lift_search,
    "two-torsion": _two_torsion,
    "verify-paper": _verify_paper,
}


def _split_timings(command: str, evidence: dict) -> dict:
    """Moves wall clock readings out of the evidence, which must be reproducible."""
    if command != "verify-paper":
        return {}
    return {item["name"]: item.pop("seconds", None) for item in evidence.get("items", [])}


def run_job(job: JobSpec) -> dict:
    """Runs a job and returns its verdict document."""
    handler = COMMANDS[job.command]
    configure_precision(job.options.geometry.precision, job.options.geometry.box_doublings)
    start = time.perf_counter()
    try:
        verdict, basis, evidence = handler(job)
    except ComputationError as error:
        logger.warning(f"{job.command} stopped: {error}")
        verdict, basis = UNDECIDED, None
        evidence = {"undecided_reasons": [f"{type(error).__name__}: {error}"]}
    timings = _split_timings(job.command, evidence)
    timings["total_seconds"] = round(time.perf_counter() - start, 3)
    return {
        "command": job.command,
        "inputs": job.inputs,
        "seed": job.seed,
        "verdict": verdict,
        "basis": basis,
        "evidence": evidence,
        "timings": timings,
        "job": job.to_dict(),
        "version": __version__,
    }


def rerun_document(job_data: dict) -> dict:
    """Runs the job echoed in a verdict document again."""
    job = JobSpec.from_dict(job_data)
    job.out = job.svg = None
    return run_job(job)


def fraction_strings(values) -> List[str]:
    return [format_fraction(Fraction(v)) for v in values]
