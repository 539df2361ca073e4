"""
Fixed corpus of worked examples, re-verified from scratch.


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


Every item is a module-level function so it can run in a worker process. An
item records named boolean checks plus JSON-ready evidence; it passes when
every check holds. Items that raise are reported as failed and never stop
the run.
"""
import asyncio
import logging
import time
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from proton.stubborn.config import CertifyConfig
from proton.stubborn.poly.field import configure_precision
from proton.stubborn.poly.mpoly import MPoly
from proton.stubborn.poly.parser import parse_poly
from proton.stubborn.curves.delta import delta_real_total
from proton.stubborn.curves.intersection import intersection_profile
from proton.stubborn.curves.singular import is_smooth
from proton.stubborn.curves.torsion import two_torsion_real
from proton.stubborn.sos.engine import FOUND as POWER_FOUND, NOT_SOS, SOS as SOS_VERDICT
from proton.stubborn.sos.engine import is_sos, is_sos_mod, power_sos_search
from proton.stubborn.certify import cubic_zoo as zoo
from proton.stubborn.certify.curve import curve_stubborn
from proton.stubborn.certify.descartes import descartes_curve_check, random_conics
from proton.stubborn.certify.lifting import lift_necessary_system
from proton.stubborn.certify.pool import WorkerPool
from proton.stubborn.certify.sextic import classify_sextic
from proton.stubborn.certify.verdict import NOT_STUBBORN, STUBBORN

logger = logging.getLogger(__name__)

STENGLE_CUBIC = "y^2*z-x^3-z^2*x"
STENGLE_SEXTIC = f"x^3*z^3+({STENGLE_CUBIC})^2"
PERTURBED_MOTZKIN = "x^4*y^2+x^2*y^4+z^6-x^2*y^2*z^2"
ROBINSON = (
    "x^6+y^6+z^6-(x^4*y^2+x^2*y^4+x^4*z^2+x^2*z^4+y^4*z^2+y^2*z^4)+3*x^2*y^2*z^2"
)
NODAL_CUBIC = "y^2*z-x^2*(x+z)"
NODAL_QUADRIC = "y^2-6*x^2+3*x*z+9*z^2"
UNIT_CIRCLE = "x^2+y^2-z^2"

_ROOT = "sqrt(936*sqrt(2)+1337)"
CONIC_TANGENT_QUARTIC = (
    f"-(12*sqrt(2)+5*{_ROOT}+25)*x^4"
    f"-4*(15*sqrt(2)+sqrt(1872*sqrt(2)+2674)+18)*x^3*z"
    f"+x^2*((48*sqrt(2)-2*{_ROOT}+70)*y^2-12*(2*sqrt(2)+3)*z^2)"
    f"+8*(2*sqrt(2)+3)*x*z*(y^2-z^2)"
    f"+(y^2-z^2)*((12*sqrt(2)-{_ROOT}+19)*y^2+(36*sqrt(2)+{_ROOT}+53)*z^2)"
)
_PASSING_ROOT = "sqrt(3516*sqrt(2)+6539)"
CONIC_PASSING_QUARTIC = (
    f"(18*sqrt(2)-5*{_PASSING_ROOT}-131)*x^4"
    f"-4*(57*sqrt(2)+sqrt(7032*sqrt(2)+13078)+18)*x^3*z"
    f"+2*x^2*((54*sqrt(2)-{_PASSING_ROOT}+97)*y^2-6*(4*sqrt(2)+9)*z^2)"
    f"+8*(4*sqrt(2)+9)*x*z*(y^2-z^2)"
    f"+(y^2-z^2)*((18*sqrt(2)-{_PASSING_ROOT}+65)*y^2+(78*sqrt(2)+{_PASSING_ROOT}+151)*z^2)"
)

# Symmetric matrix of linear forms whose determinant is bitangent to x, y and x - y.
BITANGENT_MATRIX = (
    ("0", "x", "y", "4*x+y-z"),
    ("x", "0", "x+4*y-z", "x-y"),
    ("y", "x+4*y-z", "0", "x-y+4*z"),
    ("4*x+y-z", "x-y", "x-y+4*z", "0"),
)

EDGE_QUARTIC = "25*(x^4+y^4+z^4)-34*(x^2*y^2+x^2*z^2+y^2*z^2)"
EDGE_BITANGENTS = (
    "x-2*z", "-x-2*z", "1/2*z-y", "-1/2*z-y", "x-2*y", "x-1/2*y", "x+y+3/5*z", "x+y-3/5*z",
)

# Three real 2-torsion points for x^3 - x, one for the other two.
TORSION_CASES = (((-1, 0), 3), ((1, 0), 1), ((0, -2), 1))

CORPUS_CUBICS = (
    ("y^2*z-x^3+x*z^2", zoo.SMOOTH),
    (NODAL_CUBIC, zoo.NODAL_CONNECTED),
    (f"({UNIT_CIRCLE})*x", zoo.CONIC_SECANT),
    ("x*y*z", zoo.GENERAL_LINES),
    (f"({UNIT_CIRCLE})*(z-x)", zoo.CONIC_TANGENT),
    (f"({UNIT_CIRCLE})*(2*z-x)", zoo.CONIC_PASSING),
    ("x*y*(x-y)", zoo.CONCURRENT_LINES),
    ("y^2*z-x^3", zoo.CUSPIDAL),
    ("y^2*z-x^2*(x-z)", zoo.SOLITARY_NODE),
    ("x^2*y", zoo.REPEATED_LINES),
)

# Coefficients (a11, a12, a22, a1, a2, a0) of conics pulled back to the degree 11 curve.
DESCARTES_CONICS = (
    (1, 0, 1, 0, 0, -10 ** 6),
    (0, 0, 0, 0, 1, 0),
)


class _Record:
    """Named checks and evidence of one corpus item."""

    def __init__(self):
        self.checks: Dict[str, bool] = {}
        self.evidence: dict = {}

    def check(self, name: str, value: bool):
        self.checks[name] = bool(value)
        if not value:
            logger.warning(f"Corpus check failed: {name}")

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(self.checks.values())


def determinant(matrix: Sequence[Sequence[MPoly]]) -> MPoly:
    """Laplace expansion along the first row."""
    if len(matrix) == 1:
        return matrix[0][0]
    total = MPoly.zero(matrix[0][0].nvars)
    for column, entry in enumerate(matrix[0]):
        if entry.is_zero():
            continue
        minor = [row[:column] + row[column + 1:] for row in matrix[1:]]
        term = entry * determinant(minor)
        total = total + term if column % 2 == 0 else total - term
    return total


def _doubled_real_contacts(form: MPoly, curve: MPoly, config: CertifyConfig) -> Tuple[bool, dict]:
    profile = intersection_profile(form, curve, config.geometry)
    multiplicities = profile.multiplicities()
    doubled = profile.nonreal_multiplicity == 0 and all(m % 2 == 0 for m in multiplicities)
    return doubled, {"curve": curve.format(), "multiplicities": multiplicities,
                     "nonreal": profile.nonreal_multiplicity}


def stengle(record: _Record, config: CertifyConfig):
    cubic = parse_poly(STENGLE_CUBIC)
    restriction = parse_poly("x^3*z^3")
    sextic = parse_poly(STENGLE_SEXTIC)
    record.check("reduces to x^3*z^3 modulo the cubic", cubic.divides(sextic - restriction))

    profile = intersection_profile(restriction, cubic, config.geometry)
    record.evidence["intersection"] = profile.to_dict()
    record.check("contact multiplicities 6 and 12",
                 sorted(profile.multiplicities()) == [6, 12]
                 and profile.nonreal_multiplicity == 0)

    verdict = curve_stubborn(restriction, cubic, config)
    record.evidence["curve_stubborn"] = verdict.to_dict()
    record.check("x^3*z^3 is stubborn on the cubic", verdict.verdict == STUBBORN)

    system = lift_necessary_system(restriction, cubic, config=config)
    record.evidence["lift_system"] = system.to_dict()
    record.check("the sextic satisfies the lift conditions",
                 system.consistent and not any(system.residual(-cubic)))


def stengle_sextic(record: _Record, config: CertifyConfig):
    cubic = parse_poly(STENGLE_CUBIC)
    sextic = parse_poly(STENGLE_SEXTIC)
    verdict = classify_sextic(sextic, config)
    record.evidence["classify_sextic"] = verdict.to_dict()
    record.check("stubborn by its real delta invariant", verdict.verdict == STUBBORN)

    inherited = curve_stubborn(sextic, cubic, config)
    record.evidence["curve_stubborn"] = inherited.to_dict()
    record.check("stubborn on the inheriting cubic", inherited.verdict == STUBBORN)


def perturbed_motzkin(record: _Record, config: CertifyConfig):
    form = parse_poly(PERTURBED_MOTZKIN)
    outcome = is_sos(form, config.solver)
    record.evidence["sos"] = outcome.to_dict()
    record.check("not a sum of squares", outcome.verdict == NOT_SOS)

    delta = delta_real_total(form, config.geometry)
    record.evidence["delta"] = delta.to_dict()
    record.check("real delta invariant 6", delta.total == 6)

    verdict = classify_sextic(form, config)
    record.evidence["classify_sextic"] = verdict.to_dict()
    record.check("not stubborn", verdict.verdict == NOT_STUBBORN)


def perturbed_motzkin_cube(record: _Record, config: CertifyConfig):
    result = power_sos_search(parse_poly(PERTURBED_MOTZKIN), 3, config.solver)
    record.evidence["power_search"] = result.to_dict()
    record.check("the cube is a sum of squares", result.status == POWER_FOUND and result.k == 3)


def robinson(record: _Record, config: CertifyConfig):
    verdict = classify_sextic(parse_poly(ROBINSON), config)
    record.evidence["classify_sextic"] = verdict.to_dict()
    record.check("stubborn", verdict.verdict == STUBBORN)
    record.check("real delta invariant 10",
                 verdict.evidence.get("delta", {}).get("total") == 10)


def nodal_quadric(record: _Record, config: CertifyConfig):
    cubic = parse_poly(NODAL_CUBIC)
    cubic_class = zoo.cubic_zoo(cubic, config.geometry)
    record.evidence["cubic"] = cubic_class.to_dict()
    record.check("nodal cubic with connected real locus", cubic_class.tag == zoo.NODAL_CONNECTED)

    verdict = curve_stubborn(parse_poly(NODAL_QUADRIC), cubic, config)
    record.evidence["curve_stubborn"] = verdict.to_dict()
    record.check("the quadric is stubborn", verdict.verdict == STUBBORN)


def _conic_line_quartic(record: _Record, config: CertifyConfig, quartic: str, line: str,
                        tag: str):
    conic, line = parse_poly(UNIT_CIRCLE), parse_poly(line)
    cubic_class = zoo.cubic_zoo(conic * line, config.geometry)
    record.evidence["cubic"] = cubic_class.to_dict()
    record.check(tag, cubic_class.tag == tag)

    form = parse_poly(quartic)
    record.check("the quartic is smooth, hence irreducible", is_smooth(form, config.geometry))
    for name, component in (("conic", conic), ("line", line)):
        doubled, evidence = _doubled_real_contacts(form, component, config)
        record.evidence[name] = evidence
        record.check(f"doubled real contacts with the {name}", doubled)


def conic_tangent_quartic(record: _Record, config: CertifyConfig):
    _conic_line_quartic(record, config, CONIC_TANGENT_QUARTIC, "z-x", zoo.CONIC_TANGENT)


def conic_passing_quartic(record: _Record, config: CertifyConfig):
    _conic_line_quartic(record, config, CONIC_PASSING_QUARTIC, "2*z-x", zoo.CONIC_PASSING)


def concurrent_lines(record: _Record, config: CertifyConfig):
    x, y, _ = MPoly.gens(3)
    lines = x * y * (x - y)
    target = (x * y) ** 3
    record.check("(xy)^3 = x^4*y^2 - x^3*y^2*(x - y)",
                 target - (x ** 4 * y ** 2 - x ** 3 * y ** 2 * (x - y)) == 0)
    record.check("(xy)^3 = x^4*y^2 - x^2*y*(x*y*(x - y))",
                 target - (x ** 4 * y ** 2 - x ** 2 * y * lines) == 0)

    outcome = is_sos_mod(target, lines, config.solver)
    record.evidence["sos_mod"] = outcome.to_dict()
    record.check("(xy)^3 is a sum of squares modulo the lines", outcome.verdict == SOS_VERDICT)


def determinant_quartic(record: _Record, config: CertifyConfig):
    matrix = [[parse_poly(entry) for entry in row] for row in BITANGENT_MATRIX]
    form = determinant(matrix)
    record.evidence["quartic"] = form.format()
    record.check("the determinant is a quartic", form.degree == 4 and form.is_homogeneous())
    record.check("the quartic is smooth, hence irreducible", is_smooth(form, config.geometry))
    for line in ("x", "y", "x-y"):
        profile = intersection_profile(form, parse_poly(line), config.geometry)
        record.evidence[line] = profile.multiplicities()
        record.check(f"two real double points on {line}",
                     profile.multiplicities() == [2, 2] and profile.nonreal_multiplicity == 0)


def edge_lift(record: _Record, config: CertifyConfig):
    curve = parse_poly(EDGE_QUARTIC)
    form = MPoly.constant(3, 1)
    for bitangent in EDGE_BITANGENTS:
        form = form * parse_poly(bitangent)

    profile = intersection_profile(form, curve, config.geometry)
    record.evidence["multiplicities"] = profile.multiplicities()
    record.check("sixteen real double contacts",
                 profile.multiplicities() == [2] * 16 and profile.nonreal_multiplicity == 0)

    system = lift_necessary_system(form, curve, config=config)
    record.evidence["lift_system"] = system.to_dict()
    record.check("one lift condition per contact point", len(system.equations) == 16)
    record.evidence["lift_ranks"] = {"rank": system.rank, "augmented_rank": system.augmented_rank}
    record.evidence["expected_consistent"] = False
    if system.consistent:
        record.evidence["discrepancy"] = (
            f"lift conditions are consistent (rank {system.rank} = augmented rank "
            f"{system.augmented_rank}), an inconsistent system was expected"
        )
        logger.warning(f"Edge lift system: {record.evidence['discrepancy']}")


def two_torsion(record: _Record, _config: CertifyConfig):
    reports = []
    for (a, b), expected in TORSION_CASES:
        report = two_torsion_real(a, b)
        reports.append(report.to_dict())
        record.check(f"{expected} real 2-torsion points for ({a}, {b})",
                     report.real_nontrivial_count == expected)
    record.evidence["curves"] = reports


def cubic_taxonomy(record: _Record, config: CertifyConfig):
    classes = []
    for text, tag in CORPUS_CUBICS:
        cubic_class = zoo.cubic_zoo(parse_poly(text), config.geometry)
        classes.append({"cubic": text, **cubic_class.to_dict()})
        record.check(f"{text} is a {tag}", cubic_class.tag == tag)
    record.evidence["cubics"] = classes


def descartes_sample(record: _Record, config: CertifyConfig):
    conics = [list(c) for c in DESCARTES_CONICS]
    conics += random_conics(config.descartes_random, seed=config.geometry.seed)
    reports = [descartes_curve_check(conic) for conic in conics]
    record.evidence["reports"] = [report.to_dict() for report in reports]
    record.check("fewer than 22 real intersections", all(report.holds for report in reports))
    record.check("the line y = 0 meets the curve in 9 real points",
                 reports[1].real_roots == 9)


ITEMS: Dict[str, Tuple[Callable[[_Record, CertifyConfig], None], str]] = {
    "stengle": (stengle, "Stengle's sextic restricted to its cubic"),
    "stengle-sextic": (stengle_sextic, "Stengle's sextic in the plane"),
    "perturbed-motzkin": (perturbed_motzkin, "perturbed Motzkin sextic"),
    "perturbed-motzkin-cube": (perturbed_motzkin_cube, "cube of the perturbed Motzkin sextic"),
    "robinson": (robinson, "Robinson's sextic with ten real zeros"),
    "nodal-quadric": (nodal_quadric, "stubborn quadric on the nodal cubic"),
    "conic-tangent-quartic": (conic_tangent_quartic, "quartic on a conic and tangent line"),
    "conic-passing-quartic": (conic_passing_quartic, "quartic on a conic and passing line"),
    "concurrent-lines": (concurrent_lines, "identity for xy on three concurrent lines"),
    "determinant-quartic": (determinant_quartic, "determinantal quartic on concurrent lines"),
    "edge-lift": (edge_lift, "bitangent octic on the Edge quartic"),
    "two-torsion": (two_torsion, "real 2-torsion of Weierstrass cubics"),
    "cubic-taxonomy": (cubic_taxonomy, "taxonomy of totally real cubics"),
    "descartes": (descartes_sample, "conics against the degree 11 rational curve"),
}


def run_item(name: str, config: Optional[CertifyConfig] = None) -> dict:
    """Runs one corpus item; never raises."""
    config = config or CertifyConfig()
    function, source = ITEMS[name]
    configure_precision(config.geometry.precision, config.geometry.box_doublings)
    record = _Record()
    start = time.perf_counter()
    error = None
    try:
        function(record, config)
    except Exception as exc:  # pylint: disable=broad-except
        error = f"{type(exc).__name__}: {exc}"
        logger.exception(f"Corpus item {name} raised")

    result = {
        "name": name,
        "source": source,
        "passed": error is None and record.passed,
        "checks": record.checks,
        "evidence": record.evidence,
        "seconds": round(time.perf_counter() - start, 3),
    }
    if error:
        result["error"] = error
    logger.info(f"Corpus item {name}: {'pass' if result['passed'] else 'FAIL'}")
    return result


async def verify_corpus_async(config: Optional[CertifyConfig] = None,
                              names: Optional[Sequence[str]] = None,
                              pool: Optional[WorkerPool] = None) -> dict:
    """Runs the corpus items concurrently in the worker pool."""
    config = config or CertifyConfig()
    names = list(names or ITEMS)
    unknown = [name for name in names if name not in ITEMS]
    if unknown:
        raise ValueError(f"Unknown corpus items: {', '.join(unknown)}")
    pool = pool or WorkerPool()

    results = await asyncio.gather(
        *(pool.run(run_item, name, config) for name in names), return_exceptions=True
    )
    items: List[dict] = []
    for name, result in zip(names, results):
        if isinstance(result, BaseException):
            logger.error(f"Corpus item {name} did not complete: {result!r}")
            result = {"name": name, "source": ITEMS[name][1], "passed": False,
                      "checks": {}, "evidence": {}, "error": repr(result)}
        items.append(result)
    return {
        "passed": all(item["passed"] for item in items),
        "workers": pool.workers,
        "items": items,
    }


def verify_corpus(config: Optional[CertifyConfig] = None,
                  names: Optional[Sequence[str]] = None) -> dict:
    """Runs every corpus item and reports pass or fail per item."""
    return asyncio.run(verify_corpus_async(config, names))
