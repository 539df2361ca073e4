"""
Command line entry point: ``stubborn-cert <command> ...``.


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


Exit codes: 2 for parse and usage errors, 3 for violated preconditions, 1
when the verdict is UNDECIDED under --strict (or the corpus fails), 0
otherwise.
"""
import argparse
import logging
import sys
from typing import Optional, Sequence

from proton.stubborn.config import CertifyConfig
from proton.stubborn.exceptions import ParseError, PreconditionError
from proton.stubborn.poly.parser import parse_poly
from proton.stubborn.certify.corpus import ITEMS
from proton.stubborn.certify.pool import WorkerPool
from proton.stubborn.certify.revalidate import revalidate
from proton.stubborn.certify.verdict import UNDECIDED
from proton.stubborn.cli.jobs import JobSpec, fraction_strings, rerun_document, run_job
from proton.stubborn.cli.plot import DEFAULT_RESOLUTION, plot_curves
from proton.stubborn.cli.serialize import read_document, read_source, write_document

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_UNDECIDED = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3

# Polynomial arguments of each command, in order.
FORM_ARGUMENTS = {
    "check-sos": ("F",),
    "check-sos-mod": ("F", "H"),
    "power-search": ("F",),
    "delta": ("F",),
    "classify-sextic": ("F",),
    "curve-stubborn": ("F", "H"),
    "cubic-zoo": ("H",),
    "lift-system": ("F", "G"),
    "lift-search": ("F", "G"),
}

HELP = {
    "check-sos": "decide whether a form is a sum of squares",
    "check-sos-mod": "decide whether F is a sum of squares modulo the curve H",
    "power-search": "search odd k <= --k-max with F^k a sum of squares",
    "delta": "real delta invariant of a plane curve",
    "classify-sextic": "decide stubbornness of a ternary sextic",
    "curve-stubborn": "decide stubbornness of F on the totally real curve H",
    "cubic-zoo": "classify a totally real plane cubic",
    "descartes": "real intersections of conics with the degree 11 rational curve",
    "lift-system": "linear conditions for lifting F from the curve G",
    "lift-search": "search a nonnegative lift of F from the curve G",
    "two-torsion": "real 2-torsion points of y^2 = x^3 + a*x + b",
    "verify-paper": "re-verify the corpus of worked examples",
    "plot": "draw real plane curves to an SVG file",
    "revalidate": "re-run a verdict document and re-check its certificates",
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Raises instead of exiting so that main() owns the exit code."""

    def error(self, message):
        raise _UsageError(message)


def _add_common_options(parser: argparse.ArgumentParser):
    defaults = CertifyConfig()
    parser.add_argument("--seed", type=int, default=defaults.geometry.seed,
                        help="seed for coordinate changes and samples")
    parser.add_argument("--slices", type=int, default=defaults.geometry.slice_count,
                        help="sample slices for sampled sign checks")
    parser.add_argument("--k-max", type=int, default=defaults.k_max,
                        help="largest odd power tried")
    parser.add_argument("--r-max", type=int, default=defaults.r_max,
                        help="largest multiplier exponent tried")
    strictness = parser.add_mutually_exclusive_group()
    strictness.add_argument("--strict", dest="strict", action="store_true",
                            default=defaults.strict,
                            help="demand certificates; UNDECIDED exits with 1 (default)")
    strictness.add_argument("--lenient", dest="strict", action="store_false",
                            help="accept sampled evidence for nonnegativity on curves")
    parser.add_argument("--precision", type=int, default=defaults.geometry.precision,
                        help="interval precision in bits")
    parser.add_argument("--out", help="write the JSON verdict to this file")
    parser.add_argument("--svg", help="also draw the input curves to this SVG file")
    parser.add_argument("--vars", default="x,y,z", help="comma separated variable names")
    parser.add_argument("--verbose", action="store_true", help="log debug output to stderr")


def build_parser() -> argparse.ArgumentParser:
    """The argument parser with one subcommand per operation."""
    parser = _Parser(prog="stubborn-cert",
                     description="Certificates for stubborn nonnegative forms.")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, text in HELP.items():
        sub = commands.add_parser(name, help=text, description=text)
        for form in FORM_ARGUMENTS.get(name, ()):
            sub.add_argument(form, help="polynomial expression or @path")
        _add_common_options(sub)

    commands.choices["delta"].add_argument(
        "--chart", choices=["x", "y", "z"],
        help="recompute every exact point in this affine chart as a check")
    commands.choices["classify-sextic"].add_argument(
        "--corroborate", action="store_true",
        help="add the inheriting cubic or the power search to the evidence")
    commands.choices["cubic-zoo"].add_argument(
        "--check-witness", action="store_true",
        help="re-run the worked example of the class and mark the row computed")
    for name in ("lift-system", "lift-search"):
        commands.choices[name].add_argument("--lift-degree", type=int,
                                            help="degree of the multiplier or of the lift")
    descartes = commands.choices["descartes"]
    descartes.add_argument("coefficients", nargs="*",
                           help="a11 a12 a22 a1 a2 a0, repeated for several conics")
    descartes.add_argument("--random", type=int, default=0,
                           help="also check this many seeded random conics")
    torsion = commands.choices["two-torsion"]
    torsion.add_argument("a", help="rational coefficient a")
    torsion.add_argument("b", help="rational coefficient b")
    verify = commands.choices["verify-paper"]
    verify.add_argument("--items", nargs="+", choices=list(ITEMS),
                        help="run only these corpus items")
    verify.add_argument("--random-conics", type=int, default=CertifyConfig().descartes_random,
                        help="seeded random conics checked by the descartes item")
    plot = commands.choices["plot"]
    plot.add_argument("forms", nargs="+", help="ternary forms, expressions or @path")
    plot.add_argument("--resolution", type=int, default=DEFAULT_RESOLUTION,
                      help="grid points per axis")
    commands.choices["revalidate"].add_argument("document", help="a JSON verdict document")
    return parser


def _configure_logging(verbose: bool):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def _options(args) -> CertifyConfig:
    config = CertifyConfig(k_max=args.k_max, r_max=args.r_max, strict=args.strict)
    config.geometry.seed = args.seed
    config.geometry.slice_count = args.slices
    config.geometry.precision = args.precision
    config.descartes_random = getattr(args, "random_conics", config.descartes_random)
    return config


def job_from_args(args) -> JobSpec:
    """Resolves ``@path`` inputs and collects the options into a JobSpec."""
    job = JobSpec(command=args.command, options=_options(args), out=args.out, svg=args.svg,
                  variables=[name.strip() for name in args.vars.split(",")])
    for name in FORM_ARGUMENTS.get(args.command, ()):
        job.inputs[name] = read_source(getattr(args, name))

    if args.command == "delta" and args.chart:
        job.parameters["chart"] = args.chart
    elif args.command == "classify-sextic":
        job.parameters["corroborate"] = args.corroborate
    elif args.command == "cubic-zoo":
        job.parameters["check_witness"] = args.check_witness
    elif args.command in ("lift-system", "lift-search") and args.lift_degree is not None:
        job.parameters["lift_degree"] = args.lift_degree
    elif args.command == "descartes":
        if len(args.coefficients) % 6:
            raise _UsageError("Conics are given by six coefficients each")
        values = fraction_strings(args.coefficients)
        job.parameters["conics"] = [values[i:i + 6] for i in range(0, len(values), 6)]
        job.parameters["random"] = args.random
        if not values and not args.random:
            raise _UsageError("Give conic coefficients or --random")
    elif args.command == "two-torsion":
        job.inputs.update(a=fraction_strings([args.a])[0], b=fraction_strings([args.b])[0])
    elif args.command == "verify-paper" and args.items:
        job.parameters["items"] = args.items
    return job


def _plot(args) -> int:
    names = [name.strip() for name in args.vars.split(",")]
    forms = [parse_poly(read_source(text), names) for text in args.forms]
    if any(form.nvars != 3 or not form.is_homogeneous() for form in forms):
        raise PreconditionError("Only ternary forms can be plotted")
    if not args.svg:
        raise _UsageError("plot needs --svg")
    plot_curves(forms, args.svg, labels=args.forms, resolution=args.resolution)
    return EXIT_OK


def _revalidate(args) -> int:
    report = revalidate(read_document(args.document), rerun_document)
    write_document({"command": "revalidate", **report.to_dict()}, args.out, sys.stdout)
    return EXIT_OK if report.valid else EXIT_UNDECIDED


def _run(args) -> int:
    if args.command == "plot":
        return _plot(args)
    if args.command == "revalidate":
        return _revalidate(args)

    job = job_from_args(args)
    document = run_job(job)
    write_document(document, job.out, sys.stdout)
    names = FORM_ARGUMENTS.get(job.command, ())
    if job.svg and names:
        plot_curves([job.form(name) for name in names], job.svg, labels=list(names))

    if job.command == "verify-paper" and document["verdict"] != "PASS":
        return EXIT_UNDECIDED
    if job.options.strict and document["verdict"] == UNDECIDED:
        return EXIT_UNDECIDED
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Runs one command and returns its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as error:
        parser.print_usage(sys.stderr)
        print(f"stubborn-cert: error: {error}", file=sys.stderr)
        return EXIT_USAGE
    _configure_logging(args.verbose)

    try:
        return _run(args)
    except (ParseError, _UsageError, ValueError, OSError) as error:
        logger.error(f"{args.command}: {error}")
        print(f"stubborn-cert: error: {error}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as error:
        logger.error(f"{args.command}: precondition violated: {error}")
        print(f"stubborn-cert: precondition violated: {error}", file=sys.stderr)
        return EXIT_PRECONDITION
    finally:
        WorkerPool.shutdown()


if __name__ == "__main__":
    sys.exit(main())
