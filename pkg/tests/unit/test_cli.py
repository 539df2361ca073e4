"""
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
import json
from unittest.mock import patch

import pytest

from proton.stubborn.cli import jobs
from proton.stubborn.cli.main import (
    EXIT_OK, EXIT_PRECONDITION, EXIT_UNDECIDED, EXIT_USAGE, build_parser, job_from_args, main
)


def _stdout_document(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


def test_two_torsion_prints_a_verdict_document(capsys):
    assert main(["two-torsion", "-1", "0"]) == EXIT_OK

    document = _stdout_document(capsys)
    assert document["command"] == "two-torsion"
    assert document["verdict"] == "3"
    assert document["inputs"] == {"a": "-1", "b": "0"}
    assert document["seed"] == 0
    assert document["job"]["command"] == "two-torsion"


def test_descartes_checks_the_given_conic(capsys):
    assert main(["descartes", "0", "0", "0", "0", "1", "0"]) == EXIT_OK

    document = _stdout_document(capsys)
    assert document["verdict"] == "HOLDS"
    assert document["evidence"]["reports"][0]["real_roots"] == 9


@pytest.mark.parametrize("argv", [
    ["check-sos", "x^2+"],
    ["no-such-command"],
    ["descartes", "1", "0", "1"],
    ["descartes"],
    ["plot", "x^2+y^2-z^2"],
])
def test_usage_errors_exit_with_2(argv):
    assert main(argv) == EXIT_USAGE


@pytest.mark.parametrize("argv", [
    ["cubic-zoo", "x^2+y^2-z^2"],
    ["two-torsion", "0", "0"],
    ["classify-sextic", "x^4+y^4+z^4"],
])
def test_violated_preconditions_exit_with_3(argv):
    assert main(argv) == EXIT_PRECONDITION


def test_inputs_can_be_read_from_a_file(tmp_path, capsys):
    path = tmp_path / "cubic.txt"
    path.write_text("x*y*z\n", encoding="utf-8")

    assert main(["cubic-zoo", f"@{path}"]) == EXIT_OK

    document = _stdout_document(capsys)
    assert document["verdict"] == "three lines in general position"
    assert document["inputs"] == {"H": "x*y*z"}


def test_custom_variable_names(capsys):
    assert main(["cubic-zoo", "a*b*c", "--vars", "a,b,c"]) == EXIT_OK

    assert _stdout_document(capsys)["verdict"] == "three lines in general position"


def test_undecided_exit_code_depends_on_strictness(capsys):
    with patch.dict(jobs.COMMANDS, {"check-sos": lambda job: ("UNDECIDED", None, {})}):
        assert main(["check-sos", "x^2"]) == EXIT_UNDECIDED
        assert main(["check-sos", "x^2", "--lenient"]) == EXIT_OK
    capsys.readouterr()


def test_written_document_revalidates(tmp_path, capsys):
    document_path = tmp_path / "torsion.json"
    report_path = tmp_path / "report.json"

    assert main(["two-torsion", "1", "0", "--out", str(document_path)]) == EXIT_OK
    assert main(["revalidate", str(document_path), "--out", str(report_path)]) == EXIT_OK

    report = json.loads(report_path.read_text(encoding="utf-8"))
    assert report["valid"]
    assert report["evidence_matches"]
    assert capsys.readouterr().out == ""


def test_revalidate_rejects_other_json(tmp_path):
    path = tmp_path / "other.json"
    path.write_text("[1, 2]", encoding="utf-8")

    assert main(["revalidate", str(path)]) == EXIT_USAGE


def test_plot_writes_an_svg(tmp_path):
    path = tmp_path / "curves.svg"

    assert main(["plot", "x^2+y^2-z^2", "x*y", "--svg", str(path), "--resolution", "40"]) == 0
    assert path.read_text(encoding="utf-8").lstrip().startswith("<?xml")


def test_job_collects_the_options():
    args = build_parser().parse_args(
        ["lift-system", "y^4", "x^2+y^2-z^2", "--lift-degree", "2", "--seed", "5", "--lenient"]
    )

    job = job_from_args(args)

    assert job.inputs == {"F": "y^4", "G": "x^2+y^2-z^2"}
    assert job.parameters == {"lift_degree": 2}
    assert job.seed == 5
    assert not job.options.strict


def test_verify_paper_takes_the_random_conic_count():
    args = build_parser().parse_args(["verify-paper", "--items", "descartes",
                                      "--random-conics", "7"])

    assert job_from_args(args).options.descartes_random == 7


def test_other_commands_keep_the_default_conic_count():
    args = build_parser().parse_args(["check-sos", "x^2"])

    assert job_from_args(args).options.descartes_random == 1000


def test_cubic_zoo_passes_the_witness_flag(capsys):
    with patch("proton.stubborn.cli.jobs.cubic_zoo", wraps=jobs.cubic_zoo) as zoo_mock:
        assert main(["cubic-zoo", "x*y*z", "--check-witness"]) == EXIT_OK
        assert main(["cubic-zoo", "x*y*z"]) == EXIT_OK

    assert [call.kwargs["witness"] for call in zoo_mock.call_args_list] == [True, False]
    capsys.readouterr()
