"""
Re-validation of serialized verdicts.


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


A verdict document is re-validated twice over: its command is run again with
the recorded seed and options and the fresh evidence must match byte for
byte, and every certificate embedded in the evidence is rebuilt from its
rationals and re-checked on its own.
"""
import json
import logging
from dataclasses import dataclass, field
from typing import Callable, Iterator, List, Optional, Tuple

from packaging.version import InvalidVersion, Version

from proton.stubborn import __version__
from proton.stubborn.exceptions import StubbornError
from proton.stubborn.sos.certificates import certificate_from_dict

logger = logging.getLogger(__name__)

CERTIFICATE_TYPES = ("sos", "not_sos")


def canonical_json(value) -> str:
    """The byte-level form used to compare evidence."""
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def embedded_certificates(value, path: str = "evidence") -> Iterator[Tuple[str, dict]]:
    """Every serialized certificate found in a JSON tree, with its path."""
    if isinstance(value, dict):
        if value.get("type") in CERTIFICATE_TYPES and ("gram" in value or "functional" in value):
            yield path, value
            return
        for key, item in value.items():
            yield from embedded_certificates(item, f"{path}.{key}")
    elif isinstance(value, list):
        for index, item in enumerate(value):
            yield from embedded_certificates(item, f"{path}[{index}]")


@dataclass
class RevalidationReport:  # pylint: disable=missing-class-docstring
    command: str
    verdict_matches: bool = False
    evidence_matches: bool = False
    certificates: List[dict] = field(default_factory=list)
    version_note: Optional[str] = None
    mismatches: List[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return (self.verdict_matches and self.evidence_matches
                and all(c["valid"] for c in self.certificates))

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "valid": self.valid,
            "verdict_matches": self.verdict_matches,
            "evidence_matches": self.evidence_matches,
            "certificates": self.certificates,
            "version_note": self.version_note,
            "mismatches": self.mismatches,
        }


def _version_note(recorded: Optional[str]) -> Optional[str]:
    if recorded is None:
        return "the document records no version"
    try:
        then, now = Version(recorded), Version(__version__)
    except InvalidVersion:
        return f"unreadable version {recorded!r}"
    if then.major != now.major:
        logger.warning(f"Document written by {then}, re-validating with {now}")
        return f"written by {then}, re-validated by {now}"
    return None


def check_certificates(evidence) -> List[dict]:
    """Rebuilds and verifies every embedded certificate."""
    results = []
    for path, data in embedded_certificates(evidence):
        try:
            valid = certificate_from_dict(data).verify()
            error = None
        except (StubbornError, KeyError, ValueError) as exc:
            valid, error = False, str(exc)
        entry = {"path": path, "type": data.get("type"), "valid": valid}
        if error:
            entry["error"] = error
        results.append(entry)
        logger.debug(f"Certificate at {path}: {'valid' if valid else 'INVALID'}")
    return results


def revalidate(document: dict, rerun: Callable[[dict], dict]) -> RevalidationReport:
    """
    Re-runs a verdict document and re-checks its certificates.

    :param document: a JSON verdict as written by the command line.
    :param rerun: runs the recorded job and returns a fresh document.
    """
    report = RevalidationReport(command=document.get("command", "?"))
    report.version_note = _version_note(document.get("version"))
    report.certificates = check_certificates(document.get("evidence", {}))

    fresh = rerun(document["job"])
    for key in ("verdict", "basis"):
        if fresh.get(key) != document.get(key):
            report.mismatches.append(f"{key}: {document.get(key)!r} != {fresh.get(key)!r}")
    report.verdict_matches = not report.mismatches
    report.evidence_matches = (
        canonical_json(fresh.get("evidence")) == canonical_json(document.get("evidence"))
    )
    if not report.evidence_matches:
        report.mismatches.append("evidence differs from a fresh run")
    logger.info(f"Re-validated {report.command}: {'valid' if report.valid else 'INVALID'}")
    return report
