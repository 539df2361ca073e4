"""
Verdicts of the stubbornness deciders and their evidence bundles.


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
from dataclasses import dataclass, field
from typing import Dict, List

STUBBORN = "STUBBORN"
NOT_STUBBORN = "NOT_STUBBORN"
SOS = "SOS"
UNDECIDED = "UNDECIDED"

# Which result a decided verdict rests on.
BASIS_REAL_ROOTED = "real-rooted at smooth points of a totally real curve"
BASIS_NONREAL_ZEROS = "nonreal zeros on a smooth curve"
BASIS_NEGATIVE = "negative somewhere"
BASIS_SOS = "sum of squares"
BASIS_SOS_MOD = "sum of squares modulo the curve"
BASIS_DELTA_LARGE = "real delta invariant at least nine"
BASIS_DELTA_SMALL = "real delta invariant at most eight"
BASIS_NONE = "none"


@dataclass
class StubbornVerdict:
    """Outcome of a decider with JSON-ready evidence.

    Every entry of ``evidence`` is the serialized form of an exact object
    (profile, delta tree, certificate, cell report), so a verdict can be
    written out and re-checked without the objects that produced it."""
    verdict: str
    basis: str = BASIS_NONE
    evidence: Dict[str, object] = field(default_factory=dict)
    undecided_reasons: List[str] = field(default_factory=list)

    @property
    def is_decided(self) -> bool:
        return self.verdict != UNDECIDED

    def undecided(self, reason: str) -> "StubbornVerdict":
        self.verdict = UNDECIDED
        self.basis = BASIS_NONE
        self.undecided_reasons.append(reason)
        return self

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "basis": self.basis,
            "evidence": self.evidence,
            "undecided_reasons": self.undecided_reasons,
        }
