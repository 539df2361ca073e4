"""
Real 2-torsion of elliptic curves in short Weierstrass form.


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
from dataclasses import dataclass
from fractions import Fraction

from proton.stubborn.exceptions import SingularCurve
from proton.stubborn.poly.upoly import UPoly
from proton.stubborn.roots.profile import root_profile
from proton.stubborn.curves.points import format_fraction

logger = logging.getLogger(__name__)


@dataclass
class TwoTorsionReport:
    """Nontrivial real 2-torsion points (r, 0) of y² = x³ + a·x + b."""
    a: Fraction
    b: Fraction
    discriminant: Fraction
    real_nontrivial_count: int

    def to_dict(self) -> dict:
        return {
            "curve": f"y^2 = x^3 + ({format_fraction(self.a)})*x + ({format_fraction(self.b)})",
            "discriminant": format_fraction(self.discriminant),
            "real_nontrivial_count": self.real_nontrivial_count,
        }


def two_torsion_real(a, b) -> TwoTorsionReport:
    a, b = Fraction(a), Fraction(b)
    discriminant = -16 * (4 * a ** 3 + 27 * b ** 2)
    if discriminant == 0:
        raise SingularCurve(f"y^2 = x^3 + {a}x + {b} is singular")
    count = root_profile(UPoly([b, a, 0, 1])).distinct_real
    logger.debug(f"Weierstrass cubic ({a}, {b}) has {count} real 2-torsion points")
    return TwoTorsionReport(a, b, discriminant, count)
