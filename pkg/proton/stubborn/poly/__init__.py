"""
Exact polynomial arithmetic over rationals and quadratic towers.


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
from proton.stubborn.poly.field import FieldElem, sqrt  # noqa: F401
from proton.stubborn.poly.mpoly import MPoly  # noqa: F401
from proton.stubborn.poly.upoly import UPoly  # noqa: F401
from proton.stubborn.poly.parser import format_poly, parse_poly  # noqa: F401
