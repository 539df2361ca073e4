"""
Real points of plane curves found by elimination.


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
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from proton.stubborn.poly.field import FieldElem, fraction_interval, interval_precision
from proton.stubborn.poly.mpoly import MPoly
from proton.stubborn.poly.upoly import UPoly
from proton.stubborn.roots.algebraic import AlgebraicReal

Change = List[List[Fraction]]

IDENTITY: Change = [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]


def format_fraction(value: Fraction) -> str:
    """Exact decimal-free form; whole numbers carry no denominator."""
    return str(Fraction(value))


def reduce_mod(poly: UPoly, modulus: UPoly) -> UPoly:
    return poly % modulus if modulus.degree > 0 else UPoly()


def branch_coordinates(change: Change, ordinate: UPoly, modulus: UPoly) -> List[UPoly]:
    """Original homogeneous coordinates M·(x, φ(x), 1) as polynomials in x mod g."""
    abscissa = UPoly([0, 1])
    return [
        reduce_mod(abscissa.scale(row[0]) + ordinate.scale(row[1]) + UPoly([row[2]]), modulus)
        for row in change
    ]


def evaluate_on_branch(form: MPoly, coordinates: Sequence[UPoly], modulus: UPoly) -> UPoly:
    """form(coordinates) reduced modulo ``modulus``."""
    cache: Dict[Tuple[int, int], UPoly] = {}
    total = UPoly()
    for monomial, coefficient in form.terms.items():
        term = UPoly([coefficient])
        for index, power in enumerate(monomial):
            if not power:
                continue
            key = (index, power)
            if key not in cache:
                cache[key] = _power_mod(coordinates[index], power, modulus)
            term = reduce_mod(term * cache[key], modulus)
        total = total + term
    return reduce_mod(total, modulus)


def _power_mod(base: UPoly, exponent: int, modulus: UPoly) -> UPoly:
    result, square = UPoly([1]), base
    while exponent:
        if exponent & 1:
            result = reduce_mod(result * square, modulus)
        exponent >>= 1
        if exponent:
            square = reduce_mod(square * square, modulus)
    return result


def _normalize(coordinates: List[FieldElem]) -> List[FieldElem]:
    for value in reversed(coordinates):
        if not value.is_zero():
            inverse = value.inverse()
            return [c * inverse for c in coordinates]
    return coordinates


@dataclass
class CurvePoint:
    """A real point [M·(α, φ(α), 1)] of the projective plane.

    ``abscissa`` is α, a root of the squarefree ``modulus``; ``ordinate`` is
    φ, reduced modulo ``modulus``; ``change`` maps the working coordinates
    back to the caller's coordinates."""
    abscissa: AlgebraicReal
    modulus: UPoly
    ordinate: UPoly
    change: Change

    @property
    def is_exact(self) -> bool:
        return self.abscissa.exact is not None

    def exact_coordinates(self) -> Optional[List[FieldElem]]:
        """Projective coordinates scaled so the last nonzero one is 1, if exact."""
        if self.abscissa.exact is None:
            return None
        x = self.abscissa.exact
        y = self.ordinate.evaluate(x)
        raw = [row[0] * x + row[1] * y + row[2] for row in self.change]
        return _normalize([FieldElem.coerce(v) for v in raw])

    def _branch_value(self, form: MPoly) -> UPoly:
        coordinates = branch_coordinates(self.change, self.ordinate, self.modulus)
        return evaluate_on_branch(form, coordinates, self.modulus)

    def sign_of(self, form: MPoly) -> int:
        """Exact sign of ``form`` at the representative M·(α, φ(α), 1)."""
        if self.abscissa.exact is not None:
            x = self.abscissa.exact
            y = self.ordinate.evaluate(x)
            point = [row[0] * x + row[1] * y + row[2] for row in self.change]
            return form.evaluate(point).sign()
        return self.abscissa.sign_of(self._branch_value(form))

    def vanishes(self, form: MPoly) -> bool:
        return self.sign_of(form) == 0

    def is_singular_on(self, form: MPoly) -> bool:
        return all(self.vanishes(partial) for partial in form.gradient())

    def approx(self) -> List[float]:
        """Floating point coordinates, normalized like ``exact_coordinates``."""
        exact = self.exact_coordinates()
        if exact is not None:
            return [float(v) for v in exact]
        root = self.abscissa.refine(Fraction(1, 1 << 60))
        with interval_precision(96):
            x = root.interval()
            y = self.ordinate.evaluate_interval(x)
            raw = [
                float((fraction_interval(row[0]) * x + fraction_interval(row[1]) * y
                       + fraction_interval(row[2])).mid)
                for row in self.change
            ]
        for value in reversed(raw):
            if abs(value) > 1e-12:
                return [v / value for v in raw]
        return raw

    def to_dict(self) -> dict:
        exact = self.exact_coordinates()
        return {
            "abscissa": {
                "low": format_fraction(self.abscissa.low),
                "high": format_fraction(self.abscissa.high),
                "poly": [str(c) for c in self.abscissa.poly.coeffs],
            },
            "modulus": [str(c) for c in self.modulus.coeffs],
            "ordinate": [str(c) for c in self.ordinate.coeffs],
            "change": [[format_fraction(v) for v in row] for row in self.change],
            "exact": None if exact is None else [str(v) for v in exact],
            "approx": [round(v, 12) for v in self.approx()],
        }
