"""
Real algebraic numbers given by a defining polynomial and an isolating interval.


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
from fractions import Fraction
from typing import Optional

from mpmath import iv

from proton.stubborn.exceptions import UnresolvedBox
from proton.stubborn.poly import field
from proton.stubborn.poly.field import (
    FieldElem, base_precision, fraction_interval, interval_precision
)
from proton.stubborn.poly.upoly import UPoly

MAX_BISECTIONS = 4000


class AlgebraicReal:
    """The unique root of ``poly`` in the open interval (low, high).

    ``poly`` is squarefree and changes sign across the interval. A degenerate
    interval low == high denotes the rational root ``low``. When the number is
    known in closed form (rational, or a root of a quadratic) ``exact`` holds
    it as a FieldElem."""

    def __init__(self, poly: UPoly, low: Fraction, high: Fraction,
                 exact: Optional[FieldElem] = None):
        self.poly = poly
        self.low = Fraction(low)
        self.high = Fraction(high)
        if exact is None and self.low == self.high:
            exact = FieldElem(self.low)
        if exact is None:
            exact = _closed_form(poly, self.low, self.high)
        self.exact = exact

    @classmethod
    def from_exact(cls, value) -> "AlgebraicReal":
        value = FieldElem.coerce(value)
        if value.is_rational():
            rational = value.to_fraction()
            return cls(UPoly([-rational, 1]), rational, rational, value)
        with interval_precision(base_precision()):
            box = value.interval()
            low = _floor_fraction(box)
            high = _ceil_fraction(box)
        return cls(UPoly([-value, 1]), low - 1, high + 1, value)

    def is_exact(self) -> bool:
        return self.exact is not None

    def is_rational(self) -> bool:
        return self.exact is not None and self.exact.is_rational()

    def _low_sign(self) -> int:
        return self.poly.sign_at(self.low)

    def refine(self, width: Fraction = Fraction(1, 1 << 20)) -> "AlgebraicReal":
        """Same number with an isolating interval narrower than ``width``."""
        if self.low == self.high:
            return self
        low, high = self.low, self.high
        low_sign = self._low_sign()
        while high - low >= width:
            middle = (low + high) / 2
            sign = self.poly.sign_at(middle)
            if sign == 0:
                return AlgebraicReal(self.poly, middle, middle)
            if sign == low_sign:
                low = middle
            else:
                high = middle
        return AlgebraicReal(self.poly, low, high, self.exact)

    def sign_of(self, poly: UPoly) -> int:
        """Exact sign of ``poly`` at this number."""
        if poly.is_zero():
            return 0
        if self.exact is not None:
            return poly.evaluate(self.exact).sign()
        common = self.poly.gcd(poly)
        if common.degree > 0 and common.sign_at(self.low) * common.sign_at(self.high) < 0:
            return 0

        low, high = self.low, self.high
        low_sign = self._low_sign()
        for step in range(MAX_BISECTIONS):
            bits = base_precision() + 2 * step
            with interval_precision(bits):
                box = iv.mpf([fraction_interval(low).a, fraction_interval(high).b])
                value = poly.evaluate_interval(box)
                if value.a > 0:
                    return 1
                if value.b < 0:
                    return -1
            middle = (low + high) / 2
            sign = self.poly.sign_at(middle)
            if sign == 0:
                return poly.sign_at(middle)
            if sign == low_sign:
                low = middle
            else:
                high = middle
        raise UnresolvedBox("Sign at an algebraic number could not be certified")

    def compare(self, other) -> int:
        """-1, 0 or 1 as self is below, equal to or above ``other``."""
        if not isinstance(other, AlgebraicReal):
            other = AlgebraicReal.from_exact(other)
        if self.exact is not None and other.exact is not None:
            return (self.exact - other.exact).sign()
        if self.exact is not None:
            return -other.compare(self)
        if other.exact is not None:
            return self.sign_of(UPoly([-other.exact, 1]))
        common = self.poly.gcd(other.poly)
        if common.degree > 0:
            low, high = max(self.low, other.low), min(self.high, other.high)
            if low < high and common.sign_at(low) * common.sign_at(high) < 0 \
                    and self.poly.sign_at(low) * self.poly.sign_at(high) < 0 \
                    and other.poly.sign_at(low) * other.poly.sign_at(high) < 0:
                return 0
        first, second = self, other
        for _ in range(MAX_BISECTIONS):
            if first.high <= second.low:
                return -1
            if second.high <= first.low:
                return 1
            width = max(first.high - first.low, second.high - second.low) / 2
            if width == 0:
                return (first.low > second.low) - (first.low < second.low)
            first, second = first.refine(width), second.refine(width)
            if first.exact is not None and second.exact is not None:
                return (first.exact - second.exact).sign()
        raise UnresolvedBox("Algebraic numbers could not be separated")

    def midpoint(self) -> Fraction:
        return (self.low + self.high) / 2

    def interval(self):
        """Enclosure at the current interval precision."""
        if self.exact is not None:
            return self.exact.interval()
        return iv.mpf([fraction_interval(self.low).a, fraction_interval(self.high).b])

    def __float__(self):
        if self.exact is not None:
            return float(self.exact)
        return float(self.refine(Fraction(1, 1 << 60)).midpoint())

    def __repr__(self):
        if self.exact is not None:
            return f"AlgebraicReal({self.exact})"
        return f"AlgebraicReal(root of degree {self.poly.degree} in ({self.low}, {self.high}))"


def _floor_fraction(box) -> Fraction:
    return Fraction(int(float(box.a)) - 1)


def _ceil_fraction(box) -> Fraction:
    return Fraction(int(float(box.b)) + 1)


def _closed_form(poly: UPoly, low: Fraction, high: Fraction) -> Optional[FieldElem]:
    """Exact value of the root for linear and quadratic defining polynomials."""
    if poly.degree == 1:
        return -poly[0] / poly[1]
    if poly.degree != 2:
        return None
    a, b, c = poly[2], poly[1], poly[0]
    discriminant = b * b - 4 * a * c
    if discriminant.sign() < 0:
        return None
    root = field.sqrt(discriminant)
    for candidate in ((-b + root) / (2 * a), (-b - root) / (2 * a)):
        if (candidate - low).sign() > 0 and (candidate - high).sign() < 0:
            return candidate
    return None
