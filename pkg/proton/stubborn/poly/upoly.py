"""
Dense univariate polynomials over exact real scalars.


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
from math import gcd, lcm
from typing import List, Sequence, Tuple

from mpmath import iv

from proton.stubborn.poly.field import FieldElem


class UPoly:
    """Univariate polynomial, coefficients stored from the constant term up."""
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[object] = ()):
        values = [FieldElem.coerce(c) for c in coeffs]
        while values and values[-1].is_zero():
            values.pop()
        self.coeffs: Tuple[FieldElem, ...] = tuple(values)

    @classmethod
    def _raw(cls, coeffs: List[FieldElem]) -> "UPoly":
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        poly = cls.__new__(cls)
        poly.coeffs = tuple(coeffs)
        return poly

    @classmethod
    def monomial(cls, degree: int, coefficient=1) -> "UPoly":
        return cls([0] * degree + [coefficient])

    @classmethod
    def x(cls) -> "UPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> FieldElem:
        return self.coeffs[-1] if self.coeffs else FieldElem(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return self.degree <= 0

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coeffs)

    def to_fractions(self) -> List[Fraction]:
        return [c.to_fraction() for c in self.coeffs]

    def __getitem__(self, index: int) -> FieldElem:
        return self.coeffs[index] if 0 <= index < len(self.coeffs) else FieldElem(0)

    def _coerce(self, other):
        if isinstance(other, UPoly):
            return other
        if isinstance(other, (FieldElem, int, Fraction)):
            return UPoly([other])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return UPoly._raw([self[i] + other[i] for i in range(size)])

    __radd__ = __add__

    def __neg__(self):
        return UPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor) -> "UPoly":
        factor = FieldElem.coerce(factor)
        return UPoly._raw([c * factor for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (FieldElem, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, UPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UPoly()
        if self.is_rational() and other.is_rational():
            left, right = self.to_fractions(), other.to_fractions()
            product = [Fraction(0)] * (len(left) + len(right) - 1)
            for i, a in enumerate(left):
                if a:
                    for j, b in enumerate(right):
                        product[i + j] += a * b
            return UPoly._raw([FieldElem._make((), (c,)) for c in product])
        product = [FieldElem(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                product[i + j] = product[i + j] + a * b
        return UPoly._raw(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result, base = UPoly([1]), self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(tuple(hash(c) for c in self.coeffs))

    def __divmod__(self, divisor: "UPoly"):
        if divisor.is_zero():
            raise ZeroDivisionError("UPoly division by zero")
        remainder = list(self.coeffs)
        shift = len(remainder) - len(divisor.coeffs)
        if shift < 0:
            return UPoly(), self
        inverse = divisor.lc.inverse()
        quotient = [FieldElem(0)] * (shift + 1)
        for k in range(shift, -1, -1):
            coefficient = remainder[k + len(divisor.coeffs) - 1] * inverse
            quotient[k] = coefficient
            if coefficient.is_zero():
                continue
            for j, d in enumerate(divisor.coeffs):
                remainder[k + j] = remainder[k + j] - coefficient * d
        return UPoly._raw(quotient), UPoly._raw(remainder[:len(divisor.coeffs) - 1])

    def __floordiv__(self, divisor: "UPoly") -> "UPoly":
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: "UPoly") -> "UPoly":
        return divmod(self, divisor)[1]

    def exact_div(self, divisor: "UPoly") -> "UPoly":
        quotient, remainder = divmod(self, divisor)
        if not remainder.is_zero():
            raise ValueError("Polynomial division is not exact")
        return quotient

    def monic(self) -> "UPoly":
        return self.scale(self.lc.inverse()) if self.coeffs else self

    def primitive(self) -> "UPoly":
        """Positive rational multiple with coprime integer coefficients.

        Tower polynomials are divided by the absolute value of their leading
        coefficient instead. Either way the sign of every value is preserved."""
        if self.is_zero():
            return self
        if not self.is_rational():
            return self.scale(abs(self.lc).inverse())
        values = self.to_fractions()
        denominator = lcm(*(v.denominator for v in values))
        content = 0
        for value in values:
            content = gcd(content, value.numerator * (denominator // value.denominator))
        return self.scale(Fraction(denominator, abs(content)))

    def gcd(self, other: "UPoly") -> "UPoly":
        """Monic greatest common divisor."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, (a % b).primitive()
        return a.monic()

    def extended_gcd(self, other: "UPoly") -> Tuple["UPoly", "UPoly", "UPoly"]:
        """Returns (g, s, t) with s·self + t·other = g, g monic."""
        r0, r1 = self, other
        s0, s1 = UPoly([1]), UPoly()
        t0, t1 = UPoly(), UPoly([1])
        while not r1.is_zero():
            quotient, remainder = divmod(r0, r1)
            r0, r1 = r1, remainder
            s0, s1 = s1, s0 - quotient * s1
            t0, t1 = t1, t0 - quotient * t1
        inverse = r0.lc.inverse()
        return r0.scale(inverse), s0.scale(inverse), t0.scale(inverse)

    def inverse_mod(self, modulus: "UPoly") -> "UPoly":
        """Inverse modulo ``modulus``; raises ZeroDivisionError if not invertible."""
        g, s, _ = (self % modulus).extended_gcd(modulus)
        if g.degree != 0:
            raise ZeroDivisionError("Polynomial is not invertible modulo the modulus")
        return s % modulus

    def derivative(self) -> "UPoly":
        return UPoly._raw([c * i for i, c in enumerate(self.coeffs)][1:])

    def squarefree_part(self) -> "UPoly":
        if self.degree <= 0:
            return self
        return self.exact_div(self.gcd(self.derivative())).monic()

    def squarefree_decomposition(self) -> List[Tuple["UPoly", int]]:
        """Yun's gcd chain: monic coprime squarefree ``a_i`` with f = lc·∏ a_i^i."""
        if self.degree <= 0:
            return []
        derivative = self.derivative()
        common = self.gcd(derivative)
        b = self.exact_div(common)
        c = derivative.exact_div(common)
        d = c - b.derivative()
        factors, multiplicity = [], 1
        while b.degree > 0:
            a = b.gcd(d)
            b = b.exact_div(a)
            c = d.exact_div(a)
            d = c - b.derivative()
            if a.degree > 0:
                factors.append((a.monic(), multiplicity))
            multiplicity += 1
        return factors

    def __call__(self, value):
        return self.evaluate(value)

    def evaluate(self, value) -> FieldElem:
        """Horner evaluation at an exact scalar."""
        value = FieldElem.coerce(value)
        result = FieldElem(0)
        for coefficient in reversed(self.coeffs):
            result = result * value + coefficient
        return result

    def evaluate_fraction(self, value: Fraction) -> Fraction:
        """Horner evaluation of a rational polynomial at a rational point."""
        result = Fraction(0)
        for coefficient in reversed(self.coeffs):
            result = result * value + coefficient.to_fraction()
        return result

    def sign_at(self, value) -> int:
        if self.is_rational() and isinstance(value, (int, Fraction)):
            result = self.evaluate_fraction(Fraction(value))
            return (result > 0) - (result < 0)
        return self.evaluate(value).sign()

    def sign_at_infinity(self, direction: int = 1) -> int:
        """Sign for large arguments of the given sign."""
        if self.is_zero():
            return 0
        sign = self.lc.sign()
        return sign if direction > 0 or self.degree % 2 == 0 else -sign

    def evaluate_interval(self, value):
        """Encloses the value at an interval argument, at the current precision."""
        result = iv.mpf(0)
        for coefficient in reversed(self.coeffs):
            result = result * value + coefficient.interval()
        return result

    def compose(self, inner: "UPoly") -> "UPoly":
        result = UPoly()
        for coefficient in reversed(self.coeffs):
            result = result * inner + UPoly([coefficient])
        return result

    def shift(self, offset) -> "UPoly":
        """Returns p(t + offset)."""
        return self.compose(UPoly([offset, 1]))

    def scale_variable(self, factor) -> "UPoly":
        """Returns p(factor·t)."""
        factor = FieldElem.coerce(factor)
        power, coefficients = FieldElem(1), []
        for coefficient in self.coeffs:
            coefficients.append(coefficient * power)
            power = power * factor
        return UPoly._raw(coefficients)

    def reverse(self) -> "UPoly":
        """Returns t^deg·p(1/t)."""
        return UPoly(list(reversed(self.coeffs)))

    def trailing_order(self) -> int:
        """Multiplicity of 0 as a root."""
        for index, coefficient in enumerate(self.coeffs):
            if not coefficient.is_zero():
                return index
        return -1

    def __str__(self):
        terms = []
        for power in range(self.degree, -1, -1):
            coefficient = self.coeffs[power]
            if coefficient.is_zero():
                continue
            monomial = "" if power == 0 else ("t" if power == 1 else f"t^{power}")
            terms.append(f"({coefficient})*{monomial}" if monomial else f"({coefficient})")
        return "+".join(terms) or "0"

    def __repr__(self):
        return f"UPoly({[str(c) for c in self.coeffs]})"
