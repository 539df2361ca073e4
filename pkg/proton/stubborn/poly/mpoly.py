"""
Sparse multivariate polynomials over exact real scalars.


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
from collections import defaultdict
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

import numpy as np
from mpmath import iv

from proton.stubborn.exceptions import ChartMismatch
from proton.stubborn.poly.field import FieldElem

Monomial = Tuple[int, ...]

DEFAULT_NAMES = ("x", "y", "z", "w")


def grlex_key(monomial: Monomial) -> tuple:
    """Sort key of the graded lexicographic order (x > y > z)."""
    return (sum(monomial), monomial)


def _add_exponents(first: Monomial, second: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(first, second))


def _divides(divisor: Monomial, monomial: Monomial) -> bool:
    return all(a <= b for a, b in zip(divisor, monomial))


def default_names(nvars: int) -> Tuple[str, ...]:
    """Variable names used when printing without caller supplied names."""
    if nvars <= len(DEFAULT_NAMES):
        return DEFAULT_NAMES[:nvars]
    return tuple(f"x{i}" for i in range(nvars))


class MPoly:
    """Polynomial in ``nvars`` variables stored as monomial -> coefficient.

    Instances are treated as immutable: every operation returns a new
    polynomial and zero coefficients are never stored."""
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[Monomial, object]] = None):
        self.nvars = nvars
        clean: Dict[Monomial, FieldElem] = {}
        for monomial, coefficient in (terms or {}).items():
            monomial = tuple(int(e) for e in monomial)
            if len(monomial) != nvars or min(monomial, default=0) < 0:
                raise ValueError(f"Bad exponent vector {monomial} for {nvars} variables")
            coefficient = FieldElem.coerce(coefficient)
            if not coefficient.is_zero():
                clean[monomial] = coefficient
        self.terms = clean

    @classmethod
    def _from_terms(cls, nvars: int, terms: Dict[Monomial, FieldElem]) -> "MPoly":
        poly = cls.__new__(cls)
        poly.nvars = nvars
        poly.terms = {m: c for m, c in terms.items() if not c.is_zero()}
        return poly

    @classmethod
    def _from_fractions(cls, nvars: int, terms: Mapping[Monomial, Fraction]) -> "MPoly":
        poly = cls.__new__(cls)
        poly.nvars = nvars
        poly.terms = {m: FieldElem._make((), (c,)) for m, c in terms.items() if c}
        return poly

    @classmethod
    def zero(cls, nvars: int) -> "MPoly":
        return cls._from_terms(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value) -> "MPoly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MPoly":
        exponents = [0] * nvars
        exponents[index] = 1
        return cls(nvars, {tuple(exponents): 1})

    @classmethod
    def monomial(cls, nvars: int, exponents: Sequence[int], coefficient=1) -> "MPoly":
        return cls(nvars, {tuple(exponents): coefficient})

    @classmethod
    def gens(cls, nvars: int) -> Tuple["MPoly", ...]:
        """All variables of the ring, in order."""
        return tuple(cls.variable(nvars, i) for i in range(nvars))

    # Structure

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def degree_in(self, index: int) -> int:
        return max((m[index] for m in self.terms), default=-1)

    def order(self) -> int:
        """Lowest total degree of a term; -1 for the zero polynomial."""
        return min((sum(m) for m in self.terms), default=-1)

    @property
    def homogeneous_degree(self) -> Optional[int]:
        """Common degree of all terms, or None when not homogeneous."""
        degrees = {sum(m) for m in self.terms}
        return degrees.pop() if len(degrees) == 1 else None

    def is_homogeneous(self) -> bool:
        return self.homogeneous_degree is not None

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.terms.values())

    def is_constant(self) -> bool:
        return self.degree <= 0

    def coefficient(self, monomial: Sequence[int]) -> FieldElem:
        return self.terms.get(tuple(monomial), FieldElem(0))

    def constant_term(self) -> FieldElem:
        return self.coefficient((0,) * self.nvars)

    def sorted_terms(self) -> list:
        """Terms in decreasing graded lexicographic order."""
        return sorted(self.terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    @property
    def leading_monomial(self) -> Monomial:
        return max(self.terms, key=grlex_key)

    @property
    def leading_coefficient(self) -> FieldElem:
        return self.terms[self.leading_monomial]

    def variables(self) -> Tuple[int, ...]:
        """Indices of the variables that actually occur."""
        return tuple(i for i in range(self.nvars) if any(m[i] for m in self.terms))

    def rational_terms(self) -> Dict[Monomial, Fraction]:
        """Coefficients as fractions; raises ValueError on tower coefficients."""
        return {m: c.to_fraction() for m, c in self.terms.items()}

    # Ring operations

    def _coerce(self, other) -> Optional["MPoly"]:
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"Mixing {self.nvars} and {other.nvars} variables")
            return other
        if isinstance(other, (FieldElem, int, Fraction)):
            return MPoly.constant(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for monomial, coefficient in other.terms.items():
            if monomial in terms:
                terms[monomial] = terms[monomial] + coefficient
            else:
                terms[monomial] = coefficient
        return MPoly._from_terms(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._from_terms(self.nvars, {m: -c for m, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, factor) -> "MPoly":
        factor = FieldElem.coerce(factor)
        return MPoly._from_terms(self.nvars, {m: c * factor for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (FieldElem, int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_rational() and other.is_rational():
            rational: Dict[Monomial, Fraction] = defaultdict(Fraction)
            right = [(m, c.coords[0]) for m, c in other.terms.items()]
            for m1, c1 in self.terms.items():
                a = c1.coords[0]
                for m2, b in right:
                    rational[_add_exponents(m1, m2)] += a * b
            return MPoly._from_fractions(self.nvars, rational)

        terms: Dict[Monomial, FieldElem] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                monomial = _add_exponents(m1, m2)
                product = c1 * c2
                terms[monomial] = terms[monomial] + product if monomial in terms else product
        return MPoly._from_terms(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result, base = MPoly.constant(self.nvars, 1), self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            other = MPoly.constant(self.nvars, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.nvars == other.nvars and (self - other).is_zero()

    def __hash__(self):
        return hash((self.nvars, frozenset((m, hash(c)) for m, c in self.terms.items())))

    def exact_div(self, divisor: "MPoly") -> "MPoly":
        """Quotient of an exact division; raises ValueError if it leaves a remainder."""
        if divisor.is_zero():
            raise ZeroDivisionError("MPoly division by zero")
        lead, lead_coefficient = divisor.leading_monomial, divisor.leading_coefficient
        inverse = lead_coefficient.inverse()
        remainder, quotient = self, {}
        while not remainder.is_zero():
            monomial = remainder.leading_monomial
            if not _divides(lead, monomial):
                raise ValueError("Polynomial division is not exact")
            shift = tuple(a - b for a, b in zip(monomial, lead))
            coefficient = remainder.terms[monomial] * inverse
            quotient[shift] = coefficient
            remainder = remainder - divisor.shift(shift, coefficient)
        return MPoly._from_terms(self.nvars, quotient)

    def divides(self, other: "MPoly") -> bool:
        try:
            other.exact_div(self)
        except ValueError:
            return False
        return True

    def shift(self, exponents: Sequence[int], coefficient=1) -> "MPoly":
        """Product with a single term."""
        coefficient = FieldElem.coerce(coefficient)
        return MPoly._from_terms(self.nvars, {
            _add_exponents(m, exponents): c * coefficient for m, c in self.terms.items()
        })

    def monic(self) -> "MPoly":
        return self.scale(self.leading_coefficient.inverse())

    def primitive(self) -> "MPoly":
        """Positive rational multiple with coprime integer coefficients."""
        terms = self.rational_terms()
        if not terms:
            return self
        denominator = 1
        for value in terms.values():
            denominator = denominator * value.denominator // gcd(denominator, value.denominator)
        content = 0
        for value in terms.values():
            content = gcd(content, abs(value.numerator * (denominator // value.denominator)))
        return self.scale(Fraction(denominator, content))

    # Calculus and substitution

    def derivative(self, index: int) -> "MPoly":
        terms = {}
        for monomial, coefficient in self.terms.items():
            power = monomial[index]
            if power:
                lowered = list(monomial)
                lowered[index] -= 1
                terms[tuple(lowered)] = coefficient * power
        return MPoly._from_terms(self.nvars, terms)

    def gradient(self) -> Tuple["MPoly", ...]:
        return tuple(self.derivative(i) for i in range(self.nvars))

    def compose(self, images: Sequence["MPoly"]) -> "MPoly":
        """Substitutes ``images[i]`` for variable ``i``; the images share a ring."""
        if len(images) != self.nvars:
            raise ValueError(f"Expected {self.nvars} images, got {len(images)}")
        target = images[0].nvars if images else 0
        powers = [[MPoly.constant(target, 1)] for _ in images]
        result = MPoly.zero(target)
        for monomial, coefficient in self.sorted_terms():
            term = MPoly.constant(target, coefficient)
            for index, power in enumerate(monomial):
                if not power:
                    continue
                cache = powers[index]
                while len(cache) <= power:
                    cache.append(cache[-1] * images[index])
                term = term * cache[power]
            result = result + term
        return result

    def substitute(self, mapping: Mapping[int, object]) -> "MPoly":
        """Replaces the listed variables by scalars or polynomials of the same ring."""
        images = []
        for index in range(self.nvars):
            value = mapping.get(index)
            if value is None:
                images.append(MPoly.variable(self.nvars, index))
            elif isinstance(value, MPoly):
                images.append(value)
            else:
                images.append(MPoly.constant(self.nvars, value))
        return self.compose(images)

    def linear_change(self, matrix: Sequence[Sequence[object]]) -> "MPoly":
        """Returns f(M·X): variable ``i`` becomes the form ``sum_j M[i][j] X_j``."""
        images = [
            MPoly(self.nvars, {
                tuple(1 if k == j else 0 for k in range(self.nvars)): entry
                for j, entry in enumerate(row)
            })
            for row in matrix
        ]
        return self.compose(images)

    def translate(self, point: Sequence[object]) -> "MPoly":
        """Returns f(X + point)."""
        images = [
            MPoly.variable(self.nvars, i) + FieldElem.coerce(value)
            for i, value in enumerate(point)
        ]
        return self.compose(images)

    def evaluate(self, point: Sequence[object]) -> FieldElem:
        values = [FieldElem.coerce(v) for v in point]
        cache: Dict[Tuple[int, int], FieldElem] = {}
        total = FieldElem(0)
        for monomial, coefficient in self.terms.items():
            term = coefficient
            for index, power in enumerate(monomial):
                if power:
                    key = (index, power)
                    if key not in cache:
                        cache[key] = values[index] ** power
                    term = term * cache[key]
            total = total + term
        return total

    def evaluate_interval(self, point: Sequence[object]):
        """Encloses f(point) for interval arguments at the current precision."""
        total = iv.mpf(0)
        for monomial, coefficient in self.terms.items():
            term = coefficient.interval()
            for value, power in zip(point, monomial):
                if power:
                    term = term * value ** power
            total = total + term
        return total

    def numeric_arrays(self) -> Tuple[np.ndarray, np.ndarray]:
        """Exponent matrix and float coefficients, for presentation and hints only."""
        monomials = list(self.terms)
        exponents = np.array(monomials, dtype=float).reshape(len(monomials), self.nvars)
        coefficients = np.array([float(self.terms[m]) for m in monomials])
        return exponents, coefficients

    # Charts

    def dehomogenize(self, index: int) -> "MPoly":
        """Sets variable ``index`` to 1 and drops it from the ring."""
        terms: Dict[Monomial, FieldElem] = {}
        for monomial, coefficient in self.terms.items():
            reduced = monomial[:index] + monomial[index + 1:]
            terms[reduced] = terms[reduced] + coefficient if reduced in terms else coefficient
        return MPoly._from_terms(self.nvars - 1, terms)

    def homogenize(self, degree: Optional[int] = None, index: Optional[int] = None) -> "MPoly":
        """Inserts a homogenizing variable at ``index`` (default: last)."""
        degree = self.degree if degree is None else degree
        if degree < self.degree:
            raise ChartMismatch(f"Cannot homogenize degree {self.degree} to degree {degree}")
        index = self.nvars if index is None else index
        terms = {
            monomial[:index] + (degree - sum(monomial),) + monomial[index:]: coefficient
            for monomial, coefficient in self.terms.items()
        }
        return MPoly._from_terms(self.nvars + 1, terms)

    def homogeneous_part(self, degree: int) -> "MPoly":
        return MPoly._from_terms(
            self.nvars, {m: c for m, c in self.terms.items() if sum(m) == degree}
        )

    def coefficients_in(self, index: int) -> Dict[int, "MPoly"]:
        """Coefficients with respect to variable ``index``, as polynomials without it."""
        grouped: Dict[int, Dict[Monomial, FieldElem]] = defaultdict(dict)
        for monomial, coefficient in self.terms.items():
            reduced = monomial[:index] + (0,) + monomial[index + 1:]
            grouped[monomial[index]][reduced] = coefficient
        return {power: MPoly._from_terms(self.nvars, terms) for power, terms in grouped.items()}

    def drop_variable(self, index: int) -> "MPoly":
        """Removes a variable that does not occur."""
        if any(m[index] for m in self.terms):
            raise ValueError(f"Variable {index} occurs in the polynomial")
        return self.dehomogenize(index)

    def add_variable(self, index: Optional[int] = None) -> "MPoly":
        """Embeds the polynomial in a ring with one more (unused) variable."""
        index = self.nvars if index is None else index
        return MPoly._from_terms(self.nvars + 1, {
            m[:index] + (0,) + m[index:]: c for m, c in self.terms.items()
        })

    def to_upoly(self, index: int = 0):
        """The polynomial as a univariate one in variable ``index``."""
        from proton.stubborn.poly.upoly import UPoly  # pylint: disable=import-outside-toplevel
        coefficients: Dict[int, FieldElem] = {}
        for monomial, coefficient in self.terms.items():
            if any(e for i, e in enumerate(monomial) if i != index):
                raise ValueError("Polynomial is not univariate in the requested variable")
            coefficients[monomial[index]] = coefficient
        size = max(coefficients, default=-1) + 1
        return UPoly([coefficients.get(i, FieldElem(0)) for i in range(size)])

    @classmethod
    def from_upoly(cls, upoly, nvars: int = 1, index: int = 0) -> "MPoly":
        terms = {}
        for power, coefficient in enumerate(upoly.coeffs):
            exponents = [0] * nvars
            exponents[index] = power
            terms[tuple(exponents)] = coefficient
        return cls._from_terms(nvars, terms)

    def format(self, names: Optional[Iterable[str]] = None) -> str:
        # pylint: disable=import-outside-toplevel
        from proton.stubborn.poly.parser import format_poly
        return format_poly(self, names)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"MPoly({self.nvars}, {self.format()!r})"