"""
Factorization over the rationals, delegated to sympy.


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
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

import sympy

from proton.stubborn.exceptions import UnsupportedCoefficients, ZeroPolynomial
from proton.stubborn.poly.mpoly import MPoly
from proton.stubborn.poly.upoly import UPoly

logger = logging.getLogger(__name__)


@dataclass
class Factorization:
    """content · ∏ factor^multiplicity, factors irreducible over the rationals."""
    content: Fraction
    factors: List[Tuple[MPoly, int]] = field(default_factory=list)

    def expand(self) -> MPoly:
        nvars = self.factors[0][0].nvars if self.factors else 1
        product = MPoly.constant(nvars, self.content)
        for factor, multiplicity in self.factors:
            product = product * factor ** multiplicity
        return product

    def is_irreducible(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1


@lru_cache(maxsize=None)
def _symbols(nvars: int) -> tuple:
    return sympy.symbols(f"v0:{nvars}")


def _to_sympy(poly: MPoly) -> sympy.Poly:
    terms = {
        monomial: sympy.Rational(value.numerator, value.denominator)
        for monomial, value in poly.rational_terms().items()
    }
    return sympy.Poly.from_dict(terms, *_symbols(poly.nvars), domain=sympy.QQ)


def _rational(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _from_sympy(poly: sympy.Poly, nvars: int) -> MPoly:
    return MPoly(nvars, {monomial: _rational(c) for monomial, c in poly.terms()})


def _check(poly: MPoly):
    if poly.is_zero():
        raise ZeroPolynomial("Cannot factor the zero polynomial")
    if not poly.is_rational():
        raise UnsupportedCoefficients("Factorization needs rational coefficients")


def factor_rational(poly: MPoly) -> Factorization:
    """Irreducible factors over the rationals with their multiplicities."""
    _check(poly)
    content, factors = _to_sympy(poly).factor_list()
    result = Factorization(
        content=_rational(content),
        factors=[(_from_sympy(f, poly.nvars), k) for f, k in factors],
    )
    logger.debug(f"Factored into {len(result.factors)} irreducible factors")
    return result


def squarefree_rational(poly: MPoly) -> MPoly:
    """Product of the distinct irreducible factors, content dropped."""
    product = MPoly.constant(poly.nvars, 1)
    for factor, _ in factor_rational(poly).factors:
        product = product * factor
    return product


def factor_upoly(poly: UPoly) -> List[Tuple[UPoly, int]]:
    """Monic irreducible factors of a rational univariate polynomial."""
    if poly.is_zero():
        raise ZeroPolynomial("Cannot factor the zero polynomial")
    if not poly.is_rational():
        raise UnsupportedCoefficients("Factorization needs rational coefficients")
    factors = factor_rational(MPoly.from_upoly(poly)).factors
    return [(f.to_upoly(0).monic(), k) for f, k in factors]
