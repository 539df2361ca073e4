"""
Resultants by the subresultant polynomial remainder sequence.


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
from typing import Dict, List, Sequence

from proton.stubborn.poly.field import FieldElem
from proton.stubborn.poly.mpoly import MPoly
from proton.stubborn.poly.upoly import UPoly


def _strip(values: list) -> list:
    while values and values[-1].is_zero():
        values.pop()
    return values


def _pseudo_remainder(a: list, b: list) -> list:
    """prem(A, B) with lc(B)^(deg A - deg B + 1)·A = Q·B + R."""
    remainder = list(a)
    lead = b[-1]
    steps = len(a) - len(b) + 1
    while remainder and len(remainder) >= len(b):
        top = remainder[-1]
        shift = len(remainder) - len(b)
        remainder = [lead * c for c in remainder]
        for j, c in enumerate(b):
            remainder[shift + j] = remainder[shift + j] - top * c
        remainder.pop()
        remainder = _strip(remainder)
        steps -= 1
    if steps > 0:
        factor = lead ** steps
        remainder = [factor * c for c in remainder]
    return remainder


def subresultant(a: Sequence, b: Sequence, one):
    """Resultant of two polynomials given as coefficient lists over a domain.

    Coefficients are listed from the constant term up and must support ring
    arithmetic, ``exact_div`` and ``is_zero``; ``one`` is the unit of the domain."""
    a, b = _strip(list(a)), _strip(list(b))
    zero = one - one
    if not a or not b:
        return zero
    sign = 1
    if len(a) < len(b):
        a, b = b, a
        if (len(a) - 1) % 2 and (len(b) - 1) % 2:
            sign = -sign
    if len(b) == 1:
        return b[0] ** (len(a) - 1) * sign

    g = h = one
    while True:
        delta = len(a) - len(b)
        if (len(a) - 1) % 2 and (len(b) - 1) % 2:
            sign = -sign
        remainder = _pseudo_remainder(a, b)
        a = b
        if not remainder:
            return zero
        divisor = g * h ** delta
        b = [c.exact_div(divisor) for c in remainder]
        g = a[-1]
        if delta:
            h = (g ** delta).exact_div(h ** (delta - 1))
        if len(b) == 1:
            break

    degree = len(a) - 1
    return (b[-1] ** degree).exact_div(h ** (degree - 1)) * sign


def coefficient_polys(f: MPoly, var: int, other: int) -> List[UPoly]:
    """Coefficients of ``f`` in ``var`` as univariate polynomials in ``other``.

    Every other variable must be absent."""
    grouped: Dict[int, Dict[int, object]] = {}
    for monomial, coefficient in f.terms.items():
        if any(e for i, e in enumerate(monomial) if i not in (var, other)):
            raise ValueError("Polynomial involves more than two variables")
        grouped.setdefault(monomial[var], {})[monomial[other]] = coefficient
    size = max(grouped, default=-1) + 1
    result = []
    for power in range(size):
        entries = grouped.get(power, {})
        length = max(entries, default=-1) + 1
        result.append(UPoly([entries.get(i, 0) for i in range(length)]))
    return result


def bivariate_resultant(f: MPoly, g: MPoly, var: int, other: int) -> UPoly:
    """Res_var(f, g) for polynomials in the two variables ``var`` and ``other``."""
    return subresultant(
        coefficient_polys(f, var, other), coefficient_polys(g, var, other), UPoly([1])
    )


def resultant(f: MPoly, g: MPoly, var: int) -> MPoly:
    """Resultant with respect to variable ``var``, in the same ring."""
    if f.nvars != g.nvars:
        raise ValueError("Resultant of polynomials from different rings")
    occurring = set(f.variables()) | set(g.variables())
    others = sorted(occurring - {var})
    if len(others) <= 1:
        other = others[0] if others else (1 if var == 0 else 0)
        if f.nvars == 1:
            value = subresultant(
                list(f.to_upoly(var).coeffs), list(g.to_upoly(var).coeffs), FieldElem(1)
            )
            return MPoly.constant(1, value)
        return MPoly.from_upoly(bivariate_resultant(f, g, var, other), f.nvars, other)

    one = MPoly.constant(f.nvars, 1)
    return subresultant(_coefficients(f, var), _coefficients(g, var), one)


def _coefficients(f: MPoly, var: int) -> List[MPoly]:
    grouped = f.coefficients_in(var)
    size = max(grouped, default=-1) + 1
    return [grouped.get(power, MPoly.zero(f.nvars)) for power in range(size)]


def discriminant_like(f: MPoly, var: int) -> MPoly:
    """Res_var(f, ∂f/∂var): the discriminant up to a factor of the leading coefficient."""
    return resultant(f, f.derivative(var), var)
