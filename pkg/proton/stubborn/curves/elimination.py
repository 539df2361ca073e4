"""
Coordinate changes, vertical projections and gcds along elimination fibres.


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


Plane curves are handled in a working frame obtained from the caller's
coordinates by an invertible rational change M: a form F becomes F(M·X). In
the working frame the projection centre [0:1:0] avoids the curves, so every
real point lies over a real root of an eliminant in x.
"""
import logging
from fractions import Fraction
from typing import Iterator, List, Tuple

import numpy as np

from proton.stubborn.poly import linalg
from proton.stubborn.poly.factor import factor_upoly
from proton.stubborn.poly.mpoly import MPoly
from proton.stubborn.poly.resultant import coefficient_polys
from proton.stubborn.poly.upoly import UPoly
from proton.stubborn.curves.points import IDENTITY, Change

logger = logging.getLogger(__name__)

YPOWER = (0, 1, 0)

Branch = Tuple[UPoly, List[UPoly]]


def candidate_changes(seed: int, coefficient_range: int, budget: int) -> Iterator[Change]:
    """The identity, then seeded random invertible integer matrices."""
    yield IDENTITY
    rng = np.random.default_rng(seed)
    produced = 1
    while produced < budget:
        entries = rng.integers(-coefficient_range, coefficient_range + 1, size=(3, 3))
        matrix = [[Fraction(int(v)) for v in row] for row in entries]
        if linalg.rank(matrix) < 3:
            continue
        produced += 1
        yield matrix


def to_working_frame(form: MPoly, change: Change) -> MPoly:
    return form if change is IDENTITY else form.linear_change(change)


def avoids_centre(form: MPoly) -> bool:
    """True when [0:1:0] is not on the curve of the working form."""
    degree = form.degree
    return not form.coefficient((0, degree, 0)).is_zero()


def affine_chart(form: MPoly) -> MPoly:
    """Dehomogenization at z, as a polynomial in (x, y)."""
    return form.dehomogenize(2)


def y_coefficients(affine: MPoly) -> List[UPoly]:
    """Coefficients in y as polynomials in x."""
    return coefficient_polys(affine, 1, 0)


def real_pieces(poly: UPoly) -> List[Tuple[UPoly, int]]:
    """Squarefree decomposition refined by rational factorization when possible."""
    pieces = []
    for part, multiplicity in poly.squarefree_decomposition():
        if part.is_rational() and part.degree > 1:
            pieces.extend((factor, multiplicity) for factor, _ in factor_upoly(part))
        else:
            pieces.append((part, multiplicity))
    return pieces


def _strip(values: List[UPoly]) -> List[UPoly]:
    while values and values[-1].is_zero():
        values.pop()
    return values


def _reduce(values: List[UPoly], modulus: UPoly) -> List[UPoly]:
    return _strip([value % modulus for value in values])


def _zero_divisor(value: UPoly, modulus: UPoly):
    """A proper factor of ``modulus`` sharing roots with ``value``, if any."""
    common = value.gcd(modulus)
    if 0 < common.degree < modulus.degree:
        return common
    return None


def branch_gcd(modulus: UPoly, first: List[UPoly], second: List[UPoly]) -> List[Branch]:
    """gcd in y over K[x]/(modulus), splitting the modulus at zero divisors.

    Inputs are coefficient lists in y of polynomials in x. Returns pairs
    (g_i, G_i) with modulus = ∏ g_i and, for every root α of g_i,
    gcd(first(α, y), second(α, y)) = G_i(α, y), G_i monic in y."""
    a, b = _reduce(first, modulus), _reduce(second, modulus)
    if len(a) < len(b):
        a, b = b, a
    while b:
        factor = _zero_divisor(b[-1], modulus)
        if factor is not None:
            return _split(modulus, factor, first, second)
        inverse = b[-1].inverse_mod(modulus)
        remainder = list(a)
        while remainder and len(remainder) >= len(b):
            lead = (remainder[-1] * inverse) % modulus
            shift = len(remainder) - len(b)
            for j, coefficient in enumerate(b):
                remainder[shift + j] = (remainder[shift + j] - lead * coefficient) % modulus
            remainder.pop()
            remainder = _strip(remainder)
        a, b = b, remainder
    if not a:
        return [(modulus, [])]
    factor = _zero_divisor(a[-1], modulus)
    if factor is not None:
        return _split(modulus, factor, first, second)
    inverse = a[-1].inverse_mod(modulus)
    return [(modulus, [(c * inverse) % modulus for c in a])]


def _split(modulus: UPoly, factor: UPoly, first, second) -> List[Branch]:
    logger.debug(f"Splitting a degree {modulus.degree} modulus at degree {factor.degree}")
    return (branch_gcd(factor, first, second)
            + branch_gcd(modulus.exact_div(factor), first, second))


def multi_branch_gcd(modulus: UPoly, polys: List[List[UPoly]]) -> List[Branch]:
    """Branch gcd of several coefficient lists."""
    branches = [(modulus, polys[0])]
    for other in polys[1:]:
        refined = []
        for piece, current in branches:
            refined.extend(branch_gcd(piece, current, other))
        branches = refined
    return branches


def linear_ordinate(gcd_coefficients: List[UPoly]) -> UPoly:
    """φ with G = y - φ for a monic linear gcd G."""
    return -gcd_coefficients[0]
