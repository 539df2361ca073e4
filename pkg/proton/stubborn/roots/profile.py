"""
Real root profiles: real roots with multiplicities and the nonreal remainder.


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
import functools
import logging
from dataclasses import dataclass, field
from typing import List

from proton.stubborn.exceptions import ZeroPolynomial
from proton.stubborn.poly.factor import factor_upoly
from proton.stubborn.poly.upoly import UPoly
from proton.stubborn.roots.algebraic import AlgebraicReal
from proton.stubborn.roots.sturm import isolate_real_roots

logger = logging.getLogger(__name__)


@dataclass
class RealRoot:  # pylint: disable=missing-class-docstring
    root: AlgebraicReal
    multiplicity: int


@dataclass
class RootProfile:
    """Real roots in increasing order and the total nonreal multiplicity."""
    degree: int
    real_roots: List[RealRoot] = field(default_factory=list)
    nonreal_multiplicity: int = 0

    @property
    def real_multiplicity(self) -> int:
        return sum(r.multiplicity for r in self.real_roots)

    @property
    def distinct_real(self) -> int:
        return len(self.real_roots)


def _roots_of(poly: UPoly) -> List[AlgebraicReal]:
    """Real roots of a squarefree polynomial, with the smallest defining factor."""
    pieces = [poly]
    if poly.is_rational() and poly.degree > 2:
        pieces = [factor for factor, _ in factor_upoly(poly)]
    roots = []
    for piece in pieces:
        for low, high in isolate_real_roots(piece):
            roots.append(AlgebraicReal(piece, low, high))
    return roots


def root_profile(poly: UPoly) -> RootProfile:
    """Squarefree decomposition, isolation of each part and assembly."""
    if poly.is_zero():
        raise ZeroPolynomial("Root profile of the zero polynomial")
    real_roots = []
    for part, multiplicity in poly.squarefree_decomposition():
        real_roots.extend(RealRoot(root, multiplicity) for root in _roots_of(part))
    real_roots.sort(key=functools.cmp_to_key(lambda a, b: a.root.compare(b.root)))
    real = sum(r.multiplicity for r in real_roots)
    profile = RootProfile(
        degree=poly.degree, real_roots=real_roots, nonreal_multiplicity=poly.degree - real
    )
    logger.debug(
        f"Root profile: degree {profile.degree}, {profile.distinct_real} distinct real "
        f"roots, nonreal multiplicity {profile.nonreal_multiplicity}"
    )
    return profile


def all_roots_real(poly: UPoly) -> bool:
    return root_profile(poly).nonreal_multiplicity == 0
