"""
Exact certificates for and against sums of squares.


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


Both certificate types carry everything needed to re-check them with exact
rational arithmetic; ``verify`` never consults a solver.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from proton.stubborn.exceptions import IdentityMismatch
from proton.stubborn.poly import linalg
from proton.stubborn.poly.mpoly import MPoly, Monomial, default_names
from proton.stubborn.poly.parser import format_poly, parse_poly
from proton.stubborn.curves.points import format_fraction
from proton.stubborn.sos.gram import apply_functional, monomials_of_degree, standard_basis


def _quadratic_form(basis: List[MPoly], gram: List[List[Fraction]], nvars: int) -> MPoly:
    total = MPoly.zero(nvars)
    for i, row in enumerate(gram):
        combination = MPoly.zero(nvars)
        for j, value in enumerate(row):
            if value:
                combination = combination + basis[j].scale(value)
        if not combination.is_zero():
            total = total + basis[i] * combination
    return total


def _monomial_key(monomial: Monomial) -> str:
    return ",".join(str(e) for e in monomial)


@dataclass
class SosCertificate:
    """target = mᵀ·gram·m + ideal·cofactor, gram PSD by exact LDLᵀ."""
    target: MPoly
    basis: List[MPoly]
    gram: List[List[Fraction]]
    cofactor: Optional[MPoly] = None
    ideal: Optional[MPoly] = None
    ldl: Optional[Tuple[list, list]] = field(default=None, repr=False)

    def __post_init__(self):
        if self.cofactor is None:
            self.cofactor = MPoly.zero(self.target.nvars)
        if self.ldl is None:
            self.ldl = linalg.ldl(self.gram)

    def sum_of_squares(self) -> MPoly:
        return _quadratic_form(self.basis, self.gram, self.target.nvars)

    def verify(self) -> bool:
        """Exact identity and PSD check from the stored data alone."""
        if linalg.ldl(self.gram) is None:
            return False
        if any(self.gram[i][j] != self.gram[j][i]
               for i in range(len(self.gram)) for j in range(i)):
            return False
        remainder = self.target - self.sum_of_squares()
        if self.ideal is None:
            return remainder.is_zero()
        return remainder == self.ideal * self.cofactor

    def check(self) -> "SosCertificate":
        if not self.verify():
            raise IdentityMismatch("Sum of squares certificate does not reconstruct its target")
        return self

    def squares(self) -> List[Tuple[Fraction, MPoly]]:
        """Weighted squares d_k·(Σ_i L_ik·m_i)² from the LDLᵀ factorization."""
        lower, diagonal = self.ldl
        nvars = self.target.nvars
        found = []
        for k, weight in enumerate(diagonal):
            if weight == 0:
                continue
            poly = MPoly.zero(nvars)
            for i in range(len(self.basis)):
                if lower[i][k]:
                    poly = poly + self.basis[i].scale(lower[i][k])
            found.append((Fraction(weight), poly))
        return found

    def to_dict(self) -> dict:
        return {
            "type": "sos",
            "variables": list(default_names(self.target.nvars)),
            "target": format_poly(self.target),
            "basis": [format_poly(b) for b in self.basis],
            "gram": [[format_fraction(v) for v in row] for row in self.gram],
            "ideal": None if self.ideal is None else format_poly(self.ideal),
            "cofactor": format_poly(self.cofactor),
            "squares": len(self.squares()),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SosCertificate":
        names = data.get("variables")
        ideal = data.get("ideal")
        return cls(
            target=parse_poly(data["target"], names),
            basis=[parse_poly(b, names) for b in data["basis"]],
            gram=[[Fraction(v) for v in row] for row in data["gram"]],
            cofactor=parse_poly(data["cofactor"], names),
            ideal=None if ideal is None else parse_poly(ideal, names),
        )


@dataclass
class NotSosCertificate:
    """A functional L ⪰ 0 on squares of the basis, zero on the ideal slice, L(target) < 0."""
    target: MPoly
    basis: List[MPoly]
    functional: Dict[Monomial, Fraction]
    moment_matrix: List[List[Fraction]]
    free_polys: List[MPoly] = field(default_factory=list)
    ideal: Optional[MPoly] = None

    @property
    def value(self) -> Fraction:
        return apply_functional(self.functional, self.target)

    def _basis_is_complete(self) -> bool:
        """The basis holds distinct monomials of degree d covering every form of degree d,
        or its normal forms modulo the ideal."""
        nvars = self.target.nvars
        degree = self.target.degree
        if degree < 0 or degree % 2 or not self.target.is_homogeneous():
            return False
        half = degree // 2
        allowed = {m: MPoly.monomial(nvars, m) for m in monomials_of_degree(nvars, half)}
        found = set()
        for poly in self.basis:
            if len(poly.terms) != 1:
                return False
            monomial = next(iter(poly.terms))
            if poly != allowed.get(monomial) or monomial in found:
                return False
            found.add(monomial)
        if self.ideal is None:
            return found == set(allowed)
        return set(standard_basis(nvars, half, self.ideal)) <= found

    def ideal_slice(self) -> List[MPoly]:
        """H times every monomial of degree 2d - deg H; L must vanish on all of them."""
        if self.ideal is None:
            return []
        degree = self.target.degree - self.ideal.degree
        return [self.ideal.shift(m) for m in monomials_of_degree(self.target.nvars, degree)]

    def verify(self) -> bool:
        """Exact re-check. The basis and the ideal slice are recomputed, not trusted."""
        if self.ideal is not None and (self.ideal.is_zero() or not self.ideal.is_homogeneous()):
            return False
        if not self._basis_is_complete():
            return False
        n = len(self.basis)
        if len(self.moment_matrix) != n or any(len(row) != n for row in self.moment_matrix):
            return False
        for i in range(n):
            for j in range(i, n):
                expected = apply_functional(self.functional, self.basis[i] * self.basis[j])
                if self.moment_matrix[i][j] != expected or self.moment_matrix[j][i] != expected:
                    return False
        if not linalg.is_psd(self.moment_matrix):
            return False
        if any(apply_functional(self.functional, p) != 0 for p in self.ideal_slice()):
            return False
        return self.value < 0

    def check(self) -> "NotSosCertificate":
        if not self.verify():
            raise IdentityMismatch("Moment certificate does not separate its target")
        return self

    def to_dict(self) -> dict:
        return {
            "type": "not_sos",
            "variables": list(default_names(self.target.nvars)),
            "target": format_poly(self.target),
            "basis": [format_poly(b) for b in self.basis],
            "functional": {
                _monomial_key(m): format_fraction(v) for m, v in sorted(self.functional.items())
            },
            "moment_matrix": [[format_fraction(v) for v in row] for row in self.moment_matrix],
            "free_polys": [format_poly(p) for p in self.free_polys],
            "ideal": None if self.ideal is None else format_poly(self.ideal),
            "value": format_fraction(self.value),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "NotSosCertificate":
        names = data.get("variables")
        ideal = data.get("ideal")
        return cls(
            target=parse_poly(data["target"], names),
            basis=[parse_poly(b, names) for b in data["basis"]],
            functional={
                tuple(int(e) for e in key.split(",")): Fraction(value)
                for key, value in data["functional"].items()
            },
            moment_matrix=[[Fraction(v) for v in row] for row in data["moment_matrix"]],
            free_polys=[parse_poly(p, names) for p in data["free_polys"]],
            ideal=None if ideal is None else parse_poly(ideal, names),
        )


def certificate_from_dict(data: dict):
    """Rebuilds either certificate type from its JSON form."""
    if data["type"] == "sos":
        return SosCertificate.from_dict(data)
    return NotSosCertificate.from_dict(data)
