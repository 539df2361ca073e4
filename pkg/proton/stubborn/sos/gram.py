"""
Gram matrix formulation of sum of squares problems.


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


A problem asks for a symmetric PSD matrix Q and scalars λ with

    mᵀ·Q·m + Σ λ_k·p_k = target

where m is the basis and the free polynomials p_k span the slice of an ideal
(H·γ for the cofactor monomials γ), or are empty for global problems.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy import sparse

from proton.stubborn.poly.mpoly import MPoly, Monomial, grlex_key

logger = logging.getLogger(__name__)

Row = Dict[int, Fraction]


def monomials_of_degree(nvars: int, degree: int) -> List[Monomial]:
    """All exponent vectors of the given total degree, in decreasing grlex order."""
    if degree < 0:
        return []
    found = []
    for combination in combinations_with_replacement(range(nvars), degree):
        exponents = [0] * nvars
        for index in combination:
            exponents[index] += 1
        found.append(tuple(exponents))
    return sorted(found, key=grlex_key, reverse=True)


def standard_basis(nvars: int, degree: int, ideal: MPoly) -> List[Monomial]:
    """Degree ``degree`` monomials not divisible by the grlex leading monomial of ``ideal``."""
    leading = ideal.leading_monomial
    return [
        m for m in monomials_of_degree(nvars, degree)
        if not all(a <= b for a, b in zip(leading, m))
    ]


def monomial_basis(nvars: int, exponents: Sequence[Monomial]) -> List[MPoly]:
    return [MPoly.monomial(nvars, e) for e in exponents]


@dataclass
class GramProblem:
    """Coefficient matching equations of a Gram problem.

    Unknowns are ordered as the upper triangle of Q (pairs i <= j) followed
    by the multipliers of the free polynomials."""
    target: MPoly
    basis: List[MPoly]
    ideal: Optional[MPoly] = None
    cofactor_basis: List[Monomial] = field(default_factory=list)
    pairs: List[Tuple[int, int]] = field(init=False, repr=False)
    products: List[MPoly] = field(init=False, repr=False)
    free_polys: List[MPoly] = field(init=False, repr=False)
    monomials: List[Monomial] = field(init=False, repr=False)
    rows: List[Row] = field(init=False, repr=False)
    rhs: List[Fraction] = field(init=False, repr=False)

    def __post_init__(self):
        nvars = self.target.nvars
        self.pairs = [(i, j) for i in range(len(self.basis)) for j in range(i, len(self.basis))]
        self.products = [self.basis[i] * self.basis[j] for i, j in self.pairs]
        self.free_polys = []
        if self.ideal is not None:
            self.free_polys = [self.ideal.shift(gamma) for gamma in self.cofactor_basis]

        support = set(self.target.terms)
        for poly in self.products + self.free_polys:
            support.update(poly.terms)
        self.monomials = sorted(support, key=grlex_key, reverse=True)
        position = {monomial: index for index, monomial in enumerate(self.monomials)}

        self.rows = [{} for _ in self.monomials]
        for variable, ((i, j), product) in enumerate(zip(self.pairs, self.products)):
            weight = 1 if i == j else 2
            for monomial, coefficient in product.terms.items():
                self.rows[position[monomial]][variable] = weight * coefficient.to_fraction()
        offset = len(self.pairs)
        for k, poly in enumerate(self.free_polys):
            for monomial, coefficient in poly.terms.items():
                self.rows[position[monomial]][offset + k] = coefficient.to_fraction()
        target = self.target.rational_terms()
        self.rhs = [target.get(monomial, Fraction(0)) for monomial in self.monomials]
        logger.debug(
            f"Gram problem in {nvars} variables: basis {len(self.basis)}, "
            f"{len(self.free_polys)} free polynomials, {len(self.rows)} equations"
        )

    @property
    def size(self) -> int:
        return len(self.basis)

    @property
    def variable_count(self) -> int:
        return len(self.pairs) + len(self.free_polys)

    def is_trivially_infeasible(self) -> bool:
        """Some target monomial cannot be produced by any unknown."""
        return any(not row and value != 0 for row, value in zip(self.rows, self.rhs))

    def dense_rows(self) -> List[List[Fraction]]:
        count = self.variable_count
        dense = []
        for row in self.rows:
            values = [Fraction(0)] * count
            for variable, value in row.items():
                values[variable] = value
            dense.append(values)
        return dense

    def numeric_system(self):
        """(A_q, A_free, b): A_q acts on the column-major vectorization of Q."""
        n = self.size
        offset = len(self.pairs)
        data, row_index, column_index = [], [], []
        free = np.zeros((len(self.rows), len(self.free_polys)))
        for r, row in enumerate(self.rows):
            for variable, value in row.items():
                if variable >= offset:
                    free[r, variable - offset] = float(value)
                    continue
                i, j = self.pairs[variable]
                if i == j:
                    entries = [(i, i, float(value))]
                else:
                    entries = [(i, j, float(value) / 2), (j, i, float(value) / 2)]
                for a, b, v in entries:
                    data.append(v)
                    row_index.append(r)
                    column_index.append(b * n + a)
        gram_rows = sparse.csr_matrix(
            (data, (row_index, column_index)), shape=(len(self.rows), n * n)
        )
        return gram_rows, free, np.array([float(v) for v in self.rhs])

    def pack(self, gram: Sequence[Sequence[Fraction]], free: Sequence[Fraction]) -> List[Fraction]:
        return [Fraction(gram[i][j]) for i, j in self.pairs] + [Fraction(v) for v in free]

    def unpack(self, vector: Sequence[Fraction]) -> Tuple[List[List[Fraction]], List[Fraction]]:
        n = self.size
        gram = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), value in zip(self.pairs, vector):
            gram[i][j] = gram[j][i] = Fraction(value)
        return gram, [Fraction(v) for v in vector[len(self.pairs):]]

    def residual(self, vector: Sequence[Fraction]) -> List[Fraction]:
        return [
            sum((value * vector[variable] for variable, value in row.items()), Fraction(0)) - rhs
            for row, rhs in zip(self.rows, self.rhs)
        ]

    def cofactor(self, free: Sequence[Fraction]) -> MPoly:
        total = MPoly.zero(self.target.nvars)
        for gamma, value in zip(self.cofactor_basis, free):
            total = total + MPoly.monomial(self.target.nvars, gamma, value)
        return total

    def moment_matrix(self, functional: Dict[Monomial, Fraction]) -> List[List[Fraction]]:
        """[L(b_i·b_j)] for a linear functional given on monomials."""
        n = self.size
        matrix = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), product in zip(self.pairs, self.products):
            value = apply_functional(functional, product)
            matrix[i][j] = matrix[j][i] = value
        return matrix


def apply_functional(functional: Dict[Monomial, Fraction], poly: MPoly) -> Fraction:
    return sum(
        (functional.get(monomial, Fraction(0)) * coefficient.to_fraction()
         for monomial, coefficient in poly.terms.items()),
        Fraction(0),
    )
