"""
Turning numerical solutions into exact certificates by round and project.


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
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import numpy as np

from proton.stubborn.config import SolverConfig
from proton.stubborn.poly import linalg
from proton.stubborn.sos.certificates import NotSosCertificate, SosCertificate
from proton.stubborn.sos.gram import GramProblem, Row
from proton.stubborn.sos.sdp import DualSolution, PrimalSolution

logger = logging.getLogger(__name__)


def round_dyadic(value: float, exponent: int) -> Fraction:
    """Nearest fraction with denominator 2^exponent."""
    scale = 1 << exponent
    return Fraction(int(round(float(value) * scale)), scale)


def _columns_disjoint(rows: Sequence[Row]) -> bool:
    seen = set()
    for row in rows:
        if seen.intersection(row):
            return False
        seen.update(row)
    return True


def project_affine(rows: Sequence[Row], rhs: Sequence[Fraction],
                   vector: Sequence[Fraction]) -> Optional[List[Fraction]]:
    """Orthogonal projection of ``vector`` onto {v : A·v = rhs}, exactly.

    Returns None when the affine space is empty."""
    projected = [Fraction(v) for v in vector]
    residual = [
        sum((a * projected[j] for j, a in row.items()), Fraction(0)) - b
        for row, b in zip(rows, rhs)
    ]
    if all(r == 0 for r in residual):
        return projected
    if any(not row and r != 0 for row, r in zip(rows, residual)):
        return None

    if _columns_disjoint(rows):
        for row, r in zip(rows, residual):
            if r == 0:
                continue
            norm = sum((a * a for a in row.values()), Fraction(0))
            for j, a in row.items():
                projected[j] -= a * r / norm
        return projected

    normal = [
        [sum((a * other.get(j, 0) for j, a in row.items()), Fraction(0)) for other in rows]
        for row in rows
    ]
    weights = linalg.solve(normal, residual)
    if weights is None:
        return None
    for row, w in zip(rows, weights):
        if w == 0:
            continue
        for j, a in row.items():
            projected[j] -= a * w
    return projected


def rationalize_primal(problem: GramProblem, solution: PrimalSolution,
                       config: Optional[SolverConfig] = None) -> Optional[SosCertificate]:
    """Rounds the Gram matrix, projects it on the affine space and tests PSD exactly."""
    config = config or SolverConfig()
    numeric = [solution.gram[i, j] for i, j in problem.pairs] + list(solution.free)
    for exponent in config.denominator_exponents:
        rounded = [round_dyadic(v, exponent) for v in numeric]
        projected = project_affine(problem.rows, problem.rhs, rounded)
        if projected is None:
            logger.debug("Coefficient equations are inconsistent, no primal certificate")
            return None
        gram, free = problem.unpack(projected)
        if linalg.ldl(gram) is None:
            logger.debug(f"Denominator 2^{exponent}: projected Gram matrix is not PSD")
            continue
        certificate = SosCertificate(
            target=problem.target, basis=problem.basis, gram=gram,
            cofactor=problem.cofactor(free) if problem.ideal is not None else None,
            ideal=problem.ideal,
        )
        if certificate.verify():
            logger.debug(f"Exact Gram certificate with denominator 2^{exponent}")
            return certificate
    return None


def _free_rows(problem: GramProblem) -> List[Row]:
    """Conditions L(p_k) = 0 as rows over the monomial index."""
    position = {m: i for i, m in enumerate(problem.monomials)}
    return [
        {position[m]: c.to_fraction() for m, c in poly.terms.items()}
        for poly in problem.free_polys
    ]


def rationalize_dual(problem: GramProblem, solution: DualSolution,
                     config: Optional[SolverConfig] = None) -> Optional[NotSosCertificate]:
    """Rounds the moment functional, projects it on the ideal annihilator and checks it."""
    config = config or SolverConfig()
    rows = _free_rows(problem)
    scale = float(np.max(np.abs(solution.functional), initial=0.0)) or 1.0
    for exponent in config.denominator_exponents:
        rounded = [round_dyadic(v / scale, exponent) for v in solution.functional]
        projected = project_affine(rows, [Fraction(0)] * len(rows), rounded)
        if projected is None:
            return None
        functional: Dict = {
            monomial: value for monomial, value in zip(problem.monomials, projected) if value
        }
        certificate = NotSosCertificate(
            target=problem.target, basis=problem.basis, functional=functional,
            moment_matrix=problem.moment_matrix(functional),
            free_polys=problem.free_polys, ideal=problem.ideal,
        )
        if certificate.verify():
            logger.debug(f"Exact moment certificate with denominator 2^{exponent}")
            return certificate
        logger.debug(f"Denominator 2^{exponent}: rounded functional does not separate")
    return None
