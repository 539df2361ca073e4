"""
Sum of squares decisions, globally and modulo a principal ideal.


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


A verdict is only ever SOS or NOT_SOS together with an exact certificate.
Whenever the numerical search or the rationalization gives up, the verdict is
UNDECIDED and carries the reason.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Union

import numpy as np
from scipy.optimize import linprog

from proton.stubborn.config import SolverConfig
from proton.stubborn.exceptions import NumericalStall, PreconditionError
from proton.stubborn.poly import linalg
from proton.stubborn.poly.mpoly import MPoly, Monomial
from proton.stubborn.sos.certificates import NotSosCertificate, SosCertificate
from proton.stubborn.sos.gram import (
    GramProblem, monomial_basis, monomials_of_degree, standard_basis
)
from proton.stubborn.sos.rationalize import rationalize_dual, rationalize_primal
from proton.stubborn.sos.sdp import PrimalSolution, sdp_feasible, sdp_separate

logger = logging.getLogger(__name__)

SOS = "SOS"
NOT_SOS = "NOT_SOS"
UNDECIDED = "UNDECIDED"

FOUND = "FOUND"
EXHAUSTED = "EXHAUSTED"
UNKNOWN_AT = "UNKNOWN_AT"

KERNEL_TOLERANCE = 1e-5
PIVOT_TOLERANCE = 1e-6
ROUNDING_TOLERANCE = 1e-6


@dataclass
class SosResult:
    verdict: str
    certificate: Optional[Union[SosCertificate, NotSosCertificate]] = None
    reason: Optional[str] = None

    @property
    def is_sos(self) -> bool:
        return self.verdict == SOS

    @property
    def is_decided(self) -> bool:
        return self.verdict != UNDECIDED

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "reason": self.reason,
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
        }


def _half_degree(form: MPoly, name: str = "F") -> int:
    if form.is_zero():
        return 0
    degree = form.homogeneous_degree
    if degree is None or degree % 2:
        raise PreconditionError(f"{name} must be a form of even degree")
    return degree // 2


def _in_hull(point: Sequence[int], support: np.ndarray) -> bool:
    """Whether ``point`` is a convex combination of the rows of ``support``."""
    count = support.shape[0]
    equality = np.vstack([support.T, np.ones((1, count))])
    rhs = np.concatenate([np.asarray(point, dtype=float), [1.0]])
    result = linprog(np.zeros(count), A_eq=equality, b_eq=rhs,
                     bounds=[(0, None)] * count, method="highs")
    return result.status == 0


def newton_basis(target: MPoly, candidates: Sequence[Monomial]) -> List[Monomial]:
    """Monomials β with 2β in the Newton polytope of the target."""
    support = np.array(list(target.terms), dtype=float)
    if not len(support):
        return []
    low, high = support.min(axis=0), support.max(axis=0)
    kept = []
    for monomial in candidates:
        doubled = [2 * e for e in monomial]
        if any(d < lo or d > hi for d, lo, hi in zip(doubled, low, high)):
            continue
        if _in_hull(doubled, support):
            kept.append(monomial)
    logger.debug(f"Newton polytope keeps {len(kept)} of {len(candidates)} monomials")
    return kept


def prune_basis(target: MPoly, basis: Sequence[Monomial]) -> List[Monomial]:
    """Drops β when x^(2β) is absent from the target and has no other Gram source."""
    kept = list(basis)
    while True:
        doubled = {}
        for i, first in enumerate(kept):
            for second in kept[i + 1:]:
                product = tuple(a + b for a, b in zip(first, second))
                doubled[product] = doubled.get(product, 0) + 1
        pruned = [
            beta for beta in kept
            if tuple(2 * e for e in beta) in target.terms
            or doubled.get(tuple(2 * e for e in beta), 0)
        ]
        if len(pruned) == len(kept):
            return kept
        kept = pruned


def _numerical_kernel(solution: PrimalSolution) -> np.ndarray:
    """Eigenvectors of Q with a small eigenvalue, as rows."""
    values, vectors = np.linalg.eigh(solution.gram)
    scale = max(1.0, float(np.max(np.abs(values), initial=0.0)))
    return vectors[:, values < KERNEL_TOLERANCE * scale].T


def canonical_rows(rows: np.ndarray) -> np.ndarray:
    """Reduced row echelon form of a numerical row space.

    Eigenvectors of a repeated eigenvalue come in an arbitrary rotation; the
    echelon form depends on the span only, so a rational span shows up with
    rational entries."""
    matrix = np.array(rows, dtype=float)
    if not matrix.size:
        return matrix
    rank = 0
    for column in range(matrix.shape[1]):
        if rank == matrix.shape[0]:
            break
        pivot = rank + int(np.argmax(np.abs(matrix[rank:, column])))
        if abs(matrix[pivot, column]) < PIVOT_TOLERANCE:
            continue
        matrix[[rank, pivot]] = matrix[[pivot, rank]]
        matrix[rank] /= matrix[rank, column]
        for other in range(matrix.shape[0]):
            if other != rank:
                matrix[other] -= matrix[other, column] * matrix[rank]
        rank += 1
    return matrix[:rank]


def rational_kernels(canonical: np.ndarray,
                     exponents: Sequence[int]) -> Iterator[List[List[Fraction]]]:
    """Roundings of the echelon rows with denominators up to 2^e, closest first."""
    seen = set()
    for exponent in exponents:
        bound = 1 << exponent
        candidate = [[Fraction(float(v)).limit_denominator(bound) for v in row]
                     for row in canonical]
        key = tuple(tuple(row) for row in candidate)
        if key in seen:
            continue
        seen.add(key)
        error = max((abs(float(c) - v) for row, values in zip(candidate, canonical)
                     for c, v in zip(row, values)), default=0.0)
        if error <= ROUNDING_TOLERANCE:
            yield candidate


def _restrict(problem: GramProblem, complement: List[List[Fraction]]) -> GramProblem:
    nvars = problem.target.nvars
    basis = []
    for vector in complement:
        combination = MPoly.zero(nvars)
        for coefficient, poly in zip(vector, problem.basis):
            if coefficient:
                combination = combination + poly.scale(coefficient)
        basis.append(combination)
    return GramProblem(problem.target, basis, problem.ideal, problem.cofactor_basis)


def _consistent(problem: GramProblem) -> bool:
    if problem.is_trivially_infeasible():
        return False
    coefficient_rank, augmented_rank = linalg.rank_pair(problem.dense_rows(), problem.rhs)
    return coefficient_rank == augmented_rank


def facial_reduction(problem: GramProblem, solution: PrimalSolution,
                     config: Optional[SolverConfig] = None) -> Optional[GramProblem]:
    """Restricts the basis to the orthogonal complement of the kernel of Q.

    The numerical kernel is brought to echelon form and rounded; a rounding is
    used only if the coefficient equations on the smaller basis still have an
    exact solution. None when no rounding qualifies."""
    config = config or SolverConfig()
    kernel = _numerical_kernel(solution)
    if not kernel.size:
        return None
    canonical = canonical_rows(kernel)
    for candidate in rational_kernels(canonical, config.denominator_exponents):
        complement = linalg.nullspace(candidate, problem.size)
        if not complement or len(complement) == problem.size:
            return None
        reduced = _restrict(problem, complement)
        if _consistent(reduced):
            logger.warning(
                f"Facial reduction: basis {problem.size} -> {reduced.size} along a kernel of "
                f"dimension {len(candidate)}"
            )
            return reduced
        logger.debug(f"Kernel rounding of dimension {len(candidate)} leaves no exact solution")
    logger.debug("No exact kernel found, facial reduction skipped")
    return None


def _primal_certificate(problem: GramProblem,
                        config: SolverConfig) -> Optional[SosCertificate]:
    for _ in range(config.facial_reduction_rounds + 1):
        if not problem.size or problem.is_trivially_infeasible():
            return None
        solution = sdp_feasible(problem, config)
        if solution.margin < -config.margin_tolerance:
            logger.debug(f"Primal margin {solution.margin:.3e}: no interior Gram matrix")
            return None
        if solution.residual > config.residual_tolerance:
            logger.debug(f"Primal residual {solution.residual:.3e} above tolerance")
        certificate = rationalize_primal(problem, solution, config)
        if certificate is not None:
            return certificate
        problem = facial_reduction(problem, solution, config)
        if problem is None:
            return None
    return None


def _dual_certificate(problem: GramProblem,
                      config: SolverConfig) -> Optional[NotSosCertificate]:
    if not problem.size:
        return None
    solution = sdp_separate(problem, config)
    if not solution.separates:
        logger.debug(f"Moment margin {solution.margin:.3e}: no separating functional")
        return None
    return rationalize_dual(problem, solution, config)


def _decide(target: MPoly, primal_basis: Sequence[Monomial], dual_basis: Sequence[Monomial],
            ideal: Optional[MPoly], cofactor_basis: Sequence[Monomial],
            config: SolverConfig) -> SosResult:
    nvars = target.nvars
    reasons = []
    try:
        primal = GramProblem(target, monomial_basis(nvars, primal_basis), ideal,
                             list(cofactor_basis))
        certificate = _primal_certificate(primal, config)
        if certificate is not None:
            logger.info(f"Sum of squares certificate with {len(certificate.basis)} basis elements")
            return SosResult(SOS, certificate)
        reasons.append("no exact Gram certificate")
    except NumericalStall as error:
        reasons.append(str(error))

    try:
        dual = GramProblem(target, monomial_basis(nvars, dual_basis), ideal, list(cofactor_basis))
        refutation = _dual_certificate(dual, config)
        if refutation is not None:
            logger.info("Not a sum of squares, separating functional certified")
            return SosResult(NOT_SOS, refutation)
        reasons.append("no exact separating functional")
    except NumericalStall as error:
        reasons.append(str(error))

    logger.info(f"Sum of squares question left undecided: {'; '.join(reasons)}")
    return SosResult(UNDECIDED, reason="; ".join(reasons))


def is_sos(target: MPoly, config: Optional[SolverConfig] = None) -> SosResult:
    """Decides whether the form is a sum of squares of forms."""
    config = config or SolverConfig()
    degree = _half_degree(target)
    if target.is_zero():
        return SosResult(SOS, SosCertificate(target, [], []))
    if not target.is_rational():
        return SosResult(UNDECIDED, reason="tower coefficients")
    full = monomials_of_degree(target.nvars, degree)
    reduced = prune_basis(target, newton_basis(target, full))
    return _decide(target, reduced, full, None, [], config)


def is_sos_mod(target: MPoly, ideal: MPoly, config: Optional[SolverConfig] = None) -> SosResult:
    """Decides whether the form is a sum of squares modulo the principal ideal (H)."""
    config = config or SolverConfig()
    degree = _half_degree(target)
    if ideal.is_zero() or not ideal.is_homogeneous():
        raise PreconditionError("H must be a nonzero form")
    if ideal.nvars != target.nvars:
        raise PreconditionError("F and H live in different rings")
    # Below the degree of H the ideal is empty and the question is global.
    cofactor_degree = 2 * degree - ideal.degree
    if not (target.is_rational() and ideal.is_rational()):
        return SosResult(UNDECIDED, reason="tower coefficients")
    basis = standard_basis(target.nvars, degree, ideal)
    cofactors = monomials_of_degree(target.nvars, cofactor_degree)
    return _decide(target, basis, basis, ideal, cofactors, config)


def sphere(nvars: int) -> MPoly:
    """x² + y² + z² (or its analogue in ``nvars`` variables)."""
    total = MPoly.zero(nvars)
    for variable in MPoly.gens(nvars):
        total = total + variable * variable
    return total


@dataclass
class MultiplierResult:
    """First r with (x²+y²+z²)^r·F a sum of squares, with every attempt recorded."""
    r: Optional[int]
    certificate: Optional[SosCertificate] = None
    attempts: List[SosResult] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.r is not None

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
            "attempts": [a.verdict for a in self.attempts],
        }


def multiplier_sos(target: MPoly, r_max: int = 2, config: Optional[SolverConfig] = None,
                   start: int = 0) -> MultiplierResult:
    """Tries r = start, ..., r_max in turn."""
    config = config or SolverConfig()
    result = MultiplierResult(r=None)
    multiplier = sphere(target.nvars) ** start
    for r in range(start, r_max + 1):
        outcome = is_sos(multiplier * target, config)
        result.attempts.append(outcome)
        if outcome.is_sos:
            result.r, result.certificate = r, outcome.certificate
            logger.info(f"Multiplier certificate of nonnegativity with r = {r}")
            return result
        multiplier = multiplier * sphere(target.nvars)
    return result


@dataclass
class PowerSearchResult:
    """Outcome of the odd power search: FOUND, EXHAUSTED or UNKNOWN_AT."""
    status: str
    k: Optional[int] = None
    certificate: Optional[SosCertificate] = None
    tried: List[tuple] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "k": self.k,
            "tried": [{"k": k, "verdict": verdict} for k, verdict in self.tried],
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
        }


def power_sos_search(target: MPoly, k_max: int = 5,
                     config: Optional[SolverConfig] = None) -> PowerSearchResult:
    """First odd k <= k_max with F^k a sum of squares."""
    if k_max < 1 or k_max % 2 == 0:
        raise PreconditionError("k_max must be a positive odd integer")
    config = config or SolverConfig()
    result = PowerSearchResult(status=EXHAUSTED)
    first_unknown = None
    for k in range(1, k_max + 1, 2):
        outcome = is_sos(target ** k, config)
        result.tried.append((k, outcome.verdict))
        if outcome.is_sos:
            result.status, result.k, result.certificate = FOUND, k, outcome.certificate
            logger.info(f"F^{k} is a sum of squares")
            return result
        if outcome.verdict == UNDECIDED and first_unknown is None:
            first_unknown = k
    if first_unknown is not None:
        result.status, result.k = UNKNOWN_AT, first_unknown
    logger.info(f"Power search ended {result.status} up to k = {k_max}")
    return result
