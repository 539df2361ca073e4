"""
Numerical semidefinite solves behind the Gram and moment problems.


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
from dataclasses import dataclass
from typing import Optional

import cvxpy as cp
import numpy as np

from proton.stubborn.config import SolverConfig
from proton.stubborn.exceptions import NumericalStall
from proton.stubborn.sos.gram import GramProblem

logger = logging.getLogger(__name__)

SOLVED = ("optimal", "optimal_inaccurate")

# Iteration caps apply to the interior point solvers; first order ones keep their defaults.
ITERATION_OPTION = {"CLARABEL": "max_iter", "CVXOPT": "maxiters"}


@dataclass
class PrimalSolution:
    """Gram matrix maximizing its smallest eigenvalue, capped at 1."""
    gram: np.ndarray
    free: np.ndarray
    margin: float
    residual: float
    solver: str

    @property
    def feasible(self) -> bool:
        return self.margin > -1e-7

    def kernel(self, tolerance: float) -> np.ndarray:
        """Eigenvectors of Q with eigenvalue below ``tolerance``, as columns."""
        values, vectors = np.linalg.eigh(self.gram)
        return vectors[:, values < tolerance]


@dataclass
class DualSolution:
    """Moment functional with PSD moment matrix and negative value on the target."""
    functional: np.ndarray
    margin: float
    solver: str

    @property
    def separates(self) -> bool:
        return self.margin > 0


def _solve(problem: cp.Problem, config: SolverConfig) -> Optional[str]:
    for solver in config.solvers:
        if solver not in cp.installed_solvers():
            logger.warning(f"Solver {solver} is not installed, skipping it")
            continue
        try:
            options = {}
            if solver in ITERATION_OPTION:
                options[ITERATION_OPTION[solver]] = config.max_iterations
            problem.solve(solver=solver, **options)
        except cp.SolverError as error:
            logger.warning(f"Solver {solver} failed: {error}")
            continue
        if problem.status in SOLVED:
            return solver
        logger.warning(f"Solver {solver} ended with status {problem.status}")
    return None


def sdp_feasible(gram_problem: GramProblem,
                 config: Optional[SolverConfig] = None) -> PrimalSolution:
    """Maximizes t subject to the coefficient equations and Q - t·I ⪰ 0."""
    config = config or SolverConfig()
    n = gram_problem.size
    gram_rows, free_rows, rhs = gram_problem.numeric_system()

    gram = cp.Variable((n, n), symmetric=True)
    margin = cp.Variable()
    expression = cp.Constant(gram_rows) @ cp.vec(gram, order="F")
    free = None
    if free_rows.shape[1]:
        free = cp.Variable(free_rows.shape[1])
        expression = expression + free_rows @ free
    constraints = [expression == rhs, gram - margin * np.eye(n) >> 0, margin <= 1]
    problem = cp.Problem(cp.Maximize(margin), constraints)
    logger.debug(f"Primal SDP: order {n}, {len(rhs)} equations")

    solver = _solve(problem, config)
    if solver is None:
        raise NumericalStall(f"No solver reached a solution (order {n})")
    values = gram.value
    free_values = np.zeros(0) if free is None else np.asarray(free.value).ravel()
    residual = float(np.max(np.abs(
        gram_rows @ values.ravel(order="F") + free_rows @ free_values - rhs
    ), initial=0.0))
    logger.debug(f"Primal SDP margin {float(margin.value):.3e}, residual {residual:.3e}")
    return PrimalSolution(
        gram=(values + values.T) / 2, free=free_values, margin=float(margin.value),
        residual=residual, solver=solver,
    )


def sdp_separate(gram_problem: GramProblem, config: Optional[SolverConfig] = None) -> DualSolution:
    """Maximizes s with M(L) ⪰ s·I, L(target) <= -s, L = 0 on the free polynomials."""
    config = config or SolverConfig()
    n = gram_problem.size
    gram_rows, free_rows, rhs = gram_problem.numeric_system()

    functional = cp.Variable(len(rhs))
    margin = cp.Variable()
    moment = cp.reshape(cp.Constant(gram_rows.T.tocsr()) @ functional, (n, n), order="F")
    constraints = [
        (moment + moment.T) / 2 - margin * np.eye(n) >> 0,
        rhs @ functional <= -margin,
        cp.trace(moment) == 1,
        margin <= 1,
    ]
    if free_rows.shape[1]:
        constraints.append(free_rows.T @ functional == 0)
    problem = cp.Problem(cp.Maximize(margin), constraints)
    logger.debug(f"Moment SDP: order {n}, {len(rhs)} moments")

    solver = _solve(problem, config)
    if solver is None:
        raise NumericalStall(f"No solver reached a solution of the moment problem (order {n})")
    return DualSolution(
        functional=np.asarray(functional.value).ravel(), margin=float(margin.value), solver=solver
    )
