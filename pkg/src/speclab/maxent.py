"""Soft configuration model: entropy-maximizing edge probabilities.

Given target average degrees k, the canonical ensemble connects i and j
independently with probability p_ij = x_i x_j / (1 + x_i x_j), where the
positive multipliers x solve the N coupled degree equations
k_i = sum_{j != i} p_ij.  A damped fixed point on
x_i <- k_i / sum_{j != i} x_j / (1 + x_i x_j) solves them; the step is
halved whenever the degree residual stops decreasing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, InfeasibleDegreesError
from .sampler import GraphSample, _bernoulli_upper, _rng

__all__ = [
    "MultiplierSolution",
    "solve_multipliers",
    "connection_probabilities",
    "sample_soft_config",
    "read_degree_file",
    "write_solution",
]


@dataclass(frozen=True)
class MultiplierSolution:
    degrees: np.ndarray
    x: np.ndarray
    residual: float
    iterations: int


def _fitted_degrees(x: np.ndarray) -> np.ndarray:
    outer = np.outer(x, x)
    p = outer / (1.0 + outer)
    return p.sum(axis=1) - np.diag(p)


def solve_multipliers(degrees, tol: float = 1e-8, max_iter: int = 2000) -> MultiplierSolution:
    """Solve the degree equations for the multipliers x (all positive).

    Degrees may be any positive reals below N-1; integer graphicality is not
    required by the soft model and is not checked.
    """
    k = np.asarray(degrees, dtype=float)
    if k.ndim != 1 or k.size < 2:
        raise ValueError("need a degree sequence of length >= 2")
    n = k.size
    bad = np.flatnonzero((k <= 0) | (k >= n - 1))
    if bad.size:
        raise InfeasibleDegreesError(
            f"degrees must satisfy 0 < k_i < N-1; violated at indices {bad.tolist()[:10]}",
            indices=bad.tolist(),
        )
    x = k / math.sqrt(k.sum())
    step = 0.5
    residual = np.inf
    for it in range(1, max_iter + 1):
        fitted = _fitted_degrees(x)
        new_residual = float(np.max(np.abs(k - fitted)))
        if new_residual < tol:
            return MultiplierSolution(k, x, new_residual, it - 1)
        if new_residual > residual:
            step = max(step / 2.0, 1.0 / 64.0)
        residual = new_residual
        denom = (x[None, :] / (1.0 + np.outer(x, x))).sum(axis=1) - x / (1.0 + x * x)
        x = step * (k / denom) + (1.0 - step) * x
    raise ConvergenceError(
        f"multiplier solver not converged after {max_iter} iterations "
        f"(degree residual {residual:.3g})",
        residual=residual,
        iterations=max_iter,
    )


def connection_probabilities(solution: MultiplierSolution) -> np.ndarray:
    """Symmetric matrix p_ij = x_i x_j / (1 + x_i x_j), zero diagonal."""
    outer = np.outer(solution.x, solution.x)
    p = outer / (1.0 + outer)
    np.fill_diagonal(p, 0.0)
    return p


def sample_soft_config(degrees, seed: int, tol: float = 1e-8, max_iter: int = 2000) -> GraphSample:
    """Draw one graph from the canonical ensemble for the given degrees.

    Records eps = (max degree)^2 / (total degree), the scale under which the
    sampled spectra follow the product-kernel limit; the solved multipliers
    ride along in ``aux``.
    """
    solution = solve_multipliers(degrees, tol=tol, max_iter=max_iter)
    p = connection_probabilities(solution)
    n = solution.x.size
    iu = np.triu_indices(n, 1)
    upper = _bernoulli_upper(p[iu], _rng(seed))
    k = solution.degrees
    eps = float(k.max() ** 2 / k.sum())
    return GraphSample(n, upper, eps, "soft_config", int(seed), aux=solution.x)


def read_degree_file(path) -> np.ndarray:
    """One degree per line; blank lines and '#' comments are skipped."""
    values = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                values.append(float(line))
    return np.asarray(values)


def write_solution(solution: MultiplierSolution, path, header: str | None = None) -> None:
    """CSV rows "i,k_i,x_i,fitted_degree"."""
    fitted = _fitted_degrees(solution.x)
    with open(path, "w") as fh:
        if header:
            fh.write(f"# {header}\n")
        fh.write("i,k_i,x_i,fitted_degree\n")
        for i, (k, x, f) in enumerate(zip(solution.degrees, solution.x, fitted)):
            fh.write(f"{i},{k:.17g},{x:.17g},{f:.17g}\n")
