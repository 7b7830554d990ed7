"""Fixed-point solver for the resolvent field of the adjacency limit law.

On a kernel grid, the limit law's Stieltjes transform G(z) is the average
over x of a field H(z, x) solving

    z H(z, x) = 1 + H(z, x) * integral of w(x, y) H(z, y) dy.

The field is found by damped fixed-point iteration of
H <- 1 / (z - K H), which preserves the lower half-plane, and densities are
read off through the usual smoothed inversion -Im G(E + i eta) / pi.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError
from .kernel import KernelGrid

__all__ = ["StieltjesField", "solve_h", "density_profile", "g_transform", "write_density"]

DEFAULT_DAMPING = 0.5


@dataclass(frozen=True)
class StieltjesField:
    """Converged resolvent field values H(z, x_i) on the grid nodes."""

    z: complex
    grid: KernelGrid
    values: np.ndarray
    residual: float
    iterations: int

    def __post_init__(self):
        if np.any(self.values.imag >= 0):
            raise ValueError("resolvent field must map into the lower half-plane")


def _residuals(values, z, h):
    # max_i |z h_i - 1 - h_i (K h)_i| per column
    kh = values @ h / values.shape[0]
    return np.max(np.abs(z * h - 1.0 - h * kh), axis=0)


def _iterate(values, z, h, tol, max_iter, damping):
    """Vectorized damped iteration; columns of h / entries of z are independent."""
    g = values.shape[0]
    iterations = np.zeros(z.shape, dtype=int)
    done = np.zeros(z.shape, dtype=bool)
    for it in range(1, max_iter + 1):
        kh = values @ h / g
        h_new = damping / (z - kh) + (1.0 - damping) * h
        change = np.max(np.abs(h_new - h), axis=0)
        h = h_new
        newly = ~done & (change < tol)
        if np.any(newly):
            res = _residuals(values, z, h)
            newly &= res < 10.0 * tol
            iterations[newly] = it
            done |= newly
            if np.all(done):
                return h, iterations
    raise ConvergenceError(
        f"fixed point not converged after {max_iter} iterations "
        f"(worst residual {float(np.max(_residuals(values, z, h))):.3g})",
        residual=float(np.max(_residuals(values, z, h))),
        iterations=max_iter,
    )


def solve_h(
    kg: KernelGrid,
    z: complex,
    tol: float = 1e-10,
    max_iter: int = 200_000,
    damping: float = DEFAULT_DAMPING,
    start: np.ndarray | None = None,
) -> StieltjesField:
    """Solve the resolvent field equation at one spectral argument z."""
    z = complex(z)
    if z.imag <= 0:
        raise ValueError("z must lie in the upper half-plane")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not 0 < damping <= 1:
        raise ValueError("damping must be in (0, 1]")
    h0 = np.full((kg.n, 1), 1.0 / z) if start is None else start.reshape(kg.n, 1).astype(complex)
    h, iterations = _iterate(kg.values, np.array([z]), h0, tol, max_iter, damping)
    h = h[:, 0]
    return StieltjesField(
        z=z,
        grid=kg,
        values=h,
        residual=float(_residuals(kg.values, np.array([z]), h.reshape(-1, 1))[0]),
        iterations=int(iterations[0]),
    )


def g_transform(field: StieltjesField) -> complex:
    """Stieltjes transform value: the quadrature average of the field."""
    return complex(field.grid.quadrature(field.values))


def density_profile(
    kg: KernelGrid,
    energies,
    eta: float = 1e-3,
    tol: float = 1e-10,
    max_iter: int = 200_000,
    damping: float = DEFAULT_DAMPING,
):
    """Smoothed density -Im G(E + i eta)/pi on a list of energies.

    All energies are iterated in lockstep (they are independent columns);
    for small eta the solve is continued from larger imaginary parts, each
    stage warm-starting the next.  Returns (densities, diagnostics).
    """
    energies = np.asarray(energies, dtype=float)
    if eta <= 0:
        raise ValueError("eta must be positive")
    etas = [eta]
    while etas[-1] < 0.1:
        etas.append(min(etas[-1] * 4.0, 0.1))
    h = None
    iterations_total = 0
    for stage_eta in reversed(etas):
        z = energies + 1j * stage_eta
        if h is None:
            h = np.broadcast_to(1.0 / z, (kg.n, z.size)).copy()
        stage_tol = tol if stage_eta == eta else max(tol, 1e-8)
        h, iters = _iterate(kg.values, z, h, stage_tol, max_iter, damping)
        iterations_total += int(np.max(iters))
    z = energies + 1j * eta
    g = np.asarray(kg.quadrature(h.T))
    density = -g.imag / np.pi
    diagnostics = {
        "iterations": iterations_total,
        "residual": float(np.max(_residuals(kg.values, z, h))),
        "damping": damping,
        "eta": eta,
    }
    return density, diagnostics


def write_density(energies, densities, eta: float, path, header: str | None = None) -> None:
    """CSV rows "E,density,eta"."""
    with open(path, "w") as fh:
        if header:
            fh.write(f"# {header}\n")
        fh.write("E,density,eta\n")
        for e, d in zip(energies, densities):
            fh.write(f"{e:.17g},{d:.17g},{eta:.17g}\n")
