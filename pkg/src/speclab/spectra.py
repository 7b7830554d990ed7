"""Matrices, scalings, and empirical spectral distributions.

The pipelines here mirror the standard preparation of a random-graph matrix
for spectral limit experiments: build the adjacency or Laplacian, subtract
the entrywise means (optional for the adjacency, the expected diagonal for
the Laplacian), scale by 1/sqrt(N*eps), and take the full spectrum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError
from .kernel import Kernel
from .sampler import GraphSample, vertex_positions

__all__ = [
    "SpectralMeasure",
    "ScaledMatrix",
    "TransformRecord",
    "build_laplacian",
    "center_scale_adjacency",
    "center_scale_laplacian",
    "self_normalized_scaling",
    "eigenvalues",
    "levy_distance",
    "levy_bound_check",
    "write_eigenvalues",
    "write_histogram",
    "write_moments",
]

MAX_MOMENT_ORDER = 20


class SpectralMeasure:
    """Probability measure with mass 1/N at each eigenvalue."""

    def __init__(self, values):
        v = np.sort(np.asarray(values, dtype=float))
        if v.size < 1:
            raise ValueError("need at least one eigenvalue")
        if not np.all(np.isfinite(v)):
            raise ValueError("non-finite eigenvalues")
        self.eigenvalues = v

    def __len__(self):
        return self.eigenvalues.size

    def moment(self, p: int) -> float:
        """p-th raw moment, accumulated with exact (fsum) summation."""
        if not 0 <= p <= MAX_MOMENT_ORDER:
            raise ValueError(f"moment order must be in [0, {MAX_MOMENT_ORDER}]")
        if p == 0:
            return 1.0
        return math.fsum(self.eigenvalues**p) / len(self)

    def cdf(self, x) -> np.ndarray:
        return np.searchsorted(self.eigenvalues, x, side="right") / len(self)

    def ks_distance(self, ref) -> float:
        """Sup distance between CDFs; exact over the jump points.

        ``ref`` is either a callable CDF or another SpectralMeasure.
        """
        lam = self.eigenvalues
        n = len(self)
        if isinstance(ref, SpectralMeasure):
            points = np.union1d(lam, ref.eigenvalues)
            return float(np.max(np.abs(self.cdf(points) - ref.cdf(points))))
        fx = np.asarray([ref(x) for x in lam], dtype=float)
        upper = np.arange(1, n + 1) / n
        lower = np.arange(0, n) / n
        return float(max(np.max(upper - fx), np.max(fx - lower)))

    def histogram(self, bins: int, value_range=None):
        """Bin edges and masses; masses always sum to 1 (outliers are clipped
        into the end bins when an explicit range is given)."""
        if bins < 1:
            raise ValueError("need at least one bin")
        lam = self.eigenvalues
        if value_range is None:
            lo, hi = float(lam[0]), float(lam[-1])
        else:
            lo, hi = map(float, value_range)
        if lo == hi:
            lo, hi = lo - 0.5, hi + 0.5
        counts, edges = np.histogram(np.clip(lam, lo, hi), bins=bins, range=(lo, hi))
        return edges, counts / len(self)


@dataclass(frozen=True)
class TransformRecord:
    """What was done to the raw matrix, sufficient to undo it."""

    subtract_mean: bool
    subtract_expected_diagonal: bool
    scale: float


@dataclass(frozen=True)
class ScaledMatrix:
    matrix: np.ndarray
    transform: TransformRecord


def build_laplacian(sample: GraphSample) -> np.ndarray:
    """Graph Laplacian with negated-degree diagonal; every row sums to zero."""
    lap = sample.adjacency(dtype=np.int64)
    lap[np.diag_indices(sample.n_vertices)] = -lap.sum(axis=1)
    return lap


def _expected_adjacency(sample: GraphSample, kernel: Kernel) -> np.ndarray:
    mean = sample.eps * kernel.pair_matrix(vertex_positions(sample.n_vertices))
    np.fill_diagonal(mean, 0.0)
    return mean


def center_scale_adjacency(
    sample: GraphSample, kernel: Kernel | None = None, subtract_mean: bool = True
) -> ScaledMatrix:
    """(A - E A) / sqrt(N eps), or raw A / sqrt(N eps) with subtract_mean off."""
    scale = 1.0 / math.sqrt(sample.n_vertices * sample.eps)
    m = sample.adjacency()
    if subtract_mean:
        if kernel is None:
            raise ValueError("subtract_mean needs the kernel that generated the sample")
        m -= _expected_adjacency(sample, kernel)
    m *= scale
    return ScaledMatrix(m, TransformRecord(subtract_mean, False, scale))


def center_scale_laplacian(
    sample: GraphSample, kernel: Kernel, subtract_mean: bool = True
) -> ScaledMatrix:
    """(Laplacian - expected diagonal) / sqrt(N eps); off-diagonal means are
    also subtracted by default (they vanish in the limit either way)."""
    scale = 1.0 / math.sqrt(sample.n_vertices * sample.eps)
    mean = _expected_adjacency(sample, kernel)
    m = build_laplacian(sample).astype(float)
    m[np.diag_indices(sample.n_vertices)] += mean.sum(axis=1)
    if subtract_mean:
        m -= mean
    m *= scale
    return ScaledMatrix(m, TransformRecord(subtract_mean, True, scale))


def self_normalized_scaling(sample: GraphSample) -> ScaledMatrix:
    """A * sqrt(N / Tr(A^2)): epsilon-free scaling whose ESD has second moment 1."""
    trace_sq = 2.0 * sample.edge_count
    if trace_sq == 0:
        raise ValueError("self-normalized scaling needs at least one edge")
    scale = math.sqrt(sample.n_vertices / trace_sq)
    return ScaledMatrix(sample.adjacency() * scale, TransformRecord(False, False, scale))


def _as_matrix(m) -> np.ndarray:
    return m.matrix if isinstance(m, ScaledMatrix) else np.asarray(m, dtype=float)


def eigenvalues(m) -> SpectralMeasure:
    """Full spectrum of a real symmetric matrix, ascending."""
    a = _as_matrix(m)
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    try:
        return SpectralMeasure(np.linalg.eigvalsh(a))
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"eigensolver did not converge: {exc}") from exc


def _diagonal_profile(lam: np.ndarray, t: np.ndarray) -> np.ndarray:
    """x-coordinate where the completed CDF graph crosses the line x + y = t.

    The completed graph of an empirical CDF (jumps filled in with vertical
    segments) meets each 45-degree line exactly once; tracking that crossing
    for both measures turns the Levy distance into a 1-D maximization.
    """
    n = lam.size
    # corner parameters: (lam_i, (i-1)/n) and (lam_i, i/n), plus the rays
    levels = np.arange(n + 1) / n
    t_corner = np.empty(2 * n)
    t_corner[0::2] = lam + levels[:-1]
    t_corner[1::2] = lam + levels[1:]
    idx = np.searchsorted(t_corner, t, side="right")
    x = np.empty_like(t, dtype=float)
    on_jump = idx % 2 == 1
    atom = np.clip(idx // 2, 0, n - 1)
    x[on_jump] = lam[atom[on_jump]]
    x[~on_jump] = t[~on_jump] - levels[idx[~on_jump] // 2]
    return x


def levy_distance(a: SpectralMeasure, b: SpectralMeasure) -> float:
    """Levy metric between two ESDs, exact for step CDFs.

    Both 45-degree crossing profiles are piecewise linear in t with slopes
    0 or 1, so their difference is extremal at the corner parameters.
    """
    la, lb = a.eigenvalues, b.eigenvalues
    t = np.concatenate(
        [
            la + np.arange(len(a)) / len(a),
            la + np.arange(1, len(a) + 1) / len(a),
            lb + np.arange(len(b)) / len(b),
            lb + np.arange(1, len(b) + 1) / len(b),
        ]
    )
    return float(np.max(np.abs(_diagonal_profile(la, t) - _diagonal_profile(lb, t))))


def levy_bound_check(a, b) -> tuple[float, float]:
    """Cube of the Levy distance between two ESDs and its trace bound.

    The first component never exceeds the second (Hoffman-Wielandt).
    """
    ma, mb = _as_matrix(a), _as_matrix(b)
    if ma.shape != mb.shape:
        raise ValueError("matrices must have the same shape")
    levy = levy_distance(eigenvalues(ma), eigenvalues(mb))
    diff = ma - mb
    bound = float(np.einsum("ij,ij->", diff, diff)) / ma.shape[0]
    return levy**3, bound


def write_eigenvalues(measure: SpectralMeasure, path, header: str | None = None) -> None:
    """One eigenvalue per line, ascending."""
    with open(path, "w") as fh:
        if header:
            fh.write(f"# {header}\n")
        for lam in measure.eigenvalues:
            fh.write(f"{lam:.17g}\n")


def write_histogram(edges: np.ndarray, masses: np.ndarray, path, header: str | None = None) -> None:
    with open(path, "w") as fh:
        if header:
            fh.write(f"# {header}\n")
        fh.write("left,right,mass\n")
        for left, right, mass in zip(edges[:-1], edges[1:], masses):
            fh.write(f"{left:.17g},{right:.17g},{mass:.17g}\n")


def write_moments(rows, path, header: str | None = None) -> None:
    """Rows of (order, value) or (order, value, stderr) as CSV."""
    rows = list(rows)
    with open(path, "w") as fh:
        if header:
            fh.write(f"# {header}\n")
        fh.write("p,value\n" if len(rows[0]) == 2 else "p,value,stderr\n")
        for row in rows:
            fh.write(",".join([str(int(row[0]))] + [f"{v:.17g}" for v in row[1:]]) + "\n")
