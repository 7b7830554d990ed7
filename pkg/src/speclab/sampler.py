"""Random graph samplers and their Gaussian surrogate matrices.

Every sampler is deterministic given its integer seed: a single PCG64 stream
per sample, consumed in a fixed documented order.  Replicated experiments
derive per-replicate seeds with :func:`replicate_seed`, which hashes
(base_seed, replicate), so a pool of workers produces the same samples no
matter how the replicates are distributed.

Adjacency matrices are stored as the upper-triangular 0/1 entries only
(row-major over pairs i < j), which makes symmetry and the zero diagonal
structural rather than checked.
"""

from __future__ import annotations

import hashlib
import json
import struct
from dataclasses import dataclass, field

import numpy as np

from .errors import AdmissibilityError
from .kernel import Kernel

__all__ = [
    "GraphSample",
    "SociabilityLaw",
    "replicate_seed",
    "vertex_positions",
    "sample_adjacency",
    "sample_chung_lu",
    "sample_sociability",
    "gaussian_surrogate_adjacency",
    "gaussian_surrogate_laplacian",
    "write_edge_list",
    "sample_manifest",
    "digest_of",
]


def replicate_seed(base_seed: int, replicate: int) -> int:
    """Deterministic 64-bit sub-seed for one replicate of an experiment."""
    payload = struct.pack("<qq", int(base_seed), int(replicate))
    return int.from_bytes(hashlib.blake2b(payload, digest_size=8).digest(), "little")


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(int(seed)))


def vertex_positions(n: int) -> np.ndarray:
    """Positions i/N for vertices i = 1..N (matching row/column i-1)."""
    return np.arange(1, n + 1) / n


@dataclass(frozen=True)
class GraphSample:
    """A simple undirected graph plus the provenance of its draw.

    ``upper`` holds the adjacency entries for pairs i < j in row-major order;
    ``aux`` carries per-vertex reals where the model has them (sociability
    weights, soft-configuration multipliers).
    """

    n_vertices: int
    upper: np.ndarray
    eps: float
    model: str
    seed: int
    aux: np.ndarray | None = field(default=None)

    def __post_init__(self):
        n = self.n_vertices
        if n < 2:
            raise ValueError("need at least 2 vertices")
        if self.upper.shape != (n * (n - 1) // 2,):
            raise ValueError("upper-triangle length does not match vertex count")

    @property
    def edge_count(self) -> int:
        return int(np.count_nonzero(self.upper))

    def adjacency(self, dtype=np.float64) -> np.ndarray:
        """Dense symmetric 0/1 adjacency matrix with zero diagonal."""
        n = self.n_vertices
        a = np.zeros((n, n), dtype=dtype)
        iu = np.triu_indices(n, 1)
        a[iu] = self.upper
        a[(iu[1], iu[0])] = self.upper
        return a

    def degrees(self) -> np.ndarray:
        n = self.n_vertices
        deg = np.zeros(n, dtype=np.int64)
        iu, ju = np.triu_indices(n, 1)
        on = self.upper.astype(bool)
        np.add.at(deg, iu[on], 1)
        np.add.at(deg, ju[on], 1)
        return deg

    def edge_list(self) -> np.ndarray:
        """Edges as rows (i, j) with 0-based i < j."""
        iu, ju = np.triu_indices(self.n_vertices, 1)
        on = self.upper.astype(bool)
        return np.column_stack([iu[on], ju[on]])


@dataclass(frozen=True)
class SociabilityLaw:
    """Per-vertex weight distribution: uniform[a,b], discrete atoms, or constant."""

    kind: str
    params: tuple

    @staticmethod
    def uniform(a: float, b: float) -> "SociabilityLaw":
        if not 0 <= a < b:
            raise ValueError("uniform law needs 0 <= a < b")
        return SociabilityLaw("uniform", (float(a), float(b)))

    @staticmethod
    def constant(value: float) -> "SociabilityLaw":
        if value < 0:
            raise ValueError("constant law needs a nonnegative value")
        return SociabilityLaw("constant", (float(value),))

    @staticmethod
    def discrete(atoms, probs) -> "SociabilityLaw":
        a = tuple(float(x) for x in atoms)
        p = tuple(float(x) for x in probs)
        if len(a) != len(p) or not a:
            raise ValueError("discrete law needs matching nonempty atoms/probs")
        if any(x < 0 for x in a):
            raise ValueError("discrete law atoms must be nonnegative")
        if any(w < 0 for w in p) or abs(sum(p) - 1.0) > 1e-12:
            raise ValueError("discrete law probabilities must be nonnegative and sum to 1")
        return SociabilityLaw("discrete", (a, p))

    def sup_support(self) -> float:
        if self.kind == "uniform":
            return self.params[1]
        if self.kind == "constant":
            return self.params[0]
        atoms, probs = self.params
        return max(a for a, p in zip(atoms, probs) if p > 0)

    def moment(self, p: int) -> float:
        if self.kind == "uniform":
            a, b = self.params
            return (b ** (p + 1) - a ** (p + 1)) / ((b - a) * (p + 1))
        if self.kind == "constant":
            return self.params[0] ** p
        atoms, probs = self.params
        return sum(w * a**p for a, w in zip(atoms, probs))

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        if self.kind == "uniform":
            a, b = self.params
            return a + (b - a) * rng.random(size)
        if self.kind == "constant":
            return np.full(size, self.params[0])
        atoms, probs = self.params
        return np.asarray(atoms)[rng.choice(len(atoms), size=size, p=np.asarray(probs))]

    def to_dict(self) -> dict:
        if self.kind == "uniform":
            return {"kind": "uniform", "a": self.params[0], "b": self.params[1]}
        if self.kind == "constant":
            return {"kind": "constant", "value": self.params[0]}
        atoms, probs = self.params
        return {"kind": "discrete", "atoms": list(atoms), "probs": list(probs)}

    @staticmethod
    def from_dict(spec: dict) -> "SociabilityLaw":
        kind = spec.get("kind")
        if kind == "uniform":
            return SociabilityLaw.uniform(spec["a"], spec["b"])
        if kind == "constant":
            return SociabilityLaw.constant(spec["value"])
        if kind == "discrete":
            return SociabilityLaw.discrete(spec["atoms"], spec["probs"])
        raise ValueError(f"unknown sociability law kind {kind!r}")


def _bernoulli_upper(p_upper: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    return (rng.random(p_upper.size) < p_upper).astype(np.uint8)


def sample_adjacency(kernel: Kernel, n: int, eps: float, seed: int) -> GraphSample:
    """Inhomogeneous Erdos-Renyi draw: edge {i,j} with probability eps*w(i/N, j/N)."""
    if n < 2:
        raise ValueError("need at least 2 vertices")
    if eps < 0:
        raise ValueError("eps must be nonnegative")
    if eps * kernel.upper_bound > 1.0:
        raise AdmissibilityError(
            f"eps * kernel bound = {eps * kernel.upper_bound:.6g} exceeds 1; "
            "edge probabilities must stay within [0, 1]"
        )
    fvals = kernel.pair_matrix(vertex_positions(n))
    iu = np.triu_indices(n, 1)
    upper = _bernoulli_upper(eps * fvals[iu], _rng(seed))
    return GraphSample(n, upper, float(eps), "inhomogeneous", int(seed))


def sample_chung_lu(degrees, seed: int) -> GraphSample:
    """Chung-Lu draw: edge {i,j} with probability d_i d_j / sum(d)."""
    d = np.asarray(degrees, dtype=float)
    if d.ndim != 1 or d.size < 2:
        raise ValueError("need a degree sequence of length >= 2")
    if np.any(d <= 0):
        raise ValueError("degrees must be positive")
    sigma = float(d.sum())
    m = float(d.max())
    if m * m > sigma:
        raise AdmissibilityError(
            f"max degree product {m * m:.6g} exceeds total degree {sigma:.6g}; "
            "some pair probability would exceed 1"
        )
    iu = np.triu_indices(d.size, 1)
    p_upper = d[iu[0]] * d[iu[1]] / sigma
    upper = _bernoulli_upper(p_upper, _rng(seed))
    return GraphSample(d.size, upper, m * m / sigma, "chung_lu", int(seed))


def sample_sociability(law: SociabilityLaw, n: int, eps: float, seed: int) -> GraphSample:
    """Two-level draw: i.i.d. weights R_i from the law, then edges w.p. eps*R_i*R_j.

    The law's mean is not forced to 1 here; the moment-recovery pipeline
    assumes a standardized law and is only as good as that assumption.
    """
    if n < 2:
        raise ValueError("need at least 2 vertices")
    sup = law.sup_support()
    if eps * sup * sup > 1.0:
        raise AdmissibilityError(
            f"eps * sup(R)^2 = {eps * sup * sup:.6g} exceeds 1; "
            "edge probabilities must stay within [0, 1]"
        )
    rng = _rng(seed)
    weights = law.sample(rng, n)  # drawn before the pair uniforms, fixed order
    iu = np.triu_indices(n, 1)
    p_upper = eps * weights[iu[0]] * weights[iu[1]]
    upper = _bernoulli_upper(p_upper, rng)
    return GraphSample(n, upper, float(eps), "sociability", int(seed), aux=weights)


def gaussian_surrogate_adjacency(kernel: Kernel, n: int, seed: int) -> np.ndarray:
    """Wigner matrix with variance profile w(i/N, j/N)/N and zero diagonal.

    Shares the limiting spectral law of the scaled Bernoulli adjacency; the
    diagonal is kept at zero for exact comparability with the graph model
    (its contribution to spectral statistics is O(1/N)).
    """
    if n < 2:
        raise ValueError("need at least 2 vertices")
    fvals = kernel.pair_matrix(vertex_positions(n))
    iu = np.triu_indices(n, 1)
    g = _rng(seed).standard_normal(iu[0].size)
    m = np.zeros((n, n))
    m[iu] = np.sqrt(fvals[iu] / n) * g
    m[(iu[1], iu[0])] = m[iu]
    return m


def gaussian_surrogate_laplacian(kernel: Kernel, n: int, seed: int) -> np.ndarray:
    """Gaussian surrogate of the centered Laplacian: off-diagonal Wigner profile
    plus an independent Gaussian diagonal with the matching row variances."""
    if n < 2:
        raise ValueError("need at least 2 vertices")
    fvals = kernel.pair_matrix(vertex_positions(n))
    iu = np.triu_indices(n, 1)
    rng = _rng(seed)
    g = rng.standard_normal(iu[0].size)  # pair stream first, then the diagonal
    z = rng.standard_normal(n)
    m = np.zeros((n, n))
    m[iu] = np.sqrt(fvals[iu] / n) * g
    m[(iu[1], iu[0])] = m[iu]
    row_var = (fvals.sum(axis=1) - np.diag(fvals)) / n
    m[np.diag_indices(n)] = z * np.sqrt(row_var)
    return m


def write_edge_list(sample: GraphSample, path, header: str | None = None) -> None:
    """CSV rows "i,j" with 0-based i < j, one edge per line."""
    with open(path, "w") as fh:
        if header:
            fh.write(f"# {header}\n")
        fh.write("i,j\n")
        for i, j in sample.edge_list():
            fh.write(f"{i},{j}\n")


def sample_manifest(sample: GraphSample, kernel_digest: str) -> dict:
    """JSON-serializable provenance record for one sample."""
    manifest = {
        "model": sample.model,
        "N": sample.n_vertices,
        "eps": sample.eps,
        "seed": sample.seed,
        "kernel_digest": kernel_digest,
    }
    if sample.aux is not None:
        manifest["aux"] = [float(v) for v in sample.aux]
    return manifest


def digest_of(obj) -> str:
    """sha256 of the canonical JSON serialization of a parameter object."""
    payload = json.dumps(obj, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()
