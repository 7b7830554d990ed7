"""Symmetric nonnegative connection kernels on the unit square.

A kernel assigns every pair of vertex positions (x, y) in [0,1]^2 a
nonnegative connection weight, symmetric in its arguments.  Three concrete
encodings are supported:

* ``constant``: a single value c,
* ``product``: w(x, y) = r(x) * r(y) with r tabulated on a uniform grid of
  [0,1] and linearly interpolated,
* ``grid``: an n-by-n symmetric matrix read as a step function on the
  uniform n-by-n partition of the square.

Kernels are immutable after validation and safe to share across workers.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import KernelSpecError

__all__ = [
    "Kernel",
    "ConstantKernel",
    "ProductKernel",
    "GridKernel",
    "KernelGrid",
    "kernel_from_dict",
    "load_kernel",
]


def _check_unit_interval(value, name):
    v = float(value)
    if not 0.0 <= v <= 1.0:
        raise ValueError(f"{name}={value!r} outside [0, 1]")
    return v


class Kernel:
    """Base class; concrete kernels implement ``_eval`` on canonical pairs."""

    #: finite upper bound of the kernel, set at validation time
    upper_bound: float

    def _eval(self, x, y):
        raise NotImplementedError

    def eval(self, x: float, y: float) -> float:
        """Kernel value at (x, y); symmetric by canonical argument ordering."""
        x = _check_unit_interval(x, "x")
        y = _check_unit_interval(y, "y")
        if x > y:
            x, y = y, x
        return float(self._eval(x, y))

    def row_marginal(self, x: float) -> float:
        """Square root of the x-row integral of the kernel over [0,1]."""
        raise NotImplementedError

    def pair_matrix(self, positions: np.ndarray) -> np.ndarray:
        """Kernel values at all position pairs, bit-exactly symmetric.

        The upper triangle (including the diagonal) is evaluated and mirrored,
        so entry (i, j) and entry (j, i) are the same float.
        """
        pos = np.asarray(positions, dtype=float)
        if pos.ndim != 1:
            raise ValueError("positions must be one-dimensional")
        if pos.size and (pos.min() < 0.0 or pos.max() > 1.0):
            raise ValueError("positions outside [0, 1]")
        m = np.asarray(self._eval(pos[:, None], pos[None, :]), dtype=float)
        iu = np.triu_indices(pos.size, 1)
        m[(iu[1], iu[0])] = m[iu]
        return m

    def discretize(self, n: int) -> "KernelGrid":
        """Midpoint-rule discretization on n uniform cells per axis."""
        if n < 2:
            raise ValueError("grid size must be at least 2")
        nodes = (np.arange(n) + 0.5) / n
        return KernelGrid(nodes=nodes, values=self.pair_matrix(nodes))

    def to_dict(self) -> dict:
        raise NotImplementedError

    def digest(self) -> str:
        """Stable content hash of the kernel definition."""
        payload = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(payload.encode()).hexdigest()


class ConstantKernel(Kernel):
    def __init__(self, c: float):
        c = float(c)
        if not math.isfinite(c):
            raise KernelSpecError("constant kernel: value must be finite")
        if c < 0:
            raise KernelSpecError("constant kernel: negativity (c < 0)")
        self.c = c
        self.upper_bound = c

    def _eval(self, x, y):
        shape = np.broadcast_shapes(np.shape(x), np.shape(y))
        if shape == ():
            return self.c
        return np.full(shape, self.c)

    def row_marginal(self, x: float) -> float:
        _check_unit_interval(x, "x")
        return math.sqrt(self.c)

    def to_dict(self) -> dict:
        return {"kind": "constant", "c": self.c}


class ProductKernel(Kernel):
    """w(x, y) = r(x) r(y) with r tabulated on a uniform grid of [0,1]."""

    def __init__(self, r_values):
        r = np.asarray(r_values, dtype=float)
        if r.ndim != 1 or r.size < 2:
            raise KernelSpecError("product kernel: need at least 2 tabulated values of r")
        if not np.all(np.isfinite(r)):
            raise KernelSpecError("product kernel: non-finite values in r")
        if np.any(r < 0):
            raise KernelSpecError("product kernel: negativity (r < 0 somewhere)")
        self.r_values = r
        self.r_knots = np.linspace(0.0, 1.0, r.size)
        # linear interpolation attains its max at a knot
        self.upper_bound = float(r.max()) ** 2
        self._r_integral = float(np.trapezoid(r, self.r_knots))

    def r_at(self, x):
        return np.interp(x, self.r_knots, self.r_values)

    def _eval(self, x, y):
        return self.r_at(x) * self.r_at(y)

    def row_marginal(self, x: float) -> float:
        x = _check_unit_interval(x, "x")
        return math.sqrt(float(self.r_at(x)) * self._r_integral)

    def to_dict(self) -> dict:
        return {"kind": "product", "r": self.r_values.tolist()}


class GridKernel(Kernel):
    """Step-function kernel: cell (i, j) of the uniform partition has value v[i, j]."""

    def __init__(self, values):
        v = np.asarray(values, dtype=float)
        if v.ndim != 2 or v.shape[0] != v.shape[1] or v.shape[0] < 1:
            raise KernelSpecError("grid kernel: values must be a square matrix")
        if not np.all(np.isfinite(v)):
            raise KernelSpecError("grid kernel: non-finite values")
        if np.any(v < 0):
            raise KernelSpecError("grid kernel: negativity (negative cell value)")
        if not np.array_equal(v, v.T):
            raise KernelSpecError("grid kernel: asymmetry (values != values.T)")
        self.values = v
        self.size = v.shape[0]
        self.upper_bound = float(v.max())

    def _cell(self, x):
        return np.minimum((np.asarray(x) * self.size).astype(int), self.size - 1)

    def _eval(self, x, y):
        return self.values[self._cell(x), self._cell(y)]

    def row_marginal(self, x: float) -> float:
        x = _check_unit_interval(x, "x")
        row = self.values[int(self._cell(x))]
        # exact step-function integration: each cell has width 1/size
        return math.sqrt(row.sum() / self.size)

    def to_dict(self) -> dict:
        return {"kind": "grid", "values": self.values.tolist()}


@dataclass(frozen=True)
class KernelGrid:
    """Midpoint-rule view of a kernel: nodes, values there, uniform weights."""

    nodes: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        if self.values.shape != (self.n, self.n):
            raise ValueError("values shape does not match node count")
        if np.any(self.values < 0):
            raise ValueError("negative kernel values on grid")
        if not np.array_equal(self.values, self.values.T):
            raise ValueError("kernel values on grid are not symmetric")

    @property
    def n(self) -> int:
        return self.nodes.size

    @property
    def weight(self) -> float:
        return 1.0 / self.n

    def quadrature(self, samples: np.ndarray):
        """Integral over [0,1] of a function tabulated on the nodes.

        Implemented as sum/n so integrating the constant 1 gives exactly 1.
        """
        return np.sum(samples, axis=-1) / self.n

    def row_marginal_sq(self) -> np.ndarray:
        """Per-node value of the squared row marginal (row means of the grid)."""
        return self.values.sum(axis=1) / self.n

    def row_marginal_values(self) -> np.ndarray:
        return np.sqrt(self.row_marginal_sq())


def kernel_from_dict(spec: dict) -> Kernel:
    """Build and validate a kernel from its JSON-style dict encoding."""
    if not isinstance(spec, dict) or "kind" not in spec:
        raise KernelSpecError("kernel spec: missing 'kind'")
    kind = spec["kind"]
    if kind == "constant":
        if "c" not in spec:
            raise KernelSpecError("kernel spec: constant kernel needs 'c'")
        return ConstantKernel(spec["c"])
    if kind == "product":
        if "r" not in spec:
            raise KernelSpecError("kernel spec: product kernel needs 'r'")
        return ProductKernel(spec["r"])
    if kind == "grid":
        if "values" not in spec:
            raise KernelSpecError("kernel spec: grid kernel needs 'values'")
        return GridKernel(spec["values"])
    raise KernelSpecError(f"kernel spec: unknown kind {kind!r}")


def load_kernel(path) -> Kernel:
    """Read a kernel spec file (JSON) and validate it."""
    with open(path) as fh:
        try:
            spec = json.load(fh)
        except json.JSONDecodeError as exc:
            raise KernelSpecError(f"kernel spec: invalid JSON ({exc})") from exc
    return kernel_from_dict(spec)
