"""Non-crossing pair partitions and the combinatorial limiting laws.

Two deterministic spectral limits are computed here from a kernel grid:

* the adjacency limit, whose even moments are sums over non-crossing pair
  partitions of multilinear kernel integrals indexed by Kreweras-complement
  blocks, and
* the centered-Laplacian limit, whose moments add a diagonal Gaussian field
  and are sums over binary words (off-diagonal letter vs diagonal letter)
  of the same partition integrals weighted by Gaussian moments.

The module also implements the free multiplicative convolution with the
standard semicircle law at the moment level, and its inverse recursion,
which is what makes sociability-weight recovery possible.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .kernel import KernelGrid

__all__ = [
    "PairPartition",
    "SetPartition",
    "MomentSequence",
    "catalan",
    "enumerate_nc2",
    "kreweras",
    "semicircle_moments",
    "gaussian_moment",
    "boxtimes_semicircle_moments",
    "recover_rho_moments",
    "mu_moments",
    "nu_moments",
    "write_moment_table",
]

MAX_NC2_POINTS = 16
MAX_MU_ORDER = 12
MAX_NU_ORDER = 8
MIN_GRID = 16


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def _is_noncrossing(pairs) -> bool:
    for (u1, v1), (u2, v2) in itertools.combinations(pairs, 2):
        if u1 < u2 < v1 < v2 or u2 < u1 < v2 < v1:
            return False
    return True


@dataclass(frozen=True)
class PairPartition:
    """Non-crossing perfect matching of {1..2n}; pairs (u, v) with u < v, sorted by u."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        flat = sorted(p for pair in self.pairs for p in pair)
        if flat != list(range(1, 2 * len(self.pairs) + 1)):
            raise ValueError("pairs must perfectly match {1..2n}")
        if any(u >= v for u, v in self.pairs):
            raise ValueError("each pair must be ordered (u, v) with u < v")
        if list(self.pairs) != sorted(self.pairs):
            raise ValueError("pairs must be sorted by first element")
        if not _is_noncrossing(self.pairs):
            raise ValueError("pairs cross")

    @property
    def points(self) -> int:
        return 2 * len(self.pairs)


@dataclass(frozen=True)
class SetPartition:
    """Partition of {1..m} into disjoint sorted blocks."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        flat = sorted(p for block in self.blocks for p in block)
        if flat != list(range(1, len(flat) + 1)):
            raise ValueError("blocks must partition {1..m}")

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def labels(self) -> tuple[int, ...]:
        """Block index of each point 1..m, in point order (0-based labels)."""
        m = sum(len(b) for b in self.blocks)
        lab = [0] * m
        for idx, block in enumerate(self.blocks):
            for p in block:
                lab[p - 1] = idx
        return tuple(lab)


def _nc2_pairs(points: tuple[int, ...]):
    if not points:
        yield ()
        return
    first = points[0]
    for k in range(1, len(points), 2):
        partner = points[k]
        for inner in _nc2_pairs(points[1:k]):
            for outer in _nc2_pairs(points[k + 1 :]):
                yield ((first, partner),) + inner + outer


@lru_cache(maxsize=None)
def enumerate_nc2(two_n: int) -> tuple[PairPartition, ...]:
    """All non-crossing pair partitions of {1..two_n}, canonical order."""
    if two_n < 0 or two_n % 2 != 0:
        raise ValueError("need an even nonnegative number of points")
    if two_n > MAX_NC2_POINTS:
        raise ValueError(f"refusing to enumerate beyond {MAX_NC2_POINTS} points")
    return tuple(
        PairPartition(tuple(sorted(p))) for p in _nc2_pairs(tuple(range(1, two_n + 1)))
    )


def kreweras(sigma: PairPartition) -> SetPartition:
    """Kreweras complement of a non-crossing pairing; always n+1 blocks.

    Computed through the permutation identity: the complement's cycles are
    those of P^{-1} composed with the long cycle (1 2 ... m), where P swaps
    the two elements of every pair.
    """
    m = sigma.points
    perm = list(range(m))  # P^{-1} = P for a product of transpositions
    for u, v in sigma.pairs:
        perm[u - 1], perm[v - 1] = v - 1, u - 1
    seen = [False] * m
    blocks = []
    for start in range(m):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i + 1)
            i = perm[(i + 1) % m]
        blocks.append(tuple(sorted(cycle)))
    return SetPartition(tuple(sorted(blocks)))


@lru_cache(maxsize=None)
def _nc2_with_complements(two_n: int):
    return tuple((sigma, kreweras(sigma)) for sigma in enumerate_nc2(two_n))


@dataclass(frozen=True)
class MomentSequence:
    """Raw moments m_0..m_p with m_0 = 1 and a provenance tag."""

    values: tuple[float, ...]
    provenance: str = "closed_form"

    def __post_init__(self):
        if len(self.values) < 1:
            raise ValueError("need at least the zeroth moment")
        if self.values[0] != 1.0:
            raise ValueError("zeroth moment must be 1")

    @property
    def order(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, p: int) -> float:
        return self.values[p]

    @staticmethod
    def from_values(values, provenance: str) -> "MomentSequence":
        return MomentSequence(tuple(float(v) for v in values), provenance)


def semicircle_moments(p: int) -> MomentSequence:
    """Moments of the standard semicircle law, counted (not hard-coded)."""
    if p < 0 or p > MAX_NC2_POINTS:
        raise ValueError(f"order must be in [0, {MAX_NC2_POINTS}]")
    values = [1.0]
    for k in range(1, p + 1):
        values.append(float(len(enumerate_nc2(k))) if k % 2 == 0 else 0.0)
    return MomentSequence(tuple(values), "combinatorial")


def gaussian_moment(p: int) -> float:
    """Raw moments of N(0,1): (p-1)!! for even p, zero for odd p."""
    if p < 0:
        raise ValueError("order must be nonnegative")
    if p % 2 == 1:
        return 0.0
    return float(math.prod(range(1, p, 2)))


def boxtimes_semicircle_moments(rho: MomentSequence, two_n: int) -> float:
    """Moment of order two_n of (rho boxtimes semicircle); odd orders are 0.

    Each non-crossing pairing contributes the product of rho moments over
    the block sizes of its Kreweras complement.
    """
    if two_n < 0:
        raise ValueError("order must be nonnegative")
    if two_n % 2 == 1:
        return 0.0
    if two_n == 0:
        return 1.0
    n = two_n // 2
    if rho.order < n:
        raise ValueError(f"need rho moments through order {n}, have {rho.order}")
    total = 0.0
    for _, comp in _nc2_with_complements(two_n):
        total += math.prod(rho[size] for size in comp.block_sizes())
    return total


def recover_rho_moments(boxtimes: MomentSequence) -> MomentSequence:
    """Invert the boxtimes-with-semicircle map on moments, assuming m_1 = 1.

    At stage n the order-2n boxtimes moment is linear in the unknown m_n:
    the only complements containing a block of size n have all remaining
    blocks singletons, so the coefficient is a positive count obtained by
    enumeration and everything else is known from earlier stages.
    """
    n_max = boxtimes.order // 2
    if n_max < 1:
        raise ValueError("nothing to recover: need boxtimes moments through order 2")
    m = [1.0, 1.0]
    for n in range(2, n_max + 1):
        coeff = 0
        known = 0.0
        for _, comp in _nc2_with_complements(2 * n):
            sizes = comp.block_sizes()
            if max(sizes) == n:
                coeff += 1
            else:
                known += math.prod(m[size] for size in sizes)
        if coeff <= 0:
            raise ValueError("corrupted enumeration: no complement with a maximal block")
        m.append((boxtimes[2 * n] - known) / coeff)
    return MomentSequence(tuple(m), "combinatorial")


def _partition_integral(grid_values: np.ndarray, labels, diag_powers=None, f_power_table=None) -> float:
    """Multilinear kernel integral for one pairing, by exact grid contraction.

    ``labels[j]`` is the block label of cycle position j; consecutive labels
    give the kernel edges of the closed walk.  Each unordered edge must occur
    exactly twice (once per paired letter), so the integrand is a product of
    plain kernel values over distinct edges, times per-position diagonal
    powers.  The label graph is a cactus (the cycle quotient by a non-crossing
    partition), so greedy einsum contraction stays at matrix size.
    """
    m = len(labels)
    edge_count: dict[tuple[int, int], int] = {}
    for j in range(m):
        a, b = labels[j], labels[(j + 1) % m]
        if a == b:
            raise ValueError("corrupted enumeration: self-edge in the cycle quotient")
        key = (a, b) if a < b else (b, a)
        edge_count[key] = edge_count.get(key, 0) + 1
    if any(c != 2 for c in edge_count.values()):
        raise ValueError("corrupted enumeration: edge not traversed exactly twice")

    g = grid_values.shape[0]
    n_labels = max(labels) + 1
    letters = "abcdefghijklmnopqrstuvwxyz"
    subscripts = []
    operands = []
    for (a, b) in edge_count:
        subscripts.append(letters[a] + letters[b])
        operands.append(grid_values)
    if diag_powers is not None:
        for j, p in enumerate(diag_powers):
            if p > 0:
                subscripts.append(letters[labels[j]])
                operands.append(f_power_table(p))
    weight = np.full(g, 1.0 / g)
    for lab in range(n_labels):
        subscripts.append(letters[lab])
        operands.append(weight)
    return float(np.einsum(",".join(subscripts) + "->", *operands, optimize="greedy"))


def _adjacency_term(kg: KernelGrid, two_n: int) -> float:
    """Sum over pairings of the pure-kernel partition integrals."""
    total = 0.0
    for _, comp in _nc2_with_complements(two_n):
        total += _partition_integral(kg.values, comp.labels())
    return total


def mu_moments(kg: KernelGrid, two_n: int) -> float:
    """Moment of order two_n of the adjacency limit law; odd orders are 0."""
    if kg.n < MIN_GRID:
        raise ValueError(f"grid resolution must be at least {MIN_GRID}")
    if two_n < 0 or two_n > MAX_MU_ORDER:
        raise ValueError(f"order must be in [0, {MAX_MU_ORDER}]")
    if two_n % 2 == 1:
        return 0.0
    if two_n == 0:
        return 1.0
    return _adjacency_term(kg, two_n)


def _word_runs(word: tuple[bool, ...]) -> tuple[int, ...]:
    """Diagonal-run lengths immediately preceding each off-diagonal letter,
    read cyclically (anchored at the first off-diagonal letter)."""
    k = len(word)
    positions = [j for j, is_a in enumerate(word) if is_a]
    runs = []
    prev = positions[-1] - k  # wrap
    for pos in positions:
        runs.append(pos - prev - 1)
        prev = pos
    return tuple(runs)


def nu_moments(kg: KernelGrid, k: int) -> float:
    """Moment of order k of the centered-Laplacian limit law; odd orders are 0.

    Expands the k-th power of (off-diagonal field + diagonal field) over all
    2^k letter words.  A word with m off-diagonal letters contributes a sum
    over non-crossing pairings of partition integrals with the diagonal-run
    powers attached, weighted by Gaussian moments of the per-block run sums;
    the all-diagonal word contributes the Gaussian moment times the moment
    of the squared row marginal.
    """
    if kg.n < MIN_GRID:
        raise ValueError(f"grid resolution must be at least {MIN_GRID}")
    if k < 0 or k > MAX_NU_ORDER:
        raise ValueError(f"order must be in [0, {MAX_NU_ORDER}]")
    if k % 2 == 1:
        return 0.0
    if k == 0:
        return 1.0

    row_sq = kg.row_marginal_sq()
    row = np.sqrt(row_sq)

    @lru_cache(maxsize=None)
    def f_power(p: int) -> np.ndarray:
        # even powers avoid the square root entirely (exact grid arithmetic)
        return row_sq ** (p // 2) if p % 2 == 0 else row_sq ** (p // 2) * row

    total = 0.0
    for word in itertools.product((True, False), repeat=k):
        m = sum(word)
        if m == 0:
            total += gaussian_moment(k) * float(kg.quadrature(row_sq ** (k // 2)))
            continue
        if m % 2 == 1:
            continue
        runs = _word_runs(word)
        for _, comp in _nc2_with_complements(m):
            z_factor = 1.0
            for block in comp.blocks:
                z_factor *= gaussian_moment(sum(runs[j - 1] for j in block))
                if z_factor == 0.0:
                    break
            if z_factor == 0.0:
                continue
            integral = _partition_integral(kg.values, comp.labels(), runs, f_power)
            total += z_factor * integral
    return total


def write_moment_table(rows, path, header: str | None = None) -> None:
    """CSV rows "order,value,method"."""
    with open(path, "w") as fh:
        if header:
            fh.write(f"# {header}\n")
        fh.write("order,value,method\n")
        for order, value, method in rows:
            fh.write(f"{int(order)},{value:.17g},{method}\n")
