"""Independent reference computations used to freeze expected test values.

Everything here is deliberately brute-force or closed-form so it shares no
code path with the package internals it is used to check.
"""

import itertools
import math

import numpy as np


def all_pair_matchings(points):
    """Every perfect matching of the given points (no crossing filter)."""
    if not points:
        yield ()
        return
    first, rest = points[0], points[1:]
    for i in range(len(rest)):
        pair = (first, rest[i])
        for sub in all_pair_matchings(rest[:i] + rest[i + 1 :]):
            yield (pair,) + sub


def has_crossing_pairs(pairs):
    for (a, b), (c, d) in itertools.combinations(pairs, 2):
        if a < c < b < d or c < a < d < b:
            return True
    return False


def brute_force_nc2(two_n):
    """Non-crossing perfect matchings by filtering all matchings."""
    return sorted(
        tuple(sorted(p)) for p in all_pair_matchings(tuple(range(1, two_n + 1))) if not has_crossing_pairs(p)
    )


def blocks_cross(b1, b2):
    for a, b in itertools.combinations(b1, 2):
        if any(a < c < b for c in b2) and any(c < a or c > b for c in b2):
            return True
    return False


def is_noncrossing_partition(blocks):
    return not any(blocks_cross(x, y) for x, y in itertools.combinations(blocks, 2))


def set_partitions(items):
    """All set partitions, blocks sorted."""
    items = list(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for sub in set_partitions(rest):
        yield ((first,),) + sub
        for i, block in enumerate(sub):
            yield sub[:i] + (tuple(sorted((first,) + block)),) + sub[i + 1 :]


def nc_set_partitions(n):
    return [p for p in set_partitions(range(1, n + 1)) if is_noncrossing_partition(p)]


def moments_from_free_cumulants(kappa, n_max):
    """m_n as the sum over non-crossing partitions of block-size cumulant products."""
    out = [1.0]
    for n in range(1, n_max + 1):
        total = 0.0
        for part in nc_set_partitions(n):
            total += math.prod(kappa.get(len(b), 0.0) for b in part)
        out.append(total)
    return out


def free_cumulants_from_moments(moments):
    """Invert the moment formula order by order (kappa_n sits in the full block)."""
    kappa = {}
    for n in range(1, len(moments)):
        rest = 0.0
        for part in nc_set_partitions(n):
            if len(part) == 1:
                continue
            rest += math.prod(kappa.get(len(b), 0.0) for b in part)
        kappa[n] = moments[n] - rest
    return kappa


def laplacian_limit_moments(n_max):
    """Moments of the f=1 centered-Laplacian limit via free cumulants:
    the limit is the free additive convolution of the radius-2 semicircle
    (second free cumulant 1) and a standard Gaussian element."""
    gauss_moments = [1.0] + [float(math.prod(range(1, p, 2))) if p % 2 == 0 else 0.0 for p in range(1, n_max + 1)]
    kappa = free_cumulants_from_moments(gauss_moments)
    kappa[2] = kappa.get(2, 0.0) + 1.0
    return moments_from_free_cumulants(kappa, n_max)


def semicircle_cdf(x):
    """CDF of the semicircle law on [-2, 2]."""
    x = np.clip(np.asarray(x, dtype=float), -2.0, 2.0)
    return 0.5 + x * np.sqrt(4.0 - x * x) / (4.0 * np.pi) + np.arcsin(x / 2.0) / np.pi


def semicircle_stieltjes(z):
    """Stieltjes transform of the radius-2 semicircle, branch ~ 1/z at infinity."""
    z = complex(z)
    return (z - np.sqrt(z - 2.0) * np.sqrt(z + 2.0)) / 2.0


def midpoint_integral(fn, n):
    """Midpoint rule on [0,1] with n cells."""
    x = (np.arange(n) + 0.5) / n
    return float(np.mean(fn(x)))
