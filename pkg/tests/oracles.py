"""Independent reference computations used by the tests.

Nothing here calls into the ring multiplication or the Chern calculus under
test; the ring oracle multiplies dense integer arrays with scipy and only
truncates afterwards.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb, lcm

import numpy as np
from scipy.signal import convolve

from segrebundles.ring import RingSpec


def random_element(rng: random.Random, spec: RingSpec, density: float = 0.6):
    terms = {}
    for exps in np.ndindex(*(n + 1 for n in spec.factors)):
        if rng.random() < density:
            terms[tuple(int(e) for e in exps)] = Fraction(rng.randint(-9, 9), rng.randint(1, 6))
    return spec.element(terms)


def _dense(x, shape) -> tuple[np.ndarray, int]:
    den = lcm(1, *(q.denominator for q in x.terms.values()))
    arr = np.zeros(shape, dtype=np.int64)
    for exps, q in x.terms.items():
        arr[exps] = int(q * den)
    return arr, den


def naive_product(x, y) -> dict[tuple[int, ...], Fraction]:
    """Full polynomial product, then drop every monomial past t_i^(n_i)."""
    shape = tuple(n + 1 for n in x.spec.factors)
    ax, dx = _dense(x, shape)
    ay, dy = _dense(y, shape)
    full = convolve(ax, ay, method="direct")
    truncated = full[tuple(slice(0, n) for n in shape)]
    out = {}
    for exps in np.ndindex(*shape):
        v = int(truncated[exps])
        if v:
            out[tuple(int(e) for e in exps)] = Fraction(v, dx * dy)
    return out


def bott(n: int, a: int, i: int) -> int:
    """h^i(P^n, O(a)) straight from the monomial description of cohomology."""
    if i == 0:
        return comb(n + a, n) if a >= 0 else 0
    if i == n:
        return comb(-a - 1, n) if a <= -n - 1 else 0
    return 0


def chi_line(a: int, b: int) -> int:
    # chi is multiplicative on the product: chi(P^1, O(a)) * chi(P^2, O(b))
    return (a + 1) * (b + 1) * (b + 2) // 2


def random_chern(rng: random.Random, max_rank: int = 6, bound: int = 8):
    from segrebundles.bundles import ChernData

    return ChernData(
        rng.randint(1, max_rank),
        (rng.randint(-bound, bound), rng.randint(-bound, bound)),
        (rng.randint(-bound, bound), rng.randint(-bound, bound)),
        rng.randint(-bound, bound),
    )
