"""Truncated occupation-probability recurrence with correlation decay.

Phi_G(K, t) mimics the exact avoidance probability Pi_G(K) but carries a
depth budget: Phi(K, 0) = Phi(K, 1) = 1, Phi(empty, t) = 1, and for
t >= 2 and nonempty K

    1/Phi_G(K, t) = 1 + lam * sum_{v in K} Phi_{G-K}(K_v, t-1)
                       * (1 + lam/2 * sum_u Phi_{G-K-K_v}(K_uv, t-2)),

the inner sum over ordered pairs (u, v) of distinct nonadjacent members
of K.  At lam = 1 both Phi and Pi live in [1/9, 1], and the decay bound
|Pi^{1/4} - Phi(t)^{1/4}| <= mu_g * gamma^{t/2} with gamma = 49/50 and
mu_g = 2 drives the depth formula `required_t`.

The recursion tree is memoized on (active vertex set, block, t): each
recursion level deletes at least one vertex, so on a graph with n
vertices any t >= 2n+2 is saturated and Phi equals Pi up to working
precision.  Arithmetic uses mpmath with at least a 128-bit mantissa.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from mpmath import mp

from .blocks import pair_residual_block, residual_block
from .intersection import IGraph

#: Decay rate certified by the gradient-norm bound (F(z) < 0.971 < 49/50).
GAMMA = Fraction(49, 50)

#: mu_g = |g(1)| + |max_s g(s)| for the transform g(s) = s^(1/4).
MU_G = 2

#: Largest activity for which the decay guarantee is proven.
LAMBDA_CERTIFIED_MAX = Fraction(1077, 1000)


def _as_fraction(lam) -> Fraction:
    if isinstance(lam, Fraction):
        return lam
    if isinstance(lam, (int, float, str)):
        return Fraction(lam)
    raise TypeError(f"unsupported activity type {type(lam).__name__}")


@dataclass(frozen=True)
class PhiParams:
    """Evaluation parameters: truncation depth t, activity lam, precision."""

    t: int
    lam: Fraction = Fraction(1)
    prec: int = 128
    gamma: Fraction = GAMMA
    mu_g: int = MU_G

    def __post_init__(self):
        object.__setattr__(self, "lam", _as_fraction(self.lam))
        if self.t < 0:
            raise ValueError("t must be nonnegative")
        if self.lam <= 0:
            raise ValueError("lam must be positive")
        if self.prec < 53:
            raise ValueError("precision below double is pointless here")

    @property
    def lambda_certified(self) -> bool:
        """False flags activities beyond the proven decay interval; Phi is
        still computed, but the error bound is not guaranteed."""
        return self.lam <= LAMBDA_CERTIFIED_MAX


class PhiCache:
    """Grow-only memo for Phi values.

    Keyed by (active vertex set, block, t); valid only for views of one
    base graph evaluated with one (lam, prec) pair, which is checked on
    first use.  Re-computation always reproduces the cached value, so
    concurrent insertion of identical values is harmless.
    """

    def __init__(self):
        self._data: dict = {}
        self._binding = None
        self._adj_ref = None
        self.hits = 0
        self.misses = 0

    def bind(self, g: IGraph, params: PhiParams) -> None:
        binding = (id(g._adj), params.lam, params.prec)
        if self._binding is None:
            self._binding = binding
            self._adj_ref = g._adj
        elif self._binding != binding:
            raise ValueError(
                "PhiCache reused across a different base graph, activity, or precision"
            )

    def get(self, key):
        val = self._data.get(key)
        if val is None:
            self.misses += 1
        else:
            self.hits += 1
        return val

    def put(self, key, val) -> None:
        self._data[key] = val

    def __len__(self) -> int:
        return len(self._data)


def _to_mpf(x) -> "mp.mpf":
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / mp.mpf(x.denominator)
    return mp.mpf(x)


def as_fraction(x) -> Fraction:
    """Exact rational value of an mpmath float (bit-for-bit, any precision)."""
    from mpmath.libmp import to_rational

    raw = x._mpf_ if hasattr(x, "_mpf_") else mp.mpf(x)._mpf_
    p, q = to_rational(raw)
    return Fraction(int(p), int(q))


def phi(g: IGraph, k, params: PhiParams, cache: PhiCache | None = None):
    """Evaluate Phi_g(k, params.t) for a simplicial block k of g."""
    if cache is None:
        cache = PhiCache()
    cache.bind(g, params)
    with mp.workprec(params.prec):
        lam = _to_mpf(params.lam)
        return _phi(g, frozenset(k), params.t, lam, cache)


def _phi(g: IGraph, k: frozenset[int], t: int, lam, cache: PhiCache):
    """Recurrence core; caller must hold the working-precision context."""
    if not k or t <= 1:
        return mp.mpf(1)
    key = (g.active, tuple(sorted(k)), t)
    hit = cache.get(key)
    if hit is not None:
        return hit
    g_k = g.induced(k)
    denom = mp.mpf(1)
    for v in sorted(k):
        kv = residual_block(g, k, v)
        phi_v = _phi(g_k, kv, t - 1, lam, cache)
        inner = mp.mpf(0)
        for u in sorted(k):
            if u == v or g.has_edge(u, v):
                continue
            kuv = pair_residual_block(g, k, u, v)
            inner += _phi(g_k.induced(kv), kuv, t - 2, lam, cache)
        denom += lam * phi_v * (1 + lam / 2 * inner)
    val = 1 / denom
    cache.put(key, val)
    return val


def required_t(n: int, epsilon: float, params: PhiParams | None = None) -> int:
    """Truncation depth guaranteeing the per-factor error epsilon/(9 mu_g n)
    ... i.e. t = 2 * ceil(log(9 mu_g n / eps) / log(1/gamma))."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0 < epsilon < 1:
        raise ValueError("epsilon must lie in (0, 1)")
    gamma = params.gamma if params else GAMMA
    mu = params.mu_g if params else MU_G
    ratio = math.log(9 * mu * n / epsilon) / math.log(
        gamma.denominator / gamma.numerator
    )
    return 2 * math.ceil(ratio)


def decay_error_bound(t: int, params: PhiParams | None = None) -> float:
    """Guaranteed bound mu_g * gamma^(t/2) on |g(Pi) - g(Phi(t))|."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    gamma = params.gamma if params else GAMMA
    mu = params.mu_g if params else MU_G
    return mu * math.exp(0.5 * t * math.log(gamma.numerator / gamma.denominator))


def saturation_t(n: int) -> int:
    """Depth beyond which Phi is exact: each recursion level removes at
    least one vertex per at most two depth units."""
    return 2 * n + 2
