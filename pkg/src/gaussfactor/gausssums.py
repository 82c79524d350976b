"""Direct numerical evaluators for every sum family.

Phase discipline: sums at integer arguments reduce the quadratic phase to an
exact residue (numerator mod denominator) before the single floating-point
exponential, so 17-digit moduli are handled without precision loss.  Sums at
real arguments reduce the phase mod 1 in extended (80-bit) precision.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Any

import numpy as np

from .numtheory import is_prime, primitive_root

TWO_PI = 2.0 * math.pi

# int64 stays exact for (m*m) % b and the follow-up multiply when b is below
# this bound; larger moduli take the Python-int path.
_INT64_SAFE_MODULUS = 3_000_000_000


@dataclass(frozen=True)
class WeightProfile:
    """Gaussian weights w_m of width delta_m, truncated to |m| <= m_max.

    The discrete weights are renormalized by their own sum, so a sum with all
    phases zero evaluates to exactly 1.  `raw_weight` is the continuous
    extension (the unit-area Gaussian density) used by the Poisson-summation
    machinery.
    """

    delta_m: float
    m_max: int

    def __post_init__(self) -> None:
        if self.delta_m <= 0:
            raise ValueError("delta_m must be positive")
        if self.m_max < 1:
            raise ValueError("m_max must be >= 1")

    @classmethod
    def for_width(cls, delta_m: float) -> "WeightProfile":
        """Default truncation m_max = ceil(4 * delta_m)."""
        return cls(delta_m=delta_m, m_max=math.ceil(4 * delta_m))

    def indices(self) -> np.ndarray:
        return np.arange(-self.m_max, self.m_max + 1)

    def raw_weight(self, mu):
        """Continuous Gaussian extension w(mu), unit area."""
        mu = np.asarray(mu, dtype=float)
        amp = 1.0 / math.sqrt(TWO_PI * self.delta_m**2)
        return amp * np.exp(-0.5 * (mu / self.delta_m) ** 2)

    @property
    def norm(self) -> float:
        """Discrete normalization constant: sum of raw weights over the window."""
        return float(self.raw_weight(self.indices()).sum())

    def weights(self) -> np.ndarray:
        w = self.raw_weight(self.indices())
        return w / w.sum()


@dataclass(frozen=True)
class ContinuousSpec:
    """Parameters (A, B) of the continuous sum with phases m/A + m^2/B."""

    a_param: float
    b_param: float

    def __post_init__(self) -> None:
        if self.a_param <= 0 or self.b_param <= 0:
            raise ValueError("A and B must be strictly positive")


class SumFamily(Enum):
    CONTINUOUS = "continuous"
    DISCRETE = "discrete"
    STANDARD = "standard"
    FINITE_W = "finite_w"
    WTILDE = "wtilde"
    RECIPROCATE_TRUNCATED = "reciprocate_truncated"
    RECIPROCATE_COMPLETE = "reciprocate_complete"
    EXPONENTIAL_J = "exponential_j"
    MONTE_CARLO = "monte_carlo"
    RING = "ring"


@dataclass(frozen=True)
class SumResult:
    """A complex sum value with provenance."""

    value: complex
    family: SumFamily
    params: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not (math.isfinite(self.value.real) and math.isfinite(self.value.imag)):
            raise ValueError("sum value must be finite")


@dataclass(frozen=True)
class CharacterSpec:
    """Multiplicative character chi_k mod a prime n: chi(g^t) = exp(2pi i k t/(n-1)).

    Index 0 is the trivial character; all characters send 0 to 0 and 1 to 1.
    """

    modulus: int
    index: int

    def __post_init__(self) -> None:
        if not is_prime(self.modulus):
            raise ValueError(f"character modulus {self.modulus} is not prime")
        if not 0 <= self.index < max(self.modulus - 1, 1):
            raise ValueError("character index out of range")

    @property
    def is_trivial(self) -> bool:
        return self.index == 0


def _quad_residues(m: np.ndarray, coeff: int, modulus: int) -> np.ndarray:
    """Exact residues (m^2 * coeff) mod modulus as a float array of fractions' numerators."""
    c = coeff % modulus
    if modulus <= _INT64_SAFE_MODULUS:
        mm = np.asarray(m, dtype=np.int64)
        return ((mm * mm) % modulus * c) % modulus
    return np.array([((int(v) * int(v)) % modulus * c) % modulus for v in m], dtype=object)


def _phase_exp(residues: np.ndarray, modulus: int, sign: float = 1.0) -> np.ndarray:
    frac = np.asarray(residues, dtype=float) / modulus
    return np.exp(sign * 2j * np.pi * frac)


def continuous_sum(xi: float, spec: ContinuousSpec, w: WeightProfile) -> complex:
    """Weighted sum over |m| <= M of exp[2 pi i (m/A + m^2/B) xi].

    Phases are reduced mod 1 in 80-bit precision before exponentiation.
    """
    return complex(continuous_sum_grid(np.array([xi]), spec, w)[0])


def continuous_sum_grid(
    xis: np.ndarray, spec: ContinuousSpec, w: WeightProfile
) -> np.ndarray:
    """Vectorized continuous_sum over a grid of arguments.

    Each grid point is reduced independently (row-wise pairwise summation),
    so results are bitwise identical however the grid is chunked.
    """
    m = w.indices().astype(np.longdouble)
    coeff = m / np.longdouble(spec.a_param) + m * m / np.longdouble(spec.b_param)
    t = np.outer(np.asarray(xis, dtype=np.longdouble), coeff)
    t -= np.floor(t)
    return (np.exp(2j * np.pi * t.astype(float)) * w.weights()).sum(axis=1)


def discrete_sum(n_target: int, l: int, w: WeightProfile) -> complex:
    """Continuous sum restricted to the integer argument l: weighted exp[2 pi i m^2 l / N]."""
    if n_target < 1 or l < 1:
        raise ValueError("n_target and l must be positive")
    res = _quad_residues(w.indices(), l, n_target)
    return complex(np.sum(w.weights() * _phase_exp(res, n_target)))


def standard_gauss(a: int, b: int) -> complex:
    """Standard quadratic Gauss sum: sum over one period b of exp(2 pi i m^2 a / b)."""
    if b < 1:
        raise ValueError("b must be positive")
    res = _quad_residues(np.arange(b), a, b)
    return complex(_phase_exp(res, b).sum())


def finite_w(q: int, r: int, m: int) -> complex:
    """Finite Gauss sum (1/r) sum_p exp[2 pi i (q p^2 + m p) / r]."""
    if r < 1:
        raise ValueError("r must be positive")
    p = np.arange(r, dtype=np.int64)
    res = ((p * p) % r * (q % r) + p * (m % r)) % r
    return complex(_phase_exp(res, r).sum() / r)


def wtilde(a: int, b: int, c: int, r: int) -> complex:
    """Half-integer-phase sum (1/r) sum_p exp[(i pi / r)(p^2 a + 2 b p + p c)]."""
    if r < 1:
        raise ValueError("r must be positive")
    return complex(wtilde_b_sweep(a, c, r, np.array([b]))[0])


def wtilde_b_sweep(a: int, c: int, r: int, b_values: np.ndarray | None = None) -> np.ndarray:
    """wtilde evaluated for every b in b_values (default: all b in [0, r)).

    The half-integer phase is reduced mod 2r exactly, so only one table of 2r
    complex exponentials is ever built.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if b_values is None:
        b_values = np.arange(r)
    p = np.arange(r, dtype=np.int64)
    two_r = 2 * r
    base = ((p * p) % two_r * (a % two_r) + p * (c % two_r)) % two_r
    table = np.exp(1j * np.pi * np.arange(two_r) / r)
    b_arr = np.asarray(b_values, dtype=np.int64) % r
    # phase index (base_p + 2 b p) mod 2r for each (b, p)
    idx = (base[None, :] + (2 * np.outer(b_arr, p)) % two_r) % two_r
    return table[idx].sum(axis=1) / r


def reciprocate_truncated(n_target: int, l: int, m_terms: int) -> complex:
    """Truncated reciprocate sum: (1/(M+1)) sum_{m=0}^{M} exp(-2 pi i m^2 N / l)."""
    if l < 1:
        raise ValueError("l must be positive")
    if m_terms < 1:
        raise ValueError("m_terms must be >= 1")
    res = _quad_residues(np.arange(m_terms), n_target, l)
    return complex(_phase_exp(res, l, sign=-1.0).sum() / m_terms)


def reciprocate_complete(n_target: int, l: int) -> complex:
    """Complete reciprocate sum: all l terms, (1/l) sum exp(-2 pi i m^2 N / l)."""
    if l < 1:
        raise ValueError("l must be positive")
    return reciprocate_truncated(n_target, l, l)


def exponential_sum(n_target: int, l: int, j: int, m_terms: int) -> complex:
    """Generalized sum with phases m^j: (1/(M+1)) sum exp(-2 pi i m^j N / l)."""
    if l < 1 or m_terms < 1:
        raise ValueError("l and m_terms must be positive")
    if j < 1:
        raise ValueError("exponent j must be >= 1")
    c = n_target % l
    res = [(pow(m, j, l) * c) % l for m in range(m_terms)]
    return complex(_phase_exp(np.array(res), l, sign=-1.0).sum() / m_terms)


def monte_carlo_sum(n_target: int, l: int, sample_count: int, seed: int) -> complex:
    """Average of exp(-2 pi i m^2 N / l) over sample_count indices drawn
    uniformly without replacement from [0, l); deterministic for a given seed.

    Sampled indices are summed in ascending order, so the full index set
    reproduces reciprocate_complete bit for bit.
    """
    if l < 1:
        raise ValueError("l must be positive")
    if not 1 <= sample_count <= l:
        raise ValueError("sample_count must be in [1, l]")
    picks = sorted(random.Random(seed).sample(range(l), sample_count))
    res = _quad_residues(np.array(picks), n_target, l)
    return complex(_phase_exp(res, l, sign=-1.0).sum() / sample_count)


@lru_cache(maxsize=128)
def _dlog_table(n: int) -> tuple[int, ...]:
    """Discrete logs to the smallest primitive root: table[x] = t with g^t = x mod n."""
    g = primitive_root(n)
    table = [0] * n
    acc = 1
    for t in range(n - 1):
        table[acc] = t
        acc = (acc * g) % n
    return tuple(table)


@lru_cache(maxsize=256)
def _char_values(chi: CharacterSpec) -> np.ndarray:
    n = chi.modulus
    vals = np.zeros(n, dtype=complex)
    if n == 2:
        vals[1] = 1.0
        return vals
    t = np.array(_dlog_table(n)[1:], dtype=float)
    vals[1:] = np.exp(2j * np.pi * chi.index * t / (n - 1))
    return vals


def character_eval(chi: CharacterSpec, x: int) -> complex:
    """chi(x mod n); zero at x = 0."""
    return complex(_char_values(chi)[x % chi.modulus])


def ring_gauss(chi: CharacterSpec, beta: int) -> complex:
    """Gauss sum over Z/nZ: sum_x chi(x) exp(2 pi i beta x / n), n prime."""
    n = chi.modulus
    x = np.arange(n, dtype=np.int64)
    phases = np.exp(2j * np.pi * ((x * (beta % n)) % n) / n)
    return complex((_char_values(chi) * phases).sum())


def evaluate(family: SumFamily, **params: Any) -> SumResult:
    """Dispatch a sum evaluation by family, recording provenance."""
    dispatch = {
        SumFamily.CONTINUOUS: lambda: continuous_sum(**params),
        SumFamily.DISCRETE: lambda: discrete_sum(**params),
        SumFamily.STANDARD: lambda: standard_gauss(**params),
        SumFamily.FINITE_W: lambda: finite_w(**params),
        SumFamily.WTILDE: lambda: wtilde(**params),
        SumFamily.RECIPROCATE_TRUNCATED: lambda: reciprocate_truncated(**params),
        SumFamily.RECIPROCATE_COMPLETE: lambda: reciprocate_complete(**params),
        SumFamily.EXPONENTIAL_J: lambda: exponential_sum(**params),
        SumFamily.MONTE_CARLO: lambda: monte_carlo_sum(**params),
        SumFamily.RING: lambda: ring_gauss(**params),
    }
    value = dispatch[family]()
    readable = {
        k: (v if isinstance(v, (int, float, str)) else repr(v)) for k, v in params.items()
    }
    return SumResult(value=value, family=family, params=readable)
