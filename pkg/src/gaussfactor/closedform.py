"""Analytic predictors for the moduli and values of the sum families.

Every function here has an independent brute-force counterpart in
`gausssums`; the test suite checks each pair against the other.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .numtheory import ResidueClass, jacobi_symbol, residue_class
from .gausssums import standard_gauss


@dataclass(frozen=True)
class ModulusPrediction:
    """Predicted modulus (or modulus squared) with the rule that produced it."""

    value: float
    rule: str
    shared_factor: int | None = None

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValueError("predicted modulus must be nonnegative")


def g1b_closed(b: int) -> complex:
    """Elementary Gauss sum G(1, b) by residue class of b:
    (1+i)sqrt(b), sqrt(b), 0, i*sqrt(b) for b in M0, M1, M2, M3."""
    if b < 1:
        raise ValueError("b must be positive")
    root = math.sqrt(b)
    return {
        ResidueClass.M0: complex(root, root),
        ResidueClass.M1: complex(root, 0.0),
        ResidueClass.M2: 0j,
        ResidueClass.M3: complex(0.0, root),
    }[residue_class(b)]


def gab_closed(a: int, b: int) -> complex:
    """G(a, b) = (a/b) G(1, b) for odd b coprime to a."""
    if b < 1 or b % 2 == 0:
        raise ValueError("b must be odd and positive")
    if math.gcd(a, b) != 1:
        raise ValueError("a and b share a factor; apply factor_out first")
    return int(jacobi_symbol(a, b)) * g1b_closed(b)


def factor_out(a: int, b: int) -> tuple[int, int, int]:
    """Common-factor extraction (p, a/p, b/p) with p = gcd(a, b), so that
    G(a, b) = p * G(a/p, b/p)."""
    if b < 1:
        raise ValueError("b must be positive")
    p = math.gcd(a, b)
    if p == 0:
        raise ValueError("gcd(a, b) must be positive")
    return p, a // p, b // p


_CLASS_WEIGHT = {
    ResidueClass.M0: 2.0,
    ResidueClass.M1: 1.0,
    ResidueClass.M2: 0.0,
    ResidueClass.M3: 1.0,
}


def predict_discrete_modulus2(n_target: int, l: int) -> ModulusPrediction:
    """|S_N(l)|^2 in the broad-weight limit.

    Coprime l: (1/N) * {2, 1, 0} by N's class.  Shared factor p = gcd(l, N),
    N = r*p: (p/N) * {2, 1, 0} by r's class.
    """
    if n_target < 1 or l < 1:
        raise ValueError("n_target and l must be positive")
    p = math.gcd(l, n_target)
    if p == 1:
        cls = residue_class(n_target)
        return ModulusPrediction(_CLASS_WEIGHT[cls] / n_target, f"coprime-M{cls.k}")
    r = n_target // p
    cls = residue_class(r)
    return ModulusPrediction(
        p * _CLASS_WEIGHT[cls] / n_target, f"shared-M{cls.k}", shared_factor=p
    )


def predict_finite_w_modulus(q: int, r: int, m: int) -> float:
    """|W_m^(r)| by the parity table: sqrt(1/r) for odd r; for even r either
    sqrt(2/r) or 0 depending on the parities of rq/2 and m."""
    if r < 1:
        raise ValueError("r must be positive")
    if math.gcd(q, r) != 1:
        raise ValueError("q and r must be coprime")
    if r % 2 == 1:
        return math.sqrt(1.0 / r)
    half = (r * q) // 2
    if half % 2 == 0:
        return math.sqrt(2.0 / r) if m % 2 == 0 else 0.0
    return 0.0 if m % 2 == 0 else math.sqrt(2.0 / r)


def reciprocity_transform(n_target: int, l: int) -> complex:
    """Reciprocity route to the complete reciprocate sum:
    e^{-i pi/4} / (2 sqrt(2 l N)) * G(l, 4N)."""
    if l < 1 or n_target < 1:
        raise ValueError("n_target and l must be positive")
    g = standard_gauss(l, 4 * n_target)
    return cmath.exp(-1j * math.pi / 4) / (2.0 * math.sqrt(2.0 * l * n_target)) * g


def predict_reciprocate_modulus(n_target: int, l: int) -> ModulusPrediction:
    """|A_N^(l-1)(l)| for odd N, exact.

    With s = gcd(l, N) and k = l/s: 1 at factors (k = 1), otherwise
    sqrt(2/k), sqrt(1/k) or 0 by k's residue class; s = 1 recovers the
    coprime baselines sqrt(2/l), sqrt(1/l), 0.
    """
    if n_target % 2 == 0:
        raise ValueError("N must be odd")
    if l < 1:
        raise ValueError("l must be positive")
    s = math.gcd(l, n_target)
    k = l // s
    if k == 1:
        return ModulusPrediction(1.0, "factor", shared_factor=s if s > 1 else None)
    cls = residue_class(k)
    value = {
        ResidueClass.M0: math.sqrt(2.0 / k),
        ResidueClass.M1: math.sqrt(1.0 / k),
        ResidueClass.M2: 0.0,
        ResidueClass.M3: math.sqrt(1.0 / k),
    }[cls]
    rule = f"coprime-M{cls.k}" if s == 1 else f"shared-M{cls.k}"
    return ModulusPrediction(value, rule, shared_factor=s if s > 1 else None)


def wtilde_modulus2(a: int, c: int, r: int, m: int) -> float:
    """|wtilde(a, b, c, r)|^2 where the closed form is known.

    Main theorem: 1/r whenever gcd(a, r) = 1 and a*r - c is even, for every b.
    Specialization a = 2q, c = 0 with even r: (1/r)(1 + cos(pi (qr/2 + m))),
    i.e. 0 or 2/r by the parity of qr/2 + m.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if math.gcd(a, r) == 1 and (a * r - c) % 2 == 0:
        return 1.0 / r
    if a % 2 == 0 and c == 0 and r % 2 == 0 and math.gcd(a // 2, r) == 1:
        q = a // 2
        return 0.0 if ((q * r) // 2 + m) % 2 == 1 else 2.0 / r
    raise ValueError(
        f"no closed form for (a={a}, c={c}, r={r}): requires gcd(a,r)=1 with "
        f"a*r-c even, or the a=2q, c=0, even-r specialization"
    )


def predict_nonfactor_baseline(n_target: int) -> float:
    """Coprime-argument baseline of |S_N|^2: 2/N, 1/N or 0 by N's class."""
    if n_target < 1:
        raise ValueError("n_target must be positive")
    return _CLASS_WEIGHT[residue_class(n_target)] / n_target
