"""Integer arithmetic substrate: gcd, residue classes mod 4, quadratic-residue
symbols, primality, primitive roots, and exact modular phase reduction.

All functions are pure and operate on Python ints, so nothing here loses
precision for moduli in the 13-17 digit range.
"""

from __future__ import annotations

import math
from enum import IntEnum
from fractions import Fraction
from functools import lru_cache


class ResidueClass(IntEnum):
    """Residue class of an integer modulo 4 (the M_k sets)."""

    M0 = 0
    M1 = 1
    M2 = 2
    M3 = 3

    @property
    def k(self) -> int:
        return int(self)


class SymbolValue(IntEnum):
    """Value of a quadratic-residue symbol; behaves as the int -1, 0 or +1."""

    NON_RESIDUE = -1
    DIVISOR = 0
    RESIDUE = 1


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two nonnegative integers, not both zero."""
    if a < 0 or b < 0:
        raise ValueError("gcd arguments must be nonnegative")
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def residue_class(n: int) -> ResidueClass:
    """Class M_k, k = n mod 4, of a positive integer."""
    if n < 1:
        raise ValueError("n must be positive")
    return ResidueClass(n % 4)


def jacobi_symbol(a: int, b: int) -> SymbolValue:
    """Jacobi symbol (a/b) for odd b >= 1; equals the Legendre symbol for prime b.

    Zero exactly when gcd(a, b) > 1.
    """
    if b < 1 or b % 2 == 0:
        raise ValueError("lower argument must be odd and positive")
    a %= b
    result = 1
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if b % 8 in (3, 5):
                result = -result
        a, b = b, a
        if a % 4 == 3 and b % 4 == 3:
            result = -result
        a %= b
    if b != 1:
        return SymbolValue.DIVISOR
    return SymbolValue(result)


@lru_cache(maxsize=256)
def _squares_mod(b: int) -> frozenset[int]:
    return frozenset((x * x) % b for x in range(b))


def qr_indicator(a: int, b: int) -> SymbolValue:
    """Literal existence-of-x quadratic-residue indicator.

    +1 when some x satisfies b | (a - x^2) and gcd(a, b) = 1, 0 when b | a,
    -1 otherwise.  Exhaustive over x in [0, b); serves as an independent
    oracle for jacobi_symbol on prime b.
    """
    if b < 1:
        raise ValueError("b must be positive")
    if a % b == 0:
        return SymbolValue.DIVISOR
    if (a % b) in _squares_mod(b) and math.gcd(a, b) == 1:
        return SymbolValue.RESIDUE
    return SymbolValue.NON_RESIDUE


# Witnesses giving a deterministic Miller-Rabin test below 2^64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_TRIAL_LIMIT = 10**6


def is_prime(n: int) -> bool:
    """Primality test, deterministic for n < 2^64.

    Trial division below 1e6, Miller-Rabin with a fixed witness set above.
    """
    if n < 2:
        return False
    if n < _TRIAL_LIMIT:
        if n < 4:
            return True
        if n % 2 == 0:
            return False
        f = 3
        while f * f <= n:
            if n % f == 0:
                return False
            f += 2
        return True
    if n % 2 == 0:
        return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = (x * x) % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    """Distinct prime factors by trial division (desk-scale inputs)."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def primitive_root(n: int) -> int:
    """Smallest generator of (Z/nZ)* for prime n."""
    if not is_prime(n):
        raise ValueError(f"{n} is not prime")
    if n == 2:
        return 1
    order = n - 1
    prime_divs = _prime_factors(order)
    for g in range(2, n):
        if all(pow(g, order // p, n) != 1 for p in prime_divs):
            return g
    raise AssertionError("unreachable: every prime has a primitive root")


def mod_mul_phase(m: int, c: int, d: int) -> Fraction:
    """Exact phase fraction ((m^2 * c) mod d) / d in [0, 1).

    Keeps quadratic phases exact for arbitrarily large arguments; the only
    rounding happens in the final complex exponential taken by the caller.
    """
    if d < 1:
        raise ValueError("modulus must be positive")
    if m < 0:
        raise ValueError("m must be nonnegative")
    return Fraction(((m * m) % d) * (c % d) % d, d)
