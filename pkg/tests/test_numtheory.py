import math
from fractions import Fraction

import pytest

from gaussfactor import numtheory as nt


def test_gcd_examples():
    assert nt.gcd(0, 7) == 7
    assert nt.gcd(12, 1911) == 3
    assert nt.gcd(35, 51) == 1


def test_gcd_rejects_double_zero_and_negatives():
    with pytest.raises(ValueError):
        nt.gcd(0, 0)
    with pytest.raises(ValueError):
        nt.gcd(-4, 6)


def test_residue_class_examples():
    assert nt.residue_class(39) is nt.ResidueClass.M3
    assert nt.residue_class(40) is nt.ResidueClass.M0
    assert nt.residue_class(4) is nt.ResidueClass.M0


def test_residue_class_depends_only_on_n_mod_4():
    for n in range(1, 400):
        assert nt.residue_class(n).k == n % 4
        assert nt.residue_class(n) == nt.residue_class(n + 4)


def test_jacobi_examples():
    assert nt.jacobi_symbol(1, 3) == 1
    assert nt.jacobi_symbol(3, 3) == 0
    assert nt.jacobi_symbol(2, 5) == -1


def test_jacobi_rejects_even_modulus():
    with pytest.raises(ValueError):
        nt.jacobi_symbol(3, 8)


def test_jacobi_zero_iff_shared_factor():
    for b in range(1, 200, 2):
        for a in range(b):
            expect_zero = math.gcd(a, b) > 1 or (a == 0 and b > 1)
            assert (nt.jacobi_symbol(a, b) == 0) == expect_zero


def test_jacobi_periodic_in_upper_argument():
    for b in (3, 9, 15, 21, 45, 77, 225):
        for a in range(-2 * b, 2 * b, 7):
            assert nt.jacobi_symbol(a, b) == nt.jacobi_symbol(a % b, b)


def test_jacobi_matches_qr_indicator_on_primes_to_2000():
    for b in range(3, 2001, 2):
        if not nt.is_prime(b):
            continue
        for a in range(b):
            assert nt.jacobi_symbol(a, b) == nt.qr_indicator(a, b), (a, b)


def test_qr_indicator_examples():
    for b in (2, 3, 10, 17, 100):
        assert nt.qr_indicator(1, b) == 1
    assert nt.qr_indicator(2, 5) == -1  # squares mod 5 are {0, 1, 4}
    assert nt.qr_indicator(10, 5) == 0


def test_qr_indicator_matches_exhaustive_definition():
    for b in range(1, 60):
        squares = {(x * x) % b for x in range(b)}
        for a in range(-b, 2 * b):
            got = nt.qr_indicator(a, b)
            if a % b == 0:
                assert got == 0
            elif (a % b) in squares and math.gcd(a, b) == 1:
                assert got == 1
            else:
                assert got == -1


def test_is_prime_examples():
    assert nt.is_prime(41)
    assert not nt.is_prime(1)
    assert 1911 == 3 * 7 * 7 * 13
    assert not nt.is_prime(1911)


def test_is_prime_against_sieve():
    limit = 5000
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(limit**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    for n in range(limit + 1):
        assert nt.is_prime(n) == bool(sieve[n]), n


def test_is_prime_large_values():
    assert nt.is_prime(2**61 - 1)
    assert not nt.is_prime(2**61 + 1)
    assert nt.is_prime(1_000_003)
    assert not nt.is_prime(10**12 + 1)


def test_primitive_root_examples():
    assert nt.primitive_root(3) == 2
    assert nt.primitive_root(5) == 2
    assert nt.primitive_root(2) == 1
    with pytest.raises(ValueError):
        nt.primitive_root(15)


def test_primitive_root_generates_full_group():
    for n in range(3, 200):
        if not nt.is_prime(n):
            continue
        g = nt.primitive_root(n)
        seen = set()
        acc = 1
        for _ in range(n - 1):
            seen.add(acc)
            acc = (acc * g) % n
        assert seen == set(range(1, n))


def test_mod_mul_phase_examples():
    assert nt.mod_mul_phase(2, 15, 5) == 0
    assert nt.mod_mul_phase(3, 1, 7) == Fraction(2, 7)
    d = 10**13 + 1
    assert nt.mod_mul_phase(10**6, 1, d) == Fraction(10**12 % d, d)


def test_mod_mul_phase_range_and_exactness():
    for m in range(0, 50, 7):
        for c in range(-20, 21, 3):
            for d in (1, 2, 7, 97):
                f = nt.mod_mul_phase(m, c, d)
                assert 0 <= f < 1
                assert (f * d) % 1 == 0
                assert f == ((m * m * c) % d) / Fraction(d)
