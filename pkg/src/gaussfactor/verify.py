"""Self-check suites: each named suite cross-validates one analytic layer
against an independent brute-force route and reports pass/fail.

Bounded exhaustive sweeps are used wherever the cost allows; the largest
domains are covered by a fixed-seed sample of documented size.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass

import numpy as np

from . import closedform, decomposition, gausssums, nslit
from .gausssums import ContinuousSpec, WeightProfile
from .numtheory import is_prime


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def _result(name: str, failures: list[str], t0: float) -> SuiteResult:
    ok = not failures
    detail = "ok" if ok else "; ".join(failures[:5])
    return SuiteResult(name, ok, detail, time.perf_counter() - t0)


def check_closedform() -> SuiteResult:
    t0 = time.perf_counter()
    failures = []
    for b in range(1, 1001):
        if abs(gausssums.standard_gauss(1, b) - closedform.g1b_closed(b)) >= 1e-8:
            failures.append(f"g1b mismatch at b={b}")
    for b in range(1, 502, 2):
        m2 = np.arange(b, dtype=np.int64)
        m2 = (m2 * m2) % b
        for a in range(1, b):
            if math.gcd(a, b) != 1:
                continue
            brute = np.exp(2j * np.pi * ((a * m2) % b) / b).sum()
            if abs(brute - closedform.gab_closed(a, b)) >= 1e-8:
                failures.append(f"gab mismatch at (a={a}, b={b})")
    rng = random.Random(20)
    for _ in range(300):
        b = rng.randint(1, 400)
        a = rng.randint(1, 4 * b)
        p, ar, br = closedform.factor_out(a, b)
        lhs = gausssums.standard_gauss(a, b)
        rhs = p * gausssums.standard_gauss(ar, br)
        if abs(lhs - rhs) >= 1e-9:
            failures.append(f"factor_out identity fails at (a={a}, b={b})")
    return _result("closedform", failures, t0)


def check_reciprocity(pairs: int = 500, seed: int = 11) -> SuiteResult:
    t0 = time.perf_counter()
    failures = []
    rng = random.Random(seed)
    for _ in range(pairs):
        n = rng.randint(2, 2000)
        l = rng.randint(1, n)
        diff = abs(
            gausssums.reciprocate_complete(n, l) - closedform.reciprocity_transform(n, l)
        )
        if diff >= 1e-8:
            failures.append(f"reciprocity mismatch at (N={n}, l={l}): {diff:.2e}")
    # modulus predictor against brute force: full sweep for small odd N,
    # sampled arguments for every odd N up to 2001
    for n in range(3, 202, 2):
        for l in range(1, n + 1):
            diff = abs(
                abs(gausssums.reciprocate_complete(n, l))
                - closedform.predict_reciprocate_modulus(n, l).value
            )
            if diff >= 1e-9:
                failures.append(f"reciprocate modulus mismatch at (N={n}, l={l})")
    for n in range(203, 2002, 2):
        for l in {rng.randint(1, n) for _ in range(8)} | {d for d in range(2, min(n, 60)) if n % d == 0}:
            diff = abs(
                abs(gausssums.reciprocate_complete(n, l))
                - closedform.predict_reciprocate_modulus(n, l).value
            )
            if diff >= 1e-9:
                failures.append(f"reciprocate modulus mismatch at (N={n}, l={l})")
    return _result("reciprocity", failures, t0)


def check_wtilde() -> SuiteResult:
    t0 = time.perf_counter()
    failures = []
    for r in range(1, 65):
        for a in range(1, 2 * r):
            if math.gcd(a, r) != 1:
                continue
            for c in range(0, 2 * r):
                if (a * r - c) % 2 != 0:
                    continue
                vals = np.abs(gausssums.wtilde_b_sweep(a, c, r)) ** 2
                if np.max(np.abs(vals - 1.0 / r)) >= 1e-10:
                    failures.append(f"wtilde theorem fails at (a={a}, c={c}, r={r})")
    for r in range(2, 51, 2):
        for q in range(1, r):
            if math.gcd(q, r) != 1:
                continue
            for m in range(r):
                brute = abs(gausssums.finite_w(q, r, m))
                pred = closedform.predict_finite_w_modulus(q, r, m)
                if abs(brute - pred) >= 1e-9:
                    failures.append(f"parity table fails at (q={q}, r={r}, m={m})")
    return _result("wtilde", failures, t0)


def check_decomposition() -> SuiteResult:
    t0 = time.perf_counter()
    failures = []
    w = WeightProfile(delta_m=10.0, m_max=40)
    for b, q, r in ((33, 1, 11), (33, 1, 3), (51, 7, 35)):
        spec = ContinuousSpec(1.0, float(b))
        center = q * b / r
        for xi in np.linspace(center - 0.5, center + 0.5, 50):
            direct = gausssums.continuous_sum(float(xi), spec, w)
            decomp = decomposition.decomposed_sum(float(xi), q, r, spec, w)
            if abs(direct - decomp) >= 1e-6:
                failures.append(f"decomposition mismatch at (B={b}, q={q}, r={r}, xi={xi:.3f})")
    return _result("decomposition", failures, t0)


def check_nslit() -> SuiteResult:
    t0 = time.perf_counter()
    failures = []
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(1, 60)
        l = rng.randint(1, 12)
        xi = rng.uniform(-3, 3 + l)
        cfg = nslit.NSlitConfig(n, l)
        direct = nslit.green_sum(xi, cfg)
        related = nslit.relating_phase(xi, cfg) * nslit.decomposed_green(xi, cfg)
        if abs(direct - related) >= 1e-9:
            failures.append(f"green decomposition mismatch at (N={n}, l={l}, xi={xi:.3f})")
    for n in range(3, 202, 2):
        for row in nslit.nslit_factor_test(n, math.isqrt(n)):
            if row.is_factor_flag and not row.divides:
                failures.append(f"unsound slit flag: N={n}, l={row.l}")
    return _result("nslit", failures, t0)


def check_ring() -> SuiteResult:
    t0 = time.perf_counter()
    failures = []
    for n in range(2, 200):
        if not is_prime(n) or n == 2:
            continue
        for k in range(1, n - 1):
            chi = gausssums.CharacterSpec(n, k)
            g1 = gausssums.ring_gauss(chi, 1)
            if abs(abs(g1) - math.sqrt(n)) >= 1e-8:
                failures.append(f"|G| != sqrt(n) at (n={n}, k={k})")
            for beta in range(1, n):
                g = gausssums.ring_gauss(chi, beta)
                if abs(abs(g) - math.sqrt(n)) >= 1e-8:
                    failures.append(f"|G| != sqrt(n) at (n={n}, k={k}, beta={beta})")
                inv = gausssums.character_eval(chi, beta).conjugate()
                if abs(g - inv * g1) >= 1e-8:
                    failures.append(f"reduction identity fails at (n={n}, k={k}, beta={beta})")
    return _result("ring", failures, t0)


SUITES = {
    "closedform": check_closedform,
    "reciprocity": check_reciprocity,
    "wtilde": check_wtilde,
    "decomposition": check_decomposition,
    "nslit": check_nslit,
    "ring": check_ring,
}


def run(names: list[str] | None = None) -> list[SuiteResult]:
    if names is None or names == ["all"]:
        names = list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
    return [SUITES[n]() for n in names]
