"""Analytic class number estimate, used only to cross-check the form-cycle count.

For a real quadratic field of fundamental discriminant D > 0,

    h R = -sum_{0 < a < D/2} chi_D(a) log sin(pi a / D)

which is the finite form of h = sqrt(D) L(1, chi_D) / (2 R).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np

from .arith import factor
from .contfrac import fundamental_unit
from .forms import CapExceeded, discriminant_of, is_fundamental

D_CAP = 10**8
AMBIGUITY = 0.3
_CHUNK = 1 << 20


@dataclass(frozen=True)
class AnalyticEstimate:
    m: int
    D: int
    L1: float
    regulator: float
    h_est: float
    h_rounded: int
    est_error_bound: float

    @property
    def ambiguous(self) -> bool:
        return abs(self.h_est - self.h_rounded) >= AMBIGUITY


def _character_parts(D: int) -> tuple[list[np.ndarray], int]:
    """Legendre tables for the odd primes of D and the 2-part modulus (1, 4 or 8).

    chi_D is the product of the prime-discriminant characters; for an odd
    prime p that character is the Legendre symbol (a/p).
    """
    tables = []
    for p, _ in factor(D).pairs:
        if p == 2:
            continue
        t = np.full(p, -1, dtype=np.int8)
        t[0] = 0
        for lo in range(1, (p + 1) // 2, _CHUNK):
            x = np.arange(lo, min(lo + _CHUNK, (p + 1) // 2), dtype=np.int64)
            t[x * x % p] = 1
        tables.append(t)
    if D % 4:
        two = None
    else:
        # D/4 = 3 (mod 4): -4 | D.  D/4 = 2 (mod 4): +8 or -8 according to D/8.
        k = D // 4
        if k % 4 == 3:
            two = np.array([0, 1, 0, -1], dtype=np.int8)
        elif (k // 2) % 4 == 1:
            two = np.array([0, 1, 0, -1, 0, -1, 0, 1], dtype=np.int8)
        else:
            two = np.array([0, 1, 0, 1, 0, -1, 0, -1], dtype=np.int8)
    return tables, two


def _chi(a: np.ndarray, tables, two) -> np.ndarray:
    out = np.ones(a.shape, dtype=np.int8)
    for t in tables:
        out *= t[a % len(t)]
    if two is not None:
        out *= two[a % len(two)]
    return out


def _hr_float(D: int) -> float:
    tables, two = _character_parts(D)
    total = 0.0
    for lo in range(1, (D + 1) // 2, _CHUNK):
        a = np.arange(lo, min(lo + _CHUNK, (D + 1) // 2), dtype=np.int64)
        chi = _chi(a, tables, two)
        keep = chi != 0
        total += float(np.dot(chi[keep], np.log(np.sin(np.pi * a[keep] / D))))
    return -total


def _hr_mp(D: int, precision: int):
    tables, two = _character_parts(D)
    with mpmath.workprec(precision):
        total = mpmath.mpf(0)
        pi = mpmath.pi
        for lo in range(1, (D + 1) // 2, _CHUNK):
            a = np.arange(lo, min(lo + _CHUNK, (D + 1) // 2), dtype=np.int64)
            chi = _chi(a, tables, two)
            for ai, ci in zip(a.tolist(), chi.tolist()):
                if ci:
                    total += ci * mpmath.log(mpmath.sin(pi * ai / D))
        return -total


def l_one_chi(D: int, precision: int = 53, cap: int | None = D_CAP) -> float:
    """L(1, chi_D) from the finite character sum; precision in bits."""
    if D <= 0 or not is_fundamental(D):
        raise ValueError(f"{D} is not a positive fundamental discriminant")
    if cap is not None and D > cap:
        raise CapExceeded(f"D={D} above analytic cap {cap}")
    if precision <= 53:
        return 2 * _hr_float(D) / math.sqrt(D)
    with mpmath.workprec(precision):
        return 2 * _hr_mp(D, precision) / mpmath.sqrt(D)


def _regulator(m: int, precision: int):
    u = fundamental_unit(m)
    if precision <= 53:
        return u.regulator
    with mpmath.workprec(precision):
        v = u.x + u.y * mpmath.sqrt(m)
        return mpmath.log(v / 2 if u.half_integral else v)


def class_number_analytic(m: int, precision: int = 53, cap: int | None = D_CAP) -> AnalyticEstimate:
    D = discriminant_of(m)
    if cap is not None and D > cap:
        raise CapExceeded(f"D={D} above analytic cap {cap}")
    L = l_one_chi(D, precision, cap=None)
    R = _regulator(m, precision)
    if precision <= 53:
        h_est = math.sqrt(D) * L / (2 * R)
    else:
        with mpmath.workprec(precision):
            h_est = mpmath.sqrt(D) * L / (2 * R)
    h_est = float(h_est)
    # D/2 rounded log-sin terms of size <= log D, plus the regulator's 2**-40.
    eps = 2.0 ** -min(precision, 53)
    bound = (D / 2) * eps * (math.log(D) + 1) / float(R) + abs(h_est) * 2.0**-40
    return AnalyticEstimate(m, D, float(L), float(R), h_est, max(1, round(h_est)), bound)
