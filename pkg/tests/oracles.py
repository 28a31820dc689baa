"""Slow, obviously-correct reference computations for the property tests.

None of these go through the continued-fraction code they are used to check.
"""

import math

import numpy as np

from plusparts import forms


def euler_criterion(a, p):
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def primes_below(n):
    sieve = bytearray([1]) * n
    sieve[:2] = b"\0\0"
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(n) if sieve[i]]


def trial_factor(n):
    out, d = {}, 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def squarefree_direct(n):
    return all(n % (d * d) for d in range(2, math.isqrt(n) + 1))


def smallest_unit(m, y_limit=10**6):
    """Smallest y >= 1 solving x^2 - m y^2 = +-1 (or +-4 for m = 1 mod 4)."""
    targets = (4, -4) if m % 4 == 1 else (1, -1)
    for y in range(1, y_limit):
        my2 = m * y * y
        sols = [(math.isqrt(my2 + t), y, t) for t in targets if math.isqrt(my2 + t) ** 2 == my2 + t]
        if sols:
            return min(sols)
    return None


def brute_representable(m, y_max):
    """Set of N, 0 < |N| < sqrt m, hit by x^2 - m y^2 for some 1 <= y <= y_max.

    |N| < sqrt m forces x to be floor(y sqrt m) or its successor.  The y = 0
    representatives N = g^2 count too: times a norm +1 unit they give y > 0.
    """
    found = {g * g for g in range(1, math.isqrt(math.isqrt(m)) + 2)}
    bound = math.isqrt(m)
    for lo in range(1, y_max + 1, 1 << 16):
        y = np.arange(lo, min(lo + (1 << 16), y_max + 1), dtype=np.int64)
        my2 = m * y * y
        x = np.floor(np.sqrt(my2.astype(np.float64))).astype(np.int64)
        x -= (x * x > my2).astype(np.int64)
        x += ((x + 1) * (x + 1) <= my2).astype(np.int64)
        for xx in (x, x + 1):
            v = xx * xx - my2
            hit = v[(v != 0) & (np.abs(v) <= bound)]
            found.update(int(t) for t in np.unique(hit))
    return {N for N in found if N * N < m}


def forms_representable(m, N, principal=None):
    """x^2 - m y^2 = N solvable iff, for some g^2 | N, N/g^2 is primitively
    represented: some form (N', b, c) of discriminant 4m is in the principal cycle."""
    D = 4 * m
    if principal is None:
        principal = set(forms.principal_cycle(D))
    for g in range(1, math.isqrt(abs(N)) + 1):
        if N % (g * g):
            continue
        n = N // (g * g)
        for b in range(0, 2 * abs(n)):
            if (b * b - D) % (4 * abs(n)):
                continue
            f = forms.Bqf(n, b, (b * b - D) // (4 * n))
            if forms.reduce(f) in principal:
                return True
    return False


def reduced_forms_brute(D):
    """All reduced (a, b, c) by scanning every |a|, b in range."""
    r = math.sqrt(D)
    out = set()
    for b in range(1, math.ceil(r)):
        for a in range(1, math.ceil(r)):
            if not (r - b < 2 * a < r + b):
                continue
            for sa in (a, -a):
                num = b * b - D
                if num % (4 * sa) == 0:
                    out.add(forms.Bqf(sa, b, num // (4 * sa)))
    return out
