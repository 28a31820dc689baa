"""Exact integer helpers: square roots, Jacobi symbols, primality, factoring."""

from __future__ import annotations

import math
import random
import time
from typing import NamedTuple

# Deterministic Miller-Rabin witnesses: the first 12 primes decide every
# n < 3.3e24 (Sorenson & Webster), which covers all of [0, 2**64).
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_DETERMINISTIC_LIMIT = 3317044064679887385961981

# Extra random rounds above the deterministic limit.  A composite survives
# one strong round with probability <= 1/4, so the bound is 4**-PROBABLE_ROUNDS.
PROBABLE_ROUNDS = 32

TRIAL_LIMIT = 1 << 16
DEFAULT_TIME_BUDGET = 10.0

_SMALL_PRIMES = [p for p in range(2, 1000) if all(p % q for q in range(2, math.isqrt(p) + 1))]


class BudgetExceeded(Exception):
    """Factoring gave up before finishing; the answer is unknown, not negative."""

    def __init__(self, n, partial=None):
        super().__init__(f"factoring budget exceeded for {n}")
        self.n = n
        self.partial = partial or {}


class Factorization(NamedTuple):
    pairs: tuple  # ((prime, exponent), ...) in increasing prime order

    def value(self) -> int:
        out = 1
        for p, e in self.pairs:
            out *= p**e
        return out

    def primes(self) -> list[int]:
        return [p for p, _ in self.pairs]

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def __str__(self):
        if not self.pairs:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.pairs)


def isqrt(n: int) -> int:
    if n < 0:
        raise ValueError("isqrt of a negative number")
    return math.isqrt(n)


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1, by binary reciprocity."""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"jacobi needs an odd positive modulus, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n) for n >= 1."""
    if n <= 0:
        raise ValueError("kronecker needs a positive modulus")
    result = 1
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    return result * jacobi(a, n)


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic below 3.3e24; above, a composite passes with probability
    at most 4**-PROBABLE_ROUNDS."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES[:25]:
        if n % p == 0:
            return n == p
    if n < _SMALL_PRIMES[24] ** 2:
        return True
    if not all(_strong_probable_prime(n, a) for a in _DETERMINISTIC_BASES):
        return False
    if n < _DETERMINISTIC_LIMIT:
        return True
    rng = random.Random(n)
    return all(_strong_probable_prime(n, rng.randrange(2, n - 1)) for _ in range(PROBABLE_ROUNDS))


def _brent(n: int, deadline: float) -> int:
    """Return a nontrivial factor of the odd composite n (Pollard-Brent)."""
    rng = random.Random(n)
    while True:
        if time.monotonic() > deadline:
            raise TimeoutError
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
            if time.monotonic() > deadline:
                raise TimeoutError
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factor(n: int, time_budget: float | None = DEFAULT_TIME_BUDGET) -> Factorization:
    """Complete prime factorization of n >= 1.

    Trial division up to TRIAL_LIMIT, then Pollard-Brent on what remains.
    Raises BudgetExceeded (carrying the partial result) when time_budget
    seconds run out.
    """
    if n < 1:
        raise ValueError("factor needs a positive integer")
    deadline = time.monotonic() + (time_budget if time_budget is not None else math.inf)
    found: dict[int, int] = {}

    def add(p, e=1):
        found[p] = found.get(p, 0) + e

    for p in (2, 3, 5):
        while n % p == 0:
            n //= p
            add(p)
    # wheel mod 30
    p, steps, i = 7, (4, 2, 4, 2, 4, 6, 2, 6), 0
    while p <= TRIAL_LIMIT and p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
                add(p)
        p += steps[i]
        i = (i + 1) % 8

    stack = [n] if n > 1 else []
    while stack:
        q = stack.pop()
        if q == 1:
            continue
        if is_prime(q):
            add(q)
            continue
        r = math.isqrt(q)
        if r * r == q:
            stack += [r, r]
            continue
        try:
            g = _brent(q, deadline)
        except TimeoutError:
            raise BudgetExceeded(q, found) from None
        stack += [g, q // g]
    return Factorization(tuple(sorted(found.items())))


def is_squarefree(n: int, time_budget: float | None = DEFAULT_TIME_BUDGET) -> bool:
    if n < 1:
        raise ValueError("is_squarefree needs a positive integer")
    return all(e == 1 for _, e in factor(n, time_budget).pairs)


def squarefree_kernel(n: int, time_budget: float | None = DEFAULT_TIME_BUDGET) -> int:
    """The squarefree k with n = k * f**2; Q(sqrt n) = Q(sqrt k)."""
    k = 1
    for p, e in factor(n, time_budget).pairs:
        if e % 2:
            k *= p
    return k


def vp(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("vp(0) is infinite")
    if p < 2:
        raise ValueError("vp needs a prime")
    n, mu = abs(n), 0
    while n % p == 0:
        n //= p
        mu += 1
    return mu
