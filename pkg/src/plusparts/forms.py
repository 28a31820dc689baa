"""Class numbers of real quadratic fields from cycles of reduced indefinite forms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .arith import is_square, is_squarefree, isqrt, squarefree_kernel
from .contfrac import fundamental_unit

# Exhaustive enumeration touches about D/8 (a, b) pairs.
D_CAP = 10**8


class CapExceeded(Exception):
    """Discriminant beyond the enumeration cap; use the analytic estimate."""


class Bqf(NamedTuple):
    a: int
    b: int
    c: int

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def __str__(self):
        return f"({self.a}, {self.b}, {self.c})"


@dataclass(frozen=True)
class ClassNumberResult:
    m: int
    D: int
    h_narrow: int
    unit_norm: int
    h: int
    method: str = "form_cycles"


def discriminant_of(m: int) -> int:
    if m < 2 or not is_squarefree(m):
        raise ValueError(f"m={m} must be squarefree and >= 2")
    return m if m % 4 == 1 else 4 * m


def is_fundamental(D: int) -> bool:
    if D % 4 == 1:
        return is_squarefree(D)
    if D % 4 == 0:
        k = D // 4
        return k % 4 in (2, 3) and is_squarefree(k)
    return False


def _check_disc(D: int):
    if D <= 0 or is_square(D):
        raise ValueError(f"discriminant {D} must be a positive nonsquare")


def is_reduced(f: Bqf) -> bool:
    # sqrt D is irrational, so integer comparisons against s = isqrt(D) are
    # exact:  b < sqrt D <=> b <= s, and so on.
    D = f.disc
    _check_disc(D)
    s = isqrt(D)
    a2 = 2 * abs(f.a)
    return 0 < f.b <= s and s < a2 + f.b and a2 - f.b <= s


def _normalize(a: int, b: int, s: int) -> int:
    """b' = b (mod 2a): in (-|a|, |a|] if |a| > sqrt D, else in (sqrt D - 2|a|, sqrt D)."""
    n = 2 * abs(a)
    if abs(a) > s:
        return (b + abs(a) - 1) % n - abs(a) + 1
    return s - (s - b) % n


def rho(f: Bqf) -> Bqf:
    """Successor of a reduced form in its cycle."""
    if not is_reduced(f):
        raise ValueError(f"{f} is not reduced")
    D = f.disc
    s = isqrt(D)
    b = _normalize(f.c, -f.b, s)
    return Bqf(f.c, b, (b * b - D) // (4 * f.c))


def reduce(f: Bqf) -> Bqf:
    """A reduced form properly equivalent to f."""
    D = f.disc
    _check_disc(D)
    s = isqrt(D)
    a, b, c = f
    b = _normalize(a, b, s)
    c = (b * b - D) // (4 * a)
    while not is_reduced(Bqf(a, b, c)):
        b = _normalize(c, -b, s)
        a, c = c, (b * b - D) // (4 * c)
    return Bqf(a, b, c)


def reduced_forms(D: int) -> list:
    """Every reduced form of discriminant D, both signs of a."""
    _check_disc(D)
    s = isqrt(D)
    out = []
    for b in range(s, 0, -1):
        if (b - D) % 2:
            continue
        N = (D - b * b) // 4  # = -a c
        lo = (s - b) // 2 + 1  # 2a + b > s
        hi = (s + b) // 2  # 2a - b <= s
        for a in range(lo, hi + 1):
            if N % a == 0:
                out.append(Bqf(a, b, -N // a))
                out.append(Bqf(-a, b, N // a))
    return out


def cycles(D: int) -> list:
    """Partition of the reduced forms of discriminant D into rho-cycles."""
    remaining = set(reduced_forms(D))
    out = []
    while remaining:
        start = max(remaining)
        cyc = [start]
        f = rho(start)
        while f != start:
            cyc.append(f)
            f = rho(f)
        remaining.difference_update(cyc)
        out.append(cyc)
    return out


def principal_form(D: int) -> Bqf:
    s = isqrt(D)
    b = s if (s - D) % 2 == 0 else s - 1
    return Bqf(1, b, (b * b - D) // 4)


def principal_cycle(D: int) -> list:
    start = principal_form(D)
    cyc = [start]
    f = rho(start)
    while f != start:
        cyc.append(f)
        f = rho(f)
    return cyc


def class_number_narrow(D: int, cap: int | None = D_CAP) -> int:
    _check_disc(D)
    if not is_fundamental(D):
        raise ValueError(f"{D} is not a fundamental discriminant")
    if cap is not None and D > cap:
        raise CapExceeded(f"D={D} is above the enumeration cap {cap}")
    forms = reduced_forms(D)
    count, seen = 0, set()
    for f in forms:
        if f in seen:
            continue
        count += 1
        g = f
        while True:
            seen.add(g)
            g = rho(g)
            if g == f:
                break
    return count


def class_number(m: int, cap: int | None = D_CAP) -> ClassNumberResult:
    D = discriminant_of(m)
    hn = class_number_narrow(D, cap)
    norm = fundamental_unit(m).unit_norm
    if norm == 1:
        assert hn % 2 == 0, (m, hn)
        h = hn // 2
    else:
        h = hn
    return ClassNumberResult(m, D, hn, norm, h)


def field_class_number(n: int, cap: int | None = D_CAP) -> ClassNumberResult:
    """Class number of Q(sqrt n) for any nonsquare n >= 2, via its squarefree kernel."""
    k = squarefree_kernel(n)
    if k == 1:
        raise ValueError(f"{n} is a perfect square")
    return class_number(k, cap)
