"""Continued fractions of quadratic surds (P + sqrt d)/Q.

Everything here runs in exact integer arithmetic.  The expansion follows the
PQa recurrence

    a_i = floor((P_i + sqrt d) / Q_i)
    P_{i+1} = a_i Q_i - P_i
    Q_{i+1} = (d - P_{i+1}^2) / Q_i

together with the numerators G_i = Q_0 A_i - P_0 B_i and denominators B_i of
the convergents, which satisfy  G_i^2 - d B_i^2 = (-1)^(i+1) Q_{i+1} Q_0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .arith import is_square, is_squarefree, isqrt


class CriterionInapplicable(ValueError):
    """represents() was asked about |N| >= sqrt(m), outside the CF criterion."""


@dataclass(frozen=True)
class SurdState:
    P: int
    Q: int
    d: int

    def __post_init__(self):
        if self.Q == 0:
            raise ValueError("Q must be nonzero")
        if (self.d - self.P * self.P) % self.Q:
            raise ValueError(f"Q={self.Q} does not divide d - P^2 for d={self.d}, P={self.P}")

    def floor(self) -> int:
        s = isqrt(self.d)
        if self.Q > 0:
            return (self.P + s) // self.Q
        return (self.P + s + 1) // self.Q

    def value(self) -> float:
        return (self.P + math.sqrt(self.d)) / self.Q

    def next(self) -> SurdState:
        a = self.floor()
        P = a * self.Q - self.P
        return SurdState(P, (self.d - P * P) // self.Q, self.d)


@dataclass(frozen=True)
class SurdExpansion:
    d: int
    start: SurdState
    preperiod: list
    period: list
    # states[i] is the state whose partial quotient is quotients[i]; one extra
    # trailing state closes the cycle (equal to the first periodic state).
    states: list = field(repr=False)

    @property
    def quotients(self) -> list:
        return self.preperiod + self.period

    @property
    def periodic_states(self) -> list:
        k = len(self.preperiod)
        return self.states[k : k + len(self.period)]


def expand(d: int, P0: int = 0, Q0: int = 1) -> SurdExpansion:
    """Preperiod and one full period of the expansion of (P0 + sqrt d)/Q0."""
    if d <= 0 or is_square(d):
        raise ValueError(f"d={d} must be a positive nonsquare")
    state = SurdState(P0, Q0, d)
    seen: dict[tuple, int] = {}
    states, quotients = [], []
    while (state.P, state.Q) not in seen:
        seen[state.P, state.Q] = len(states)
        states.append(state)
        quotients.append(state.floor())
        state = state.next()
    k = seen[state.P, state.Q]
    states.append(state)
    return SurdExpansion(d, states[0], quotients[:k], quotients[k:], states)


def pqa(d: int, P0: int = 0, Q0: int = 1):
    """Yield (i, a_i, G_i, B_i, Q_{i+1}) indefinitely."""
    state = SurdState(P0, Q0, d)
    G2, G1 = -P0, Q0
    B2, B1 = 1, 0
    i = 0
    while True:
        a = state.floor()
        G2, G1 = G1, a * G1 + G2
        B2, B1 = B1, a * B1 + B2
        state = state.next()
        yield i, a, G1, B1, state.Q
        i += 1


@dataclass(frozen=True)
class FundamentalUnit:
    m: int
    x: int
    y: int
    unit_norm: int
    regulator: float
    half_integral: bool
    period_length: int

    def norm_identity(self) -> int:
        """x^2 - m y^2; equals unit_norm (or 4 * unit_norm when half-integral)."""
        return self.x * self.x - self.m * self.y * self.y


def _log_unit(x: int, y: int, m: int, half: bool) -> float:
    # x + y sqrt m = 2x - (x - y sqrt m) and |x - y sqrt m| < 1, so for big x
    # log(2x) is accurate to far better than 2**-40 relative.
    if x < 1 << 40:
        v = x + y * math.sqrt(m)
    else:
        return math.log(x) + (0.0 if half else math.log(2))
    return math.log(v / 2 if half else v)


def fundamental_unit(m: int) -> FundamentalUnit:
    """Fundamental unit of the ring of integers of Q(sqrt m), m squarefree.

    m = 2, 3 (mod 4): the convergent of sqrt m closing the first period.
    m = 1 (mod 4): the expansion of (1 + sqrt m)/2, first return of Q to 2.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    if not is_squarefree(m):
        raise ValueError(f"m={m} is not squarefree")
    if m % 4 == 1:
        P0, Q0 = 1, 2
    else:
        P0, Q0 = 0, 1
    for i, _, G, B, Q in pqa(m, P0, Q0):
        if Q == Q0:
            break
    norm = (-1) ** (i + 1)
    x, y, half = G, B, Q0 == 2
    if half and x % 2 == 0:
        x, y, half = x // 2, y // 2, False
    return FundamentalUnit(m, x, y, norm, _log_unit(x, y, m, half), half, i + 1)


def regulator_from_expansion(m: int) -> float:
    """Regulator as the sum of log complete quotients over one period; never
    builds the unit itself."""
    P0, Q0 = (1, 2) if m % 4 == 1 else (0, 1)
    exp = expand(m, P0, Q0)
    return sum(math.log(st.value()) for st in exp.periodic_states)


@dataclass(frozen=True)
class Representation:
    m: int
    N: int
    witness: tuple | None  # (x, y) with x^2 - m y^2 = N, y > 0
    signed_q: list  # (-1)^(i+1) Q_{i+1} over a full sign cycle

    @property
    def solvable(self) -> bool:
        return self.witness is not None


def signed_q_cycle(m: int) -> list:
    """Signed values (-1)^(i+1) Q_{i+1} of sqrt m, i = 0 .. L-1, where L is the
    period length doubled when odd so both sign patterns are seen."""
    exp = expand(m)
    ell = len(exp.period)
    L = ell if ell % 2 == 0 else 2 * ell
    out = []
    for i, _, _, _, Q in pqa(m):
        if i == L:
            break
        out.append((-1) ** (i + 1) * Q)
    return out


def represents(m: int, N: int) -> Representation:
    """Decide x^2 - m y^2 = N for 0 < |N| < sqrt m.

    Primitive solutions come from convergents of sqrt m, with N occurring as a
    signed Q-value; imprimitive ones reduce to N/g^2 for g^2 | N.
    """
    if m < 2 or is_square(m):
        raise ValueError(f"m={m} must be a nonsquare >= 2")
    if N == 0 or N * N >= m:
        raise CriterionInapplicable(f"|N|={abs(N)} is not below sqrt({m})")
    cycle = signed_q_cycle(m)
    witness = None
    for g in range(1, isqrt(abs(N)) + 1):
        if N % (g * g):
            continue
        target = N // (g * g)
        if target not in cycle:
            continue
        for i, _, G, B, Q in pqa(m):
            if (-1) ** (i + 1) * Q == target:
                witness = (g * G, g * B)
                break
        break
    return Representation(m, N, witness, cycle)
