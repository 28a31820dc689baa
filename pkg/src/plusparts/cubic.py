"""Cubic certificates for 3 | h(Q(sqrt(3(4*3^n - 1)))), n = 0 (mod 3).

For alpha = (1 + sqrt d')/2 in Q(sqrt d'), d' = 1 - 4*3^n, the trace is 1 and
the norm 3^n is a cube, giving

    f(X) = X^3 - 3 * 3^(n/3) X - 1.

If f is irreducible its splitting field is a cyclic cubic extension of
K = Q(sqrt(-3 d')) unramified outside 3; it is unramified at 3 as well when
the Llorente-Nart conditions for total ramification all fail.  An unramified
cyclic cubic extension of K forces 3 | h(K).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import BudgetExceeded, DEFAULT_TIME_BUDGET, is_squarefree, isqrt, vp
from .forms import D_CAP, CapExceeded, class_number, field_class_number


class CertificateError(Exception):
    """A checked fact came out contrary to the theorem."""


@dataclass(frozen=True)
class CubicPoly:
    a: int
    b: int  # X^3 - a X - b

    def __call__(self, x: int) -> int:
        return x**3 - self.a * x - self.b

    def __str__(self):
        return f"X^3 - {self.a}X - {self.b}"


def alpha_data(n: int) -> tuple[int, int, int]:
    """(d', trace, norm) of alpha = (1 + sqrt d')/2."""
    d_prime = 1 - 4 * 3**n
    return d_prime, 1, (1 - d_prime) // 4


def _check_n(n: int):
    if n < 3 or n % 3:
        raise ValueError(f"n={n} must be a positive multiple of 3 (the norm 3^n must be a cube)")


def build_f_alpha(n: int) -> CubicPoly:
    _check_n(n)
    d_prime, trace, norm = alpha_data(n)
    if d_prime in (1, -3):
        raise ValueError(f"d'={d_prime} is excluded")
    cube_root = 3 ** (n // 3)
    assert cube_root**3 == norm
    return CubicPoly(3 * cube_root, trace)


def irreducible_mod2(p: CubicPoly) -> bool:
    """A cubic over F_2 is irreducible iff it has no root there."""
    return p(0) % 2 != 0 and p(1) % 2 != 0


def is_irreducible(p: CubicPoly) -> tuple[bool, str]:
    """Exact verdict via rational roots (a monic integer cubic is reducible
    over Q iff it has an integer root dividing the constant term)."""
    method = "mod2" if irreducible_mod2(p) else "rational_root"
    if p.b == 0:
        return False, "rational_root"
    b = abs(p.b)
    divisors = [d for d in range(1, isqrt(b) + 1) if b % d == 0]
    divisors += [b // d for d in divisors]
    exact = all(p(r) != 0 for d in divisors for r in (d, -d))
    if method == "mod2":
        assert exact, "mod 2 irreducibility contradicts a rational root"
    return exact, method


def ln_conditions(p: CubicPoly) -> tuple[bool, bool, bool]:
    a, b = p.a, p.b
    vb = vp(b, 3) if b else None
    va = vp(a, 3) if a else None
    ln1 = vb is not None and 1 <= vb and (va is None or vb <= va)
    ln2 = a % 3 == 0 and a % 9 != 3 and b % 3 != 0 and (b * b - a - 1) % 9 != 0
    ln3 = a % 9 == 3 and b % 3 != 0 and (b * b - a - 1) % 27 != 0
    return ln1, ln2, ln3


def ln_applicable(p: CubicPoly) -> bool:
    """The criterion needs v3(a) < 2 or v3(b) < 3."""
    va = vp(p.a, 3) if p.a else float("inf")
    vb = vp(p.b, 3) if p.b else float("inf")
    return va < 2 or vb < 3


def totally_ramified_at_3(p: CubicPoly) -> bool | None:
    """True/False per Llorente-Nart; None when the criterion is inapplicable."""
    if not is_irreducible(p)[0]:
        raise ValueError(f"{p} is reducible")
    if not ln_applicable(p):
        return None
    return any(ln_conditions(p))


@dataclass(frozen=True)
class ThreeDivCert:
    n: int
    m: int
    d_prime: int
    poly: CubicPoly
    irreducible: bool
    irreducible_method: str
    ln_conditions: tuple
    applicable: bool
    squarefree: bool | None  # None: factoring budget ran out
    h: int | None
    notes: list = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return self.irreducible and self.applicable and not any(self.ln_conditions)


def certify_3_divisibility(
    n: int,
    cap: int | None = D_CAP,
    time_budget: float | None = DEFAULT_TIME_BUDGET,
) -> ThreeDivCert:
    poly = build_f_alpha(n)
    d_prime, trace, norm = alpha_data(n)
    m = -3 * d_prime
    irreducible, method = is_irreducible(poly)
    applicable = ln_applicable(poly)
    ln = ln_conditions(poly)
    notes = [
        "irreducible f => splitting field is a cyclic cubic extension of K unramified outside 3"
        " (cited, not recomputed); its cubic subfield L has v3(D_L) != 5 (recorded, not computed)",
    ]
    try:
        squarefree = is_squarefree(m, time_budget)
    except BudgetExceeded:
        squarefree = None
        notes.append("squarefree status of m unknown: the plus-part statement 3 | H+(m) is conditional;"
                     " the field statement 3 | h(K) is not")
    h = None
    if squarefree is not None:
        try:
            h = (class_number(m, cap) if squarefree else field_class_number(m, cap)).h
        except CapExceeded:
            notes.append(f"h(m) not computed: discriminant {m} above cap")
    cert = ThreeDivCert(n, m, d_prime, poly, irreducible, method, ln, applicable, squarefree, h, notes)
    if h is not None and cert.verdict and h % 3:
        raise CertificateError(f"certificate for n={n} holds but h({m})={h} is not divisible by 3")
    return cert
