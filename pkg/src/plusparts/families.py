"""The four parametric families of real quadratic fields and their checks.

    F1: m = (14(2n+1))^2 + 2     h(m) > 1, so H+(4m) > 1
    F2: m = (3(2n+1))^2 + 1      h(m) > 1, so H+(4m) > 1
    F3: m = (6(2n+1))^2 - 2      h(m) > 1, so H+(4m) > 1
    F4: m = 3(4*3^n - 1), 3 | n  3 | h(m), so 3 | H+(m)

The step from h(m) to the plus part H+ is Osada's theorem (the class group
of the maximal real subfield of Q(zeta_{sigma^2 m}) contains a copy of
C(Q(sqrt m))^2, sigma = 1 for m = 1 mod 4 and 2 otherwise).  It is cited,
never computed.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .analytic import D_CAP as ANALYTIC_CAP
from .analytic import class_number_analytic
from .arith import DEFAULT_TIME_BUDGET, BudgetExceeded, jacobi, squarefree_kernel
from .contfrac import Representation, fundamental_unit, represents
from .cubic import CertificateError
from .forms import D_CAP, CapExceeded, class_number


@dataclass(frozen=True)
class FamilySpec:
    id: str
    generator: Callable[[int], int]
    formula: str
    split_prime: int | None
    claim: str
    step: int = 1  # admissible n are multiples of step

    def admissible(self, n: int) -> bool:
        return n >= 1 and n % self.step == 0


FAMILIES = {
    "F1": FamilySpec("F1", lambda n: (14 * (2 * n + 1)) ** 2 + 2, "(14(2n+1))^2+2", 7, "h(m) > 1"),
    "F2": FamilySpec("F2", lambda n: (3 * (2 * n + 1)) ** 2 + 1, "(3(2n+1))^2+1", 3, "h(m) > 1"),
    "F3": FamilySpec("F3", lambda n: (6 * (2 * n + 1)) ** 2 - 2, "(6(2n+1))^2-2", 3, "h(m) > 1"),
    "F4": FamilySpec("F4", lambda n: 3 * (4 * 3**n - 1), "3(4*3^n-1)", None, "3 | h(m)", step=3),
}


def get_family(name) -> FamilySpec:
    if isinstance(name, FamilySpec):
        return name
    try:
        return FAMILIES[name.upper()]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}") from None


def member(family, n: int, time_budget: float | None = DEFAULT_TIME_BUDGET) -> tuple[int, bool | None]:
    """(m, squarefree) with squarefree None when factoring ran out of time."""
    fam = get_family(family)
    if not fam.admissible(n):
        raise ValueError(f"n={n} is not admissible for {fam.id}")
    m = fam.generator(n)
    try:
        kernel = squarefree_kernel(m, time_budget)
    except BudgetExceeded:
        return m, None
    return m, kernel == m


@dataclass(frozen=True)
class FamilyRow:
    family: str
    n: int
    m: int
    squarefree: bool | None
    h: int | None
    h_method: str
    claim_verified: bool | None
    error: str | None = None

    @property
    def claim(self) -> str:
        if self.error:
            return "error"
        if self.claim_verified is None:
            return "unknown"
        if self.squarefree is False:
            return "not-covered"
        if self.squarefree is None:
            return "conditional"
        return "true" if self.claim_verified else "false"


def _claim_holds(fam: FamilySpec, h: int) -> bool:
    return h % 3 == 0 if fam.id == "F4" else h > 1


def verify(
    family,
    n: int,
    analytic: bool = False,
    cap: int | None = D_CAP,
    time_budget: float | None = DEFAULT_TIME_BUDGET,
    analytic_cap: int | None = ANALYTIC_CAP,
) -> FamilyRow:
    """Class number of Q(sqrt m) and the family claim for one member.

    Non-squarefree m are evaluated on their squarefree kernel (same field)
    and reported as not covered by the theorem.
    """
    fam = get_family(family)
    m, squarefree = member(fam, n, time_budget)
    if squarefree is None:
        return FamilyRow(fam.id, n, m, None, None, "none", None)
    kernel = m if squarefree else squarefree_kernel(m, time_budget)
    h, method = None, "none"
    if not analytic:
        try:
            h, method = class_number(kernel, cap).h, "form_cycles"
        except CapExceeded:
            pass
    if h is None:
        try:
            est = class_number_analytic(kernel, cap=analytic_cap)
        except CapExceeded:
            est = None
        if est is not None and not est.ambiguous:
            h, method = est.h_rounded, "analytic_estimate"
    verdict = None if h is None else _claim_holds(fam, h)
    return FamilyRow(fam.id, n, m, squarefree, h, method, verdict)


def table(
    family,
    n_from: int,
    n_to: int,
    threads: int = 1,
    **kwargs,
) -> list[FamilyRow]:
    """Rows for every admissible n in [n_from, n_to], in ascending n."""
    fam = get_family(family)
    if n_from < 1 or n_to < n_from:
        raise ValueError(f"bad range {n_from}:{n_to}")
    ns = [n for n in range(n_from, n_to + 1) if fam.admissible(n)]

    def one(n):
        try:
            return verify(fam, n, **kwargs)
        except Exception as exc:  # isolate per-row failures
            return FamilyRow(fam.id, n, fam.generator(n), None, None, "none", None, error=str(exc))

    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            return list(pool.map(one, ns))
    return [one(n) for n in ns]


def _unit_formula(fam: FamilySpec, n: int) -> tuple[int, int]:
    k = 2 * n + 1
    if fam.id == "F1":
        s = 14 * k
        return s * s + 1, s
    if fam.id == "F2":
        return 3 * k, 1
    l = 6 * k
    return l * l - 1, l


@dataclass(frozen=True)
class NontrivialityCert:
    family: str
    n: int
    m: int
    split_prime: int
    split_symbol: int
    nonrep_plus: Representation
    nonrep_minus: Representation
    unit: tuple
    unit_expected: tuple
    notes: list = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return (
            self.split_symbol == 1
            and not self.nonrep_plus.solvable
            and not self.nonrep_minus.solvable
        )


def certify_nontrivial(family, n: int, time_budget: float | None = DEFAULT_TIME_BUDGET) -> NontrivialityCert:
    """Evidence that h(m) > 1 for a squarefree member of F1, F2 or F3.

    p splits in Q(sqrt m) since (m/p) = 1; a principal prime above p would
    need x^2 - m y^2 = +-p (m = 2 mod 4, so O = Z[sqrt m]), and both signs are
    refuted by the continued fraction of sqrt m.
    """
    fam = get_family(family)
    if fam.split_prime is None:
        raise ValueError(f"{fam.id} has no nontriviality certificate; use the 3-divisibility one")
    m, squarefree = member(fam, n, time_budget)
    if squarefree is None:
        raise BudgetExceeded(m)
    if not squarefree:
        raise ValueError(f"m={m} is not squarefree; the theorem does not apply")
    p = fam.split_prime
    notes = []
    if fam.id == "F2":
        notes.append("squarefree m is enforced: r + sqrt(m) is the fundamental unit only for the maximal order")
    symbol = jacobi(m, p)
    plus, minus = represents(m, p), represents(m, -p)
    u = fundamental_unit(m)
    expected = _unit_formula(fam, n)
    if (u.x, u.y) != expected:
        notes.append(f"fundamental unit {u.x} + {u.y} sqrt(m) differs from the family formula {expected}")
    notes.append("h(m) > 1, and by Osada's theorem C(Q(sqrt m))^2 embeds in the class group of "
                 "Q(zeta_4m)^+, hence H+(4m) > 1")
    cert = NontrivialityCert(fam.id, n, m, p, symbol, plus, minus, (u.x, u.y), expected, notes)
    if not cert.valid:
        raise CertificateError(
            f"{fam.id} n={n}: ({m}/{p}) = {symbol}, +{p}: {plus.witness}, -{p}: {minus.witness}"
        )
    return cert
