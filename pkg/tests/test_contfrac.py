import math

import pytest

from plusparts.arith import is_squarefree
from plusparts.contfrac import (
    CriterionInapplicable,
    SurdState,
    expand,
    fundamental_unit,
    regulator_from_expansion,
    represents,
    signed_q_cycle,
)

from oracles import brute_representable, forms_representable, smallest_unit

SQUAREFREE_2000 = [m for m in range(2, 2001) if is_squarefree(m)]
BRUTE_Y_CAP = 2 * 10**5


def test_expand_82():
    e = expand(82)
    assert e.preperiod == [9]
    assert e.period == [18]
    assert {s.Q for s in e.periodic_states} == {1}


def test_expand_322():
    e = expand(322)
    assert e.preperiod == [17]
    assert e.period == [1, 16, 1, 34]
    assert [s.Q for s in e.states[:5]] == [1, 33, 2, 33, 1]


def test_expand_sqrt2():
    e = expand(2)
    assert (e.preperiod, e.period) == ([1], [2])


def test_expand_rejects():
    with pytest.raises(ValueError):
        expand(49)
    with pytest.raises(ValueError):
        expand(10, 1, 2)  # 2 does not divide 10 - 1


def test_expand_state_closes_period():
    for d in (7, 13, 94, 1766, 4902):
        e = expand(d)
        k = len(e.preperiod)
        assert e.states[-1] == e.states[k]
        r = math.sqrt(d)
        assert all(0 < s.Q < 2 * r for s in e.periodic_states)


def test_floor_negative_q():
    # (1 + sqrt 13) / -4 = -1.15...
    assert SurdState(1, -4, 13).floor() == -2
    assert SurdState(3, -2, 13).floor() == math.floor((3 + math.sqrt(13)) / -2)


@pytest.mark.parametrize(
    "m, x, y, norm",
    [(82, 9, 1, -1), (322, 323, 18, 1), (1766, 1765, 42, 1), (2, 1, 1, -1), (5, 1, 1, -1), (17, 4, 1, -1)],
)
def test_fundamental_unit_examples(m, x, y, norm):
    u = fundamental_unit(m)
    assert (u.x, u.y, u.unit_norm) == (x, y, norm)


@pytest.mark.parametrize("m", [1, 12, 0])
def test_fundamental_unit_rejects(m):
    with pytest.raises(ValueError):
        fundamental_unit(m)


def test_unit_pell_identity_and_parity():
    for m in range(2, 10**4 + 1):
        if not is_squarefree(m):
            continue
        u = fundamental_unit(m)
        scale = 4 if u.half_integral else 1
        assert u.norm_identity() == scale * u.unit_norm, m
        assert u.regulator > 0
        if m % 4 != 1:
            assert u.unit_norm == (-1) ** len(expand(m).period), m


def test_unit_minimal_against_search():
    for m in range(2, 400):
        if not is_squarefree(m):
            continue
        ref = smallest_unit(m, y_limit=20000)
        if ref is None:
            continue
        u = fundamental_unit(m)
        x, y, t = ref
        if m % 4 == 1 and x % 2 == 0:
            x, y, t = x // 2, y // 2, t // 4
        assert (u.x, u.y) == (x, y), m
        assert u.unit_norm == (1 if t > 0 else -1)


def test_regulator_two_routes_agree():
    for m in (2, 5, 13, 94, 1766, 4902, 6377289):
        r1 = fundamental_unit(m).regulator
        r2 = regulator_from_expansion(m)
        assert abs(r1 - r2) <= 2**-40 * r1 * 10


def test_represents_examples():
    assert represents(82, -1).witness == (9, 1)
    for m, N in [(82, 3), (82, -3), (1766, 7), (1766, -7), (322, 3), (322, -3)]:
        assert represents(m, N).witness is None, (m, N)


def test_represents_inapplicable():
    with pytest.raises(CriterionInapplicable):
        represents(82, 10)
    with pytest.raises(CriterionInapplicable):
        represents(82, 0)


def test_represents_imprimitive():
    # -4 = -1 * 2^2: twice the solution (9, 1) of -1
    assert represents(82, -4).witness == (18, 2)


def test_signed_cycle_covers_both_signs_for_odd_period():
    assert signed_q_cycle(82) == [-1, 1]


def _y_max(m, N, log_unit):
    # y_max = ceil(sqrt(|N| (E + 1) / m)), evaluated in logs for huge E
    log_e1 = log_unit + math.log1p(math.exp(-log_unit))
    return 0.5 * (math.log(abs(N)) + log_e1 - math.log(m))


def test_represents_matches_oracles():
    """CF verdict vs brute force over 1 <= y <= y_max; for the m whose y_max is
    out of reach, vs the form-cycle oracle (and truncated brute force)."""
    checked_brute = checked_forms = 0
    for m in SQUAREFREE_2000:
        u = fundamental_unit(m)
        # E is the fundamental unit of Z[sqrt m]: eps^3 when eps is half-integral
        log_e = 3 * u.regulator if u.half_integral else u.regulator
        Ns = [N for N in range(-math.isqrt(m), math.isqrt(m) + 1) if N and N * N < m]
        log_ymax = {N: _y_max(m, N, log_e) for N in Ns}
        Y = min(BRUTE_Y_CAP, math.ceil(math.exp(min(max(log_ymax.values()), 30))))
        hits = brute_representable(m, Y)
        principal = None
        for N in Ns:
            rep = represents(m, N)
            if rep.solvable:
                x, y = rep.witness
                assert y > 0 and x * x - m * y * y == N
            if N in hits:
                assert rep.solvable, (m, N)
            if log_ymax[N] <= math.log(Y):
                # a norm -1 unit links the solution sets of N and -N
                expected = N in hits or (u.unit_norm == -1 and -N in hits)
                assert rep.solvable == expected, (m, N)
                checked_brute += 1
            else:
                if principal is None:
                    from plusparts.forms import principal_cycle

                    principal = set(principal_cycle(4 * m))
                assert rep.solvable == forms_representable(m, N, principal), (m, N)
                checked_forms += 1
    assert checked_brute > checked_forms > 0
