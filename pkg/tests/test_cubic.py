import pytest

from plusparts.cubic import (
    CubicPoly,
    alpha_data,
    build_f_alpha,
    certify_3_divisibility,
    irreducible_mod2,
    is_irreducible,
    ln_conditions,
    totally_ramified_at_3,
)


@pytest.mark.parametrize("n, a", [(3, 9), (6, 27), (9, 81)])
def test_build_f_alpha(n, a):
    assert build_f_alpha(n) == CubicPoly(a, 1)


@pytest.mark.parametrize("n", [1, 2, 4, 5, 0, -3])
def test_build_f_alpha_rejects(n):
    with pytest.raises(ValueError):
        build_f_alpha(n)


def test_norm_is_three_power():
    for n in range(1, 200):
        d_prime, trace, norm = alpha_data(n)
        assert (1 - d_prime) // 4 == 3**n == norm
        assert (1 - d_prime) % 4 == 0
        assert trace == 1


@pytest.mark.parametrize(
    "p, expected",
    [(CubicPoly(9, 1), True), (CubicPoly(1, 0), False), (CubicPoly(27, 1), True), (CubicPoly(7, 6), False)],
)
def test_is_irreducible(p, expected):
    # X^3 - 7X - 6 = (X + 1)(X + 2)(X - 3)
    assert is_irreducible(p)[0] is expected


def test_irreducible_records_mod2_route():
    assert is_irreducible(CubicPoly(9, 1)) == (True, "mod2")
    # X^3 - 9X - 2 = X (X + 1)^2 mod 2, yet has no rational root
    assert is_irreducible(CubicPoly(9, 2)) == (True, "rational_root")


def test_mod2_never_contradicts_exact():
    for n in range(3, 61, 3):
        p = build_f_alpha(n)
        assert irreducible_mod2(p)
        assert is_irreducible(p)[0]
    for a in range(-30, 31):
        for b in range(-30, 31):
            p = CubicPoly(a, b)
            if irreducible_mod2(p):
                assert is_irreducible(p)[0], (a, b)


def _has_integer_root(p):
    return any(p(x) == 0 for x in range(-200, 201))


def test_rational_root_exact_against_scan():
    for a in range(-40, 41):
        for b in range(-40, 41):
            p = CubicPoly(a, b)
            assert is_irreducible(p)[0] == (not _has_integer_root(p)), (a, b)


@pytest.mark.parametrize(
    "a, b, expected",
    [(9, 1, False), (3, 1, True), (9, 3, True)],
)
def test_totally_ramified_examples(a, b, expected):
    assert totally_ramified_at_3(CubicPoly(a, b)) is expected


def test_ln_detail_for_9_1():
    # 1 = 10 (mod 9) defeats LN-2, 9 != 3 (mod 9) defeats LN-3
    assert ln_conditions(CubicPoly(9, 1)) == (False, False, False)
    assert ln_conditions(CubicPoly(3, 1)) == (False, False, True)


def test_inapplicable_and_reducible():
    # v3(9) = 2 and v3(27) = 3
    assert totally_ramified_at_3(CubicPoly(9, 27)) is None
    with pytest.raises(ValueError):
        totally_ramified_at_3(CubicPoly(1, 0))


def test_family_never_ramified():
    for n in range(3, 25, 3):
        p = build_f_alpha(n)
        assert is_irreducible(p)[0]
        assert totally_ramified_at_3(p) is False


@pytest.mark.parametrize("n, m, h", [(3, 321, 3), (6, 8745, 12), (12, 6377289, 36)])
def test_certify_examples(n, m, h):
    cert = certify_3_divisibility(n)
    assert cert.verdict
    assert (cert.m, cert.h) == (m, h)
    assert cert.h % 3 == 0


def test_certify_beyond_cap_still_valid():
    cert = certify_3_divisibility(24)
    assert cert.verdict and cert.h is None and cert.squarefree is True
    assert cert.m == 3389154437769


def test_certify_unknown_squarefree():
    cert = certify_3_divisibility(60, time_budget=0.0)
    assert cert.verdict
    assert cert.squarefree is None
    assert any("conditional" in s for s in cert.notes)
