from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from knotpairs.alexander import (
    LaurentPoly,
    PolynomialError,
    T,
    is_type_K_cyclic,
    p_complex_homology,
    parse_laurent,
)
from knotpairs.linalg import AbelianGroupInvariants as AG, elementary_divisors

from .oracles import det

Z, ZERO = AG(1), AG(0)
TREFOIL_POLY = T - 1 + T ** -1


def companion_minus_identity(p: LaurentPoly) -> list[list[int]]:
    """Matrix of t - 1 on Λ/(p) ≅ Z^d for p with unit leading and trailing coefficients."""
    q = p.shift(-p.low)
    d = q.high
    lead = q.coeffs[d]
    C = [[0] * d for _ in range(d)]
    for i in range(1, d):
        C[i][i - 1] = 1
    for i in range(d):
        C[i][d - 1] = -q.coeffs.get(i, 0) * lead
    return [[C[i][j] - (i == j) for j in range(d)] for i in range(d)]


def test_arithmetic():
    assert TREFOIL_POLY.evaluate_at_one() == 1
    assert TREFOIL_POLY * 0 == 0
    assert (T + 1) * (T - 1) == T ** 2 - 1
    assert str(TREFOIL_POLY) == "t - 1 + t^-1"
    assert str(-(T ** 3) + 2 * T ** -2) == "-t^3 + 2t^-2"
    with pytest.raises(PolynomialError):
        (T + 1) ** -1


def test_parsing():
    assert parse_laurent("t^-1 - 1 + t") == TREFOIL_POLY
    assert parse_laurent("2t^3 - 3*t + 4") == 2 * T ** 3 - 3 * T + 4
    assert parse_laurent("0") == LaurentPoly()
    with pytest.raises(PolynomialError):
        parse_laurent("t^ + x")


def test_type_k_examples():
    c = is_type_K_cyclic(TREFOIL_POLY)
    assert c.type_k and c.value_at_one == 1
    assert is_type_K_cyclic(LaurentPoly.constant(1)).type_k
    c = is_type_K_cyclic(T + 1)
    assert not c.type_k and c.value_at_one == 2
    assert is_type_K_cyclic(1 - T - T ** 2).sign == -1
    with pytest.raises(PolynomialError):
        is_type_K_cyclic(LaurentPoly())


def test_t_plus_one_acts_as_minus_two():
    assert companion_minus_identity(T + 1) == [[-2]]


def test_p_complex_examples():
    r = p_complex_homology(TREFOIL_POLY)
    assert [str(m) for m in r.cover_homology] == ["Z", "0", "Λ/(t - 1 + t^-1)", "0"]
    assert r.homology == (Z, Z, ZERO, ZERO) and r.milnor_consistent and r.homology_circle
    r = p_complex_homology(LaurentPoly.constant(1))
    assert [str(m) for m in r.cover_homology] == ["Z", "0", "0", "0"]
    assert r.homology == (Z, Z, ZERO, ZERO) and r.milnor_consistent
    r = p_complex_homology(T + 1)
    assert r.homology[2] == AG(0, (2,)) and r.milnor_consistent and not r.homology_circle
    with pytest.raises(PolynomialError):
        p_complex_homology(LaurentPoly())


def test_p_complex_divisible_by_t_minus_one():
    r = p_complex_homology(T - 1)
    assert r.homology == (Z, Z, Z, Z) and r.milnor_consistent


coeffs = st.lists(st.integers(-5, 5), min_size=1, max_size=7)


@given(coeffs, st.integers(-4, 4), st.integers(-6, 6))
def test_type_k_shift_invariant(cs, low, k):
    p = LaurentPoly.from_list(cs, low)
    if not p:
        return
    assert is_type_K_cyclic(p).type_k == is_type_K_cyclic(p.shift(k)).type_k


@settings(max_examples=80)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=5), st.sampled_from((1, -1)), st.sampled_from((1, -1)))
def test_companion_oracle(middle, c0, lead):
    # unit end coefficients make Λ/(p) free abelian of rank deg p
    p = LaurentPoly.from_list([c0] + middle + [lead])
    M = companion_minus_identity(p)
    assert abs(det(M)) == abs(p.evaluate_at_one())
    cert = is_type_K_cyclic(p)
    assert cert.type_k == (abs(det(M)) == 1)
    divisors = elementary_divisors(M)
    if p.evaluate_at_one():
        report = p_complex_homology(p)
        torsion = [d for d in divisors if d > 1]
        assert list(report.homology[2].torsion) == torsion


def test_random_homology_circles():
    rng = random.Random(11)
    found = 0
    while found < 50:
        p = LaurentPoly.from_list([rng.randint(-5, 5) for _ in range(rng.randint(1, 7))], rng.randint(-3, 0))
        if abs(p.evaluate_at_one()) != 1:
            continue
        found += 1
        r = p_complex_homology(p)
        assert r.homology == (Z, Z, ZERO, ZERO) and r.milnor_consistent and r.homology_circle
