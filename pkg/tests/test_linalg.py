from __future__ import annotations

import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from knotpairs.linalg import (
    AbelianGroupInvariants,
    AbelianizationMap,
    IntMatrix,
    abelianization,
    abelianized_map,
    direct_sum,
    elementary_divisors,
    invariants_from_matrix,
    matrix_rank,
    smith_normal_form,
    verify_map_abelianized,
)
from knotpairs.parsing import parse_presentation, parse_word
from knotpairs.presentation import GroupMap

from .oracles import abelian_invariants, det, invariant_factors

TREFOIL = parse_presentation("< a, b | a b a = b a b >")


def check_snf(A: IntMatrix) -> IntMatrix:
    U, D, V = smith_normal_form(A)
    assert (U @ A @ V).tolist() == D.tolist()
    assert abs(U.det()) == 1 and abs(V.det()) == 1
    for i in range(D.nrows):
        for j in range(D.ncols):
            if i != j:
                assert D[i, j] == 0
    diag = D.diagonal()
    assert all(d >= 0 for d in diag)
    for x, y in zip(diag, diag[1:]):
        assert (y == 0) or (x != 0 and y % x == 0)
    return D


def test_snf_examples():
    assert smith_normal_form([[0]])[1].tolist() == [[0]]
    assert check_snf(IntMatrix([[2, 0], [0, 3]])).diagonal() == [1, 6]
    assert check_snf(IntMatrix([[1, -1]])).tolist() == [[1, 0]]


def test_snf_degenerate_shapes():
    assert smith_normal_form(IntMatrix([], 3))[1].shape == (0, 3)
    check_snf(IntMatrix([[0, 0], [0, 0], [0, 0]]))


def test_snf_large_entries_do_not_overflow():
    big = 10**30
    D = check_snf(IntMatrix([[big, big + 1], [3 * big, 7]]))
    assert D.diagonal()[0] == 1


@settings(max_examples=150)
@given(st.integers(1, 6), st.integers(1, 6), st.data())
def test_snf_matches_determinantal_divisors(m, n, data):
    rows = data.draw(st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=m, max_size=m))
    A = IntMatrix(rows)
    D = check_snf(A)
    nonzero = [d for d in D.diagonal() if d]
    assert nonzero == invariant_factors(rows)
    assert matrix_rank(A) == len(nonzero)
    assert elementary_divisors(A) == nonzero
    if m == n:
        prod = 1
        for d in D.diagonal():
            prod *= d
        assert abs(det(rows)) == prod == abs(A.det())


def test_matrix_json_uses_decimal_strings():
    A = IntMatrix([[10**25, -3]])
    data = A.to_json()
    assert data == [[str(10**25), "-3"]]
    assert IntMatrix.from_json(json.loads(json.dumps(data))) == A


def test_invariants_validation_and_text():
    g = AbelianGroupInvariants.from_orders(2, [2, 3, 1])
    assert g == AbelianGroupInvariants(2, (6,))
    assert str(g) == "Z^2 + Z/6"
    assert str(AbelianGroupInvariants(0)) == "0"
    with pytest.raises(ValueError):
        AbelianGroupInvariants(0, (2, 3))
    with pytest.raises(ValueError):
        AbelianGroupInvariants(-1)
    assert direct_sum(AbelianGroupInvariants(0, (2,)), AbelianGroupInvariants(0, (3,))) == AbelianGroupInvariants(0, (6,))
    assert AbelianGroupInvariants.from_json(g.to_json()) == g


def test_abelianization_examples():
    assert abelianization(TREFOIL) == AbelianGroupInvariants(1)
    assert abelianization(parse_presentation("<a,b|>")) == AbelianGroupInvariants(2)
    assert abelianization(parse_presentation("<a,b|a^2,b^3>")) == AbelianGroupInvariants(0, (6,))


def test_abelianized_map_examples():
    free = parse_presentation("<a,b|>")
    assert abelianized_map(GroupMap.identity(free)).tolist() == [[1, 0], [0, 1]]
    xy = parse_presentation("<x,y|>")
    f = GroupMap(free, xy, {"a": parse_word("x y", "xy"), "b": parse_word("y^-1", "xy")})
    assert abelianized_map(f).tolist() == [[1, 1], [0, -1]]
    t = parse_presentation("<t|>")
    g = GroupMap(TREFOIL, t, {"a": parse_word("t", "t"), "b": parse_word("t", "t")})
    assert abelianized_map(g).tolist() == [[1], [1]]


def test_verify_map_examples():
    free = parse_presentation("<a,b|>")
    assert verify_map_abelianized(GroupMap(free, TREFOIL, {"a": parse_word("a", "ab"), "b": parse_word("a b", "ab")}))
    z2 = parse_presentation("<a|a^2>")
    zb = parse_presentation("<b|>")
    check = verify_map_abelianized(GroupMap(z2, zb, {"a": parse_word("b", "b")}))
    assert not check and check.relator_index == 0
    swap = GroupMap(TREFOIL, TREFOIL, {"a": parse_word("b", "ab"), "b": parse_word("a", "ab")})
    assert verify_map_abelianized(swap)


def test_abelianization_map_coordinates():
    p = parse_presentation("<a,b|a^2 b^-5>")
    ab = AbelianizationMap(p)
    images = ab.free_generator_images()
    assert abs(images["a"]) == 5 and abs(images["b"]) == 2
    assert ab.is_zero(parse_word("a^2 b^-5", "ab"))
    assert abs(ab.coordinates(parse_word("a b^-2", "ab"))[1][0]) == 1
    z6 = AbelianizationMap(parse_presentation("<a,b|a^2,b^3>"))
    assert z6.is_zero(parse_word("a^2", "ab")) and not z6.is_zero(parse_word("a", "ab"))


def test_abelianization_agrees_with_minor_oracle():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 4)
        rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(rng.randint(0, 4))]
        free, tors = abelian_invariants(rows, n)
        assert invariants_from_matrix(IntMatrix(rows, n)) == AbelianGroupInvariants(free, tors)
