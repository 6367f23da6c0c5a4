from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from knotpairs.errors import DuplicateGeneratorError, ParseError, PresentationError, UndeclaredSymbolError
from knotpairs.linalg import abelianization, direct_sum
from knotpairs.parsing import (
    format_presentation,
    load_presentation,
    parse_presentation,
    parse_word,
    presentation_from_json,
    presentation_to_json,
)
from knotpairs.presentation import (
    GroupMap,
    Presentation,
    apply_map,
    direct_product,
    free_product,
    free_product_with_renaming,
    quotient_by_normal_closure,
)
from knotpairs.tietze import tietze_simplify
from knotpairs.words import Word, commutator, cyclically_reduce, free_reduce

from .conftest import words

TREFOIL = parse_presentation("< a, b | a b a = b a b >")


def w(text: str, gens=("a", "b", "c", "x", "y")) -> Word:
    return parse_word(text, gens)


def raw(*letters) -> Word:
    """Unreduced word from (name, sign) pairs."""
    return Word(tuple(letters))


def stack_reduce(letters):
    out = []
    for g, e in letters:
        if out and out[-1] == (g, -e):
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


# -- words ------------------------------------------------------------------

def test_free_reduce_examples():
    assert free_reduce(raw(("a", 1), ("a", -1))) == Word()
    assert free_reduce(raw(("a", 1), ("b", 1), ("b", -1), ("a", 1))) == w("a^2")
    long = raw(("a", 1), ("b", 1), ("a", -1), ("a", 1), ("b", -1), ("a", -1), ("b", 1))
    assert free_reduce(long) == w("b")
    assert free_reduce(long).letters == stack_reduce(long.letters)


def test_cyclically_reduce_examples():
    assert cyclically_reduce(w("a b a^-1")) == w("b")
    assert cyclically_reduce(w("a b a b")) == w("a b a b")
    assert cyclically_reduce(w("a^-1 b b a")) == w("b^2")


def test_word_algebra():
    x, y = w("a b"), w("b^-1 c")
    assert x * y == w("a c")
    assert (x * x.inverse()) == Word()
    assert w("a") ** 3 == w("a^3")
    assert w("a b") ** -1 == w("b^-1 a^-1")
    assert commutator(w("a"), w("b")) == w("a b a^-1 b^-1")
    assert str(Word()) == "1"
    assert w("a^2 b^-1 a").exponent_sum("a") == 3


def test_word_rejects_bad_letters():
    with pytest.raises(ValueError):
        Word((("a", 2),))


@given(words())
def test_free_reduce_idempotent_and_shortening(u):
    r = free_reduce(u)
    assert free_reduce(r) == r
    assert len(r) <= len(u)
    assert r.is_reduced()
    assert r.letters == stack_reduce(u.letters)


@given(words())
def test_cyclic_reduction_is_minimal_conjugate(u):
    c = cyclically_reduce(u)
    assert len(c) <= len(free_reduce(u))
    if len(c) > 1:
        assert c.letters[0] != (c.letters[-1][0], -c.letters[-1][1])
    assert c.exponent_sums(["a", "b", "c"]) == u.exponent_sums(["a", "b", "c"])


@given(words(), words())
def test_word_json_round_trip_and_inverse(u, v):
    assert Word.from_json(u.to_json()) == u
    assert free_reduce(u * v).inverse() == v.inverse() * u.inverse()


# -- parsing ----------------------------------------------------------------

def test_parse_equation_form():
    assert TREFOIL.generators == ("a", "b")
    assert TREFOIL.relators == (w("a b a b^-1 a^-1 b^-1"),)


def test_parse_free_group_and_empty():
    p = parse_presentation("< a | >")
    assert p.generators == ("a",) and p.relators == ()
    assert parse_presentation("<|>") == Presentation()


def test_parse_undeclared_symbol():
    with pytest.raises(UndeclaredSymbolError) as exc:
        parse_presentation("< a, b | a b a = b a b, c >")
    assert exc.value.symbol == "c"


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as exc:
        parse_presentation("< a, b |\n a b ^ >")
    assert exc.value.line == 2
    with pytest.raises(ParseError) as exc:
        parse_presentation("< a, a | >")
    assert exc.value.column == 6
    with pytest.raises(DuplicateGeneratorError):
        Presentation(("a", "a"), ())


def test_parse_extensions():
    assert parse_presentation("<a,b|aba=bab>") == TREFOIL
    assert parse_presentation("⟨a,b | a b a = b a b⟩") == TREFOIL
    assert parse_word("a'", ["a"]) == w("a^-1")
    assert parse_word("(a b)^2", ["a", "b"]) == w("a b a b")
    assert parse_word("[a, b]", ["a", "b"]) == w("a b a^-1 b^-1")
    assert parse_word("1", ["a"]) == Word()


def test_juxtaposed_names_must_split_uniquely():
    with pytest.raises(ParseError):
        parse_presentation("< a, aa, b | aab >")


def test_json_forms():
    data = presentation_to_json(TREFOIL)
    assert presentation_from_json(data) == TREFOIL
    assert load_presentation('{"generators": ["a", "b"], "relators": ["a b a = b a b"]}') == TREFOIL
    with pytest.raises(PresentationError):
        presentation_from_json({"generators": ["a"]})


def test_format():
    assert format_presentation(TREFOIL) == "< a, b | a b a b^-1 a^-1 b^-1 >"
    assert str(parse_presentation("< a | >")) == "< a | >"
    assert str(Presentation()) == "< | >"


presentations = st.builds(
    lambda rels: Presentation(("a", "b", "c"), tuple(rels)),
    st.lists(words(max_size=8), max_size=4),
)


@given(presentations)
def test_parse_serialize_round_trip(p):
    assert parse_presentation(str(p)) == p
    assert presentation_from_json(presentation_to_json(p)) == p


# -- presentation algebra ---------------------------------------------------

def test_free_product_renames_second_operand():
    a = parse_presentation("< a | >")
    fp = free_product_with_renaming(a, a)
    assert fp.presentation == Presentation(("a", "a_2"), ())
    assert fp.renaming == {"a": "a_2"}
    assert free_product(parse_presentation("<a|a^2>"), parse_presentation("<b|b^3>")) == parse_presentation(
        "<a,b|a^2,b^3>"
    )
    tt = free_product(TREFOIL, TREFOIL)
    assert len(tt.generators) == 4 and len(tt.relators) == 2 and tt.deficiency == 2


def test_renaming_suffix_skips_taken_names():
    p = Presentation(("a", "a_2"), ())
    fp = free_product_with_renaming(p, Presentation(("a",), ()))
    assert fp.renaming == {"a": "a_3"}


def test_direct_product_examples():
    ab = direct_product(parse_presentation("<a|>"), parse_presentation("<b|>"))
    assert ab == parse_presentation("<a,b| a b a^-1 b^-1>")
    assert str(abelianization(ab)) == "Z^2"
    assert direct_product(TREFOIL, Presentation()) == TREFOIL
    z22 = direct_product(parse_presentation("<a|a^2>"), parse_presentation("<b|b^2>"))
    assert abelianization(z22).torsion == (2, 2)


def test_quotients():
    a = parse_presentation("<a|>")
    assert quotient_by_normal_closure(a, [w("a")]) == parse_presentation("<a|a>")
    assert quotient_by_normal_closure(TREFOIL, []) is TREFOIL
    free2 = parse_presentation("<a,b|>")
    assert str(abelianization(quotient_by_normal_closure(free2, [w("b")]))) == "Z"
    with pytest.raises(UndeclaredSymbolError):
        quotient_by_normal_closure(a, [w("b")])


def test_apply_map_examples():
    src = parse_presentation("<a,b|>")
    tgt = parse_presentation("<x,y|>")
    f = GroupMap(src, tgt, {"a": w("x y"), "b": w("y")})
    assert apply_map(f, w("a^-1")) == w("y^-1 x^-1")
    assert apply_map(GroupMap.identity(src), raw(("a", 1), ("a", -1), ("b", 1))) == w("b")
    g = GroupMap(src, tgt, {"a": w("x"), "b": w("x")})
    assert apply_map(g, w("a b^-1")) == Word()
    with pytest.raises(PresentationError):
        GroupMap(src, tgt, {"a": w("x")})


# -- Tietze -----------------------------------------------------------------

def test_tietze_examples():
    res = tietze_simplify(parse_presentation("<a,b|b>"))
    assert res.presentation == parse_presentation("<a|>") and res.complete
    res = tietze_simplify(parse_presentation("<a,x| x a^-2>"))
    assert res.presentation == parse_presentation("<a|>")
    assert res.translate(w("x")) == w("a^2")


def test_tietze_dedupes_rotations_and_inverses():
    p = Presentation(("a", "b"), (w("a^2 b^2"), w("b^2 a^2"), w("a^-2 b^-2")))
    res = tietze_simplify(p)
    assert len(res.presentation.relators) == 1


def test_tietze_budget_zero_is_partial():
    res = tietze_simplify(parse_presentation("<a,b|b>"), budget=0)
    assert res.partially_simplified
    assert res.presentation.generators == ("a", "b")


@settings(max_examples=60)
@given(presentations)
def test_tietze_preserves_abelianization(p):
    res = tietze_simplify(p)
    assert abelianization(res.presentation) == abelianization(p)
    assert len(res.presentation.generators) <= len(p.generators)
    for g in p.generators:
        res.presentation.check_word(res.translate(Word.generator(g)))


@settings(max_examples=40)
@given(presentations, presentations)
def test_direct_product_abelianization_is_direct_sum(p, q):
    assert abelianization(direct_product(p, q)) == direct_sum(abelianization(p), abelianization(q))


@settings(max_examples=40)
@given(presentations)
def test_abelianization_renaming_invariant(p):
    q = p.rename({"a": "u", "b": "v", "c": "w"})
    assert abelianization(q) == abelianization(p)
