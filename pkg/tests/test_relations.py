import pytest

from thompson_nv.cantor import ParseError
from thompson_nv.elements import is_identity
from thompson_nv.relations import (ABEL_RELATIONS, BAKER_INNER, FAMILIES, Comm, Gen,
                                   abelian_relations_hold, abelianization_check,
                                   baker_comm_check, baker_deletions, baker_expression,
                                   eval_commutator, family_words, finite_generation_identities,
                                   mutation_controls, parse_expr, surviving_classes,
                                   sweep_families, verify_family, witness_point, words_equal)
from thompson_nv.sigma import SigmaLetter, baker_map


def test_family_side_conditions():
    assert verify_family(1, m=0, q=1, X="A", Y="A")
    with pytest.raises(ValueError):
        family_words(1, m=1, q=1, X="A", Y="B")
    with pytest.raises(ValueError):
        family_words(4, m=1, q=0, X="A")
    with pytest.raises(ValueError):
        family_words(18, m=0)
    with pytest.raises(ValueError):
        family_words(3, q=0, X="C")


def test_sweep_counts_stable():
    a, b = sweep_families(2), sweep_families(2)
    assert a.ok
    assert a.total == b.total and a.counts() == b.counts()
    assert set(a.counts()) == set(FAMILIES)
    assert all(line.startswith("family=") for line in a.lines())


def test_mutations_fail():
    muts = mutation_controls()
    assert len(muts) >= 5
    assert not any(ok for _, _, ok in muts)


def test_finite_generation():
    rep = finite_generation_identities(2)
    assert rep.ok
    # the same identity with the conjugation reversed is false
    assert not words_equal("A2", "A0 A1 A0'")


def test_abelianization():
    assert all(abelian_relations_hold().values())
    assert abelianization_check()
    no_cross = {k: v for k, v in ABEL_RELATIONS.items() if k != "cross"}
    assert surviving_classes(no_cross) == ["B0", "B1"]
    assert not abelianization_check(no_cross)
    assert not abelianization_check({})


def test_commutator_parser():
    x = parse_expr("[A0', A1]")
    assert isinstance(x, Comm)
    assert parse_expr("A1") == Gen(SigmaLetter("A", 1))
    assert is_identity(eval_commutator(parse_expr("[p1, p1]")))
    for bad in ("[A0, A1", "A0 ]", "(A0", "K1", "A0 $"):
        with pytest.raises(ParseError):
            parse_expr(bad)


def test_commutator_word_as_written():
    # the word as written misses C0; the known discrepancy is a single factor
    assert not baker_comm_check()
    assert witness_point(eval_commutator(baker_expression()), baker_map()) is not None


def test_commutator_word_amended():
    assert baker_comm_check(amended=True)
    for name, expr in baker_deletions(amended=True):
        assert not baker_comm_check(expr), name


def test_deleting_k7_fails():
    for name, expr in baker_deletions():
        if name.endswith("K7"):
            assert not baker_comm_check(expr)
    assert BAKER_INNER[5] == "K5"
