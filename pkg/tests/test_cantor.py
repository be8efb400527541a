from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from thompson_nv.cantor import (InfiniteWord, NumberedPattern, ParseError, Point,
                                apply_prefix_replacement, brick_contains, brick_measure,
                                common_refinement, format_brick, guillotine_decompose,
                                parse_brick, point_in_brick, replay_splits, split_brick,
                                trivial_brick, validate_partition)

words = st.text(alphabet="01", max_size=6)


def test_split_brick_examples():
    assert split_brick(("", ""), 0) == (("0", ""), ("1", ""))
    assert split_brick(("0", "1"), 1) == (("0", "10"), ("0", "11"))
    assert split_brick(("0",), 0) == (("00",), ("01",))
    with pytest.raises(ValueError):
        split_brick(("0",), 1)


@given(st.lists(words, min_size=1, max_size=3), st.data())
def test_split_halves_measure(ws, data):
    b = tuple(ws)
    axis = data.draw(st.integers(0, len(b) - 1))
    lo, hi = split_brick(b, axis)
    assert brick_measure(lo) + brick_measure(hi) == brick_measure(b)
    assert brick_contains(b, lo) and brick_contains(b, hi)


def test_validate_partition():
    assert validate_partition(NumberedPattern.trivial(2))
    assert validate_partition(NumberedPattern.parse("0,e|1,0|1,1"))
    v = validate_partition(NumberedPattern.parse("0,e|0,1"))
    assert not v and v.overlap == (0, 1)
    gap = validate_partition(NumberedPattern.parse("0,e|1,0"))
    assert not gap and gap.deficit == Fraction(1, 4)


def test_common_refinement_examples():
    triv = NumberedPattern.trivial(2)
    halves = NumberedPattern.parse("0,e|1,e")
    assert common_refinement(triv, halves) == [(("0", ""), 0, 0), (("1", ""), 0, 1)]
    quads = common_refinement(halves, NumberedPattern.parse("e,0|e,1"))
    assert sorted(b for b, _, _ in quads) == [("0", "0"), ("0", "1"), ("1", "0"), ("1", "1")]
    p = NumberedPattern.parse("0,e|1,0|1,1")
    assert common_refinement(p, p) == [(b, i, i) for i, b in enumerate(p)]
    with pytest.raises(ValueError):
        common_refinement(p, NumberedPattern.trivial(1))


def _random_pattern(rng, dim, n):
    bricks = [trivial_brick(dim)]
    for _ in range(n):
        k = rng.randrange(len(bricks))
        bricks[k:k + 1] = split_brick(bricks[k], rng.randrange(dim))
    return NumberedPattern(tuple(bricks))


def test_refinement_is_partition(rng):
    for _ in range(200):
        dim = rng.choice((1, 2, 3))
        p, q = _random_pattern(rng, dim, rng.randint(0, 8)), _random_pattern(rng, dim, rng.randint(0, 8))
        ref = common_refinement(p, q)
        assert validate_partition(NumberedPattern(tuple(b for b, _, _ in ref)))
        for b, i, j in ref:
            assert brick_contains(p[i], b) and brick_contains(q[j], b)


def test_guillotine_examples():
    assert guillotine_decompose(NumberedPattern.trivial(2)).split_count() == 0
    four = NumberedPattern.parse("0,e|1,0|10,1|11,1")
    assert guillotine_decompose(four).split_count() == 3
    quad = guillotine_decompose(NumberedPattern.parse("0,0|0,1|1,0|1,1"))
    assert quad.axis == 0


@pytest.mark.parametrize("dim", [1, 2])
def test_guillotine_round_trip(dim, rng):
    for _ in range(1000):
        p = _random_pattern(rng, dim, rng.randint(0, 12))
        tree = guillotine_decompose(p)
        assert tree is not None
        assert set(replay_splits(dim, tree.splits()).bricks) == set(p.bricks)
        assert sorted(tree.leaves()) == list(range(len(p)))


def test_infinite_word_canonical():
    assert InfiniteWord("0", "10") == InfiniteWord("", "01")
    assert str(InfiniteWord("0", "10")) == "(01)"
    assert InfiniteWord("", "0101") == InfiniteWord("", "01")
    assert str(InfiniteWord("1", "0")) == "1(0)"
    with pytest.raises(ParseError):
        InfiniteWord.parse("01")


@settings(max_examples=300)
@given(words, st.text(alphabet="01", min_size=1, max_size=6), st.integers(0, 64))
def test_expand_and_reparse(pre, period, n):
    x = Point((InfiniteWord(pre, period),))
    assert Point.parse(str(x)) == x
    # a prefix of length n followed by the remaining tail is the same point
    head = x.coords[0].prefix(n)
    assert x.coords[0].drop(n).prepend(head) == x.coords[0]
    assert InfiniteWord(str(x.coords[0].pre), x.coords[0].period) == x.coords[0]


def test_prefix_replacement_examples():
    x = Point.parse("01(10);(10)")
    y = apply_prefix_replacement(x, ("0", ""), ("", "0"))
    assert y == Point.of("1(10)", "0(10)")
    assert apply_prefix_replacement(x, ("0", ""), ("0", "")) == x
    assert apply_prefix_replacement(Point.parse("(0)"), ("0",), ("1",)) == Point.parse("1(0)")
    with pytest.raises(ValueError):
        apply_prefix_replacement(Point.parse("(1)"), ("0",), ("1",))
    assert point_in_brick(x, ("01", "1"))


def test_text_round_trip():
    for text in ["0,e", "e,e", "011,10"]:
        assert format_brick(parse_brick(text)) == text
    p = NumberedPattern.parse("0,e|1,0|1,1")
    assert str(NumberedPattern.parse(str(p))) == str(p)
    with pytest.raises(ParseError):
        parse_brick("0,2")
