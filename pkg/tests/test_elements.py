import pytest

from conftest import read_data
from thompson_nv.cantor import (NumberedPattern, ParseError, Point, brick_corners,
                                point_in_brick)
from thompson_nv.elements import (apply, compose, equals, format_element, identity,
                                  image_bricks, invert, is_identity, make_element,
                                  parse_element, product, reduce, refine_pair,
                                  transitivity_map)
from thompson_nv.sampling import random_element, random_pattern, random_point
from thompson_nv.sigma import baker_map, eval_sigma

BAKER = make_element(NumberedPattern.parse("0,e|1,e"), NumberedPattern.parse("e,0|e,1"))


def test_make_element():
    assert is_identity(make_element(NumberedPattern.trivial(2), NumberedPattern.trivial(2)))
    assert equals(BAKER, baker_map())
    with pytest.raises(ValueError):
        make_element(NumberedPattern.parse("0,e|1,e"), NumberedPattern.trivial(2))
    with pytest.raises(ValueError):
        make_element(NumberedPattern.parse("0,e|0,1"), NumberedPattern.parse("e,0|e,1"))


def test_apply_examples():
    x = Point.parse("01(10);(10)")
    assert apply(identity(2), x) == x
    assert apply(BAKER, x) == Point.of("1(10)", "0(10)")
    assert apply(eval_sigma("A0"), Point.parse("00(1);(0)")) == Point.parse("0(1);(0)")


def test_compose_examples():
    assert is_identity(compose(BAKER, invert(BAKER)))
    x = Point.parse("011(0);1(01)")
    assert apply(compose(BAKER, BAKER), x) == apply(BAKER, apply(BAKER, x))
    assert equals(eval_sigma("A1 A0"), eval_sigma("A0 A2"))
    assert not equals(eval_sigma("A1 A0"), eval_sigma("A0 A1"))


def test_invert():
    assert is_identity(invert(identity(2)))
    inv = invert(BAKER)
    assert inv.domain == NumberedPattern.parse("e,0|e,1")
    assert invert(inv) == BAKER


def test_equals_is_refinement_invariant():
    a0 = eval_sigma("A0")
    deeper = refine_pair(refine_pair(a0, 1, 1), 0, 0)
    assert len(deeper) == 5
    assert equals(a0, deeper)
    assert not is_identity(BAKER)


def test_reduce():
    bricks = tuple((a, b) for a in ("00", "01", "10", "11") for b in ("0", "1"))
    deep_id = make_element(NumberedPattern(bricks), NumberedPattern(bricks))
    assert reduce(deep_id) == identity(2)
    assert reduce(BAKER) == BAKER
    a0 = eval_sigma("A0")
    assert reduce(refine_pair(a0, 2, 0)) == reduce(a0)
    assert len(reduce(a0)) == 3


def test_compose_matches_apply(rng):
    for _ in range(500):
        dim = rng.choice((1, 2))
        f, g = random_element(rng, dim, 10), random_element(rng, dim, 10)
        gf = compose(g, f)
        assert is_identity(compose(f, invert(f)))
        for _ in range(20):
            x = random_point(rng, dim)
            assert apply(gf, x) == apply(g, apply(f, x))


def test_associativity(rng):
    for _ in range(100):
        f, g, h = (random_element(rng, 2, 6) for _ in range(3))
        left, right = compose(compose(f, g), h), compose(f, compose(g, h))
        assert equals(left, right)
        for _ in range(5):
            x = random_point(rng, 2)
            assert apply(left, x) == apply(right, x)


def test_product_order():
    # product lists factors left to right; the last one acts first
    assert equals(product([eval_sigma("A1"), eval_sigma("A0")]), eval_sigma("A1 A0"))
    assert is_identity(product([], dim=2))


def test_transitivity_examples():
    p = NumberedPattern.parse("0,e|1,e")
    h = transitivity_map(p, [("0", "")], ("11", "11"))
    for x in brick_corners(("0", "")):
        assert point_in_brick(apply(h, x), ("11", "11"))
    assert all(b[0].startswith("11") and b[1].startswith("11") for b in image_bricks(h, ("0", "")))
    inside = transitivity_map(NumberedPattern.parse("00,e|01,e|1,e"), [("00", "")], ("0", ""))
    assert all(b[0].startswith("0") for b in image_bricks(inside, ("00", "")))
    with pytest.raises(ValueError):
        transitivity_map(p, [("0", ""), ("1", "")], ("1", "1"))
    with pytest.raises(ValueError):
        transitivity_map(p, [], ("1", "1"))
    with pytest.raises(ValueError):
        transitivity_map(p, [("0", "")], ("", ""))


def test_transitivity_random(rng):
    for _ in range(100):
        dim = rng.choice((1, 2, 3))
        pat = random_pattern(rng, dim, rng.randint(1, 8))
        k = rng.randint(1, len(pat) - 1)
        K = rng.sample(list(pat.bricks), k)
        U = tuple("".join(rng.choice("01") for _ in range(rng.randint(0, 3))) for _ in range(dim))
        if not any(U):
            U = ("1",) + U[1:]
        h = transitivity_map(pat, K, U)
        for b in K:
            for img in image_bricks(h, b):
                assert all(w.startswith(u) for w, u in zip(img, U))


def test_el_format_round_trip():
    text = read_data("baker.el")
    f = parse_element(text)
    assert format_element(f) == text
    assert equals(f, BAKER)
    with pytest.raises(ParseError):
        parse_element("nV dim=2 k=2\n0,e => e,0\n")
    with pytest.raises(ParseError):
        parse_element("nV dim=2 k=2\n0,e => e,0\n0,1 => e,1\n")
