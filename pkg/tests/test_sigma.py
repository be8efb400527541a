import time

import pytest

from thompson_nv.cantor import NumberedPattern, ParseError
from thompson_nv.elements import Element, equals, is_identity
from thompson_nv.sampling import random_element, random_sigma_word
from thompson_nv.sigma import (SigmaLetter, alternate_A, baker_map, decompose, eval_sigma,
                               format_sigma, generator, inverse_word, parse_sigma)


def test_generator_patterns():
    a0 = generator("A", 0)
    assert a0.domain == NumberedPattern.parse("00,e|01,e|1,e")
    assert a0.range == NumberedPattern.parse("0,e|10,e|11,e")
    c0 = baker_map()
    assert c0.domain == NumberedPattern.parse("0,e|1,e")
    assert c0.range == NumberedPattern.parse("e,0|e,1")


def test_parse_and_inverse():
    w = parse_sigma("A3 B0' C2 p1 q0'")
    assert format_sigma(w) == "A3 B0' C2 p1 q0'"
    assert format_sigma(inverse_word(w)) == "q0 p1' C2' B0 A3'"
    assert is_identity(eval_sigma(list(w) + list(inverse_word(w))))
    with pytest.raises(ParseError):
        parse_sigma("A1 Z2")
    with pytest.raises(ValueError):
        SigmaLetter("A", 0, 2)


@pytest.mark.parametrize("i", range(7))
def test_involutions(i):
    assert is_identity(eval_sigma(f"p{i} p{i}"))
    assert is_identity(eval_sigma(f"q{i} q{i}"))


def test_alternate_forms():
    for i in range(5):
        for k in range(i + 1, 8):
            assert equals(alternate_A(i, k), generator("A", i))


def test_decompose_examples():
    assert format_sigma(decompose(baker_map())) == "C0"
    assert decompose(eval_sigma("")) == ()
    with pytest.raises(ValueError):
        decompose(Element(NumberedPattern.trivial(1), NumberedPattern.trivial(1)))


def test_decompose_round_trip_words(rng):
    for _ in range(200):
        f = eval_sigma(random_sigma_word(rng, 12))
        assert equals(eval_sigma(decompose(f)), f)


def test_decompose_round_trip_elements(rng):
    start = time.time()
    for _ in range(200):
        f = random_element(rng, 2, 10)
        assert equals(eval_sigma(decompose(f)), f)
    assert time.time() - start < 120
