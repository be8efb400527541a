import pytest

from thompson_nv.baker import (TwoSidedPoint, element_orbit_size, enumerate_periodic_orbits,
                               is_primitive, necklace_count, orbit_size, shift, verify_shift)
from thompson_nv.cantor import ParseError, Point
from thompson_nv.sampling import random_two_sided
from thompson_nv.sigma import baker_map


def _brute_bit(x, i):
    # independent reading of x_i from the four parts
    if i >= 0:
        s = x.b + x.rho * (i + 1)
        return s[i]
    j = -i - 1
    s = (x.lam * (j + 1) + x.a)[::-1]
    return s[j]


def test_shift_examples():
    p = TwoSidedPoint.periodic("01")
    assert shift(shift(p)) == p and shift(p) != p
    zero = TwoSidedPoint.periodic("0")
    assert shift(zero) == zero
    x = TwoSidedPoint("0", "", "1", "0")
    y = shift(x)
    assert str(y) == "(0)1.e(0)"
    assert y.bit(-1) == "1" and y.bit(0) == "0"


def test_shift_index_oracle(rng):
    for _ in range(300):
        x = random_two_sided(rng)
        y = shift(x)
        for i in range(-12, 12):
            assert _brute_bit(y, i) == _brute_bit(x, i + 1)
            assert y.bit(i) == x.bit(i + 1)


def test_point_round_trip(rng):
    assert TwoSidedPoint.periodic("0").to_point() == Point.parse("(0);(0)")
    for _ in range(500):
        x = random_two_sided(rng)
        assert TwoSidedPoint.from_point(x.to_point()) == x
        assert TwoSidedPoint.parse(str(x)) == x
    with pytest.raises(ParseError):
        TwoSidedPoint.parse("(0)1.1")


def test_orbit_size():
    assert orbit_size(TwoSidedPoint.periodic("0")) == 1
    assert orbit_size(TwoSidedPoint.periodic("01")) == 2
    assert orbit_size(TwoSidedPoint.periodic("0011")) == 4
    assert orbit_size(TwoSidedPoint.periodic("0101")) == 2
    assert orbit_size(TwoSidedPoint("0", "", "1", "0")) == "infinite"
    assert orbit_size(TwoSidedPoint("01", "", "", "10")) == "infinite"


def test_enumeration():
    assert enumerate_periodic_orbits(1) == ["0", "1"]
    assert enumerate_periodic_orbits(2) == ["01"]
    assert len(enumerate_periodic_orbits(4)) == 3
    with pytest.raises(ValueError):
        enumerate_periodic_orbits(0)


def _brute_necklaces(p):
    seen, count = set(), 0
    for n in range(2 ** p):
        w = format(n, f"0{p}b")
        if w in seen:
            continue
        rots = {w[i:] + w[:i] for i in range(p)}
        seen |= rots
        count += len(rots) == p
    return count


@pytest.mark.parametrize("p", range(1, 17))
def test_orbit_census(p):
    reps = enumerate_periodic_orbits(p)
    assert len(reps) == necklace_count(p)
    if p <= 12:
        assert len(reps) == _brute_necklaces(p)
    c0 = baker_map()
    for w in reps[:40]:
        assert is_primitive(w)
        assert element_orbit_size(c0, TwoSidedPoint.periodic(w).to_point(), p + 1) == p


def test_conjugacy(rng):
    for _ in range(1000):
        assert verify_shift(random_two_sided(rng))
