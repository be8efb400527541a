"""The baker's map as the shift on bi-infinite binary sequences.

A :class:`TwoSidedPoint` ``(lam, a, b, rho)`` is the sequence
``... lam lam a . b rho rho ...`` with the binary point between indices
-1 and 0.  Text form is ``(lam)a.b(rho)`` with ``e`` for an empty part.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import List, Optional, Union

from .cantor import EMPTY, InfiniteWord, ParseError, Point, check_word
from .elements import Element, apply


def _rev(w: str) -> str:
    return w[::-1]


@dataclass(frozen=True)
class TwoSidedPoint:
    lam: str
    a: str
    b: str
    rho: str

    def __post_init__(self):
        for w in (self.lam, self.a, self.b, self.rho):
            check_word(w)
        if not self.lam or not self.rho:
            raise ValueError("both periods must be nonempty")
        # the left half reads outward from the binary point
        left = InfiniteWord(_rev(self.a), _rev(self.lam))
        right = InfiniteWord(self.b, self.rho)
        object.__setattr__(self, "lam", _rev(left.period))
        object.__setattr__(self, "a", _rev(left.pre))
        object.__setattr__(self, "b", right.pre)
        object.__setattr__(self, "rho", right.period)

    @classmethod
    def periodic(cls, w: str) -> "TwoSidedPoint":
        """The sequence repeating ``w`` in both directions, with ``w`` starting at index 0."""
        return cls(w, "", "", w)

    def to_point(self) -> Point:
        return Point((InfiniteWord(self.b, self.rho), InfiniteWord(_rev(self.a), _rev(self.lam))))

    @classmethod
    def from_point(cls, x: Point) -> "TwoSidedPoint":
        if x.dim != 2:
            raise ValueError("two-sided sequences correspond to points of the square")
        right, left = x.coords
        return cls(_rev(left.period), _rev(left.pre), right.pre, right.period)

    def bit(self, i: int) -> str:
        """The entry ``x_i``."""
        if i >= 0:
            return InfiniteWord(self.b, self.rho).prefix(i + 1)[-1]
        return InfiniteWord(_rev(self.a), _rev(self.lam)).prefix(-i)[-1]

    def __str__(self) -> str:
        def f(w):
            return w if w else EMPTY
        return f"({f(self.lam)}){f(self.a)}.{f(self.b)}({f(self.rho)})"

    @classmethod
    def parse(cls, text: str) -> "TwoSidedPoint":
        m = re.fullmatch(r"\s*\(([01]+)\)([01]*|e)\.([01]*|e)\(([01]+)\)\s*", text)
        if m is None:
            raise ParseError(f"bad two-sided sequence {text!r}")
        parts = ["" if g == EMPTY else g for g in m.groups()]
        return cls(*parts)


def shift(x: TwoSidedPoint) -> TwoSidedPoint:
    """``(shift x)_i = x_{i+1}``: the entry at index 0 crosses to index -1."""
    if x.b:
        c, b, rho = x.b[0], x.b[1:], x.rho
    else:
        c, b, rho = x.rho[0], "", x.rho[1:] + x.rho[0]
    return TwoSidedPoint(x.lam, x.a + c, b, rho)


def is_purely_periodic(x: TwoSidedPoint) -> bool:
    return not x.a and not x.b and x.lam == x.rho


def orbit_size(x: TwoSidedPoint) -> Union[int, str]:
    """Size of the shift orbit, or ``"infinite"``."""
    if is_purely_periodic(x):
        return len(x.rho)
    return "infinite"


def is_primitive(w: str) -> bool:
    n = len(w)
    return all(w[:d] * (n // d) != w for d in range(1, n) if n % d == 0)


def enumerate_periodic_orbits(p: int) -> List[str]:
    """Least rotations of the primitive binary words of length ``p``."""
    if p < 1:
        raise ValueError("period must be positive")
    out = []
    for bits in itertools.product("01", repeat=p):
        w = "".join(bits)
        if is_primitive(w) and all(w <= w[i:] + w[:i] for i in range(1, p)):
            out.append(w)
    return out


def necklace_count(p: int) -> int:
    """Number of primitive necklaces of length ``p`` by Moebius inversion."""
    def mobius(n):
        res, q = 1, 2
        while q * q <= n:
            if n % q == 0:
                n //= q
                if n % q == 0:
                    return 0
                res = -res
            q += 1
        return -res if n > 1 else res
    return sum(mobius(p // d) * 2 ** d for d in range(1, p + 1) if p % d == 0) // p


def element_orbit_size(f: Element, x: Point, bound: int) -> Optional[int]:
    """Size of the orbit of ``x`` under ``f`` if it closes within ``bound`` steps."""
    y = apply(f, x)
    n = 1
    while y != x:
        if n >= bound:
            return None
        y = apply(f, y)
        n += 1
    return n


def verify_shift(x: TwoSidedPoint, f: Optional[Element] = None) -> bool:
    """Check ``to_point(shift(x)) == f(to_point(x))`` for the baker's map ``f``."""
    if f is None:
        from .sigma import baker_map
        f = baker_map()
    return shift(x).to_point() == apply(f, x.to_point())
