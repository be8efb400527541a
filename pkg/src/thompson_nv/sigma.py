"""The generating set Sigma of 2V and the decomposition of elements over it.

Each generator is a pair ``(a, b)`` of monoid words whose values lie in the
square-0 submonoid; the pair denotes the map from the pattern of ``b``
(domain) to the pattern of ``a`` (range).  Token syntax::

    A3  B0  C2  p1 (pi_1)  q0 (pi-bar_0),  inverse suffix "'"

A word ``x y z`` is the product ``x o y o z``: ``z`` acts first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Tuple

from .cantor import ParseError
from .elements import Element, invert, product
from .monoid import MonoidLetter, eval_word, pattern_to_pq

BASES = ("A", "B", "C", "p", "q")


@dataclass(frozen=True)
class SigmaLetter:
    base: str
    index: int
    exponent: int = 1

    def __post_init__(self):
        if self.base not in BASES:
            raise ValueError(f"unknown generator {self.base!r}")
        if self.index < 0:
            raise ValueError("generator index must be nonnegative")
        if self.exponent not in (1, -1):
            raise ValueError("exponent must be +1 or -1")

    def inverse(self) -> "SigmaLetter":
        return SigmaLetter(self.base, self.index, -self.exponent)

    def __str__(self) -> str:
        return f"{self.base}{self.index}" + ("'" if self.exponent < 0 else "")


SigmaWord = Tuple[SigmaLetter, ...]

_TOKEN = re.compile(r"\s*([ABCpq])(\d+)(')?\s*")


def parse_sigma(text: str) -> SigmaWord:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"bad generator token at {text[pos:]!r}")
        out.append(SigmaLetter(m.group(1), int(m.group(2)), -1 if m.group(3) else 1))
        pos = m.end()
    return tuple(out)


def format_sigma(w: Sequence[SigmaLetter]) -> str:
    return " ".join(str(x) for x in w)


def inverse_word(w: Sequence[SigmaLetter]) -> SigmaWord:
    return tuple(x.inverse() for x in reversed(w))


def _as_sigma(w) -> SigmaWord:
    return parse_sigma(w) if isinstance(w, str) else tuple(w)


def v0_power(k: int) -> str:
    return " ".join(["v0"] * k)


def pair_element(a, b) -> Element:
    """The element ``(a, b)``: domain pattern from ``b``, range pattern from ``a``."""
    sa, sb = eval_word(a), eval_word(b)
    if not (sa.in_pi0() and sb.in_pi0()):
        raise ValueError("pair entries must be supported in square 0")
    dom, rng = sb.square0_pattern(), sa.square0_pattern()
    if len(dom) != len(rng):
        raise ValueError("pair entries cut square 0 into different counts")
    return Element(dom, rng)


def generator_pair(base: str, i: int) -> Tuple[str, str]:
    """The defining pair of monoid words for a generator."""
    if base == "A":
        return f"{v0_power(i + 1)} v1", v0_power(i + 2)
    if base == "B":
        return f"{v0_power(i + 1)} h1", v0_power(i + 2)
    if base == "C":
        return f"{v0_power(i)} h0".strip(), v0_power(i + 1)
    if base == "p":
        return f"{v0_power(i + 2)} s1", v0_power(i + 2)
    if base == "q":
        return f"{v0_power(i + 1)} s0", v0_power(i + 1)
    raise ValueError(base)


@lru_cache(maxsize=None)
def generator(base: str, index: int) -> Element:
    return pair_element(*generator_pair(base, index))


def letter_element(x: SigmaLetter) -> Element:
    g = generator(x.base, x.index)
    return g if x.exponent > 0 else invert(g)


def eval_sigma(w) -> Element:
    return product((letter_element(x) for x in _as_sigma(w)), dim=2)


def baker_map() -> Element:
    return generator("C", 0)


def _prefix_word(p: Sequence[MonoidLetter]):
    """Sigma word for ``(p, v0^k)``, ``p`` a split word with ``i_j <= j``."""
    out = []
    for j, x in enumerate(p):
        m = x.index
        if m > j:
            raise ValueError(f"letter {x} at position {j} leaves square 0")
        if x.kind == "v":
            if m > 0:
                out.append(SigmaLetter("A", j - m))
        elif x.kind == "h":
            if m == 0:
                out.append(SigmaLetter("C", j))
            else:
                out.append(SigmaLetter("B", j - m))
        else:
            raise ValueError("split part contains a transposition")
    return out


def _pq_word(word: Sequence[MonoidLetter]):
    splits = [x for x in word if x.kind != "s"]
    swaps = [x for x in word if x.kind == "s"]
    k = len(splits)
    out = _prefix_word(splits)
    for x in swaps:
        m = x.index
        if m >= k:
            raise ValueError(f"transposition {x} moves a square other than 0")
        out.append(SigmaLetter("q", k - 1) if m == 0 else SigmaLetter("p", k - 1 - m))
    return out


def decompose(f: Element) -> SigmaWord:
    """A Sigma word evaluating to ``f``."""
    if f.dim != 2:
        raise ValueError("decompose works in 2V")
    a = _pq_word(pattern_to_pq(f.range))
    b = _pq_word(pattern_to_pq(f.domain))
    return tuple(a) + inverse_word(b)


def alternate_A(i: int, k: int) -> Element:
    """``(v0^k v_{k-i}, v0^{k+1})``, equal to ``A_i`` whenever ``k > i``."""
    return pair_element(f"{v0_power(k)} v{k - i}", v0_power(k + 1))
