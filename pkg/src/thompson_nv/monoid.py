"""The positive monoid of numbered pattern sequences over unit squares.

An element is a numbered sequence of patterns ``(P_0, P_1, ...)``: square
``S_i`` carries pattern ``P_i``, all but finitely many are trivial, and the
numbering of rectangles is eventually the consecutive numbering of whole
squares.  We store it as the finite list ``rects`` where ``rects[n]`` is
the rectangle numbered ``n`` given as ``(square, brick)``.  Rectangles
numbered ``n >= len(rects)`` are the whole squares ``k + 1 + n - len(rects)``
where ``k`` is the last square mentioned.

Words in the generators ``v_i`` (vertical split), ``h_i`` (horizontal
split) and ``s_i`` (transposition) act by right multiplication, letter by
letter from the left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .cantor import (Brick, NumberedPattern, ParseError, format_brick,
                     guillotine_decompose, parse_brick, split_brick)

TRIVIAL: Brick = ("", "")
KINDS = ("v", "h", "s")


@dataclass(frozen=True)
class MonoidLetter:
    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown monoid letter kind {self.kind!r}")
        if self.index < 0:
            raise ValueError("letter index must be nonnegative")

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"


MonoidWord = Tuple[MonoidLetter, ...]

_TOKEN = re.compile(r"([vhs])(\d+)")


def parse_word(text: str) -> MonoidWord:
    out = []
    for tok in text.split():
        m = _TOKEN.fullmatch(tok)
        if m is None:
            raise ParseError(f"bad monoid token {tok!r}")
        out.append(MonoidLetter(m.group(1), int(m.group(2))))
    return tuple(out)


def format_word(w: Sequence[MonoidLetter]) -> str:
    return " ".join(str(x) for x in w)


def _as_word(w) -> MonoidWord:
    return parse_word(w) if isinstance(w, str) else tuple(w)


def _canon(rects: List[Tuple[int, Brick]]) -> Tuple[Tuple[int, Brick], ...]:
    if rects:
        top = max(s for s, _ in rects)
        while rects and rects[-1] == (top, TRIVIAL):
            rects = rects[:-1]
            top -= 1
    return tuple(rects)


@dataclass(frozen=True)
class PatternSequence:
    rects: Tuple[Tuple[int, Brick], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rects", _canon(list(self.rects)))

    @property
    def tail(self) -> int:
        """Last possibly nontrivial square (``-1`` for the identity)."""
        return max((s for s, _ in self.rects), default=-1)

    @property
    def offset(self) -> int:
        """Square ``i`` beyond the tail is numbered ``i + offset``."""
        return len(self.rects) - (self.tail + 1)

    def rect(self, n: int) -> Tuple[int, Brick]:
        if n < len(self.rects):
            return self.rects[n]
        return (self.tail + 1 + n - len(self.rects), TRIVIAL)

    def extended(self, upto: int) -> List[Tuple[int, Brick]]:
        """Rectangles numbered ``0..upto`` as an explicit list."""
        return [self.rect(n) for n in range(max(upto + 1, len(self.rects)))]

    def squares(self) -> Dict[int, List[Tuple[Brick, int]]]:
        out: Dict[int, List[Tuple[Brick, int]]] = {}
        for n, (s, b) in enumerate(self.rects):
            out.setdefault(s, []).append((b, n))
        return out

    def __str__(self) -> str:
        parts = []
        for s, items in sorted(self.squares().items()):
            body = "|".join(f"{format_brick(b)}#{n}" for b, n in items)
            parts.append(f"[{s}:{body}]")
        parts.append(f"tail={self.tail},offset={self.offset}")
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "PatternSequence":
        text = text.strip()
        m = re.search(r"tail=(-?\d+),offset=(\d+)\s*$", text)
        if m is None:
            raise ParseError("missing tail=<k>,offset=<j>")
        tail, offset = int(m.group(1)), int(m.group(2))
        found = {}
        for sq, body in re.findall(r"\[(\d+):([^\]]*)\]", text[:m.start()]):
            for item in body.split("|"):
                brick_text, _, num = item.partition("#")
                if not num:
                    raise ParseError(f"rectangle {item!r} has no number")
                n = int(num)
                if n in found:
                    raise ParseError(f"number {n} used twice")
                found[n] = (int(sq), parse_brick(brick_text))
        count = tail + 1 + offset
        if sorted(found) != list(range(count)):
            raise ParseError("rectangle numbers are not 0..N-1")
        if {sq for sq, _ in found.values()} != set(range(tail + 1)):
            raise ParseError("listed squares must be exactly 0..tail")
        return cls(tuple(found[n] for n in range(count)))

    def in_pi0(self) -> bool:
        return all(s == 0 for s, _ in self.rects)

    def square0_pattern(self) -> NumberedPattern:
        if not self.in_pi0():
            raise ValueError("sequence is not supported in square 0 alone")
        if not self.rects:
            return NumberedPattern.trivial(2)
        return NumberedPattern(tuple(b for _, b in self.rects))


IDENTITY = PatternSequence()


def right_multiply(seq: PatternSequence, letter: MonoidLetter) -> PatternSequence:
    i = letter.index
    if letter.kind == "s":
        rects = seq.extended(i + 1)
        rects[i], rects[i + 1] = rects[i + 1], rects[i]
    else:
        rects = seq.extended(i)
        s, b = rects[i]
        lo, hi = split_brick(b, 0 if letter.kind == "v" else 1)
        rects[i:i + 1] = [(s, lo), (s, hi)]
    return PatternSequence(tuple(rects))


def eval_word(w, start: PatternSequence = IDENTITY) -> PatternSequence:
    seq = start
    for letter in _as_word(w):
        seq = right_multiply(seq, letter)
    return seq


def multiply(p: PatternSequence, q: PatternSequence) -> PatternSequence:
    """Paste square ``i`` of ``q`` into rectangle ``i`` of ``p``; numbering from ``q``."""
    count = len(q.rects) + len(p.rects) + 1
    out = []
    for n in range(count):
        s, b = q.rect(n)
        ps, pb = p.rect(s)
        out.append((ps, tuple(x + y for x, y in zip(pb, b))))
    return PatternSequence(tuple(out))


def check_monoid_relation(lhs, rhs) -> bool:
    return eval_word(lhs) == eval_word(rhs)


def _swap_rule(s: int, letter: MonoidLetter) -> List[MonoidLetter]:
    # sigma_j x_i rewritten as x' followed by sigmas
    j, i, k = s, letter.index, letter.kind
    if i < j:
        return [MonoidLetter(k, i), MonoidLetter("s", j + 1)]
    if i == j:
        return [MonoidLetter(k, j + 1), MonoidLetter("s", j), MonoidLetter("s", j + 1)]
    if i == j + 1:
        return [MonoidLetter(k, j), MonoidLetter("s", j + 1), MonoidLetter("s", j)]
    return [MonoidLetter(k, i), MonoidLetter("s", j)]


def rewrite_to_pq(w) -> MonoidWord:
    """Move every transposition to the right of every split letter."""
    word = list(_as_word(w))
    pos = 0
    while True:
        for pos in range(pos, len(word) - 1):
            if word[pos].kind == "s" and word[pos + 1].kind != "s":
                break
        else:
            return tuple(word)
        word[pos:pos + 2] = _swap_rule(word[pos].index, word[pos + 1])
        # the leftmost violation can move back by at most one place
        pos = max(pos - 1, 0)


def is_pq(w) -> bool:
    word = _as_word(w)
    seen_s = False
    for x in word:
        if x.kind == "s":
            seen_s = True
        elif seen_s:
            return False
    return True


def pattern_to_pq(p: NumberedPattern) -> MonoidWord:
    """A word ``p q`` whose value has square 0 equal to ``p`` (numbering included)."""
    if p.dim != 2:
        raise ValueError("monoid words describe 2-dimensional patterns")
    tree = guillotine_decompose(p)
    if tree is None:
        raise ValueError(f"pattern {p} has no guillotine decomposition")
    letters = []
    regions = [tree]
    while True:
        k = next((i for i, node in enumerate(regions) if not node.is_leaf), None)
        if k is None:
            break
        node = regions[k]
        letters.append(MonoidLetter("v" if node.axis == 0 else "h", k))
        regions[k:k + 1] = [node.low, node.high]
    # regions[r] is pattern brick regions[r].index; bubble it into order
    order = [node.index for node in regions]
    for end in range(len(order) - 1, 0, -1):
        for i in range(end):
            if order[i] > order[i + 1]:
                order[i], order[i + 1] = order[i + 1], order[i]
                letters.append(MonoidLetter("s", i))
    return tuple(letters)


def relation_instances(max_index: int = 5):
    """All instances of the four monoid relation families with indices <= max_index.

    Yields ``(family, lhs, rhs)`` with words as strings.
    """
    n = max_index
    for j in range(n + 1):
        for i in range(j):
            for x in "vh":
                for y in "vh":
                    yield "1", f"{x}{j} {y}{i}", f"{y}{i} {x}{j + 1}"
    for i in range(n + 1):
        yield "2a", f"s{i} s{i}", ""
    for i in range(n + 1):
        for j in range(n + 1):
            if abs(i - j) >= 2:
                yield "2b", f"s{i} s{j}", f"s{j} s{i}"
    for i in range(n + 1):
        yield "2c", f"s{i} s{i + 1} s{i}", f"s{i + 1} s{i} s{i + 1}"
    for j in range(n + 1):
        for i in range(n + 1):
            for x in "vh":
                if i < j:
                    rhs = f"{x}{i} s{j + 1}"
                elif i == j:
                    rhs = f"{x}{j + 1} s{j} s{j + 1}"
                elif i == j + 1:
                    rhs = f"{x}{j} s{j + 1} s{j}"
                else:
                    rhs = f"{x}{i} s{j}"
                yield "3", f"s{j} {x}{i}", rhs
    for i in range(n + 1):
        yield "4", f"v{i} h{i + 1} h{i}", f"h{i} v{i + 1} v{i} s{i + 1}"
