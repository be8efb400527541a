"""Words, bricks, patterns and rational points of the Cantor cube C^n.

A finite binary word names a clopen subset of the Cantor set: the points
whose expansion starts with that word.  Bit 0 is the left (or bottom)
third, bit 1 the right (or top) third.  A *brick* is an n-tuple of words,
one per coordinate, and a *numbered pattern* is an ordered list of bricks
partitioning the cube.

Words are plain ``str`` over ``"01"`` and bricks are tuples of them; both
are immutable and hash well, which the rest of the package relies on.

Text syntax::

    word     "0110", empty word "e"
    brick    words joined by ","          e.g. "0,e"
    pattern  bricks joined by "|"         e.g. "0,e|1,0|1,1"
    point    coordinates "pre(period)" joined by ";"   e.g. "01(10);(10)"
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence, Tuple, Union

Brick = Tuple[str, ...]

EMPTY = "e"
_WORD_RE = re.compile(r"[01]*")


class ParseError(ValueError):
    """Raised on malformed text input."""


# ---------------------------------------------------------------------------
# words

def check_word(w: str) -> str:
    if not isinstance(w, str) or _WORD_RE.fullmatch(w) is None:
        raise ValueError(f"not a binary word: {w!r}")
    return w


def parse_word(text: str) -> str:
    text = text.strip()
    if text == EMPTY:
        return ""
    if not text or _WORD_RE.fullmatch(text) is None:
        raise ParseError(f"bad word {text!r}")
    return text


def format_word(w: str) -> str:
    return w if w else EMPTY


def comparable(a: str, b: str) -> bool:
    """True when one word is a prefix of the other (the cylinders meet)."""
    return a.startswith(b) or b.startswith(a)


# ---------------------------------------------------------------------------
# bricks

def trivial_brick(dim: int) -> Brick:
    if dim < 1:
        raise ValueError("dimension must be positive")
    return ("",) * dim


def make_brick(words: Iterable[str]) -> Brick:
    b = tuple(check_word(w) for w in words)
    if not b:
        raise ValueError("a brick needs at least one coordinate")
    return b


def parse_brick(text: str) -> Brick:
    parts = text.strip().split(",")
    return tuple(parse_word(p) for p in parts)


def format_brick(b: Brick) -> str:
    return ",".join(format_word(w) for w in b)


def brick_measure(b: Brick) -> Fraction:
    return Fraction(1, 2 ** sum(len(w) for w in b))


def split_brick(b: Brick, axis: int) -> Tuple[Brick, Brick]:
    """Halve ``b`` along ``axis``; the first child carries bit 0."""
    if not 0 <= axis < len(b):
        raise ValueError(f"axis {axis} out of range for dimension {len(b)}")
    w = b[axis]
    lo = b[:axis] + (w + "0",) + b[axis + 1:]
    hi = b[:axis] + (w + "1",) + b[axis + 1:]
    return lo, hi


def brick_contains(outer: Brick, inner: Brick) -> bool:
    """Set containment: every word of ``outer`` prefixes the matching word of ``inner``."""
    return all(i.startswith(o) for o, i in zip(outer, inner))


def bricks_meet(a: Brick, b: Brick) -> bool:
    return all(comparable(x, y) for x, y in zip(a, b))


def brick_intersection(a: Brick, b: Brick) -> Optional[Brick]:
    out = []
    for x, y in zip(a, b):
        if x.startswith(y):
            out.append(x)
        elif y.startswith(x):
            out.append(y)
        else:
            return None
    return tuple(out)


def transport(b: Brick, src: Brick, dst: Brick) -> Brick:
    """Image of a sub-brick ``b`` of ``src`` under the affine map ``src -> dst``."""
    return tuple(d + w[len(s):] for w, s, d in zip(b, src, dst))


# ---------------------------------------------------------------------------
# patterns

@dataclass(frozen=True)
class NumberedPattern:
    """An ordered list of bricks; brick ``i`` carries the number ``i``.

    Construction does not validate; call :func:`validate_partition`.
    """

    bricks: Tuple[Brick, ...]

    def __post_init__(self):
        bricks = tuple(tuple(b) for b in self.bricks)
        if not bricks:
            raise ValueError("a pattern has at least one brick")
        dim = len(bricks[0])
        if any(len(b) != dim for b in bricks):
            raise ValueError("bricks of mixed dimension")
        object.__setattr__(self, "bricks", bricks)

    @property
    def dim(self) -> int:
        return len(self.bricks[0])

    def __len__(self) -> int:
        return len(self.bricks)

    def __iter__(self) -> Iterator[Brick]:
        return iter(self.bricks)

    def __getitem__(self, i: int) -> Brick:
        return self.bricks[i]

    @classmethod
    def trivial(cls, dim: int) -> "NumberedPattern":
        return cls((trivial_brick(dim),))

    @classmethod
    def parse(cls, text: str) -> "NumberedPattern":
        return cls(tuple(parse_brick(t) for t in text.strip().split("|")))

    def __str__(self) -> str:
        return "|".join(format_brick(b) for b in self.bricks)

    def split(self, index: int, axis: int) -> "NumberedPattern":
        """Replace brick ``index`` by its two halves (numbers ``index``, ``index+1``)."""
        lo, hi = split_brick(self.bricks[index], axis)
        return NumberedPattern(self.bricks[:index] + (lo, hi) + self.bricks[index + 1:])

    def renumbered(self, order: Sequence[int]) -> "NumberedPattern":
        """New pattern whose brick ``k`` is this pattern's brick ``order[k]``."""
        if sorted(order) != list(range(len(self))):
            raise ValueError("order is not a permutation")
        return NumberedPattern(tuple(self.bricks[i] for i in order))

    def locate(self, x: "Point") -> int:
        for i, b in enumerate(self.bricks):
            if point_in_brick(x, b):
                return i
        raise ValueError(f"point {x} lies in no brick")


@dataclass(frozen=True)
class PartitionVerdict:
    valid: bool
    overlap: Optional[Tuple[int, int]] = None
    deficit: Fraction = Fraction(0)
    reason: str = ""

    def __bool__(self) -> bool:
        return self.valid


def validate_partition(p: NumberedPattern) -> PartitionVerdict:
    """Check pairwise disjointness and that the measures sum to one."""
    bricks = p.bricks
    for i, a in enumerate(bricks):
        for j in range(i + 1, len(bricks)):
            if bricks_meet(a, bricks[j]):
                axis = next(
                    (k for k, (x, y) in enumerate(zip(a, bricks[j])) if x != y), 0)
                return PartitionVerdict(
                    False, overlap=(i, j),
                    reason=f"bricks {i} and {j} overlap (coordinate {axis} nested)")
    total = sum((brick_measure(b) for b in bricks), Fraction(0))
    if total != 1:
        return PartitionVerdict(False, deficit=1 - total,
                                reason=f"measure sum {total} != 1")
    return PartitionVerdict(True)


def _prefix_index(bricks: Sequence[Brick]):
    exact = {}
    below = {}
    for j, b in enumerate(bricks):
        w = b[0]
        exact.setdefault(w, []).append(j)
        for k in range(len(w) + 1):
            below.setdefault(w[:k], []).append(j)
    return exact, below


def common_refinement(p: NumberedPattern, q: NumberedPattern):
    """All nonempty intersections of a brick of ``p`` with a brick of ``q``.

    Returns ``(brick, i, j)`` triples ordered by ``(i, j)``.
    """
    if p.dim != q.dim:
        raise ValueError("dimension mismatch")
    return _refine(p.bricks, q.bricks)


def _refine(pb: Sequence[Brick], qb: Sequence[Brick]):
    exact, below = _prefix_index(qb)
    out = []
    for i, a in enumerate(pb):
        w = a[0]
        cands = list(below.get(w, ()))
        for k in range(len(w)):
            cands.extend(exact.get(w[:k], ()))
        cands.sort()
        for j in cands:
            c = brick_intersection(a, qb[j])
            if c is not None:
                out.append((c, i, j))
    return out


# ---------------------------------------------------------------------------
# guillotine decomposition

@dataclass(frozen=True)
class SplitNode:
    """A node of a split tree: either a leaf (``index`` set) or a split."""

    region: Brick
    axis: Optional[int] = None
    low: Optional["SplitNode"] = None
    high: Optional["SplitNode"] = None
    index: Optional[int] = None

    @property
    def is_leaf(self) -> bool:
        return self.axis is None

    def split_count(self) -> int:
        if self.is_leaf:
            return 0
        return 1 + self.low.split_count() + self.high.split_count()

    def splits(self) -> list:
        """(region, axis) pairs in preorder, lower half first."""
        if self.is_leaf:
            return []
        return [(self.region, self.axis)] + self.low.splits() + self.high.splits()

    def leaves(self) -> list:
        """Leaf brick indices in preorder (lower half first)."""
        if self.is_leaf:
            return [self.index]
        return self.low.leaves() + self.high.leaves()


def guillotine_decompose(p: NumberedPattern) -> Optional[SplitNode]:
    """Recover a sequence of half-splits producing ``p``, or ``None``.

    At each region the lowest axis whose midline cuts no brick is used.
    """
    return _guillotine(trivial_brick(p.dim), list(enumerate(p.bricks)))


def _guillotine(region: Brick, items) -> Optional[SplitNode]:
    if len(items) == 1:
        i, b = items[0]
        return SplitNode(region, index=i) if b == region else None
    for axis, w in enumerate(region):
        depth = len(w)
        if all(len(b[axis]) > depth for _, b in items):
            lo_region, hi_region = split_brick(region, axis)
            lo = [(i, b) for i, b in items if b[axis][depth] == "0"]
            hi = [(i, b) for i, b in items if b[axis][depth] == "1"]
            if not lo or not hi:
                return None
            lo_node = _guillotine(lo_region, lo)
            if lo_node is None:
                return None
            hi_node = _guillotine(hi_region, hi)
            if hi_node is None:
                return None
            return SplitNode(region, axis, lo_node, hi_node)
    return None


def replay_splits(dim: int, splits) -> NumberedPattern:
    """Apply (region, axis) splits to the trivial pattern, returning the brick set."""
    bricks = [trivial_brick(dim)]
    for region, axis in splits:
        k = bricks.index(region)
        bricks[k:k + 1] = list(split_brick(region, axis))
    return NumberedPattern(tuple(bricks))


# ---------------------------------------------------------------------------
# eventually periodic words and points

def _primitive_root(w: str) -> str:
    n = len(w)
    for d in range(1, n):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d]
    return w


@dataclass(frozen=True)
class InfiniteWord:
    """The infinite word ``pre + period + period + ...`` in canonical form.

    Canonical means: the period is primitive and the preperiod is as short
    as possible.  Equal infinite words have equal canonical forms.
    """

    pre: str
    period: str

    def __post_init__(self):
        pre, period = check_word(self.pre), check_word(self.period)
        if not period:
            raise ValueError("period must be nonempty")
        period = _primitive_root(period)
        while pre and pre[-1] == period[-1]:
            pre = pre[:-1]
            period = period[-1] + period[:-1]
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "period", period)

    def prefix(self, n: int) -> str:
        if n <= len(self.pre):
            return self.pre[:n]
        rest = n - len(self.pre)
        reps = rest // len(self.period) + 1
        return self.pre + (self.period * reps)[:rest]

    def startswith(self, w: str) -> bool:
        return self.prefix(len(w)) == w

    def drop(self, n: int) -> "InfiniteWord":
        if n <= len(self.pre):
            return InfiniteWord(self.pre[n:], self.period)
        r = (n - len(self.pre)) % len(self.period)
        return InfiniteWord("", self.period[r:] + self.period[:r])

    def prepend(self, w: str) -> "InfiniteWord":
        return InfiniteWord(w + self.pre, self.period)

    @classmethod
    def parse(cls, text: str) -> "InfiniteWord":
        m = re.fullmatch(r"\s*([01]*|e)\(([01]+)\)\s*", text)
        if m is None:
            raise ParseError(f"bad eventually periodic word {text!r}")
        pre = "" if m.group(1) == EMPTY else m.group(1)
        return cls(pre, m.group(2))

    def __str__(self) -> str:
        return f"{self.pre}({self.period})"


@dataclass(frozen=True)
class Point:
    """A rational point of the Cantor cube: one eventually periodic word per axis."""

    coords: Tuple[InfiniteWord, ...]

    def __post_init__(self):
        coords = tuple(self.coords)
        if not coords:
            raise ValueError("a point has at least one coordinate")
        object.__setattr__(self, "coords", coords)

    @property
    def dim(self) -> int:
        return len(self.coords)

    @classmethod
    def of(cls, *coords: Union[str, Tuple[str, str], InfiniteWord]) -> "Point":
        out = []
        for c in coords:
            if isinstance(c, InfiniteWord):
                out.append(c)
            elif isinstance(c, str):
                out.append(InfiniteWord.parse(c))
            else:
                out.append(InfiniteWord(*c))
        return cls(tuple(out))

    @classmethod
    def parse(cls, text: str) -> "Point":
        return cls(tuple(InfiniteWord.parse(t) for t in text.strip().split(";")))

    def __str__(self) -> str:
        return ";".join(str(c) for c in self.coords)

    def expand(self, n: int) -> Tuple[str, ...]:
        return tuple(c.prefix(n) for c in self.coords)


def point_in_brick(x: Point, b: Brick) -> bool:
    if x.dim != len(b):
        raise ValueError("dimension mismatch")
    return all(c.startswith(w) for c, w in zip(x.coords, b))


def apply_prefix_replacement(x: Point, src: Brick, dst: Brick) -> Point:
    """Strip the words of ``src`` from ``x`` and prepend those of ``dst``."""
    if not point_in_brick(x, src):
        raise ValueError(f"point {x} is not in brick {format_brick(src)}")
    return Point(tuple(c.drop(len(s)).prepend(d)
                       for c, s, d in zip(x.coords, src, dst)))


def brick_corners(b: Brick) -> list:
    """The 2^n extreme points of a brick (all-0 / all-1 tails per axis)."""
    corners = [()]
    for w in b:
        corners = [c + (InfiniteWord(w, t),) for c in corners for t in "01"]
    return [Point(c) for c in corners]
