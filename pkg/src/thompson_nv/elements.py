"""Elements of nV as pairs of numbered patterns.

An element maps domain brick ``i`` onto range brick ``i`` by the prefix
replacement that preserves orientation in every coordinate.  Composition
follows the usual convention for maps: ``compose(g, f)`` applies ``f``
first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .cantor import (Brick, NumberedPattern, ParseError, Point, _refine,
                     apply_prefix_replacement, format_brick,
                     parse_brick, point_in_brick, split_brick, transport,
                     trivial_brick, validate_partition)


@dataclass(frozen=True)
class Element:
    domain: NumberedPattern
    range: NumberedPattern

    @property
    def dim(self) -> int:
        return self.domain.dim

    def __len__(self) -> int:
        return len(self.domain)

    def pairs(self):
        return zip(self.domain.bricks, self.range.bricks)

    def __call__(self, x: Point) -> Point:
        return apply(self, x)

    def __mul__(self, other: "Element") -> "Element":
        return compose(self, other)

    def __invert__(self) -> "Element":
        return invert(self)

    def __str__(self) -> str:
        return format_element(self)


def _raw(domain: Sequence[Brick], rng: Sequence[Brick]) -> Element:
    # trusted constructor for internally produced partitions
    return Element(NumberedPattern(tuple(domain)), NumberedPattern(tuple(rng)))


def make_element(domain: NumberedPattern, range: NumberedPattern) -> Element:
    if not isinstance(domain, NumberedPattern):
        domain = NumberedPattern(tuple(domain))
    if not isinstance(range, NumberedPattern):
        range = NumberedPattern(tuple(range))
    if domain.dim != range.dim:
        raise ValueError("domain and range have different dimensions")
    if len(domain) != len(range):
        raise ValueError(
            f"brick counts differ: {len(domain)} vs {len(range)}")
    for name, p in (("domain", domain), ("range", range)):
        verdict = validate_partition(p)
        if not verdict:
            raise ValueError(f"{name} is not a partition: {verdict.reason}")
    return Element(domain, range)


def identity(dim: int) -> Element:
    t = NumberedPattern.trivial(dim)
    return Element(t, t)


def apply(f: Element, x: Point) -> Point:
    if x.dim != f.dim:
        raise ValueError("dimension mismatch")
    for d, r in f.pairs():
        if point_in_brick(x, d):
            return apply_prefix_replacement(x, d, r)
    raise ValueError(f"point {x} not covered by the domain")  # unreachable for valid f


def compose(g: Element, f: Element) -> Element:
    """The element ``g o f`` (``f`` applied first)."""
    if g.dim != f.dim:
        raise ValueError("dimension mismatch")
    fd, fr = f.domain.bricks, f.range.bricks
    gd, gr = g.domain.bricks, g.range.bricks
    dom, rng = [], []
    for piece, i, j in _refine(fr, gd):
        dom.append(transport(piece, fr[i], fd[i]))
        rng.append(transport(piece, gd[j], gr[j]))
    return _raw(dom, rng)


def invert(f: Element) -> Element:
    return Element(f.range, f.domain)


def is_identity(f: Element) -> bool:
    return f.domain.bricks == f.range.bricks


def equals(f: Element, g: Element) -> bool:
    if f.dim != g.dim:
        raise ValueError("dimension mismatch")
    return is_identity(compose(f, invert(g)))


def product(elements: Iterable[Element], dim: int = 2, reduced: bool = True) -> Element:
    """Left-to-right product ``e1 e2 ... ek`` (``ek`` acts first)."""
    out = None
    for e in elements:
        out = e if out is None else compose(out, e)
        if reduced:
            out = reduce(out)
    return identity(dim) if out is None else out


def _sibling(b: Brick, axis: int):
    w = b[axis]
    if not w:
        return None
    flipped = w[:-1] + ("1" if w[-1] == "0" else "0")
    return b[:axis] + (flipped,) + b[axis + 1:]


def _parent(b: Brick, axis: int) -> Brick:
    return b[:axis] + (b[axis][:-1],) + b[axis + 1:]


def reduce(f: Element) -> Element:
    """Merge paired sibling bricks until no merge applies.

    A domain brick and its sibling along axis ``a`` merge when their images
    are siblings along the same axis in the same 0/1 order.
    """
    dom = list(f.domain.bricks)
    rng = list(f.range.bricks)
    changed = True
    while changed:
        changed = False
        where = {b: k for k, b in enumerate(dom)}
        dead = set()
        for i in range(len(dom)):
            if i in dead:
                continue
            d, r = dom[i], rng[i]
            for axis in range(len(d)):
                sib = _sibling(d, axis)
                if sib is None:
                    continue
                j = where.get(sib)
                if j is None or j in dead:
                    continue
                if not r[axis] or _sibling(r, axis) != rng[j] or r[axis][-1] != d[axis][-1]:
                    continue
                dom[i] = _parent(d, axis)
                rng[i] = _parent(r, axis)
                dead.add(j)
                del where[d]
                del where[sib]
                where[dom[i]] = i
                changed = True
                break
        if dead:
            dom = [b for k, b in enumerate(dom) if k not in dead]
            rng = [b for k, b in enumerate(rng) if k not in dead]
    return _raw(dom, rng)


def refine_pair(f: Element, index: int, axis: int) -> Element:
    """Split domain brick ``index`` and its image along ``axis`` (same element)."""
    dom, rng = list(f.domain.bricks), list(f.range.bricks)
    dom[index:index + 1] = split_brick(dom[index], axis)
    rng[index:index + 1] = split_brick(rng[index], axis)
    return _raw(dom, rng)


def transitivity_map(pattern: NumberedPattern, K: Iterable[Brick], U: Brick) -> Element:
    """An element carrying every brick of ``K`` (a proper subset of ``pattern``) into ``U``."""
    K = [tuple(b) for b in K]
    U = tuple(U)
    dim = pattern.dim
    if not K:
        raise ValueError("K must be nonempty")
    if any(b not in pattern.bricks for b in K):
        raise ValueError("K must consist of bricks of the pattern")
    kset = set(K)
    if len(kset) >= len(pattern):
        raise ValueError("K must be a proper subset of the pattern")
    if len(U) != dim:
        raise ValueError("dimension mismatch")
    if all(not w for w in U):
        raise ValueError("U must have nonempty complement")

    # isolate U
    rng = [trivial_brick(dim)]
    cur = trivial_brick(dim)
    for axis, w in enumerate(U):
        for bit in w:
            k = rng.index(cur)
            lo, hi = split_brick(cur, axis)
            rng[k:k + 1] = [lo, hi]
            cur = lo if bit == "0" else hi
    # subdivide U into |K| pieces
    pieces = [U]
    while len(pieces) < len(kset):
        pieces[0:1] = list(split_brick(pieces[0], 0))
    k = rng.index(U)
    rng[k:k + 1] = pieces
    pset = set(pieces)

    dom = list(pattern.bricks)
    while len(dom) < len(rng):
        b = min(x for x in dom if x not in kset)
        k = dom.index(b)
        dom[k:k + 1] = list(split_brick(b, 0))
    while len(rng) < len(dom):
        b = min(x for x in rng if x not in pset)
        k = rng.index(b)
        rng[k:k + 1] = list(split_brick(b, 0))

    k_dom = [b for b in dom if b in kset]
    rest_dom = [b for b in dom if b not in kset]
    rest_rng = [b for b in rng if b not in pset]
    return make_element(NumberedPattern(tuple(k_dom + rest_dom)),
                        NumberedPattern(tuple(pieces + rest_rng)))


def image_bricks(f: Element, b: Brick):
    """Bricks whose union is ``f(b)``."""
    out = []
    for piece, i, _ in _refine(f.domain.bricks, (b,)):
        out.append(transport(piece, f.domain.bricks[i], f.range.bricks[i]))
    return out


# ---------------------------------------------------------------------------
# .el files

def format_element(f: Element) -> str:
    lines = [f"nV dim={f.dim} k={len(f)}"]
    for d, r in f.pairs():
        lines.append(f"{format_brick(d)} => {format_brick(r)}")
    return "\n".join(lines) + "\n"


def parse_element(text: str, validate: bool = True) -> Element:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty element file")
    head = lines[0].split()
    try:
        if head[0] != "nV" or not head[1].startswith("dim=") or not head[2].startswith("k="):
            raise ParseError(f"bad header {lines[0]!r}")
        dim = int(head[1][4:])
        k = int(head[2][2:])
    except (IndexError, ValueError) as exc:
        raise ParseError(f"bad header {lines[0]!r}") from exc
    body = lines[1:]
    if len(body) != k:
        raise ParseError(f"header says k={k} but found {len(body)} pairs")
    dom, rng = [], []
    for ln in body:
        if "=>" not in ln:
            raise ParseError(f"bad pair line {ln!r}")
        a, b = ln.split("=>")
        dom.append(parse_brick(a))
        rng.append(parse_brick(b))
    if any(len(b) != dim for b in dom + rng):
        raise ParseError("brick dimension disagrees with header")
    if validate:
        try:
            return make_element(NumberedPattern(tuple(dom)), NumberedPattern(tuple(rng)))
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    return _raw(dom, rng)
