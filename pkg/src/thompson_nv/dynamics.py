"""Tree pairs for Thompson's group V, revealed representatives and periodic orbits.

A tree is a finite prefix-closed set of binary words in which a node has
either both children or none.  A tree pair ``(D, sigma, R)`` sends the
leaf ``d`` of ``D`` (a dyadic interval) affinely onto the leaf
``sigma[d]`` of ``R``.

Text format (``.tp``)::

    D: 00 01 1 | R: 0 10 11 | sigma: 00->0 01->10 1->11
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .cantor import (InfiniteWord, NumberedPattern, ParseError, Point,
                     format_word, parse_word)
from .elements import Element, compose, equals, invert, is_identity

Tree = FrozenSet[str]


# ---------------------------------------------------------------------------
# trees

def tree_from_leaves(leaves: Iterable[str]) -> Tree:
    nodes = set()
    for w in leaves:
        for k in range(len(w) + 1):
            nodes.add(w[:k])
    return frozenset(nodes)


def tree_leaves(t: Tree) -> List[str]:
    return sorted(w for w in t if w + "0" not in t)


def interior(t: Tree) -> FrozenSet[str]:
    return frozenset(w for w in t if w + "0" in t)


def is_tree(t: Iterable[str]) -> bool:
    t = set(t)
    if "" not in t:
        return False
    for w in t:
        if w and w[:-1] not in t:
            return False
        if (w + "0" in t) != (w + "1" in t):
            return False
    return True


def subtree(t: Tree, root: str) -> Tree:
    """The nodes of ``t`` below ``root``, re-rooted at the empty word."""
    return frozenset(w[len(root):] for w in t if w.startswith(root))


def minimal_tree(words: Iterable[str]) -> Tree:
    """Smallest tree having every given (pairwise incomparable) word as a leaf."""
    nodes = {""}
    for w in words:
        for k in range(len(w)):
            nodes.add(w[:k + 1])
            nodes.add(w[:k] + ("1" if w[k] == "0" else "0"))
    t = frozenset(nodes)
    leaves = set(tree_leaves(t))
    if any(w not in leaves for w in words):
        raise ValueError("words are not pairwise incomparable")
    return t


def leaf_above(t: Tree, w: str) -> str:
    """The leaf of ``t`` that is a prefix of ``w``."""
    for k in range(len(w) + 1):
        p = w[:k]
        if p in t and p + "0" not in t:
            return p
    raise ValueError(f"{w!r} lies above the leaves of the tree")


# ---------------------------------------------------------------------------
# tree pairs

@dataclass(frozen=True)
class TreePair:
    D: Tree
    R: Tree
    sigma: Tuple[Tuple[str, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "D", frozenset(self.D))
        object.__setattr__(self, "R", frozenset(self.R))
        s = dict(self.sigma) if not isinstance(self.sigma, dict) else self.sigma
        object.__setattr__(self, "sigma", tuple(sorted(s.items())))
        if not is_tree(self.D) or not is_tree(self.R):
            raise ValueError("D and R must be finite binary trees")
        dl, rl = tree_leaves(self.D), tree_leaves(self.R)
        if sorted(s) != dl:
            raise ValueError("sigma must be defined exactly on the leaves of D")
        if sorted(s.values()) != rl:
            raise ValueError("sigma must be a bijection onto the leaves of R")

    @property
    def map(self) -> Dict[str, str]:
        return dict(self.sigma)

    @property
    def inverse_map(self) -> Dict[str, str]:
        return {r: d for d, r in self.sigma}

    def d_leaves(self) -> List[str]:
        return tree_leaves(self.D)

    def r_leaves(self) -> List[str]:
        return tree_leaves(self.R)

    def is_permutation(self) -> bool:
        return self.D == self.R

    def __str__(self) -> str:
        return format_tree_pair(self)


def from_leaves(d_leaves: Sequence[str], r_leaves: Sequence[str]) -> TreePair:
    """Tree pair sending ``d_leaves[i]`` to ``r_leaves[i]``."""
    if len(d_leaves) != len(r_leaves):
        raise ValueError("leaf counts differ")
    return TreePair(tree_from_leaves(d_leaves), tree_from_leaves(r_leaves),
                    tuple(zip(d_leaves, r_leaves)))


def trivial_pair() -> TreePair:
    return TreePair(frozenset({""}), frozenset({""}), (("", ""),))


def format_tree_pair(t: TreePair) -> str:
    d = " ".join(format_word(w) for w in t.d_leaves())
    r = " ".join(format_word(w) for w in t.r_leaves())
    s = " ".join(f"{format_word(a)}->{format_word(b)}" for a, b in t.sigma)
    return f"D: {d} | R: {r} | sigma: {s}"


def parse_tree_pair(text: str) -> TreePair:
    """Read ``D: ... | R: ... | sigma: ...``; lines starting with ``#`` are ignored."""
    text = " ".join(ln for ln in text.splitlines() if not ln.lstrip().startswith("#"))
    parts = [p.strip() for p in text.strip().split("|")]
    fields = {}
    for p in parts:
        key, sep, body = p.partition(":")
        if not sep:
            raise ParseError(f"bad tree pair field {p!r}")
        fields[key.strip()] = body.split()
    if set(fields) != {"D", "R", "sigma"}:
        raise ParseError("tree pair needs fields D, R and sigma")
    dl = [parse_word(w) for w in fields["D"]]
    rl = [parse_word(w) for w in fields["R"]]
    sig = {}
    for item in fields["sigma"]:
        a, sep, b = item.partition("->")
        if not sep:
            raise ParseError(f"bad sigma entry {item!r}")
        sig[parse_word(a)] = parse_word(b)
    D, R = tree_from_leaves(dl), tree_from_leaves(rl)
    if sorted(dl) != tree_leaves(D) or sorted(rl) != tree_leaves(R):
        raise ParseError("listed leaves do not form the leaf set of a tree")
    try:
        return TreePair(D, R, tuple(sig.items()))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def to_element(t: TreePair) -> Element:
    dom = tuple((d,) for d, _ in t.sigma)
    rng = tuple((r,) for _, r in t.sigma)
    return Element(NumberedPattern(dom), NumberedPattern(rng))


def from_element(f: Element) -> TreePair:
    if f.dim != 1:
        raise ValueError(f"tree pairs describe 1-dimensional elements, got dim {f.dim}")
    return from_leaves([b[0] for b in f.domain], [b[0] for b in f.range])


# ---------------------------------------------------------------------------
# augmentation

def augment(t: TreePair, u: str, U: Iterable[str]) -> TreePair:
    """Attach ``U`` at the leaf ``u`` of ``D`` and at its image in ``R``."""
    if u not in t.D or u + "0" in t.D:
        raise ValueError(f"{format_word(u)} is not a leaf of D")
    return iterated_augment(t, [u], U)


def iterated_augment(t: TreePair, chain: Sequence[str], U: Iterable[str]) -> TreePair:
    """Attach ``U`` at every ``u_i`` in ``D`` and at every ``sigma(u_i)`` in ``R``."""
    U = frozenset(U)
    if not is_tree(U):
        raise ValueError("U must be a finite binary tree")
    s = t.map
    chain = list(chain)
    if not chain:
        raise ValueError("empty chain")
    for u in chain:
        if u not in s:
            raise ValueError(f"{format_word(u)} is not a leaf of D")
    for a, b in zip(chain, chain[1:]):
        if s[a] != b:
            raise ValueError("chain must satisfy u_{i+1} = sigma(u_i)")
    if len(set(chain)) != len(chain):
        raise ValueError("chain leaves must be distinct")
    ul = tree_leaves(U)
    D, R = set(t.D), set(t.R)
    for u in chain:
        D.update(u + w for w in U)
        R.update(s[u] + w for w in U)
        img = s.pop(u)
        for v in ul:
            s[u + v] = img + v
    return TreePair(frozenset(D), frozenset(R), tuple(s.items()))


def unaugment(t: TreePair, d: str, r: str) -> TreePair:
    """Remove the exposed carets at ``d`` and ``r`` when sigma pairs them in order."""
    s = t.map
    if s.get(d + "0") != r + "0" or s.get(d + "1") != r + "1":
        raise ValueError("carets are not matched in order")
    D = t.D - {d + "0", d + "1"}
    R = t.R - {r + "0", r + "1"}
    del s[d + "0"], s[d + "1"]
    s[d] = r
    return TreePair(D, R, tuple(s.items()))


def reduce_pair(t: TreePair) -> TreePair:
    """Remove matched exposed carets until none remain."""
    while True:
        s = t.map
        for d in sorted(interior(t.D), key=lambda w: (-len(w), w)):
            r = s.get(d + "0")
            if r is None or s.get(d + "1") is None:
                continue
            if r.endswith("0") and s[d + "1"] == r[:-1] + "1":
                t = unaugment(t, d, r[:-1])
                break
        else:
            return t


# ---------------------------------------------------------------------------
# components and revealing

@dataclass(frozen=True)
class Component:
    root: str
    carets: FrozenSet[str]
    lam: str
    chain: Tuple[str, ...]

    @property
    def period(self) -> int:
        return len(self.chain)


def difference_carets(A: Tree, B: Tree) -> FrozenSet[str]:
    return interior(A) - interior(B)


def component_roots(A: Tree, B: Tree) -> List[str]:
    carets = difference_carets(A, B)
    return sorted(c for c in carets if not c or c[:-1] not in carets)


def imbalance(t: TreePair) -> int:
    return len(difference_carets(t.D, t.R))


def measure(t: TreePair) -> Tuple[int, int, int]:
    return (imbalance(t), len(component_roots(t.D, t.R)), len(component_roots(t.R, t.D)))


def _trace_back(t: TreePair, root: str):
    """Follow sigma^-1 from a D-R root through neutral leaves.

    Returns ``(kind, chain)`` with the chain in forward order.  ``kind`` is
    ``"type1"``, ``"type2"`` or ``"lambda"``.
    """
    inv = t.inverse_map
    chain: List[str] = []
    x = root
    while True:
        u = inv[x]
        chain.insert(0, u)
        if u in t.R:
            if u + "0" in t.R:
                return "type1", chain
            x = u  # neutral leaf
            continue
        if leaf_above(t.R, u) == root:
            return "lambda", chain
        return "type2", chain


def _trace_forward(t: TreePair, root: str):
    """Follow sigma from an R-D root through neutral leaves."""
    s = t.map
    chain = [root]
    while True:
        w = s[chain[-1]]
        if w in t.D:
            if w + "0" in t.D:
                return "type1", chain
            chain.append(w)
            continue
        if leaf_above(t.D, w) == root:
            return "lambda", chain
        return "type3", chain


@dataclass
class RevealedPair:
    pair: TreePair
    components_DminusR: List[Component]
    components_RminusD: List[Component]
    neutral_cycles: List[Tuple[str, ...]]
    steps: List[Tuple[str, str, Tuple[str, ...]]] = field(default_factory=list)

    @property
    def imbalance(self) -> int:
        return imbalance(self.pair)

    def d_classes(self) -> Dict[str, str]:
        out = {}
        for u in self.pair.d_leaves():
            if u in self.pair.R:
                out[u] = "domain-of-attraction" if u + "0" in self.pair.R else "neutral"
        for c in self.components_DminusR:
            for v in tree_leaves(subtree(self.pair.D, c.root)):
                out[c.root + v] = "repeller" if c.root + v == c.lam else "source"
        return out

    def r_classes(self) -> Dict[str, str]:
        out = {}
        for u in self.pair.r_leaves():
            if u in self.pair.D:
                out[u] = "range-of-repulsion" if u + "0" in self.pair.D else "neutral"
        for c in self.components_RminusD:
            for v in tree_leaves(subtree(self.pair.R, c.root)):
                out[c.root + v] = "attractor" if c.root + v == c.lam else "sink"
        return out

    def stats(self) -> Dict[str, int]:
        dc, rc = self.d_classes().values(), self.r_classes().values()
        return {
            "imbalance": self.imbalance,
            "components_DminusR": len(self.components_DminusR),
            "components_RminusD": len(self.components_RminusD),
            "sources": sum(1 for c in dc if c == "source"),
            "sinks": sum(1 for c in rc if c == "sink"),
            "neutral_cycles": len(self.neutral_cycles),
            "augmentations": len(self.steps),
        }


def _find_augmentation(t: TreePair, reverse: bool):
    roots = component_roots(t.D, t.R)
    if reverse:
        roots = roots[::-1]
    traces = [(r, *_trace_back(t, r)) for r in roots]
    for wanted in ("type1", "type2"):
        for root, kind, chain in traces:
            if kind == wanted:
                return kind, root, chain, subtree(t.D, root)
    roots = component_roots(t.R, t.D)
    if reverse:
        roots = roots[::-1]
    for root in roots:
        kind, chain = _trace_forward(t, root)
        if kind != "lambda":
            # a type1 chain here would already have been found backwards
            assert kind == "type3", kind
            return kind, root, chain, subtree(t.R, root)
    return None


def reveal(t: TreePair, order: str = "lex") -> RevealedPair:
    """Augment until no type-1, type-2 or type-3 chain remains.

    ``order`` is ``"lex"`` (component roots in lexicographic order) or
    ``"reverse"``; both give representatives with the same dynamics.
    """
    if order not in ("lex", "reverse"):
        raise ValueError("order must be 'lex' or 'reverse'")
    steps = []
    cur = t
    m = measure(cur)
    while True:
        found = _find_augmentation(cur, order == "reverse")
        if found is None:
            break
        kind, root, chain, U = found
        nxt = iterated_augment(cur, chain, U)
        m2 = measure(nxt)
        assert m2 < m, f"{kind} augmentation did not decrease {m} -> {m2}"
        steps.append((kind, root, tuple(chain)))
        cur, m = nxt, m2

    dmr = []
    for root in component_roots(cur.D, cur.R):
        kind, chain = _trace_back(cur, root)
        assert kind == "lambda"
        dmr.append(Component(root, frozenset(root + c for c in interior(subtree(cur.D, root))),
                             chain[0], tuple(chain)))
    rmd = []
    s = cur.map
    for root in component_roots(cur.R, cur.D):
        kind, chain = _trace_forward(cur, root)
        assert kind == "lambda"
        rmd.append(Component(root, frozenset(root + c for c in interior(subtree(cur.R, root))),
                             s[chain[-1]], tuple(chain)))
    return RevealedPair(cur, dmr, rmd, neutral_cycles(cur), steps)


def neutral_cycles(t: TreePair) -> List[Tuple[str, ...]]:
    s = t.map
    neutral = {u for u in s if u in t.R and u + "0" not in t.R}
    seen = set()
    out = []
    for u in sorted(neutral):
        if u in seen:
            continue
        cyc = [u]
        x = s[u]
        while x != u and x in neutral and x not in seen and len(cyc) <= len(s):
            cyc.append(x)
            x = s[x]
        if x == u:
            out.append(tuple(cyc))
            seen.update(cyc)
    return out


# ---------------------------------------------------------------------------
# periodic orbit report

KINDS = ("repelling", "attracting", "neutral-interval")


@dataclass(frozen=True, order=True)
class PeriodicRecord:
    kind: str
    period: int
    point: Point = field(compare=False)
    key: str = ""
    orbit: Tuple[str, ...] = ()
    region: Optional[str] = None

    def as_dict(self) -> dict:
        out = {"point": str(self.point), "period": self.period, "kind": self.kind}
        if self.region is not None:
            out["region"] = format_word(self.region)
        else:
            out["orbit"] = list(self.orbit)
        return out


@dataclass(frozen=True)
class DynamicsReport:
    periodic_points: Tuple[PeriodicRecord, ...]
    n_f: int

    def isolated(self) -> List[PeriodicRecord]:
        return [r for r in self.periodic_points if r.region is None]

    def neutral_regions(self) -> List[PeriodicRecord]:
        return [r for r in self.periodic_points if r.region is not None]

    def lines(self) -> List[str]:
        out = []
        for r in self.periodic_points:
            where = f"region={format_word(r.region)}" if r.region is not None else \
                "orbit=" + ",".join(r.orbit)
            out.append(f"{r.kind} period={r.period} point={r.point} {where}")
        out.append(f"n_f={self.n_f}")
        return out

    def as_dict(self) -> dict:
        return {"periodic_points": [r.as_dict() for r in self.periodic_points],
                "n_f": self.n_f}


def _point(word: str, period: str) -> Point:
    return Point((InfiniteWord(word, period),))


def _orbit_record(kind: str, chain: Sequence[str], s: str) -> PeriodicRecord:
    pts = sorted({str(_point(u, s)) for u in chain})
    if len(pts) != len(chain):
        raise AssertionError("orbit points of a chain must be distinct")
    rep = Point.parse(pts[0])
    return PeriodicRecord(kind, len(chain), rep, pts[0], tuple(pts))


def merge_dyadic(words: Iterable[str]) -> List[str]:
    """Minimal list of cylinders covering the same set as ``words`` (disjoint input)."""
    ws = set(words)
    changed = True
    while changed:
        changed = False
        for w in sorted(ws, key=len, reverse=True):
            if w and w in ws:
                sib = w[:-1] + ("1" if w[-1] == "0" else "0")
                if sib in ws:
                    ws -= {w, sib}
                    ws.add(w[:-1])
                    changed = True
    return sorted(ws)


def report_from_revealed(rp: RevealedPair) -> DynamicsReport:
    recs = []
    for c in rp.components_DminusR:
        s = c.lam[len(c.root):]
        recs.append(_orbit_record("repelling", c.chain, s))
    for c in rp.components_RminusD:
        s = c.lam[len(c.root):]
        recs.append(_orbit_record("attracting", c.chain, s))
    by_period: Dict[int, List[str]] = {}
    for cyc in rp.neutral_cycles:
        by_period.setdefault(len(cyc), []).extend(cyc)
    for c, leaves in by_period.items():
        for w in merge_dyadic(leaves):
            pt = _point(w, "0")
            recs.append(PeriodicRecord("neutral-interval", c, pt, format_word(w), (), w))
    recs.sort(key=lambda r: (KINDS.index(r.kind), r.period, r.key))
    n_f = max((r.period for r in recs), default=0)
    return DynamicsReport(tuple(recs), n_f)


def dynamics_report(t: TreePair, order: str = "lex") -> DynamicsReport:
    return report_from_revealed(reveal(t, order))


# ---------------------------------------------------------------------------
# brute-force census (independent of the revealing machinery)

def canonical_points(max_pre: int = 4, max_period: int = 8) -> List[Point]:
    """Every rational point of the Cantor set with preperiod <= max_pre, period <= max_period."""
    seen = set()
    out = []
    for p in range(1, max_period + 1):
        for bits in itertools.product("01", repeat=p):
            per = "".join(bits)
            for n in range(max_pre + 1):
                for pb in itertools.product("01", repeat=n):
                    w = InfiniteWord("".join(pb), per)
                    if len(w.pre) <= max_pre and len(w.period) <= max_period and w not in seen:
                        seen.add(w)
                        out.append(Point((w,)))
    return out


@dataclass
class CensusResult:
    examined: int
    periods: Dict[Point, int]
    max_orbit: int
    problems: List[str]

    @property
    def ok(self) -> bool:
        return not self.problems


class _FastMap:
    """Prefix replacement on ``(pre, period)`` pairs for a 1-dimensional element."""

    def __init__(self, f: Element):
        if f.dim != 1:
            raise ValueError("census works in dimension 1")
        self.table = {d[0]: r[0] for d, r in f.pairs()}
        self.depth = max(len(w) for w in self.table)

    def __call__(self, x: Tuple[str, str]) -> Tuple[str, str]:
        pre, per = x
        s = pre + per * (self.depth // len(per) + 1)
        for k in range(self.depth + 1):
            r = self.table.get(s[:k])
            if r is not None:
                break
        else:
            raise ValueError("domain does not cover the point")
        if k <= len(pre):
            pre = pre[k:]
        else:
            j = (k - len(pre)) % len(per)
            pre, per = "", per[j:] + per[:j]
        pre = r + pre
        while pre and pre[-1] == per[-1]:
            pre, per = pre[:-1], per[-1] + per[:-1]
        return pre, per


def orbit_period(f, x, bound: int, memo: Optional[dict] = None) -> int:
    """Period of ``x`` under ``f``, or 0 when it does not return within ``bound`` steps.

    ``f`` is an element or a prepared map on ``(pre, period)`` pairs; ``x``
    a point or such a pair.
    """
    step = f if isinstance(f, _FastMap) else _FastMap(f)
    if isinstance(x, Point):
        x = (x.coords[0].pre, x.coords[0].period)
    memo = {} if memo is None else memo
    if x in memo:
        return memo[x]
    path = [x]
    y = step(x)
    status = None
    while status is None:
        if y == x:
            status = len(path)
        elif y in memo:
            status = memo[y]
        elif len(path) >= bound:
            status = 0
        else:
            path.append(y)
            y = step(y)
    # points of one trajectory share an orbit, hence a status
    for p in path:
        memo[p] = status
    return status


def census(f: Element, report: DynamicsReport, max_pre: int = 4, max_period: int = 8,
           bound: int = 64) -> CensusResult:
    """Compare the report with orbit simulation on a grid of rational points.

    The grid is augmented by every reported isolated orbit point and a
    sample point of every neutral region.  Periods above ``bound`` are
    treated as infinite orbits.
    """
    step = _FastMap(f)
    memo: Dict[Tuple[str, str], int] = {}
    problems = []
    isolated = {}
    for r in report.isolated():
        for p in r.orbit:
            isolated[Point.parse(p)] = r.period
    regions = [(r.region, r.period) for r in report.neutral_regions()]

    def region_period(x: Point) -> Optional[int]:
        for w, c in regions:
            if x.coords[0].startswith(w):
                return c
        return None

    pts = canonical_points(max_pre, max_period)
    grid = set(pts)
    pts += [x for x in isolated if x not in grid]
    pts += [r.point for r in report.neutral_regions()]
    periods = {}
    for x in pts:
        k = orbit_period(step, x, bound, memo)
        periods[x] = k
        expected = isolated.get(x)
        if expected is None:
            expected = region_period(x)
        if k != (expected or 0):
            problems.append(f"point {x}: census period {k or 'none'}, report {expected or 'none'}")
    max_orbit = max(periods.values(), default=0)
    if max_orbit != report.n_f:
        problems.append(f"largest census orbit {max_orbit} != n_f {report.n_f}")
    return CensusResult(len(pts), periods, max_orbit, problems)


# ---------------------------------------------------------------------------
# permutations and transpositions

def permutation(D: Tree, tau: Dict[str, str]) -> TreePair:
    return TreePair(D, D, tuple(tau.items()))


def swap_pair(a: str, b: str) -> TreePair:
    """The permutation exchanging the incomparable cylinders ``a`` and ``b``."""
    D = minimal_tree([a, b])
    tau = {w: w for w in tree_leaves(D)}
    tau[a], tau[b] = b, a
    return permutation(D, tau)


def _exposed_carets(t: Tree) -> List[str]:
    out = [w for w in interior(t) if w + "00" not in t and w + "10" not in t]
    return sorted(out, key=lambda w: (-len(w), w))


def compose_pairs(factors: Sequence[TreePair]) -> Element:
    """``F_1 o F_2 o ... o F_m`` as an element of V."""
    out = None
    for t in factors:
        e = to_element(t)
        out = e if out is None else compose(out, e)
    return out if out is not None else to_element(trivial_pair())


def permutation_factor(t: TreePair) -> List[TreePair]:
    """Permutations ``F_1, ..., F_m`` with ``t = F_1 o ... o F_m``.

    At each stage the deepest, then leftmost, exposed carets of D and R are
    lined up by precomposing with a permutation of D, and then removed.
    """
    if t.is_permutation():
        return [t]
    undo = []
    cur = t
    while not cur.is_permutation():
        d = _exposed_carets(cur.D)[0]
        r = _exposed_carets(cur.R)[0]
        inv = cur.inverse_map
        a, b = inv[r + "0"], inv[r + "1"]
        # tau(d0) = a and tau(d1) = b, so sigma o tau pairs the two carets in order
        leaves = cur.d_leaves()
        rest_src = [w for w in leaves if w not in (d + "0", d + "1")]
        rest_dst = [w for w in leaves if w not in (a, b)]
        tau = dict(zip(rest_src, rest_dst))
        tau[d + "0"], tau[d + "1"] = a, b
        P = permutation(cur.D, tau)
        s = cur.map
        nxt = TreePair(cur.D, cur.R, tuple((w, s[tau[w]]) for w in tau))
        undo.append(P)
        cur = unaugment(nxt, d, r)
    factors = [] if is_identity(to_element(cur)) else [cur]
    for P in reversed(undo):
        Pi = TreePair(P.D, P.D, tuple((v, k) for k, v in P.sigma))
        if not is_identity(to_element(Pi)):
            factors.append(Pi)
    return factors


@dataclass(frozen=True)
class TranspositionCertificate:
    u: str
    v: str
    g: TreePair
    j: TreePair


def _commutator(x: Element, y: Element) -> Element:
    return compose(compose(x, y), compose(invert(x), invert(y)))


def extract_proper_transposition(f: TreePair):
    """A proper transposition in the normal closure of ``f``, with a certificate.

    Returns ``(k, certificate)``; ``k = [j, [g, f]]`` is checked to equal
    the exchange of ``u`` and ``v``.
    """
    fe = to_element(f)
    if equals(fe, to_element(trivial_pair())):
        raise ValueError("the identity has trivial normal closure")
    s = f.map
    d = next(w for w in f.d_leaves() if s[w] != w)
    e = s[d]
    if d.startswith(e) or e.startswith(d):
        w = d[len(e):] if d.startswith(e) else e[len(d):]
        c = "1" if w[0] == "0" else "0"
        z = c * max(1, 3 - min(len(d), len(e)))
    else:
        z = "0" * max(0, 3 - min(len(d), len(e)))
    u, v = d + z, e + z
    assert not (u.startswith(v) or v.startswith(u))
    g = swap_pair(u + "0", u + "1")
    j = swap_pair(u + "0", v + "0")
    h = _commutator(to_element(g), fe)
    k = _commutator(to_element(j), h)
    target = swap_pair(u, v)
    if not equals(k, to_element(target)):
        raise AssertionError("commutator construction did not give the exchange of u and v")
    return target, TranspositionCertificate(u, v, g, j)


def verify_transposition(f: TreePair, k: TreePair, cert: TranspositionCertificate) -> bool:
    """Recompute ``[j, [g, f]]`` from the certificate and compare with ``k``."""
    h = _commutator(to_element(cert.g), to_element(f))
    kk = _commutator(to_element(cert.j), h)
    moved = [w for w, x in k.sigma if w != x]
    proper = len(k.d_leaves()) >= 3 and len(moved) == 2 and k.is_permutation()
    return proper and equals(kk, to_element(k)) and equals(kk, to_element(swap_pair(cert.u, cert.v)))
