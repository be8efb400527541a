"""Relation families among the Sigma generators, finite generation rewrites,
the abelianization check and commutator expressions for the baker's map.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from .cantor import ParseError, Point, brick_corners
from .elements import Element, apply, equals, invert, product
from .sigma import SigmaLetter, baker_map, eval_sigma, letter_element, parse_sigma


@dataclass(frozen=True)
class Family:
    id: int
    text: str
    params: Tuple[str, ...]
    condition: Callable[..., bool]
    build: Callable[..., Tuple[str, str]]
    uses_xy: Tuple[str, ...] = ()


def _f(fid, text, params, cond, build, xy=()):
    return Family(fid, text, params, cond, build, xy)


FAMILIES: Dict[int, Family] = {f.id: f for f in [
    _f(1, "X_q Y_m = Y_m X_{q+1}, m<q", ("m", "q"), lambda m, q: m < q,
       lambda m, q, X, Y: (f"{X}{q} {Y}{m}", f"{Y}{m} {X}{q + 1}"), ("X", "Y")),
    _f(2, "pi_q X_m = X_m pi_{q+1}, m<q", ("m", "q"), lambda m, q: m < q,
       lambda m, q, X: (f"p{q} {X}{m}", f"{X}{m} p{q + 1}"), ("X",)),
    _f(3, "pi_q X_q = X_{q+1} pi_q pi_{q+1}", ("q",), lambda q: q >= 0,
       lambda q, X: (f"p{q} {X}{q}", f"{X}{q + 1} p{q} p{q + 1}"), ("X",)),
    _f(4, "pi_q X_m = X_m pi_q, m>q+1", ("m", "q"), lambda m, q: m > q + 1,
       lambda m, q, X: (f"p{q} {X}{m}", f"{X}{m} p{q}"), ("X",)),
    _f(5, "pibar_q X_m = X_m pibar_{q+1}, m<q", ("m", "q"), lambda m, q: m < q,
       lambda m, q, X: (f"q{q} {X}{m}", f"{X}{m} q{q + 1}"), ("X",)),
    _f(6, "pibar_m A_m = pi_m pibar_{m+1}", ("m",), lambda m: m >= 0,
       lambda m: (f"q{m} A{m}", f"p{m} q{m + 1}")),
    _f(7, "pibar_m B_m = C_{m+1} pi_m pibar_{m+1}", ("m",), lambda m: m >= 0,
       lambda m: (f"q{m} B{m}", f"C{m + 1} p{m} q{m + 1}")),
    _f(8, "C_q X_m = X_m C_{q+1}, m<q", ("m", "q"), lambda m, q: m < q,
       lambda m, q, X: (f"C{q} {X}{m}", f"{X}{m} C{q + 1}"), ("X",)),
    _f(9, "C_m A_m = B_m C_{m+2} pi_{m+1}", ("m",), lambda m: m >= 0,
       lambda m: (f"C{m} A{m}", f"B{m} C{m + 2} p{m + 1}")),
    _f(10, "pi_q C_m = C_m pi_q, m>q+1", ("m", "q"), lambda m, q: m > q + 1,
       lambda m, q: (f"p{q} C{m}", f"C{m} p{q}")),
    _f(11, "A_m B_{m+1} B_m = B_m A_{m+1} A_m pi_{m+1}", ("m",), lambda m: m >= 0,
       lambda m: (f"A{m} B{m + 1} B{m}", f"B{m} A{m + 1} A{m} p{m + 1}")),
    _f(12, "pi_q pi_m = pi_m pi_q, |m-q|>=2", ("m", "q"), lambda m, q: abs(m - q) >= 2,
       lambda m, q: (f"p{q} p{m}", f"p{m} p{q}")),
    _f(13, "pi_m pi_{m+1} pi_m = pi_{m+1} pi_m pi_{m+1}", ("m",), lambda m: m >= 0,
       lambda m: (f"p{m} p{m + 1} p{m}", f"p{m + 1} p{m} p{m + 1}")),
    _f(14, "pibar_q pi_m = pi_m pibar_q, q>=m+2", ("m", "q"), lambda m, q: q >= m + 2,
       lambda m, q: (f"q{q} p{m}", f"p{m} q{q}")),
    _f(15, "pi_m pibar_{m+1} pi_m = pibar_{m+1} pi_m pibar_{m+1}", ("m",), lambda m: m >= 0,
       lambda m: (f"p{m} q{m + 1} p{m}", f"q{m + 1} p{m} q{m + 1}")),
    _f(16, "pi_m^2 = 1", ("m",), lambda m: m >= 0, lambda m: (f"p{m} p{m}", "")),
    _f(17, "pibar_m^2 = 1", ("m",), lambda m: m >= 0, lambda m: (f"q{m} q{m}", "")),
]}


def family_words(fid: int, **idx) -> Tuple[str, str]:
    fam = FAMILIES.get(fid)
    if fam is None:
        raise ValueError(f"no relation family {fid}")
    nums = {k: idx[k] for k in fam.params if k in idx}
    if set(nums) != set(fam.params):
        raise ValueError(f"family {fid} needs indices {fam.params}")
    if any(v < 0 for v in nums.values()) or not fam.condition(**nums):
        raise ValueError(f"side condition of family {fid} ({fam.text}) violated by {nums}")
    letters = {}
    for k in fam.uses_xy:
        v = idx.get(k)
        if v not in ("A", "B"):
            raise ValueError(f"family {fid} needs {k} in {{A, B}}")
        letters[k] = v
    return fam.build(**nums, **letters)


def words_equal(lhs, rhs) -> bool:
    return equals(eval_sigma(lhs), eval_sigma(rhs))


def verify_family(fid: int, **idx) -> bool:
    return words_equal(*family_words(fid, **idx))


def family_instances(max_index: int):
    """Every admissible ``(family, assignment)`` with numeric indices <= max_index."""
    rng = range(max_index + 1)
    for fid, fam in FAMILIES.items():
        if fam.params == ("m",):
            numeric = [{"m": m} for m in rng]
        elif fam.params == ("q",):
            numeric = [{"q": q} for q in rng]
        else:
            numeric = [{"m": m, "q": q} for m in rng for q in rng]
        numeric = [n for n in numeric if fam.condition(**n)]
        xy = [{}]
        for k in fam.uses_xy:
            xy = [dict(d, **{k: v}) for d in xy for v in "AB"]
        for n in numeric:
            for d in xy:
                yield fid, dict(n, **d)


def derived_instances(max_index: int):
    """The m = q+1 case of pi_q X_m, a consequence of family 3."""
    for q in range(max_index):
        for X in "AB":
            yield f"p{q} {X}{q + 1}", f"{X}{q} p{q + 1} p{q}", {"q": q, "X": X}


@dataclass
class SweepReport:
    max_index: int
    results: List[Tuple[int, dict, bool]] = field(default_factory=list)
    derived: List[Tuple[dict, bool]] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.results)

    @property
    def failures(self):
        return [r for r in self.results if not r[2]] + \
            [(0, d, ok) for d, ok in self.derived if not ok]

    @property
    def ok(self) -> bool:
        return not self.failures

    def counts(self) -> Dict[int, Tuple[int, int]]:
        out: Dict[int, Tuple[int, int]] = {}
        for fid, _, ok in self.results:
            p, t = out.get(fid, (0, 0))
            out[fid] = (p + ok, t + 1)
        return out

    def lines(self) -> List[str]:
        out = []
        for fid, idx, ok in self.results:
            ind = ",".join(f"{k}={v}" for k, v in idx.items())
            out.append(f"family={fid} indices={ind} {'pass' if ok else 'fail'}")
        for idx, ok in self.derived:
            ind = ",".join(f"{k}={v}" for k, v in idx.items())
            out.append(f"family=3' indices={ind} {'pass' if ok else 'fail'}")
        return out


def sweep_families(max_index: int = 4) -> SweepReport:
    report = SweepReport(max_index)
    for fid, idx in family_instances(max_index):
        report.results.append((fid, idx, verify_family(fid, **idx)))
    for lhs, rhs, idx in derived_instances(max_index):
        report.derived.append((idx, words_equal(lhs, rhs)))
    return report


# Deliberately broken relations; each must evaluate to false.
MUTATIONS = [
    ("A1 A0", "A0 A1"),
    ("p0 A0", "A0 p1"),
    ("C0 A0", "B0 C1 p1"),
    ("q0 A0", "p1 q1"),
    ("A0 B1 B0", "B0 A1 A0"),
    ("p0 p1", "p1 p0"),
    ("q0 B0", "C0 p0 q1"),
    ("C1 A0", "A0 C1"),
]


def mutation_controls():
    return [(lhs, rhs, words_equal(lhs, rhs)) for lhs, rhs in MUTATIONS]


# ---------------------------------------------------------------------------
# finite generation

def conjugation_identity(Z: str, q: int, sign: int = 1) -> Tuple[str, str]:
    """``Z_{q+1} = A_0^{-q} Z_1 A_0^q``; ``sign=-1`` gives the mutated form."""
    neg = " ".join(["A0'"] * q)
    pos = " ".join(["A0"] * q)
    if sign < 0:
        neg, pos = pos, neg
    return f"{Z}{q + 1}", f"{neg} {Z}1 {pos}"


def c_identity(m: int) -> Tuple[str, str]:
    return f"C{m}", f"q{m} B{m} q{m + 1} p{m} B{m} p{m + 1} A{m}'"


@dataclass
class FiniteGenReport:
    conjugations: List[Tuple[str, int, bool]] = field(default_factory=list)
    c_rewrites: List[Tuple[int, bool]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r[-1] for r in self.conjugations) and all(r[-1] for r in self.c_rewrites)


def finite_generation_identities(max_index: int = 3) -> FiniteGenReport:
    rep = FiniteGenReport()
    for Z in "ABCpq":
        for q in range(1, max_index + 1):
            rep.conjugations.append((Z, q, words_equal(*conjugation_identity(Z, q))))
    for m in range(max_index + 1):
        rep.c_rewrites.append((m, words_equal(*c_identity(m))))
    return rep


# ---------------------------------------------------------------------------
# abelianization

FINITE_GENERATORS = ("A0", "A1", "B0", "B1", "p0", "p1", "q0", "q1")

# relation instances used to show each finite generator is a product of commutators
ABEL_RELATIONS = {
    "piA0": ("p0 A0", "A1 p0 p1"),
    "piB0": ("p0 B0", "B1 p0 p1"),
    "piA1": ("p1 A1", "A2 p1 p2"),
    "braid": ("p0 p1 p0", "p1 p0 p1"),
    "pibarA1": ("q1 A1", "p1 q2"),
    "pibarA0": ("q0 A0", "p0 q1"),
    "mixed-braid": ("p0 q1 p0", "q1 p0 q1"),
    "cross": ("A0 B1 B0", "B0 A1 A0 p1"),
    # Z_2 is conjugate to Z_1, so the two share a class
    "Z2=Z1:A": ("A2", "A0' A1 A0"),
    "Z2=Z1:B": ("B2", "A0' B1 A0"),
    "Z2=Z1:C": ("C2", "A0' C1 A0"),
    "Z2=Z1:p": ("p2", "A0' p1 A0"),
    "Z2=Z1:q": ("q2", "A0' q1 A0"),
}


def exponent_vector(word, names: Sequence[str]) -> List[int]:
    vec = [0] * len(names)
    pos = {n: i for i, n in enumerate(names)}
    for x in parse_sigma(word):
        vec[pos[f"{x.base}{x.index}"]] += x.exponent
    return vec


def _echelon(rows: List[List[int]]) -> List[List[int]]:
    """Integer row echelon form (row operations over Z only)."""
    rows = [r[:] for r in rows if any(r)]
    ncols = len(rows[0]) if rows else 0
    out = []
    for col in range(ncols):
        while True:
            live = [r for r in rows if r[col] != 0]
            if len(live) <= 1:
                break
            piv = min(live, key=lambda r: abs(r[col]))
            for r in live:
                if r is not piv:
                    f = r[col] // piv[col]
                    for k in range(ncols):
                        r[k] -= f * piv[k]
            rows = [r for r in rows if any(r)]
        live = [r for r in rows if r[col] != 0]
        if live:
            piv = live[0]
            if piv[col] < 0:
                piv[:] = [-x for x in piv]
            out.append(piv)
            rows = [r for r in rows if r is not piv]
    return out


def in_lattice(vec: Sequence[int], echelon: List[List[int]]) -> bool:
    v = list(vec)
    for row in echelon:
        col = next(k for k, x in enumerate(row) if x)
        if v[col] % row[col]:
            return False
        f = v[col] // row[col]
        v = [a - f * b for a, b in zip(v, row)]
    return not any(v)


def surviving_classes(relations: Dict[str, Tuple[str, str]]) -> List[str]:
    """Finite generators whose abelianization class is not killed by ``relations``."""
    names = set(FINITE_GENERATORS)
    for lhs, rhs in relations.values():
        for x in parse_sigma(lhs) + parse_sigma(rhs):
            names.add(f"{x.base}{x.index}")
    names = sorted(names)
    rows = []
    for lhs, rhs in relations.values():
        a, b = exponent_vector(lhs, names), exponent_vector(rhs, names)
        rows.append([x - y for x, y in zip(a, b)])
    ech = _echelon(rows) if rows else []
    out = []
    for g in FINITE_GENERATORS:
        unit = [1 if n == g else 0 for n in names]
        if not in_lattice(unit, ech):
            out.append(g)
    return out


def abelianization_check(relations: Optional[Dict[str, Tuple[str, str]]] = None) -> bool:
    rels = ABEL_RELATIONS if relations is None else relations
    return not surviving_classes(rels)


def abelian_relations_hold() -> Dict[str, bool]:
    """Each relation used above, checked as an identity of elements."""
    return {k: words_equal(l, r) for k, (l, r) in ABEL_RELATIONS.items()}


# ---------------------------------------------------------------------------
# commutator expressions

@dataclass(frozen=True)
class Gen:
    letter: SigmaLetter


@dataclass(frozen=True)
class Prod:
    items: Tuple["Expr", ...]


@dataclass(frozen=True)
class Inv:
    item: "Expr"


@dataclass(frozen=True)
class Comm:
    left: "Expr"
    right: "Expr"


Expr = Union[Gen, Prod, Inv, Comm]


def eval_commutator(expr: Expr) -> Element:
    """Evaluate an expression; ``[x, y]`` is ``x y x^-1 y^-1``."""
    if isinstance(expr, Gen):
        return letter_element(expr.letter)
    if isinstance(expr, Inv):
        return invert(eval_commutator(expr.item))
    if isinstance(expr, Prod):
        return product((eval_commutator(e) for e in expr.items), dim=2)
    if isinstance(expr, Comm):
        x, y = eval_commutator(expr.left), eval_commutator(expr.right)
        return product([x, y, invert(x), invert(y)], dim=2)
    raise ValueError(f"malformed expression {expr!r}")


_LEX = re.compile(r"\s*(?:([ABCpq])(\d+)|(K)(\d+)|([\[\],()'])|(\S))")


def parse_expr(text: str, names: Optional[Dict[str, Expr]] = None) -> Expr:
    """Parse ``A1 [p1', A0'] A1'`` style expressions.

    ``names`` binds ``K<n>`` tokens to previously parsed expressions.
    """
    names = names or {}
    toks = []
    for m in _LEX.finditer(text):
        if m.group(6):
            raise ParseError(f"unexpected character {m.group(6)!r}")
        if m.group(1):
            toks.append(("gen", SigmaLetter(m.group(1), int(m.group(2)))))
        elif m.group(3):
            key = f"K{m.group(4)}"
            if key not in names:
                raise ParseError(f"unbound name {key}")
            toks.append(("expr", names[key]))
        elif m.group(5):
            toks.append(("sym", m.group(5)))
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def sequence(stop):
        items = []
        while True:
            kind, val = peek()
            if kind is None or (kind == "sym" and val in stop):
                break
            items.append(term())
        return items[0] if len(items) == 1 else Prod(tuple(items))

    def term():
        nonlocal pos
        kind, val = peek()
        pos += 1
        if kind == "gen":
            node = Gen(val)
        elif kind == "expr":
            node = val
        elif kind == "sym" and val == "[":
            left = sequence({","})
            if peek() != ("sym", ","):
                raise ParseError("expected ',' in commutator")
            pos += 1
            right = sequence({"]"})
            if peek() != ("sym", "]"):
                raise ParseError("expected ']'")
            pos += 1
            node = Comm(left, right)
        elif kind == "sym" and val == "(":
            node = sequence({")"})
            if peek() != ("sym", ")"):
                raise ParseError("expected ')'")
            pos += 1
        else:
            raise ParseError(f"unexpected token {val!r}")
        while peek() == ("sym", "'"):
            pos += 1
            node = Inv(node)
        return node

    expr = sequence(set())
    if pos != len(toks):
        raise ParseError("trailing tokens")
    return expr


K_DEFINITIONS = {
    "K1": "[A0', A1]",
    "K2": "A1 [p1', A0'] A1'",
    "K3": "[p1', q1']",
    "K4": "[q1', A0']",
    "K5": "[A1', p0']",
    "K6": "[A0', C1']",
    "K7": "[B1', p0']",
    "K8": "[p1', A0']",
}

# conjugated block, then the remaining factors
BAKER_CONJUGATOR = "q1"
BAKER_INNER = ["K6", "K1", "K2", "K3", "K4", "K5", "K1", "K2", "K8", "K4'"]
# the same word without the K5 of the conjugated block; this variant does equal C0
BAKER_INNER_AMENDED = BAKER_INNER[:5] + BAKER_INNER[6:]
BAKER_OUTER = ["K2'", "K1'", "K6", "K6", "K1", "K2", "K3", "K4", "K1", "K2", "K8", "K7",
               "(K1 K2 K3 K4 K5 K1 K2)'"]


def k_names() -> Dict[str, Expr]:
    return {k: parse_expr(v) for k, v in K_DEFINITIONS.items()}


def baker_expression(inner=None, outer=None, conjugate: bool = True) -> Expr:
    inner = BAKER_INNER if inner is None else inner
    outer = BAKER_OUTER if outer is None else outer
    block = "(" + " ".join(inner) + ")"
    if conjugate:
        block = f"{BAKER_CONJUGATOR} {block} {BAKER_CONJUGATOR}'"
    return parse_expr(block + " " + " ".join(outer), k_names())


def baker_comm_check(expr: Optional[Expr] = None, amended: bool = False) -> bool:
    """Does the commutator word (as written, or ``expr``) equal the baker's map?"""
    if expr is None:
        expr = baker_expression(inner=BAKER_INNER_AMENDED if amended else None)
    return equals(eval_commutator(expr), baker_map())


def baker_deletions(amended: bool = False):
    """Every variant of the commutator word with one factor (or the conjugation) removed."""
    inner = BAKER_INNER_AMENDED if amended else BAKER_INNER
    out = []
    for i in range(len(inner)):
        out.append((f"inner[{i}]={inner[i]}",
                    baker_expression(inner=inner[:i] + inner[i + 1:])))
    for i in range(len(BAKER_OUTER)):
        out.append((f"outer[{i}]={BAKER_OUTER[i]}",
                    baker_expression(inner=inner, outer=BAKER_OUTER[:i] + BAKER_OUTER[i + 1:])))
    out.append(("conjugation", baker_expression(inner=inner, conjugate=False)))
    return out


def witness_point(f: Element, g: Element, depth: int = 6) -> Optional[Point]:
    """A rational point where ``f`` and ``g`` differ (corners of fine bricks), if any is found."""
    for brick in _grid(f.dim, depth):
        for x in brick_corners(brick):
            if apply(f, x) != apply(g, x):
                return x
    return None


def _grid(dim: int, depth: int):
    # all bricks whose words have length depth // dim
    n = max(depth // dim, 1)
    words = ["".join(bits) for bits in itertools.product("01", repeat=n)]
    return itertools.product(words, repeat=dim)
