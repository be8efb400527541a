"""Command line front end.

Exit status: 0 success or verified-true, 1 verified-false, 2 usage or
parse error.  Arguments naming elements, tree pairs or pattern sequences
may be a file path or the literal text.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from . import baker as bk
from . import dynamics as dy
from . import monoid as mo
from . import relations as rel
from .cantor import ParseError, Point
from .elements import (compose, equals, format_element, invert, is_identity,
                       parse_element, reduce)
from .sampling import make_rng, random_two_sided
from .sigma import decompose, eval_sigma, format_sigma

OK, FALSE, USAGE = 0, 1, 2


def _text(arg: str) -> str:
    if os.path.isfile(arg):
        with open(arg) as fh:
            return fh.read()
    return arg


def _element(arg: str):
    return parse_element(_text(arg).replace("\\n", "\n"))


def _pair(arg: str):
    return dy.parse_tree_pair(_text(arg))


def _seq(arg: str):
    return mo.PatternSequence.parse(_text(arg))


class Output:
    def __init__(self, as_json: bool, path: Optional[str] = None):
        self.as_json = as_json
        self.path = path

    def emit(self, text: str, record=None):
        if self.as_json:
            body = json.dumps(record if record is not None else {"result": text}, indent=2)
        else:
            body = text
        if not body.endswith("\n"):
            body += "\n"
        if self.path:
            with open(self.path, "w") as fh:
                fh.write(body)
        else:
            sys.stdout.write(body)


def _verdict(out: Output, ok: bool, label: str, extra=None) -> int:
    rec = {"result": ok, "check": label}
    if extra:
        rec.update(extra)
    out.emit(f"{label}: {'true' if ok else 'false'}", rec)
    return OK if ok else FALSE


# ---------------------------------------------------------------------------
# el

def cmd_el(a, out: Output) -> int:
    if a.verb == "compose":
        g, f = _element(a.g), _element(a.f)
        h = compose(g, f)
        if not a.raw:
            h = reduce(h)
        out.emit(format_element(h), {"element": format_element(h)})
    elif a.verb == "inverse":
        f = invert(_element(a.f))
        out.emit(format_element(f), {"element": format_element(f)})
    elif a.verb == "reduce":
        f = reduce(_element(a.f))
        out.emit(format_element(f), {"element": format_element(f)})
    elif a.verb == "equal":
        return _verdict(out, equals(_element(a.f), _element(a.g)), "equal")
    elif a.verb == "identity":
        return _verdict(out, is_identity(reduce(_element(a.f))), "identity")
    elif a.verb == "apply":
        from .elements import apply
        y = apply(_element(a.f), Point.parse(a.point))
        out.emit(str(y), {"point": str(y)})
    return OK


# ---------------------------------------------------------------------------
# word

def cmd_word(a, out: Output) -> int:
    if a.verb == "eval":
        f = eval_sigma(a.word)
        out.emit(format_element(f), {"element": format_element(f)})
    else:
        w = format_sigma(decompose(_element(a.f)))
        out.emit(w, {"word": w})
    return OK


# ---------------------------------------------------------------------------
# monoid

def cmd_monoid(a, out: Output) -> int:
    if a.verb == "eval":
        s = mo.eval_word(a.word)
        out.emit(str(s), {"sequence": str(s)})
    elif a.verb == "multiply":
        s = mo.multiply(_seq(a.p), _seq(a.q))
        out.emit(str(s), {"sequence": str(s)})
    elif a.verb == "pq":
        w = mo.format_word(mo.rewrite_to_pq(a.word))
        out.emit(w, {"word": w})
    elif a.verb == "check":
        return _verdict(out, mo.check_monoid_relation(a.lhs, a.rhs), "relation")
    return OK


# ---------------------------------------------------------------------------
# relations

def cmd_relations(a, out: Output) -> int:
    if a.verb == "sweep":
        rep = rel.sweep_families(a.max_index)
        muts = rel.mutation_controls()
        mut_ok = not any(ok for _, _, ok in muts)
        lines = rep.lines() if a.verbose else []
        for fid, (p, t) in sorted(rep.counts().items()):
            lines.append(f"family {fid}: {p}/{t} pass")
        lines.append(f"derived m=q+1 checks: {sum(ok for _, ok in rep.derived)}/{len(rep.derived)} pass")
        lines.append(f"mutation controls rejected: {sum(not ok for *_, ok in muts)}/{len(muts)}")
        ok = rep.ok and mut_ok
        lines.append(f"instances: {rep.total}")
        lines.append("all families pass" if ok else "FAILURES: " + "; ".join(map(str, rep.failures)))
        out.emit("\n".join(lines), {
            "result": ok, "instances": rep.total,
            "counts": {str(k): v for k, v in rep.counts().items()},
            "failures": [str(f) for f in rep.failures],
            "mutations": [{"lhs": l, "rhs": r, "holds": h} for l, r, h in muts]})
        return OK if ok else FALSE
    if a.verb == "family":
        idx = {k: v for k, v in (("m", a.m), ("q", a.q), ("X", a.X), ("Y", a.Y)) if v is not None}
        fam = rel.FAMILIES.get(a.id)
        if fam is None:
            raise ValueError(f"no relation family {a.id}")
        idx = {k: v for k, v in idx.items() if k in fam.params or k in fam.uses_xy}
        lhs, rhs = rel.family_words(a.id, **idx)
        return _verdict(out, rel.words_equal(lhs, rhs), f"family {a.id}: {lhs or '1'} = {rhs or '1'}")
    if a.verb == "baker-comm":
        ok = rel.baker_comm_check(amended=a.amended)
        extra = {}
        if not ok:
            from .sigma import baker_map
            x = rel.witness_point(rel.eval_commutator(
                rel.baker_expression(inner=rel.BAKER_INNER_AMENDED if a.amended else None)), baker_map())
            extra["witness"] = str(x)
        label = "commutator word equals C0" + (" (amended)" if a.amended else "")
        if extra:
            label += f" [differs at {extra['witness']}]"
        return _verdict(out, ok, label, extra)
    if a.verb == "abelianization":
        rels = dict(rel.ABEL_RELATIONS)
        for name in a.drop or []:
            if name not in rels:
                raise ValueError(f"unknown relation {name}; known: {', '.join(rels)}")
            del rels[name]
        surv = rel.surviving_classes(rels)
        label = "abelianization trivial" + (f" (surviving: {' '.join(surv)})" if surv else "")
        return _verdict(out, not surv, label, {"surviving": surv})
    if a.verb == "finite-gen":
        rep = rel.finite_generation_identities(a.max_index)
        bad = [f"{z}{q + 1}" for z, q, ok in rep.conjugations if not ok] + \
            [f"C{m}" for m, ok in rep.c_rewrites if not ok]
        return _verdict(out, rep.ok, "finite generation identities", {"failures": bad})
    return OK


# ---------------------------------------------------------------------------
# dyn

def cmd_dyn(a, out: Output) -> int:
    t = _pair(a.pair)
    if a.verb == "reveal":
        rp = dy.reveal(t, a.order)
        lines = [str(rp.pair)]
        for c in rp.components_DminusR:
            lines.append(f"# D-R component root={c.root or 'e'} lambda={c.lam} chain={' '.join(c.chain)}")
        for c in rp.components_RminusD:
            lines.append(f"# R-D component root={c.root or 'e'} lambda={c.lam} chain={' '.join(c.chain)}")
        for cyc in rp.neutral_cycles:
            lines.append("# neutral cycle " + " ".join(w or "e" for w in cyc))
        lines.append("# " + " ".join(f"{k}={v}" for k, v in rp.stats().items()))
        out.emit("\n".join(lines), {"pair": str(rp.pair), "stats": rp.stats(),
                                     "neutral_cycles": [list(c) for c in rp.neutral_cycles]})
    elif a.verb == "report":
        r = dy.dynamics_report(t, a.order)
        out.emit("\n".join(r.lines()), r.as_dict())
    elif a.verb == "factor":
        fs = dy.permutation_factor(t)
        ok = equals(dy.compose_pairs(fs), dy.to_element(t))
        out.emit("\n".join(str(f) for f in fs), {"factors": [str(f) for f in fs], "verified": ok})
        return OK if ok else FALSE
    elif a.verb == "transposition":
        k, cert = dy.extract_proper_transposition(t)
        ok = dy.verify_transposition(t, k, cert)
        out.emit(f"{k}\nu={cert.u} v={cert.v}\ng: {cert.g}\nj: {cert.j}",
                 {"transposition": str(k), "u": cert.u, "v": cert.v,
                  "g": str(cert.g), "j": str(cert.j), "verified": ok})
        return OK if ok else FALSE
    return OK


# ---------------------------------------------------------------------------
# baker

def cmd_baker(a, out: Output) -> int:
    if a.verb == "orbit":
        x = bk.TwoSidedPoint.parse(a.point)
        n = bk.orbit_size(x)
        out.emit(f"{x} orbit size {n}", {"point": str(x), "orbit_size": n})
    elif a.verb == "enumerate":
        reps = bk.enumerate_periodic_orbits(a.p)
        out.emit("\n".join(reps), {"period": a.p, "orbits": reps})
    elif a.verb == "verify-shift":
        if a.point:
            pts = [bk.TwoSidedPoint.parse(a.point)]
        else:
            rng = make_rng(a.seed)
            pts = [random_two_sided(rng) for _ in range(a.count)]
        bad = [str(x) for x in pts if not bk.verify_shift(x)]
        return _verdict(out, not bad, f"shift conjugacy on {len(pts)} points", {"failures": bad})
    return OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("-o", "--output", help="write the result to this file")

    p = argparse.ArgumentParser(prog="thompson-nv", description="Computations in nV and 2V.")
    groups = p.add_subparsers(dest="group", required=True)

    el = groups.add_parser("el", help="elements as pattern pairs").add_subparsers(dest="verb", required=True)
    c = el.add_parser("compose", parents=[common], help="g o f (f first)")
    c.add_argument("g")
    c.add_argument("f")
    c.add_argument("--raw", action="store_true", help="skip reduction")
    for verb in ("inverse", "identity", "reduce"):
        el.add_parser(verb, parents=[common]).add_argument("f")
    c = el.add_parser("equal", parents=[common])
    c.add_argument("f")
    c.add_argument("g")
    c = el.add_parser("apply", parents=[common])
    c.add_argument("f")
    c.add_argument("point")

    w = groups.add_parser("word", help="words in the generators").add_subparsers(dest="verb", required=True)
    w.add_parser("eval", parents=[common]).add_argument("word")
    w.add_parser("decompose", parents=[common]).add_argument("f")

    m = groups.add_parser("monoid", help="the positive monoid").add_subparsers(dest="verb", required=True)
    m.add_parser("eval", parents=[common]).add_argument("word")
    c = m.add_parser("multiply", parents=[common])
    c.add_argument("p")
    c.add_argument("q")
    m.add_parser("pq", parents=[common]).add_argument("word")
    c = m.add_parser("check", parents=[common])
    c.add_argument("lhs")
    c.add_argument("rhs")

    r = groups.add_parser("relations", help="relation checks").add_subparsers(dest="verb", required=True)
    c = r.add_parser("sweep", parents=[common])
    c.add_argument("--max-index", type=int, default=4)
    c.add_argument("--verbose", action="store_true", help="one line per instance")
    c = r.add_parser("family", parents=[common])
    c.add_argument("id", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--q", type=int)
    c.add_argument("--X", choices="AB")
    c.add_argument("--Y", choices="AB")
    c = r.add_parser("baker-comm", parents=[common])
    c.add_argument("--amended", action="store_true",
                   help="use the word without the K5 factor of the conjugated block")
    c = r.add_parser("abelianization", parents=[common])
    c.add_argument("--drop", action="append", help="relation name to leave out (repeatable)")
    c = r.add_parser("finite-gen", parents=[common])
    c.add_argument("--max-index", type=int, default=3)

    d = groups.add_parser("dyn", help="dynamics of elements of V").add_subparsers(dest="verb", required=True)
    for verb in ("reveal", "report"):
        c = d.add_parser(verb, parents=[common])
        c.add_argument("pair")
        c.add_argument("--order", choices=("lex", "reverse"), default="lex")
    for verb in ("factor", "transposition"):
        d.add_parser(verb, parents=[common]).add_argument("pair")

    b = groups.add_parser("baker", help="the baker's map as a shift").add_subparsers(dest="verb", required=True)
    b.add_parser("orbit", parents=[common]).add_argument("point")
    b.add_parser("enumerate", parents=[common]).add_argument("p", type=int)
    c = b.add_parser("verify-shift", parents=[common])
    c.add_argument("point", nargs="?")
    c.add_argument("--count", type=int, default=1000)
    c.add_argument("--seed", type=int)
    return p


HANDLERS = {"el": cmd_el, "word": cmd_word, "monoid": cmd_monoid,
            "relations": cmd_relations, "dyn": cmd_dyn, "baker": cmd_baker}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    out = Output(a.json, a.output)
    try:
        return HANDLERS[a.group](a, out)
    except (ParseError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
