import json
import subprocess
import sys

from conftest import data_path, read_data
from thompson_nv.cli import main
from thompson_nv.dynamics import parse_tree_pair
from thompson_nv.elements import equals, parse_element
from thompson_nv.monoid import PatternSequence, multiply


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_el_round_trips(capsys, tmp_path):
    f = data_path("baker.el")
    code, out, _ = run(capsys, "el", "inverse", f)
    assert code == 0
    c0 = parse_element(read_data("baker.el"))
    assert equals(parse_element(out), type(c0)(c0.range, c0.domain))
    inv = tmp_path / "inv.el"
    assert main(["el", "inverse", f, "-o", str(inv)]) == 0
    assert run(capsys, "el", "identity", f)[0] == 1
    comp = tmp_path / "comp.el"
    assert main(["el", "compose", f, str(inv), "-o", str(comp)]) == 0
    assert run(capsys, "el", "identity", str(comp))[0] == 0
    assert run(capsys, "el", "equal", f, f)[0] == 0
    assert run(capsys, "el", "equal", f, data_path("a0.el"))[0] == 1
    code, out, _ = run(capsys, "el", "apply", f, "(0);(1)")
    assert code == 0 and out.strip() == "(0);0(1)"


def test_word_and_monoid(capsys):
    code, out, _ = run(capsys, "word", "decompose", data_path("baker.el"))
    assert code == 0
    code, out2, _ = run(capsys, "word", "eval", out.strip())
    assert code == 0
    assert equals(parse_element(out2), parse_element(read_data("baker.el")))
    code, out, _ = run(capsys, "monoid", "multiply", data_path("mult_P.seq"), data_path("mult_Q.seq"))
    assert code == 0
    assert PatternSequence.parse(out) == PatternSequence.parse(read_data("mult_PQ.seq"))
    assert PatternSequence.parse(out) == multiply(PatternSequence.parse(read_data("mult_P.seq")),
                                                  PatternSequence.parse(read_data("mult_Q.seq")))
    assert run(capsys, "monoid", "check", "v1 v0", "v0 v2")[0] == 0
    assert run(capsys, "monoid", "check", "v0 v1", "v0 v2")[0] == 1


def test_relations_commands(capsys):
    code, out, _ = run(capsys, "relations", "sweep", "--max-index", "2")
    assert code == 0 and "all families pass" in out
    assert run(capsys, "relations", "family", "3", "--q", "1", "--X", "B")[0] == 0
    assert run(capsys, "relations", "family", "1", "--m", "2", "--q", "1", "--X", "A", "--Y", "B")[0] == 2
    code, out, _ = run(capsys, "relations", "baker-comm")
    assert code == 1 and "differs at" in out
    assert run(capsys, "relations", "baker-comm", "--amended")[0] == 0
    assert run(capsys, "relations", "abelianization")[0] == 0
    code, out, _ = run(capsys, "relations", "abelianization", "--drop", "cross")
    assert code == 1 and "surviving" in out
    assert run(capsys, "relations", "abelianization", "--drop", "nope")[0] == 2
    assert run(capsys, "relations", "finite-gen", "--max-index", "2")[0] == 0


def test_dyn_commands(capsys):
    code, out, _ = run(capsys, "dyn", "report", data_path("x0.tp"), "--json")
    assert code == 0
    rec = json.loads(out)
    assert rec["n_f"] == 1
    code, out, _ = run(capsys, "dyn", "report", data_path("period2.tp"))
    assert code == 0 and out.splitlines()[-1] == "n_f=2"
    code, out, _ = run(capsys, "dyn", "reveal", data_path("period2.tp"))
    assert code == 0
    revealed = parse_tree_pair(out)
    assert revealed.D == revealed.R
    assert run(capsys, "dyn", "report", out)[0] == 0
    assert run(capsys, "dyn", "factor", data_path("x0.tp"))[0] == 0
    assert run(capsys, "dyn", "transposition", data_path("x0.tp"))[0] == 0
    assert run(capsys, "dyn", "transposition", "D: e | R: e | sigma: e->e")[0] == 2


def test_baker_commands(capsys):
    code, out, _ = run(capsys, "baker", "orbit", "(01)e.e(01)")
    assert code == 0 and out.strip().endswith("orbit size 2")
    code, out, _ = run(capsys, "baker", "enumerate", "4")
    assert out.split() == ["0001", "0011", "0111"]
    assert run(capsys, "baker", "verify-shift", "--count", "50", "--seed", "3")[0] == 0
    assert run(capsys, "baker", "verify-shift", "(0)1.0(1)")[0] == 0


def test_usage_errors(capsys):
    assert run(capsys, "el", "inverse", "not an element")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "baker", "orbit", "(0)1.1")[0] == 2
    assert run(capsys, "dyn", "report", "/nonexistent/x.tp")[0] == 2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "thompson_nv", "baker", "orbit", "(0)e.e(0)"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "orbit size 1" in r.stdout
