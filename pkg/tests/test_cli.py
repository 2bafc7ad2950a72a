import io
import json

import pytest

from sgspec.cli import main
from sgspec.core import balance_class, switch, SwitchingFunction
from sgspec.graphfile import parse, serialize
from sgspec.core import complete_graph, cycle_graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def test_spectrum_k5(capsys, write):
    f = write("k5.sg", serialize(complete_graph(5)))
    code, out, _ = run(capsys, "spectrum", f)
    assert code == 0
    assert out.strip() == "4 (x1), -1 (x4)"


def test_spectrum_c4_and_edge(capsys, write):
    code, out, _ = run(capsys, "spectrum", write("c4.sg", serialize(cycle_graph(4))))
    assert out.strip() == "2 (x1), 0 (x2), -2 (x1)"
    code, out, _ = run(capsys, "spectrum", write("k2.sg", "p sg 2 1\ne 1 2 +1\n"))
    assert out.strip() == "1 (x1), -1 (x1)"


def test_spectrum_json(capsys, write):
    code, out, _ = run(capsys, "spectrum", write("k5.sg", serialize(complete_graph(5))), "--json")
    d = json.loads(out)
    assert d["graph"]["n"] == 5
    assert d["spectrum"][1] == {"value": d["spectrum"][1]["value"], "multiplicity": 4, "exact": True, "lambda": "-1/1"}


def test_spectrum_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("p sg 2 1\ne 1 2 -\n"))
    code, out, _ = run(capsys, "spectrum", "-")
    assert code == 0 and out.strip() == "1 (x1), -1 (x1)"


def test_exit_codes(capsys, write):
    assert run(capsys, "spectrum", write("bad.sg", "p sg 2 1\ne 1 1 +\n"))[0] == 2
    assert run(capsys, "spectrum", write("dis.sg", "p sg 4 2\ne 1 2 +\ne 3 4 +\n"))[0] == 3
    assert run(capsys, "classify", write("tree.sg", "p sg 3 2\ne 1 2 +\ne 2 3 -\n"))[0] == 4
    assert run(capsys, "verify", write("tree2.sg", "p sg 3 2\ne 1 2 +\ne 2 3 -\n"))[0] == 4
    assert run(capsys, "spectrum", "/nonexistent/file.sg")[0] == 2
    assert run(capsys, "cycle", "--n", "2")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["spectrum"])
    assert exc.value.code == 2


def test_classify(capsys, write):
    code, out, _ = run(capsys, "classify", write("c6.sg", serialize(cycle_graph(6))))
    assert code == 0 and out.splitlines()[0] == "Both"
    assert "girth 6" in out
    code, out, _ = run(capsys, "classify", write("c5.sg", serialize(cycle_graph(5, balanced=False))))
    assert out.splitlines()[0] == "Antibalanced"


def test_verify_k33(capsys, write):
    code, out, _ = run(capsys, "verify", write("k33.sg", "p sg 6 9\n" + "".join(
        f"e {u} {v} +1\n" for u in (1, 2, 3) for v in (4, 5, 6))), "--exact")
    assert code == 0
    d = json.loads(out)
    assert set(d) >= {"graph", "girth", "balance_class", "spectrum", "bound", "verdict"}
    assert d["verdict"] == {
        "case": "BalancedCompleteBipartite",
        "lambda": "0/1",
        "multiplicity": 4,
        "equality_lambdas": ["0/1"],
    }
    assert d["bound"] == {"limit": 4, "min_slack": 0}
    assert {"lambda": "0/1", "multiplicity": 4} in d["exact"]


def test_verify_unbalanced_k4(capsys, write):
    text = "p sg 4 6\ne 1 2 +\ne 1 3 +\ne 1 4 +\ne 2 3 +\ne 2 4 +\ne 3 4 -\n"
    code, out, _ = run(capsys, "verify", write("k4.sg", text))
    d = json.loads(out)
    assert code == 0
    assert d["verdict"]["case"] == "None"
    assert d["bound"]["min_slack"] >= 1


def test_verify_negative_c6(capsys, write):
    code, out, _ = run(capsys, "verify", write("c6.sg", serialize(cycle_graph(6, balanced=False))))
    d = json.loads(out)
    assert d["verdict"]["case"] == "CycleQ2"
    assert "0/1" in d["verdict"]["equality_lambdas"]
    assert d["theorem1"]["equality"] and d["theorem1"]["case"] == "negative-cycle"


def test_verify_numbers_keep_precision(capsys, write):
    code, out, _ = run(capsys, "verify", write("c5.sg", serialize(cycle_graph(5))))
    d = json.loads(out)
    v = d["spectrum"][1]["value"]
    assert len(repr(v).replace("-", "").replace(".", "").lstrip("0")) >= 15


def test_generate_families(capsys):
    code, out, _ = run(capsys, "generate", "--family", "balanced-complete", "--n", "4")
    g = parse(out)
    assert g == complete_graph(4)
    code, out, _ = run(capsys, "generate", "--family", "cycle", "--n", "5", "--unbalanced")
    g = parse(out)
    assert g == cycle_graph(5, balanced=False)
    assert sum(1 for e in g.edges if e[2] < 0) == 1


@pytest.mark.parametrize("seed", range(6))
def test_generate_switched_bipartite_is_balanced(capsys, seed):
    code, out, _ = run(
        capsys, "generate", "--family", "balanced-complete-bipartite", "--n", "2", "--n2", "3",
        "--switch-seed", str(seed),
    )
    assert balance_class(parse(out)).balanced


@pytest.mark.parametrize(
    "argv, case",
    [
        (["--family", "balanced-complete", "--n", "6"], "BalancedComplete"),
        (["--family", "antibalanced-complete", "--n", "5"], "AntibalancedComplete"),
        (["--family", "balanced-complete-bipartite", "--n", "3", "--n2", "4"], "BalancedCompleteBipartite"),
        (["--family", "cycle", "--n", "7", "--unbalanced"], "CycleQ2"),
    ],
)
@pytest.mark.parametrize("seed", [1, 2, 99])
def test_generated_families_verify(capsys, write, argv, case, seed):
    _, out, _ = run(capsys, "generate", *argv, "--switch-seed", str(seed))
    code, out, _ = run(capsys, "verify", write("g.sg", out))
    assert code == 0
    assert json.loads(out)["verdict"]["case"] == case


def test_generate_deterministic(capsys):
    a = run(capsys, "generate", "--family", "balanced-complete", "--n", "5", "--switch-seed", "7")[1]
    b = run(capsys, "generate", "--family", "balanced-complete", "--n", "5", "--switch-seed", "7")[1]
    assert a == b


def test_cycle_table(capsys):
    code, out, _ = run(capsys, "cycle", "--n", "6", "--balanced")
    assert code == 0
    assert "simple: 2, -2" in out
    assert "double: 1, -1" in out
    code, out, _ = run(capsys, "cycle", "--n", "3", "--unbalanced", "--json")
    d = json.loads(out)
    assert d["simple"] == [-2.0]
    assert d["double"] == pytest.approx([1.0])
    assert len(d["values"]) == 3


def test_switch_command(capsys, write):
    g = cycle_graph(6)
    f = write("c6.sg", serialize(g))
    code, out, _ = run(capsys, "switch", f, "--vertices", "1,3,5")
    assert parse(out) == switch(g, SwitchingFunction.from_subset(6, [0, 2, 4]))
    f2 = write("c6s.sg", out)
    _, back, _ = run(capsys, "switch", f2, "--vertices", "1,3,5")
    assert back == serialize(g)
    _, same, _ = run(capsys, "switch", f)
    assert same == serialize(g)
    assert run(capsys, "switch", f, "--vertices", "9")[0] == 2


def test_enumerate_text_and_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-n", "4", "--checks", "theorem1")
    assert code == 0
    assert "nullity equality: 1" in out
    code, out, _ = run(capsys, "enumerate", "--max-n", "5", "--checks", "bound", "--json")
    d = json.loads(out)
    assert d["bound_violations"] == 0
    assert d["counts"]["5"]["switching_classes"] == 193
    assert run(capsys, "enumerate", "--max-n", "9")[0] == 2
