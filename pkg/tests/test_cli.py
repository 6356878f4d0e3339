import json

from primegraphs.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cd(capsys):
    code, out, _ = run(capsys, "cd", "psl2", "64")
    assert code == 0 and out == "1 63 64 65\n"


def test_cd_unsupported(capsys):
    code, _, err = run(capsys, "cd", "suzuki", "8")
    assert code == 2 and "suzuki" in err


def test_order(capsys):
    code, out, _ = run(capsys, "order", "suzuki", "8")
    assert code == 0 and out == "29120\n"


def test_graph_formats(capsys):
    code, out, _ = run(capsys, "graph", "psl2", "64", "--format", "json")
    assert code == 0
    assert json.loads(out) == {
        "vertices": [2, 3, 5, 7, 13],
        "edges": [[3, 7], [5, 13]],
    }
    code, dot, _ = run(capsys, "graph", "psl2", "64", "--format", "dot")
    assert code == 0 and dot.startswith("graph {") and "3 -- 7;" in dot
    code, el, _ = run(capsys, "graph", "psl2", "64")
    assert code == 0 and el == "2\n3 7\n5 13\n"


def test_graph_aliases_match(capsys):
    _, a, _ = run(capsys, "graph", "psl2", "4", "--format", "json")
    _, b, _ = run(capsys, "graph", "psl2", "5", "--format", "json")
    assert a == b


def test_graph_structural(capsys):
    code, out, _ = run(capsys, "graph", "psl3", "8", "--structural", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["vertices"] == [2, 3, 7, 73]


def test_graph_byte_stable(capsys):
    _, first, _ = run(capsys, "graph", "suzuki", "32", "--format", "dot")
    _, second, _ = run(capsys, "graph", "suzuki", "32", "--format", "dot")
    assert first == second


def test_enum(capsys):
    code, out, _ = run(capsys, "enum", "--n", "7", "--k", "4", "--stats")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "2 classes of 4-regular graphs on 7 vertices"
    assert "triangles=7" in out and "triangles=6" in out
    assert "vertex-transitive=y" in out and "vertex-transitive=n" in out


def test_enum_filters(capsys):
    code, out, _ = run(capsys, "enum", "--n", "8", "--k", "4", "--require-clique", "4")
    assert code == 0 and out.startswith("1 classes")
    code, out, _ = run(capsys, "enum", "--n", "8", "--k", "4", "--free-of-clique", "4")
    assert code == 0 and out.startswith("5 classes")


def test_enum_parity(capsys):
    code, out, _ = run(capsys, "enum", "--n", "5", "--k", "3")
    assert code == 0 and "odd" in out


def test_enum_bad_args(capsys):
    code, _, err = run(capsys, "enum", "--n", "12", "--k", "4")
    assert code == 2 and err


def test_product(capsys):
    code, out, _ = run(capsys, "product", "psl2", "8", "psl2", "8")
    assert code == 0
    assert out == "2 3\n2 7\n3 7\n"


def test_verify_single(capsys):
    code, out, _ = run(capsys, "verify", "--only", "order6-census")
    assert code == 0 and "pass" in out


def test_verify_json(capsys):
    code, out, _ = run(
        capsys, "verify", "--only", "j1-data", "--json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] is True and doc["claims"][0]["id"] == "j1-data"


def test_verify_unknown_claim(capsys):
    code, _, err = run(capsys, "verify", "--only", "bogus")
    assert code == 2 and "bogus" in err


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0 and "octahedron" in out and "house" in out
    code, out, _ = run(capsys, "catalog", "octahedron")
    assert code == 0 and out.startswith("octahedron: n=6")
    code, _, err = run(capsys, "catalog", "nonesuch")
    assert code == 2 and "nonesuch" in err


def test_usage_errors(capsys):
    assert run(capsys, "cd", "psl2", "6")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys)[0] == 2
