import json
from itertools import combinations

import pytest

from raagvcd import InputError, parse_input
from raagvcd.cli import main, render_dot, run_vcd, witness_report
from raagvcd.decompose import build_tree


def doc(vertices, edges=(), preserved=(), fixed=()):
    return json.dumps(
        {
            "vertices": list(vertices),
            "edges": [list(e) for e in edges],
            "preserved": [list(m) for m in preserved],
            "fixed": [list(m) for m in fixed],
        }
    )


K4 = doc("abcd", combinations("abcd", 2))
POINTS5 = doc("abcde")
P3 = doc("abc", [("a", "b"), ("b", "c")])


def test_parse_valid_minimal():
    r = parse_input(doc("ab"))
    assert r.graph.vertices == ("a", "b")
    assert r.preserved == () and r.fixed == ()


def test_parse_self_loop():
    with pytest.raises(InputError) as err:
        parse_input(doc("ab", [("a", "a")]))
    assert any("self-loop" in v for v in err.value.violations)


def test_parse_unknown_vertex_in_collection():
    with pytest.raises(InputError) as err:
        parse_input(doc("ab", preserved=[["a", "z"]]))
    assert any("unknown" in v for v in err.value.violations)


def test_parse_duplicate_vertex():
    with pytest.raises(InputError) as err:
        parse_input(json.dumps({"vertices": ["a", "a"]}))
    assert any("duplicate" in v for v in err.value.violations)


def test_parse_collects_all_violations():
    bad = json.dumps(
        {
            "vertices": ["a", "a"],
            "edges": [["a", "a"], ["a", "z"]],
            "perserved": [],
        }
    )
    with pytest.raises(InputError) as err:
        parse_input(bad)
    assert len(err.value.violations) >= 3


def test_parse_malformed_json():
    with pytest.raises(InputError) as err:
        parse_input("{nope")
    assert any("malformed JSON" in v for v in err.value.violations)


def test_run_vcd_values():
    assert run_vcd(parse_input(K4))["vcd"] == 6
    assert run_vcd(parse_input(POINTS5))["vcd"] == 7


def test_result_document_shape():
    result = run_vcd(parse_input(P3))
    assert result["vcd"] == 3
    assert result["vcd"] == sum(leaf["vcd"] for leaf in result["leaves"])
    assert result["tree"]["case"] == "restriction"
    assert result["tree"]["chosen"] == ["b"]
    assert "saturation_rounds" in result["diagnostics"]
    assert "measure" in result["diagnostics"]


def test_aut_flag():
    result = run_vcd(parse_input(doc("ab")), include_aut=True)
    assert result["aut_vcd"] == 2
    with pytest.raises(InputError):
        run_vcd(parse_input(doc("ab", preserved=[["a"]])), include_aut=True)


def test_dot_rendering_shape():
    tree = build_tree(parse_input(P3))
    dot = render_dot(tree)
    internal = dot.count("restriction") + dot.count("center_split")
    assert internal == 2
    assert dot.count("vcd") == 3  # one per leaf
    assert dot == render_dot(build_tree(parse_input(P3)))  # byte determinism


def test_witness_report_verified():
    report = witness_report(parse_input(doc("abc", [("a", "b")])))
    assert report["verified"]
    assert len(report["witnesses"]) == 1
    assert report["witnesses"][0]["out_rank"] == 2


def test_main_vcd(tmp_path, capsys):
    path = tmp_path / "in.json"
    path.write_text(K4)
    assert main(["vcd", str(path)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["vcd"] == 6


def test_main_invalid_input_exit_code(tmp_path, capsys):
    path = tmp_path / "in.json"
    path.write_text(doc("ab", [("a", "a")]))
    assert main(["vcd", str(path)]) == 2
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "invalid input"


def test_main_vertex_cap(tmp_path, capsys):
    path = tmp_path / "in.json"
    path.write_text(doc([f"v{i}" for i in range(9)]))
    assert main(["vcd", "--max-vertices", "8", str(path)]) == 2
    capsys.readouterr()


def test_main_tree_dot(tmp_path, capsys):
    path = tmp_path / "in.json"
    path.write_text(P3)
    assert main(["tree", "--format", "dot", str(path)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph decomposition {")


def test_main_choice_seed_stable_value(tmp_path, capsys):
    path = tmp_path / "in.json"
    path.write_text(doc("abcd", [("a", "b"), ("b", "c"), ("c", "d")]))
    values = set()
    for seed in ("1", "2", "3"):
        assert main(["vcd", "--choice-seed", seed, str(path)]) == 0
        values.add(json.loads(capsys.readouterr().out)["vcd"])
    assert len(values) == 1


def test_main_byte_determinism(tmp_path, capsys):
    path = tmp_path / "in.json"
    path.write_text(P3)
    main(["vcd", str(path)])
    first = capsys.readouterr().out
    main(["vcd", str(path)])
    assert capsys.readouterr().out == first
