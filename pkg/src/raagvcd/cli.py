"""Command-line interface: JSON in, JSON or DOT out.

Input documents look like::

    {"vertices": ["a", "b", "c"],
     "edges": [["a", "b"], ["b", "c"]],
     "preserved": [["a", "b"]],
     "fixed": [["b"]]}

Commands: ``vcd`` (dimension report), ``tree`` (decomposition tree as JSON
or DOT), ``witness`` (witness families for the Fouxe-Rabinovitch leaves,
with verification), ``selftest`` (the acceptance suite).  Exit codes: 0
success, 1 failed selftest, 2 invalid input, 3 internal invariant
violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from .decompose import (
    CASE_RESTRICTION,
    InternalInvariantError,
    Leaf,
    Split,
    Tree,
    build_tree,
    complexity,
    iter_leaves,
    leaf_multiset,
)
from .graphs import Graph, GraphError
from .leaves import FouxeRabinovitchLeaf, FreeAbelianLeaf, GeneralLinearLeaf, leaf_label
from .rorg import DEFAULT_VERTEX_CAP, Rorg, RorgError
from .vcd import aut_vcd, leaf_vcd, tree_vcd
from .witness import verify_witness, witness_fr

__all__ = ["InputError", "parse_input", "run_vcd", "render_tree_json", "render_dot", "main"]


class InputError(Exception):
    """Invalid input document; carries the full list of violations."""

    def __init__(self, violations: Sequence[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


def parse_input(text: "str | bytes") -> Rorg:
    """Validate a JSON document and build the group it describes."""
    violations: list[str] = []
    try:
        if isinstance(text, bytes):
            text = text.decode("utf-8")
        doc = json.loads(text)
    except (UnicodeDecodeError, json.JSONDecodeError) as err:
        raise InputError([f"malformed JSON: {err}"]) from None
    if not isinstance(doc, dict):
        raise InputError(["document must be a JSON object"])

    known = {"vertices", "edges", "preserved", "fixed"}
    for key in doc:
        if key not in known:
            violations.append(f"unknown field {key!r}")

    vertices = doc.get("vertices", [])
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise InputError(violations + ["'vertices' must be a list of strings"])
    seen = set()
    for v in vertices:
        if v in seen:
            violations.append(f"duplicate vertex {v!r}")
        seen.add(v)

    def check_pairs(name, default):
        items = doc.get(name, default)
        if not isinstance(items, list):
            violations.append(f"'{name}' must be a list")
            return []
        return items

    edges = []
    for e in check_pairs("edges", []):
        if not isinstance(e, list) or len(e) != 2 or not all(isinstance(v, str) for v in e):
            violations.append(f"edge {e!r} must be a pair of vertex names")
            continue
        u, w = e
        if u not in seen or w not in seen:
            violations.append(f"edge {e!r} references an unknown vertex")
        elif u == w:
            violations.append(f"edge {e!r} is a self-loop")
        else:
            edges.append((u, w))

    def check_collection(name):
        members = []
        for m in check_pairs(name, []):
            if not isinstance(m, list) or not all(isinstance(v, str) for v in m):
                violations.append(f"member {m!r} of '{name}' must be a list of vertex names")
                continue
            unknown = [v for v in m if v not in seen]
            if unknown:
                violations.append(f"member {m!r} of '{name}' references unknown vertices {unknown}")
            else:
                members.append(m)
        return members

    preserved = check_collection("preserved")
    fixed = check_collection("fixed")
    if violations:
        raise InputError(violations)
    return Rorg(Graph(vertices, edges), preserved, fixed)


# -- reports -----------------------------------------------------------------


def _set_list(graph: Graph, s) -> list[str]:
    return list(graph.sort(s))


def _leaf_record(leaf: Leaf) -> dict[str, Any]:
    kind = leaf.kind
    record: dict[str, Any] = {"kind": leaf_label(kind), "vcd": leaf_vcd(kind)}
    g = leaf.node.rorg.graph
    if isinstance(kind, FreeAbelianLeaf):
        record["parameters"] = {"rank": kind.rank}
    elif isinstance(kind, GeneralLinearLeaf):
        record["parameters"] = {"n": kind.n}
    elif isinstance(kind, FouxeRabinovitchLeaf):
        data = kind.data
        record["parameters"] = {
            "factors": [_set_list(g, f) for f in data.factors],
            "free_vertices": _set_list(g, data.free_vertices),
            "k": data.k,
            "m": data.m,
            "factor_clique_sizes": list(data.clique_sizes),
            "factor_center_ranks": list(data.center_ranks),
        }
    else:
        record["parameters"] = {}
    return record


def render_tree_json(tree: Tree) -> dict[str, Any]:
    node = tree.node
    g = node.rorg.graph
    record: dict[str, Any] = {
        "path": node.path_label,
        "vertices": list(g.vertices),
        "preserved": [_set_list(g, m) for m in node.rorg.preserved],
        "fixed": [_set_list(g, m) for m in node.rorg.fixed],
    }
    if isinstance(tree, Leaf):
        record["leaf"] = _leaf_record(tree)
        return record
    record["case"] = tree.case.kind
    if tree.case.kind == CASE_RESTRICTION:
        record["chosen"] = _set_list(g, tree.case.delta)
    record["children"] = [
        {"role": role, **render_tree_json(child)}
        for role, child in zip(tree.roles, tree.children)
    ]
    return record


def _diagnostics(tree: Tree) -> dict[str, Any]:
    saturation: dict[str, int] = {}
    measures: dict[str, list[int]] = {}

    def walk(t: Tree):
        node = t.node
        label = node.path_label
        if label not in saturation:
            saturation[label] = node.rorg.saturation_rounds
            measures[label] = list(complexity(node.rorg))
        if isinstance(t, Split):
            for child in t.children:
                walk(child)

    walk(tree)
    return {
        "saturation_rounds": saturation,
        "measure": measures,
        "leaf_multiset": list(leaf_multiset(tree)),
    }


def run_vcd(rorg: Rorg, *, include_aut: bool = False, **build_kwargs) -> dict[str, Any]:
    """The full result document for a group."""
    tree = build_tree(rorg, **build_kwargs)
    result: dict[str, Any] = {"vcd": tree_vcd(tree)}
    if include_aut:
        if rorg.preserved or rorg.fixed:
            raise InputError(["--aut requires empty preserved and fixed collections"])
        result["aut_vcd"] = aut_vcd(rorg.graph, **build_kwargs)
    result["leaves"] = [_leaf_record(leaf) for leaf in iter_leaves(tree)]
    result["tree"] = render_tree_json(tree)
    result["diagnostics"] = _diagnostics(tree)
    return result


def render_dot(tree: Tree) -> str:
    """Graphviz rendering with case tags on internal nodes, kinds on leaves."""
    lines = [
        "digraph decomposition {",
        "  rankdir=TB;",
        '  node [shape=box, fontname="monospace"];',
    ]
    counter = 0

    def emit(t: Tree) -> int:
        nonlocal counter
        ident = counter
        counter += 1
        g = t.node.rorg.graph
        verts = " ".join(g.vertices) or "(empty)"
        if isinstance(t, Leaf):
            label = f"{leaf_label(t.kind)}\\nvcd {leaf_vcd(t.kind)}\\n[{verts}]"
            lines.append(f'  n{ident} [label="{label}"];')
            return ident
        case = t.case.kind
        if t.case.kind == CASE_RESTRICTION:
            chosen = " ".join(g.sort(t.case.delta))
            case += f" {{{chosen}}}"
        lines.append(f'  n{ident} [label="{case}\\n[{verts}]"];')
        for role, child in zip(t.roles, t.children):
            cid = emit(child)
            lines.append(f'  n{ident} -> n{cid} [label="{role}"];')
        return ident

    emit(tree)
    lines.append("}")
    return "\n".join(lines) + "\n"


def witness_report(rorg: Rorg, **build_kwargs) -> dict[str, Any]:
    """Witness listings for every Fouxe-Rabinovitch leaf of the tree."""
    tree = build_tree(rorg, **build_kwargs)
    reports = []
    for leaf in iter_leaves(tree):
        if not isinstance(leaf.kind, FouxeRabinovitchLeaf):
            continue
        g = leaf.node.rorg.graph
        witness = witness_fr(leaf.kind.data)
        report = verify_witness(witness)
        reports.append(
            {
                "path": leaf.node.path_label,
                "leaf": leaf_label(leaf.kind),
                "generators": [_symbol_record(g, s) for s in witness.generators],
                "aut_rank": witness.aut_rank,
                "out_rank": witness.out_rank,
                "vcd": report.expected_rank,
                "commuting": report.commuting,
                "rank_matches": report.rank_matches,
                "pairs_checked": report.pairs_checked,
            }
        )
    return {"witnesses": reports, "verified": all(r["commuting"] and r["rank_matches"] for r in reports)}


def _symbol_record(graph: Graph, symbol) -> dict[str, Any]:
    from .autos import Inversion, PartialConjugation, Transvection

    if isinstance(symbol, Inversion):
        return {"kind": "inversion", "vertex": symbol.vertex}
    if isinstance(symbol, Transvection):
        return {
            "kind": "transvection",
            "side": symbol.side,
            "acting": symbol.acting,
            "moved": symbol.moved,
        }
    if isinstance(symbol, PartialConjugation):
        return {
            "kind": "partial_conjugation",
            "acting": symbol.acting,
            "conjugated": _set_list(graph, symbol.conjugated),
        }
    raise TypeError(f"unknown symbol {symbol!r}")


# -- entry point ---------------------------------------------------------------


def _read_source(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _emit_json(payload: dict[str, Any]) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="raagvcd",
        description="Dimension of relative outer automorphism groups of graph groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("input", nargs="?", default=None, help="JSON file (default: stdin)")
        p.add_argument("--choice-seed", type=int, default=None, help="permute restriction choices")
        p.add_argument(
            "--max-vertices", type=int, default=DEFAULT_VERTEX_CAP, help="vertex cap (default 20)"
        )

    p_vcd = sub.add_parser("vcd", help="compute the dimension")
    common(p_vcd)
    p_vcd.add_argument("--aut", action="store_true", help="also report the absolute case")

    p_tree = sub.add_parser("tree", help="print the decomposition tree")
    common(p_tree)
    p_tree.add_argument("--format", choices=("json", "dot"), default="json")

    p_wit = sub.add_parser("witness", help="witness subgroups for Fouxe-Rabinovitch leaves")
    common(p_wit)

    sub.add_parser("selftest", help="run the acceptance suite")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "selftest":
        from .selftest import run_all

        return run_all()
    try:
        rorg = parse_input(_read_source(args.input))
        if len(rorg.graph) > args.max_vertices:
            raise InputError(
                [f"{len(rorg.graph)} vertices exceeds --max-vertices {args.max_vertices}"]
            )
        build_kwargs = {"choice_seed": args.choice_seed, "vertex_cap": args.max_vertices}
        if args.command == "vcd":
            _emit_json(run_vcd(rorg, include_aut=args.aut, **build_kwargs))
        elif args.command == "tree":
            tree = build_tree(rorg, **build_kwargs)
            if args.format == "dot":
                sys.stdout.write(render_dot(tree))
            else:
                _emit_json(render_tree_json(tree))
        elif args.command == "witness":
            _emit_json(witness_report(rorg, **build_kwargs))
    except InputError as err:
        sys.stderr.write(
            json.dumps({"error": "invalid input", "violations": err.violations}, indent=2) + "\n"
        )
        return 2
    except (GraphError, RorgError) as err:
        sys.stderr.write(
            json.dumps({"error": "invalid input", "violations": [str(err)]}, indent=2) + "\n"
        )
        return 2
    except InternalInvariantError as err:
        sys.stderr.write(json.dumps({"error": "internal invariant violation", "detail": str(err)}) + "\n")
        return 3
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
