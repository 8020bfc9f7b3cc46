"""The acceptance suite: one callable check per criterion.

Each criterion returns ``(ok, detail)`` and is deterministic (fixed seeds
for the randomized sweeps).  ``run_all`` prints one pass/fail line per
criterion and returns a process exit code: 0 all green, 1 a criterion
failed, 3 an internal invariant (e.g. the termination measure) was
violated while building a tree.
"""

from __future__ import annotations

import random
import sys
import time
from itertools import combinations

from .decompose import (
    InternalInvariantError,
    build_tree,
    complexity,
    iter_leaves,
    iter_splits,
)
from .graphs import Graph
from .leaves import FouxeRabinovitchLeaf, leaf_label
from .oracles import invariant_by_generators, naive_normal_form
from .rorg import Rorg, saturate
from .vcd import leaf_vcd, tree_vcd
from .witness import verify_witness, witness_fr
from .words import Word, normalize

__all__ = ["CRITERIA", "run_all", "random_rorg", "discrete", "complete", "star", "edge_plus_point"]

_NAMES = "abcdefghijklmnopqrstuvwxyz"


def discrete(n: int) -> Graph:
    return Graph(_NAMES[:n])


def complete(n: int) -> Graph:
    names = _NAMES[:n]
    return Graph(names, list(combinations(names, 2)))


def star(n: int) -> Graph:
    """A center adjacent to ``n`` leaves."""
    leaves = _NAMES[1 : n + 1]
    return Graph(_NAMES[0] + leaves, [(_NAMES[0], x) for x in leaves])


def edge_plus_point() -> Graph:
    return Graph("abc", [("a", "b")])


def mccool(n: int) -> Rorg:
    g = discrete(n)
    singles = [[v] for v in g.vertices]
    return Rorg(g, singles, singles)


def random_rorg(rng: random.Random, max_vertices: int = 7, max_members: int = 3) -> Rorg:
    n = rng.randint(1, max_vertices)
    names = _NAMES[:n]
    density = rng.random()
    edges = [(u, w) for u, w in combinations(names, 2) if rng.random() < density]

    def collection():
        out = []
        for _ in range(rng.randint(0, max_members)):
            out.append(rng.sample(names, rng.randint(1, n)))
        return out

    return Rorg(Graph(names, edges), collection(), collection())


def _timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


# -- criteria ----------------------------------------------------------------


def criterion_free_groups():
    """Outer automorphisms of free groups: n isolated vertices give 2n-3."""
    for n in range(2, 7):
        value, elapsed = _timed(lambda n=n: tree_vcd(build_tree(discrete(n))))
        if value != 2 * n - 3:
            return False, f"n={n}: got {value}, expected {2 * n - 3}"
        if elapsed >= 1.0:
            return False, f"n={n}: took {elapsed:.2f}s (budget 1s)"
    return True, "values 1,3,5,7,9 for n=2..6"


def criterion_general_linear():
    """Complete graphs give the integer matrix group dimension n(n-1)/2."""
    for n in range(1, 7):
        value, elapsed = _timed(lambda n=n: tree_vcd(build_tree(complete(n))))
        if value != n * (n - 1) // 2:
            return False, f"n={n}: got {value}, expected {n * (n - 1) // 2}"
        if elapsed >= 1.0:
            return False, f"n={n}: took {elapsed:.2f}s (budget 1s)"
    return True, "values 0,1,3,6,10,15 for n=1..6"


def criterion_basis_conjugating():
    """All-singleton collections give one Fouxe-Rabinovitch leaf of rank n-2."""
    start = time.perf_counter()
    for n in range(2, 7):
        tree = build_tree(mccool(n))
        leaves = list(iter_leaves(tree))
        if len(leaves) != 1 or not isinstance(leaves[0].kind, FouxeRabinovitchLeaf):
            return False, f"n={n}: expected a single Fouxe-Rabinovitch leaf"
        data = leaves[0].kind.data
        if (data.k, data.m) != (n, 0):
            return False, f"n={n}: got k={data.k}, m={data.m}"
        if tree_vcd(tree) != n - 2:
            return False, f"n={n}: got {tree_vcd(tree)}, expected {n - 2}"
    elapsed = time.perf_counter() - start
    if elapsed >= 1.0:
        return False, f"took {elapsed:.2f}s (budget 1s)"
    return True, "single FR leaf (k=n, m=0), vcd n-2 for n=2..6"


def criterion_mixed_decomposition():
    """An edge plus a point: matrix leaf GL(2) plus an FR leaf worth 2."""
    tree = build_tree(edge_plus_point())
    labels = sorted(leaf_label(leaf.kind) for leaf in iter_leaves(tree))
    expected = sorted(["GL(2)", "FouxeRabinovitch(k=1, m=1)"])
    if labels != expected:
        return False, f"leaves {labels}, expected {expected}"
    total = tree_vcd(tree)
    if total != 3:
        return False, f"total {total}, expected 3"
    fr = [leaf for leaf in iter_leaves(tree) if isinstance(leaf.kind, FouxeRabinovitchLeaf)]
    if leaf_vcd(fr[0].kind) != 2:
        return False, f"FR leaf contributes {leaf_vcd(fr[0].kind)}, expected 2"
    return True, "leaves {GL(2), FR(k=1, m=1)}, total 3, FR part 2"


def criterion_central_chain():
    """Stars: vcd 3n-3 with leaves GL(1), FreeAbelian(n), FR(k=0, m=n)."""
    if tree_vcd(build_tree(star(2))) != 3:
        return False, "path on three vertices should give 3"
    for n in range(2, 6):
        tree = build_tree(star(n))
        total = tree_vcd(tree)
        if total != 3 * n - 3:
            return False, f"star n={n}: got {total}, expected {3 * n - 3}"
        labels = sorted(leaf_label(leaf.kind) for leaf in iter_leaves(tree))
        expected = sorted(["GL(1)", f"FreeAbelian({n})", f"FouxeRabinovitch(k=0, m={n})"])
        if labels != expected:
            return False, f"star n={n}: leaves {labels}, expected {expected}"
    return True, "vcd 3n-3 with leaves GL(1), FreeAbelian(n), FR(k=0, m=n) for n=2..5"


def _random_inputs(seed: int, count: int, max_vertices: int) -> list[Rorg]:
    rng = random.Random(seed)
    return [random_rorg(rng, max_vertices) for _ in range(count)]


def criterion_choice_independence():
    """The total dimension does not depend on restriction choices."""
    start = time.perf_counter()
    rng = random.Random(0xC6)
    inputs = _random_inputs(0x5EED, 100, 7)
    for i, rorg in enumerate(inputs):
        baseline = tree_vcd(build_tree(rorg))
        for _ in range(5):
            seed = rng.randrange(1 << 30)
            value = tree_vcd(build_tree(rorg, choice_seed=seed))
            if value != baseline:
                return False, f"input {i}: seed {seed} gave {value}, canonical gave {baseline}"
    elapsed = time.perf_counter() - start
    if elapsed >= 60.0:
        return False, f"sweep took {elapsed:.1f}s (budget 60s)"
    return True, f"100 inputs x 5 seeds agree ({elapsed:.1f}s)"


def criterion_invariance_oracle():
    """The invariance criterion agrees with direct generator inspection."""
    checked = 0
    for i, rorg in enumerate(_random_inputs(0x0AC1E, 50, 6)):
        r = saturate(rorg)
        names = r.graph.vertices
        for size in range(1, len(names)):
            for subset in combinations(names, size):
                delta = frozenset(subset)
                direct = r.is_invariant(delta)
                oracle = invariant_by_generators(r, delta)
                if direct != oracle:
                    return False, f"input {i}, set {sorted(delta)}: criterion {direct}, oracle {oracle}"
                checked += 1
    return True, f"{checked} (input, subset) pairs agree"


def _acceptance_trees():
    for n in range(2, 7):
        yield build_tree(discrete(n))
    for n in range(1, 7):
        yield build_tree(complete(n))
    for n in range(2, 7):
        yield build_tree(mccool(n))
    yield build_tree(edge_plus_point())
    for n in range(2, 6):
        yield build_tree(star(n))


def criterion_witnesses():
    """Witness families for every FR leaf of the headline inputs."""
    start = time.perf_counter()
    count = 0
    for tree in _acceptance_trees():
        for leaf in iter_leaves(tree):
            if not isinstance(leaf.kind, FouxeRabinovitchLeaf):
                continue
            witness = witness_fr(leaf.kind.data)
            report = verify_witness(witness)
            if not report.commuting:
                return False, f"{leaf_label(leaf.kind)}: pairs {report.failing_pairs} do not commute"
            if not report.rank_matches:
                return False, (
                    f"{leaf_label(leaf.kind)}: out rank {witness.out_rank}"
                    f" != dimension {report.expected_rank}"
                )
            count += 1
    elapsed = time.perf_counter() - start
    if elapsed >= 5.0:
        return False, f"took {elapsed:.2f}s (budget 5s)"
    if count == 0:
        return False, "no Fouxe-Rabinovitch leaves found"
    return True, f"{count} witness families commute and realize the dimension ({elapsed:.2f}s)"


def criterion_normal_form_oracle():
    """Piling normal forms agree with the exhaustive rewriting oracle."""
    rng = random.Random(0x90AC4E)
    for trial in range(1000):
        n = rng.randint(1, 5)
        names = _NAMES[:n]
        edges = [(u, w) for u, w in combinations(names, 2) if rng.random() < 0.5]
        g = Graph(names, edges)
        letters = [(rng.choice(names), rng.choice((1, -1))) for _ in range(rng.randint(0, 6))]
        w = Word(g, letters)
        fast = normalize(w)
        slow = naive_normal_form(w)
        if fast.letters != slow.letters:
            return False, f"trial {trial}: {w.letters} -> {fast.letters} vs oracle {slow.letters}"
    return True, "1000 random words agree with the exhaustive oracle"


def criterion_termination_measure():
    """The complexity measure strictly decreases along every tree edge."""
    trees = list(_acceptance_trees())
    for rorg in _random_inputs(0x5EED, 100, 7) + _random_inputs(0x0AC1E, 50, 6):
        trees.append(build_tree(rorg))
    edges = 0
    for tree in trees:
        for split in iter_splits(tree):
            parent = complexity(split.node.rorg)
            for child in split.children:
                if child.node.path == split.node.path:
                    continue  # synthesized kernel leaf, same group node
                if complexity(child.node.rorg) >= parent:
                    raise InternalInvariantError(
                        f"measure did not decrease at {child.node.path_label}"
                    )
                edges += 1
    return True, f"measure decreased on all {edges} recursive edges"


CRITERIA = [
    ("free-group outer automorphism dimensions", criterion_free_groups),
    ("integer general linear dimensions", criterion_general_linear),
    ("basis-conjugating (all-singleton) leaves", criterion_basis_conjugating),
    ("mixed decomposition spot check", criterion_mixed_decomposition),
    ("central extension chain (stars)", criterion_central_chain),
    ("choice independence of the total dimension", criterion_choice_independence),
    ("invariance criterion vs generator oracle", criterion_invariance_oracle),
    ("witness suite for Fouxe-Rabinovitch leaves", criterion_witnesses),
    ("normal form vs exhaustive rewriting oracle", criterion_normal_form_oracle),
    ("termination measure strictly decreases", criterion_termination_measure),
]


def run_all(stream=None) -> int:
    """Run all criteria; returns 0 (pass), 1 (failure), or 3 (invariant violation)."""
    stream = stream or sys.stdout
    exit_code = 0
    for index, (name, criterion) in enumerate(CRITERIA, start=1):
        try:
            ok, detail = criterion()
        except InternalInvariantError as err:
            stream.write(f"FAIL {index:2d} {name}: invariant violation: {err}\n")
            exit_code = 3
            continue
        status = "PASS" if ok else "FAIL"
        stream.write(f"{status} {index:2d} {name}: {detail}\n")
        if not ok and exit_code == 0:
            exit_code = 1
    return exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(run_all())
