"""Dimension computations for relative outer automorphism groups of graph groups.

The package builds a decomposition tree for the group defined by a finite
simple graph and two collections of vertex sets, evaluates closed-form
dimensions at the leaves, and can construct and verify explicit free
abelian witness subgroups for the Fouxe-Rabinovitch leaves.
"""

from .autos import (
    Automorphism,
    AutomorphismError,
    GeneratorSymbol,
    Inversion,
    PartialConjugation,
    Transvection,
)
from .cli import InputError, parse_input
from .decompose import (
    Case,
    InternalInvariantError,
    Leaf,
    NodeGroup,
    Split,
    Tree,
    build_tree,
    classify,
    complexity,
    decompose_step,
    iter_leaves,
    iter_splits,
    leaf_multiset,
)
from .graphs import Graph, GraphError
from .leaves import (
    FouxeRabinovitchLeaf,
    FrLeafData,
    FreeAbelianLeaf,
    GeneralLinearLeaf,
    LeafKind,
    TrivialLeaf,
    leaf_label,
)
from .rorg import DEFAULT_VERTEX_CAP, Rorg, RorgError, VertexCapExceeded, saturate
from .vcd import aut_vcd, fr_vcd, gl_vcd, leaf_vcd, rorg_vcd, tree_vcd
from .witness import WitnessReport, WitnessSet, verify_witness, witness_automorphisms, witness_fr
from .words import MAX_WORD_LETTERS, Word, WordLengthError, equal_elements, normalize, word

__version__ = "0.1.0"

__all__ = [
    "Automorphism",
    "AutomorphismError",
    "Case",
    "DEFAULT_VERTEX_CAP",
    "FouxeRabinovitchLeaf",
    "FrLeafData",
    "FreeAbelianLeaf",
    "GeneralLinearLeaf",
    "GeneratorSymbol",
    "Graph",
    "GraphError",
    "InputError",
    "InternalInvariantError",
    "Inversion",
    "Leaf",
    "LeafKind",
    "MAX_WORD_LETTERS",
    "NodeGroup",
    "PartialConjugation",
    "Rorg",
    "RorgError",
    "Split",
    "Transvection",
    "Tree",
    "TrivialLeaf",
    "VertexCapExceeded",
    "WitnessReport",
    "WitnessSet",
    "Word",
    "WordLengthError",
    "aut_vcd",
    "build_tree",
    "classify",
    "complexity",
    "decompose_step",
    "equal_elements",
    "fr_vcd",
    "gl_vcd",
    "iter_leaves",
    "iter_splits",
    "leaf_label",
    "leaf_multiset",
    "leaf_vcd",
    "normalize",
    "parse_input",
    "rorg_vcd",
    "saturate",
    "tree_vcd",
    "verify_witness",
    "witness_automorphisms",
    "witness_fr",
    "word",
]
