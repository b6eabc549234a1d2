"""lpacenter: the graded center of a Leavitt path algebra, from the graph.

Core pipeline: parse a finitely presented graph (possibly with infinite
emitters), enumerate its compact admissible pairs and exit-free cycle
classes, emit center generators and a basis in every degree, and verify
each element by a groupoid-indicator normal form.
"""

from .algebra import (
    AlgebraElement,
    Generator,
    Monomial,
    ck2_expand,
    edge_element,
    generators,
    ghost_element,
    identity_element,
    mono_mul,
    monomial_element,
    path_element,
    vertex_element,
    zero_element,
)
from .center import (
    BruteforceCenter,
    CenterBasis,
    center_basis,
    center_bruteforce,
    center_component_basis,
    center_zero_basis,
    center_zero_generators,
    nonzero_center_degrees,
)
from .cycles import (
    CycleClass,
    EntryDescriptor,
    cycles_without_exits,
    entry_paths,
    has_finite_entries,
)
from .graphio import GraphParseError, load_graph, parse_graph, serialize_graph
from .graphs import (
    Bundle,
    Count,
    EdgeRef,
    Graph,
    GraphDefinitionError,
    INFINITE,
    InfinitePathFamilyError,
    OMEGA,
    Path,
    VertexKind,
    classify_vertex,
    count_first_hitting_paths,
    first_hitting_paths,
    reaches,
    simple_cycles,
)
from .lattice import (
    AdmissiblePair,
    Decomposition,
    SubsetCapExceededError,
    UnitBasicSet,
    breaking_vertices,
    decompose,
    enumerate_compact_pairs,
    f_alpha_split,
    hereditary_saturated_sets,
    is_compact_pair,
    is_hereditary,
    is_saturated,
    minimal_compact_pairs,
    saturated_hereditary_closure,
    satisfies_condition_f,
)
from .rings import QQ, Ring, Zmod, ZZ, ring_from_spec
from .steinberg import (
    BasicBisection,
    SteinbergElement,
    convolve,
    equals,
    indicator_of_pair,
    is_central,
    is_zero,
    pi,
    pi_inverse,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissiblePair", "AlgebraElement", "BasicBisection", "BruteforceCenter",
    "Bundle", "CenterBasis", "Count", "CycleClass", "Decomposition", "EdgeRef",
    "EntryDescriptor", "Generator", "Graph", "GraphDefinitionError",
    "GraphParseError", "INFINITE", "InfinitePathFamilyError", "Monomial",
    "OMEGA", "Path", "QQ", "Ring", "SteinbergElement", "SubsetCapExceededError",
    "UnitBasicSet", "VertexKind", "ZZ", "Zmod", "breaking_vertices",
    "center_basis", "center_bruteforce", "center_component_basis",
    "center_zero_basis", "center_zero_generators", "ck2_expand",
    "classify_vertex", "convolve", "count_first_hitting_paths",
    "cycles_without_exits", "decompose", "edge_element",
    "enumerate_compact_pairs", "entry_paths", "equals", "f_alpha_split",
    "first_hitting_paths", "generators", "ghost_element",
    "has_finite_entries", "hereditary_saturated_sets", "identity_element",
    "indicator_of_pair", "is_central", "is_compact_pair", "is_hereditary",
    "is_saturated", "is_zero", "load_graph", "minimal_compact_pairs",
    "mono_mul", "monomial_element", "nonzero_center_degrees", "parse_graph",
    "path_element", "pi", "pi_inverse", "reaches", "ring_from_spec",
    "saturated_hereditary_closure", "satisfies_condition_f",
    "serialize_graph", "simple_cycles", "vertex_element", "zero_element",
]
