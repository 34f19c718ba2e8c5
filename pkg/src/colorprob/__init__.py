"""Exact computations with coloring problems, the terminal combinatorial Hopf monoid."""

from .core import (
    ColoringError,
    ColoringProblem,
    GuardExceeded,
    InvalidStructure,
    Violation,
    contract,
    full_interval_set,
    is_stable,
    product,
    relabel,
    restrict,
    unit,
    validate,
)
from .geometry import count_lattice_points, ehrhart_qsym, flag_of_point, hilbert_function, relative_faces
from .invariants import (
    chromatic_polynomial,
    chromatic_qsym,
    count_colorings,
    enumerate_stable_flags,
    is_proper_coloring,
)
from .qsym import (
    QSymPoly,
    UniPoly,
    compositions_of,
    lagrange_interpolate,
    principal_specialization,
    qsym_add,
    qsym_mul,
    qsym_to_polynomial,
)
from .species import (
    Antimatroid,
    Graph,
    Hypergraph,
    Matroid,
    Poset,
    phi,
    poset_to_antimatroid,
    psi,
    species_contract,
    species_is_stable,
    species_product,
    species_restrict,
)

__version__ = "0.1.0"
