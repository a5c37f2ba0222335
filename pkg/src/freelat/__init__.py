"""Free lattice-type objects generated by finite posets and implication families.

Subsets are ``int`` bitmasks over a :class:`GroundSet`; bit ``i`` is the
element at position ``i``.
"""

from .abengine import CompressedRow, RowTable, count, expand, impose, run
from .distbool import (
    FreeDistributiveLattice,
    SetSystem,
    boolean_atoms_of_sets,
    fb_atom_count,
    fb_size,
    fd_factor,
    fd_join_irreducibles,
    free_distributive,
    generation_probability,
    realize_fb,
)
from .dot import hasse_dot
from .errors import (
    CapExceeded,
    CycleError,
    FreeLatError,
    InconsistentJoins,
    InvalidStructure,
    NotALattice,
    NotClosed,
    NotIrreducible,
    ParseError,
    TermSyntaxError,
    UnknownElement,
    WidthOverflow,
)
from .freelattice import Gen, Join, Meet, Term, WordProblem, generate_fl, parse_term, term_equal, term_leq
from .implications import (
    ClosureSystem,
    Implication,
    ImplicationFamily,
    closure,
    closure_system,
    essential_elements,
    nonredundant_base,
    parse_implications,
    quasi_closure,
)
from .joincore import join_core, join_essentials, join_irreducibles, presents_lattice
from .lattice import FiniteLattice, boolean_lattice, chain_lattice, m3, n5, parse_lattice
from .order import (
    GroundSet,
    Poset,
    SubsetFamily,
    build_poset,
    enumerate_filters,
    enumerate_ideals,
    parse_poset,
)
from .presentations import (
    FiniteSemilattice,
    PartialSemilattice,
    SemilatticePresentation,
    free_join_semilattice,
    free_meet_semilattice,
    free_partial_semilattice,
    free_presented_semilattice,
    parse_presentation,
    vee_ideals,
)

__version__ = "0.1.0"
