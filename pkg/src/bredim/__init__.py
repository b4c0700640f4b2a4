"""bredim: dimensions of classifying spaces for families of virtually abelian subgroups.

The package bundles four computational layers and a command line front end:

* ``lattice``  - exact subgroup arithmetic in Z^n (normal forms, indices,
  saturation, complements, mapping automorphisms);
* ``homology`` - integral (co)homology of finite chain complexes;
* ``raag``     - graphs, clique tables, cube complexes of right-angled Artin
  groups, and their dimension formulas;
* ``dims``     - closed-form dimension values, bound combinators, and the
  auditable derivation engine;
* ``gog``      - graphs of virtually abelian groups and their two-sided
  dimension bounds.
"""

from .errors import (
    AcylindricityError,
    AmbientMismatchError,
    BredimError,
    ChainComplexError,
    ContainmentError,
    DerivationError,
    DimensionMismatchError,
    IncompatibleBoundsError,
    InputError,
    MaximalityRequiredError,
    OutOfRangeError,
    ParseError,
    RankMismatchError,
)
from .matrix import IntMatrix, hermite_normal_form, smith_normal_form
from .lattice import (
    IndexResult,
    Sublattice,
    commensurable,
    direct_complement,
    index,
    intersect,
    is_maximal,
    lattice_sum,
    mapping_automorphism,
    saturation,
    sublattice_from_generators,
)
from .homology import ChainComplex, CohomologyGroup
from .raag import SimpleGraph, CliqueTable, cd_raag, cliques, gd_fk_raag, salvetti_complex
from .dims import Derivation, DimBound, FamilyTag, derive_zn_upper
from .gog import GraphOfGroups, bass_serre_bounds, gog_gd

__version__ = "0.1.0"
