"""Exact integral group ring toolkit for finite groups.

Constructs bicyclic and Hoechsmann units, decides when the symmetric
units of Z[G] form a multiplicative group, and produces verified
noncommuting symmetric pairs when they do not.
"""

from .backend import BACKEND, HAVE_COMPILED
from .criterion import (
    CriterionReport,
    SearchResult,
    bounded_unit_search,
    closure_probe,
    criterion,
    find_counterexample,
)
from .groups import (
    FiniteGroup,
    GroupClassification,
    GroupElement,
    Subgroup,
    all_subgroups,
    classify,
    cyclic,
    cyclic_subgroup,
    dihedral,
    direct_product,
    element_order,
    elementary_abelian2,
    generated_subgroup,
    is_normal,
    quaternion8,
    subgroup_from_elements,
    symmetric3,
)
from .ring import (
    RingElement,
    UnitCertificate,
    VerificationError,
    add,
    augmentation,
    canonical_text,
    commutator_nonzero,
    embed,
    hat,
    is_central,
    is_symmetric,
    is_trivial_unit,
    is_unitary,
    mul,
    neg,
    one,
    regular_matrix,
    scalar_mul,
    star,
    try_inverse,
    zero,
)
from .units import (
    HoechsmannParams,
    PairDiagnostics,
    SymmetricPairReport,
    bicyclic,
    hoechsmann,
    noncommuting_pair,
    noncommuting_pair_diagnostics,
    pair_from_bicyclic,
    symmetric_products,
)

__version__ = "0.1.0"
