"""Finite groups: constructions, structure, re-basing and automorphisms."""

from .core import (
    Automorphism,
    CyclicGroup,
    DirectProduct,
    FiniteGroup,
    Holomorph,
    IndexedGroup,
    MatrixGroup,
    PermutationGroup,
    SemidirectProduct,
    VectorGroup,
    holomorph,
    inner_automorphism,
    is_automorphism,
    make_automorphism,
    matrix_group_closure,
    semidirect,
    vector_group,
)
from .structure import (
    AbelianQuotient,
    Subgroup,
    abelian_invariants,
    abelian_quotient,
    as_group,
    center,
    centralizer,
    commutator_subgroup,
    conjugacy_classes,
    derived_series,
    derived_subgroup,
    element_order,
    is_normal,
    lower_central_series,
    nilpotency_class,
    normal_closure,
    overgroups,
    quotient_abelian,
    subgroup_generated,
)
from .automorphisms import automorphism_group, element_profiles, generating_set, homomorphism_search
from .rebase import RebaseResult, rebase, verify_rebase
