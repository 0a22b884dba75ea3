"""Exact computations with Hopf heaps, translation Hopf algebras and Hopf-Galois co-objects."""

from .catalog import (
    GROUP_NAMES,
    FiniteHeapTable,
    GroupTable,
    catalog_heaps,
    catalog_hopf_algebras,
    catalog_morphisms,
    gen_group_algebra,
    gen_heap_from_group,
    gen_sweedler,
    group_table,
    linearize_heap,
    perturb,
    set_translation_group,
)
from .coalgebra import Coalgebra, check_coalgebra, co_opposite, grouplike_scan, tensor_coalgebra
from .galois import (
    GaloisCoObject,
    antipode_from_galois,
    check_cotranslation_props,
    check_galois,
    check_galois_morphism,
    cotranslation,
    ehresmann_hopf,
    ehresmann_iso_left_translations,
    galois_from_heap,
    galois_from_hopf,
    heap_from_galois,
    phi_iso,
    roundtrip_check,
)
from .heap import HeapMorphism, HopfHeap, check_grunspan, check_hopf_heap, grunspan_map, heap_from_hopf, hopf_at_grouplike
from .hopf import HopfAlgebraData, check_antipode, check_bialgebra, check_hopf_morphism, solve_antipode
from .report import Report, ShapeError, VerificationError
from .scalars import GF, QQ, FieldSpec, MixedFieldError, Scalar, scalar_arith
from .translations import (
    TranslationAlgebra,
    abelian_swap_check,
    build_left_translations,
    build_right_translations,
    build_translations,
    check_translation_identities,
    grouplike_iso,
    induced_morphism,
)

__version__ = "0.1.0"
