"""Exact symmetric-group decompositions of configuration space cohomology.

Thin re-export of the compiled core; all arithmetic is exact (arbitrary
precision integers, rational inner products).
"""

from ._core import (
    __version__,
    action_matrix,
    admissible_basis,
    antisymmetrizer,
    branching_boxes,
    character_table,
    class_size,
    decompose,
    element_text,
    graded_character,
    graded_character_values,
    graded_dimension,
    induce_character,
    induce_trivial_from_transposition,
    inner_product,
    invariant_dimensions,
    irreducible_character,
    irreducible_dimension,
    locate_multiplicities,
    named_character,
    normal_form,
    partitions_of,
    restrict_character,
    tensor,
    verify,
    verify_extended_relations,
)

__all__ = [
    "__version__",
    "action_matrix",
    "admissible_basis",
    "antisymmetrizer",
    "branching_boxes",
    "character_table",
    "class_size",
    "decompose",
    "element_text",
    "graded_character",
    "graded_character_values",
    "graded_dimension",
    "induce_character",
    "induce_trivial_from_transposition",
    "inner_product",
    "invariant_dimensions",
    "irreducible_character",
    "irreducible_dimension",
    "locate_multiplicities",
    "named_character",
    "normal_form",
    "partitions_of",
    "restrict_character",
    "tensor",
    "verify",
    "verify_extended_relations",
]
