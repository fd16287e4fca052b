"""Secret sharing schemes built from linear codes over finite fields."""

from .access import (
    AccessStructure,
    BlockPartition,
    compose,
    dual_structure,
    from_supports,
    probe_propositions,
    structure_of_code,
    threshold,
)
from .codes import LinearCode, code_from_parity, code_make, dual_code, minimal_supports, parity_check, reed_solomon
from .construction import (
    VectorSpaceConstruction,
    code_construction,
    compose_construction,
    realizes,
    sum_normalize,
    threshold_construction,
)
from .galois import FieldElement, FieldEmbedding, FieldSpec, field_arith, field_embed, field_make
from .matfield import MatrixF, kernel_basis, rank, rref, solve_membership
from .scheme import ShareBundle, deal, perfectness_audit, reconstruct

__all__ = [
    "AccessStructure", "BlockPartition", "FieldElement", "FieldEmbedding", "FieldSpec",
    "LinearCode", "MatrixF", "ShareBundle", "VectorSpaceConstruction",
    "code_construction", "code_from_parity", "code_make", "compose", "compose_construction",
    "deal", "dual_code", "dual_structure", "field_arith", "field_embed", "field_make",
    "from_supports", "kernel_basis", "minimal_supports", "parity_check", "perfectness_audit",
    "probe_propositions", "rank", "realizes", "reconstruct", "reed_solomon", "rref",
    "solve_membership", "structure_of_code", "sum_normalize", "threshold",
    "threshold_construction",
]
