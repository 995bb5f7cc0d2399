"""Structure, spectra, and Jordan chains of cyclically h-partite matrices.

A square matrix is h-cyclic when its digraph admits a vertex partition
(V_1, ..., V_h) with every arc running from V_i to V_{i+1} cyclically.
This package detects that structure, works with the resulting block
cycle (products, powers, spectrum prediction), rotates Jordan chains
across roots of unity, constructs zero-eigenvalue chains of singular
h-cyclic matrices, and reconstructs h-cyclic matrices from
symmetry-respecting Jordan data.  A JSON-speaking CLI (`hcyclic`) fronts
the whole library.
"""

from .matrix_core import (
    DEFAULT_TOL,
    NumericalError,
    as_complex_matrix,
    as_complex_vector,
    norm_inf,
    hadamard,
    jordan_block,
    submatrix,
    matrix_rank,
    null_space,
    matrix_to_json,
    matrix_from_json,
)
from .digraph import (
    Digraph,
    CyclicPartition,
    digraph_of,
    cyclic_index,
    feasible_h_values,
    find_h_partition,
    is_h_cyclic,
    consecutive_permutation,
    apply_vertex_permutation,
    permute_partition,
    partition_to_json,
    partition_from_json,
)
from .cyclic_blocks import (
    BlockCycle,
    SpectrumPrediction,
    StructureReport,
    extract_blocks,
    assemble_blocks,
    partial_product,
    block_diagonal_power,
    mirsky_spectrum,
    nonsingular_structure_check,
)
from .circulant import (
    omega,
    omega_pow,
    circulant_from_reference,
    recognize_circulant,
    basic_circulant,
    c_k_matrix,
    w_matrix,
)
from .jordan import (
    JordanChain,
    ZeroChainReport,
    ZeroChainSummary,
    WeyrCharacteristic,
    verify_chain,
    rotate_right_chain,
    rotate_left_chain,
    embed_null_vector,
    zero_chain_from_null_vector,
    zero_chains_all,
    weyr_zero,
    reconstruct_from_chains,
    chain_to_json,
    chain_from_json,
)

__all__ = [
    "DEFAULT_TOL",
    "NumericalError",
    "as_complex_matrix",
    "as_complex_vector",
    "norm_inf",
    "hadamard",
    "jordan_block",
    "submatrix",
    "matrix_rank",
    "null_space",
    "matrix_to_json",
    "matrix_from_json",
    "Digraph",
    "CyclicPartition",
    "digraph_of",
    "cyclic_index",
    "feasible_h_values",
    "find_h_partition",
    "is_h_cyclic",
    "consecutive_permutation",
    "apply_vertex_permutation",
    "permute_partition",
    "partition_to_json",
    "partition_from_json",
    "BlockCycle",
    "SpectrumPrediction",
    "StructureReport",
    "extract_blocks",
    "assemble_blocks",
    "partial_product",
    "block_diagonal_power",
    "mirsky_spectrum",
    "nonsingular_structure_check",
    "omega",
    "omega_pow",
    "circulant_from_reference",
    "recognize_circulant",
    "basic_circulant",
    "c_k_matrix",
    "w_matrix",
    "JordanChain",
    "ZeroChainReport",
    "ZeroChainSummary",
    "WeyrCharacteristic",
    "verify_chain",
    "rotate_right_chain",
    "rotate_left_chain",
    "embed_null_vector",
    "zero_chain_from_null_vector",
    "zero_chains_all",
    "weyr_zero",
    "reconstruct_from_chains",
    "chain_to_json",
    "chain_from_json",
]
