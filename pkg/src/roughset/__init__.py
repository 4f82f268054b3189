"""Rough-set approximation and axiomatic roughness measures over finite universes."""

from .approximation import ApproximationResult, approximate, is_exact, pawlak_accuracy, pawlak_roughness
from .measures import (
    CATALOG as PARTITION_MEASURES,
    InvalidMeasureError,
    PartitionMeasureSpec,
    co_entropy,
    combination_granulation,
    entropy,
    granulation,
    graph_connectivity,
    pseudo_co_entropy,
    verify_partition_measure,
)
from .partitions import (
    CapacityError,
    ElementMap,
    LiteralError,
    Partition,
    Subset,
    Universe,
    UniverseMismatchError,
    bell_number,
    block_size_multiset,
    discrete_partition,
    enumerate_partitions,
    exists_isomorphism,
    is_homomorphism,
    is_isomorphism,
    is_monomorphism,
    is_strict_monomorphism,
    isomorphism_witness,
    parse_partition,
    parse_subset,
    partition_from_labeling,
    refines,
    strictly_refines,
    trivial_partition,
)
from .report import AxiomReport
from .roughness import (
    RoughnessMeasureSpec,
    check_propositions,
    named_measures,
    strong_pawlak,
    verify_roughness_axioms,
    verify_weak_roughness_axioms,
)
from .table import InformationTable, TableError, indiscernibility_partition, load_table

__version__ = "0.1.0"

__all__ = [
    "ApproximationResult",
    "approximate",
    "is_exact",
    "pawlak_accuracy",
    "pawlak_roughness",
    "PARTITION_MEASURES",
    "InvalidMeasureError",
    "PartitionMeasureSpec",
    "co_entropy",
    "combination_granulation",
    "entropy",
    "granulation",
    "graph_connectivity",
    "pseudo_co_entropy",
    "verify_partition_measure",
    "CapacityError",
    "ElementMap",
    "LiteralError",
    "Partition",
    "Subset",
    "Universe",
    "UniverseMismatchError",
    "bell_number",
    "block_size_multiset",
    "discrete_partition",
    "enumerate_partitions",
    "exists_isomorphism",
    "is_homomorphism",
    "is_isomorphism",
    "is_monomorphism",
    "is_strict_monomorphism",
    "isomorphism_witness",
    "parse_partition",
    "parse_subset",
    "partition_from_labeling",
    "refines",
    "strictly_refines",
    "trivial_partition",
    "AxiomReport",
    "RoughnessMeasureSpec",
    "check_propositions",
    "named_measures",
    "strong_pawlak",
    "verify_roughness_axioms",
    "verify_weak_roughness_axioms",
    "InformationTable",
    "TableError",
    "indiscernibility_partition",
    "load_table",
]
