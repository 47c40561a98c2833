"""Exact combinatorics of partitions of the cyclic group Z_n into
arithmetic-progression blocks: closed-form counts, complete enumeration
oracles, and the separation construction that maps between partition
families of different common differences.
"""

from .core import (
    APBlock,
    APPartition,
    FormatError,
    InvalidPartitionError,
    PartitionType,
    SelfOverlappingBlockError,
    UnsupportedTypeError,
    Violation,
    block_elements,
    block_from_set,
    check_condition,
    format_partition,
    is_valid,
    parse_partition,
    partition_from_json,
    partition_to_json,
    require_valid,
    type_of,
    underlying_set,
    validate_partition,
    wrap,
)
from .counting import (
    OutOfRegimeError,
    cyclic_multinomial,
    generalized_kaplansky,
    kaplansky,
    msun_count,
    multinomial,
)
from .enumeration import (
    BudgetExceededError,
    EnumerationBudget,
    count_ap_partitions,
    count_dissections,
    count_spaced_subsets,
    enumerate_ap_partitions,
    enumerate_dissections,
    enumerate_spaced_subsets,
    partition_types,
    subsets_to_partitions,
    was_truncated,
)
from .kernels import COMPILED, kernel_name
from .separation import (
    HeadProfile,
    InvariantViolationError,
    SeparationConditionError,
    TraceStep,
    head_profiles,
    separate,
    separate_from,
    separate_with_trace,
    starting_points,
    verify_roundtrip,
)

__version__ = "0.1.0"
