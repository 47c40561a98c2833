"""Brute-force oracles: complete enumeration of AP-partitions, dissections,
and spacing-constrained subsets.

These are the independent checks for the closed-form counts: they
materialize every object at desk scale, in a deterministic order, with an
optional node budget on the partition search.  The partition search is
backed by the compiled kernel when available (see kernels); the pure-Python
kernel produces identical lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import APBlock, APPartition, PartitionType, wrap
from .counting import OutOfRegimeError
from .kernels import active as _kernel

__all__ = [
    "BudgetExceededError",
    "EnumerationBudget",
    "TruncatedCount",
    "TruncatedList",
    "count_ap_partitions",
    "count_dissections",
    "count_spaced_subsets",
    "enumerate_ap_partitions",
    "enumerate_dissections",
    "enumerate_spaced_subsets",
    "partition_types",
    "subsets_to_partitions",
    "was_truncated",
]


class BudgetExceededError(RuntimeError):
    """Search-tree node cap exceeded under the fail policy."""


class TruncatedList(list):
    """Enumeration output cut short by the node budget (truncate policy)."""

    truncated = True


class TruncatedCount(int):
    """Count cut short by the node budget (truncate policy)."""

    truncated = True


def was_truncated(result) -> bool:
    return getattr(result, "truncated", False)


@dataclass(frozen=True)
class EnumerationBudget:
    """Node cap for the enumeration search tree.

    on_exceed selects the policy: "fail" raises BudgetExceededError,
    "truncate" returns partial output flagged via TruncatedList or
    TruncatedCount.
    """

    max_nodes: int
    on_exceed: str = "fail"

    def __post_init__(self):
        if self.max_nodes < 1:
            raise ValueError("max_nodes must be >= 1")
        if self.on_exceed not in ("fail", "truncate"):
            raise ValueError('on_exceed must be "fail" or "truncate"')


def _check_args(n: int, m: int, t: PartitionType, budget: EnumerationBudget | None) -> int:
    if m < 1:
        raise ValueError("difference must be positive")
    if t.weight != n:
        raise ValueError(f"type weight {t.weight} does not match n={n}")
    return budget.max_nodes if budget is not None else 0


def enumerate_ap_partitions(
    n: int, m: int, t: PartitionType, budget: EnumerationBudget | None = None
) -> list[APPartition]:
    """All partitions of Z_n into difference-m AP-blocks of the given type.

    Partitions are distinct as sets of (head, length) blocks, so blocks with
    equal underlying sets but different heads yield distinct partitions.
    The list is duplicate-free and its order is deterministic (depth-first
    search order of the branching described in _pykernels).
    """
    max_nodes = _check_args(n, m, t, budget)
    raw, _nodes, truncated = _kernel.list_partitions(n, m, t.sizes, t.multiplicities, max_nodes)
    result = [APPartition(n, m, tuple(APBlock(h, l) for h, l in blocks)) for blocks in raw]
    if truncated:
        if budget.on_exceed == "fail":
            raise BudgetExceededError(
                f"node budget {budget.max_nodes} exceeded enumerating ({n}, m={m}, {t})"
            )
        return TruncatedList(result)
    return result


def count_ap_partitions(
    n: int, m: int, t: PartitionType, budget: EnumerationBudget | None = None
) -> int:
    """len(enumerate_ap_partitions(...)) without materializing the partitions."""
    max_nodes = _check_args(n, m, t, budget)
    count, _nodes, truncated = _kernel.count_partitions(n, m, t.sizes, t.multiplicities, max_nodes)
    if truncated:
        if budget.on_exceed == "fail":
            raise BudgetExceededError(
                f"node budget {budget.max_nodes} exceeded counting ({n}, m={m}, {t})"
            )
        return TruncatedCount(count)
    return count


def enumerate_dissections(
    n: int, t: PartitionType, budget: EnumerationBudget | None = None
) -> list[APPartition]:
    """All dissections (difference-1 partitions) of Z_n of the given type."""
    return enumerate_ap_partitions(n, 1, t, budget)


def count_dissections(n: int, t: PartitionType, budget: EnumerationBudget | None = None) -> int:
    return count_ap_partitions(n, 1, t, budget)


def enumerate_spaced_subsets(n: int, m: int, p: int, k: int) -> list[tuple[int, ...]]:
    """All k-subsets of Z_n in which no directed difference between distinct
    elements falls in {m, 2m, ..., pm}.

    Both orientations of every pair are constrained (the forbidden set is
    closed under negation mod n).  Subsets come out as ascending tuples in
    lexicographic order.
    """
    if n < 1 or m < 1 or p < 1:
        raise ValueError("n, m, p must be positive")
    if k < 0:
        raise ValueError("k must be nonnegative")
    forbidden = set()
    for j in range(1, p + 1):
        forbidden.add((j * m) % n)
        forbidden.add((-j * m) % n)
    forbidden.discard(0)  # distinct elements never differ by 0
    out: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def extend(start: int) -> None:
        if len(chosen) == k:
            out.append(tuple(chosen))
            return
        for x in range(start, n + 1):
            if all((x - y) % n not in forbidden for y in chosen):
                chosen.append(x)
                extend(x + 1)
                chosen.pop()

    extend(1)
    return out


def count_spaced_subsets(n: int, m: int, p: int, k: int) -> int:
    return len(enumerate_spaced_subsets(n, m, p, k))


def subsets_to_partitions(n: int, m: int, p: int, heads: Iterable[int]) -> APPartition:
    """The difference-m partition whose blocks of length p+1 sit at the given
    heads, with every remaining element a singleton; its type is
    1^(n-(p+1)k) (p+1)^k for k heads.

    Heads whose blocks would overlap (equivalently, heads violating the
    spacing constraint of enumerate_spaced_subsets) raise ValueError.
    """
    head_list = sorted(set(heads))
    k = len(head_list)
    if n < m * p * k + 1:
        raise OutOfRegimeError(
            f"out of regime: {k} blocks of length {p + 1} and difference {m} need n >= {m * p * k + 1}"
        )
    covered = bytearray(n + 1)
    blocks = []
    for h in head_list:
        if not 1 <= h <= n:
            raise ValueError(f"head {h} outside [1, {n}]")
        e = h
        for _ in range(p + 1):
            if covered[e]:
                raise ValueError(
                    f"spacing violated: element {e} covered twice by blocks at heads {head_list}"
                )
            covered[e] = 1
            e = wrap(e + m, n)
        blocks.append(APBlock(h, p + 1))
    for x in range(1, n + 1):
        if not covered[x]:
            blocks.append(APBlock(x, 1))
    return APPartition(n, m, tuple(blocks))


def partition_types(n: int, mixed_only: bool = False) -> Iterator[PartitionType]:
    """Every partition type of weight n, in a fixed deterministic order.

    With mixed_only=True, only types with at least one singleton and at
    least one larger block are produced.
    """
    if n < 1:
        raise ValueError("n must be positive")

    def desc(remaining: int, max_part: int):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, max_part), 0, -1):
            for rest in desc(remaining - part, part):
                yield (part,) + rest

    for shape in desc(n, n):
        t = PartitionType.from_sizes(shape)
        if mixed_only and not t.is_mixed:
            continue
        yield t
