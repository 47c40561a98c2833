"""The separation construction: rebuilding a partition of one difference as
a partition of another difference of the same type.

For each head, its profile records how many singleton blocks sit strictly
between the nearest larger-block head against the cycle direction and the
head itself.  A head maximizing that count anchors a relative linear order
of Z_n (start < start+1 < ... < start-1); the blocks, taken in that order
of their heads, are then rebuilt with the new difference, each new head
being the smallest element (in the relative order) not yet covered.  On
types passing check_condition this never collides and is a bijection
between the two difference families; running it with the new difference
equal to the old one reproduces the input.
"""

from __future__ import annotations

from typing import NamedTuple

from .core import (
    APBlock,
    APPartition,
    UnsupportedTypeError,
    block_elements,
    check_condition,
    format_partition,
    require_valid,
    type_of,
    wrap,
)

__all__ = [
    "HeadProfile",
    "InvariantViolationError",
    "SeparationConditionError",
    "TraceStep",
    "head_profiles",
    "separate",
    "separate_from",
    "separate_with_trace",
    "starting_points",
    "verify_roundtrip",
]


class SeparationConditionError(ValueError):
    """The type does not satisfy the separation condition for this pair of differences."""


class InvariantViolationError(RuntimeError):
    """An internal guarantee of the construction failed; indicates a bug, not bad input."""


class HeadProfile(NamedTuple):
    head: int
    is_singleton: bool
    preceding_singletons: int


class TraceStep(NamedTuple):
    index: int
    source_head: int
    length: int
    new_head: int


def head_profiles(p: APPartition) -> list[HeadProfile]:
    """One profile per block head, sorted by head.

    preceding_singletons counts the singleton heads strictly between the
    nearest larger-block head against the cycle direction and the head
    itself; the head is never counted.  Only mixed types are supported.
    """
    require_valid(p)
    t = type_of(p)
    if not t.is_mixed:
        raise UnsupportedTypeError(
            f"unsupported type {t}: need at least one singleton and one larger block"
        )
    n = p.n
    singleton_heads = {b.head for b in p.blocks if b.length == 1}
    larger_heads = {b.head for b in p.blocks if b.length > 1}
    profiles = []
    for b in p.blocks:
        count = 0
        e = wrap(b.head - 1, n)
        while e not in larger_heads:
            if e in singleton_heads:
                count += 1
            e = wrap(e - 1, n)
        profiles.append(HeadProfile(b.head, b.length == 1, count))
    return profiles


def _maximal_heads(profiles: list[HeadProfile]) -> list[int]:
    best = max(pr.preceding_singletons for pr in profiles)
    heads = [pr.head for pr in profiles if pr.preceding_singletons == best]
    for pr in profiles:
        if pr.preceding_singletons == best and pr.is_singleton:
            raise InvariantViolationError(
                f"singleton head {pr.head} attained the maximal singleton count {best}"
            )
    return heads


def starting_points(p: APPartition) -> list[int]:
    """All heads attaining the maximal singleton count, in increasing order.

    Every one of them heads a block of length at least two.
    """
    return _maximal_heads(head_profiles(p))


def _separate(p, m_prime, start, want_trace):
    if m_prime < 1:
        raise ValueError("target difference must be positive")
    profiles = head_profiles(p)  # validates p and its type
    t = type_of(p)
    if not check_condition(t, p.difference, m_prime):
        raise SeparationConditionError(
            f"condition violated: type {t} does not admit separation "
            f"between differences {p.difference} and {m_prime}"
        )
    starts = _maximal_heads(profiles)
    if start is None:
        start = starts[0]  # smallest natural label among the maximal heads
    elif start not in starts:
        raise ValueError(f"start {start} is not a maximal head (candidates: {starts})")

    n = p.n
    bound = (max(p.difference, m_prime) - 1) * (t.largest_size - 1)
    best = max(pr.preceding_singletons for pr in profiles)
    if best < bound:
        raise InvariantViolationError(
            f"pigeonhole bound failed on {format_partition(p)}: "
            f"max singleton count {best} < {bound}"
        )

    def fail(reason, detail):
        raise InvariantViolationError(
            f"{reason} while separating {format_partition(p)} to difference {m_prime} "
            f"from start {start}: {detail}"
        )

    ordered = sorted(p.blocks, key=lambda b: (b.head - start) % n)
    covered = bytearray(n + 1)
    step = m_prime % n
    new_blocks = []
    trace = [] if want_trace else None
    probe = 0  # rank scanned so far in the relative order
    last_rank = -1
    for idx, block in enumerate(ordered):
        while probe < n and covered[wrap(start + probe, n)]:
            probe += 1
        if probe >= n:
            fail("ran out of elements", f"step {idx + 1}, placed {new_blocks}")
        if probe <= last_rank:
            fail("head order violated", f"rank {probe} after {last_rank}")
        last_rank = probe
        new_head = wrap(start + probe, n)
        e = new_head
        for _ in range(block.length):
            if covered[e]:
                fail(
                    "collision",
                    f"element {e} already covered at step {idx + 1}, "
                    f"placed {[(b.head, b.length) for b in new_blocks]}",
                )
            covered[e] = 1
            e += step
            if e > n:
                e -= n
        new_blocks.append(APBlock(new_head, block.length))
        if want_trace:
            trace.append(TraceStep(idx + 1, block.head, block.length, new_head))
    result = APPartition(n, m_prime, tuple(new_blocks))
    require_valid(result)
    return result, trace


def separate(p: APPartition, m_prime: int) -> APPartition:
    """The same-type partition of difference m_prime produced by the
    separation construction; deterministic (smallest maximal head is used,
    and the output does not depend on that choice anyway)."""
    return _separate(p, m_prime, None, False)[0]


def separate_from(p: APPartition, m_prime: int, start: int) -> APPartition:
    """separate with an explicit starting head; it must be a maximal head,
    and all admissible choices give the identical output."""
    return _separate(p, m_prime, start, False)[0]


def separate_with_trace(
    p: APPartition, m_prime: int, start: int | None = None
) -> tuple[APPartition, list[TraceStep]]:
    """separate plus the head-by-head construction record."""
    return _separate(p, m_prime, start, True)


def format_trace(p: APPartition, m_prime: int, trace: list[TraceStep]) -> list[str]:
    """Human-readable construction record: one line per rebuilt block."""
    lines = [f"start {trace[0].new_head}"]
    for step in trace:
        old = block_elements(APBlock(step.source_head, step.length), p.n, p.difference)
        new = block_elements(APBlock(step.new_head, step.length), p.n, m_prime)
        lines.append(
            f"{step.index}. ({','.join(map(str, old))}) -> ({','.join(map(str, new))})"
        )
    return lines


def verify_roundtrip(p: APPartition, m_prime: int) -> bool:
    """Separate to m_prime and back, checking the intermediate guarantee that
    the starting head stays maximal in the image; True when the round trip
    reproduces the input exactly."""
    q = separate(p, m_prime)
    h1 = starting_points(p)[0]
    if h1 not in starting_points(q):
        raise InvariantViolationError(
            f"start {h1} of {format_partition(p)} is not maximal in the image {format_partition(q)}"
        )
    return separate(q, p.difference) == p
