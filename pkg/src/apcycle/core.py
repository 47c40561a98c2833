"""Domain model for partitions of the cyclic group Z_n into AP-blocks.

Elements of Z_n are written 1, 2, ..., n and sit clockwise on a directed
n-cycle; modular arithmetic maps residue 0 back to n.  An AP-block with head
h and length l denotes the sequence (h, h+m, ..., h+(l-1)m) mod n, where the
common difference m belongs to the enclosing partition, never to the block
itself.  A partition type is the multiset signature of block sizes, written
1^k1 i2^k2 ... ir^kr with strictly increasing sizes and no zero exponents.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple

__all__ = [
    "APBlock",
    "APPartition",
    "FormatError",
    "InvalidPartitionError",
    "PartitionType",
    "SelfOverlappingBlockError",
    "UnsupportedTypeError",
    "Violation",
    "block_elements",
    "block_from_set",
    "check_condition",
    "format_partition",
    "is_valid",
    "parse_partition",
    "partition_from_json",
    "partition_to_json",
    "require_valid",
    "type_of",
    "underlying_set",
    "validate_partition",
    "wrap",
]


class InvalidPartitionError(ValueError):
    """A partition failed validation where a valid one was required."""


class SelfOverlappingBlockError(ValueError):
    """An AP-block revisits an element of Z_n before reaching its length."""


class UnsupportedTypeError(ValueError):
    """Partition type lies outside the singleton-plus-larger-block family."""


class FormatError(ValueError):
    """Malformed or non-canonical serialized partition."""


def wrap(value: int, n: int) -> int:
    """Reduce an integer into the representative range [1, n] of Z_n."""
    return (value - 1) % n + 1


class APBlock(NamedTuple):
    """An AP-block stored as (head, length); the difference lives on the partition."""

    head: int
    length: int

    def __str__(self) -> str:
        return f"({self.head}:{self.length})"


def block_elements(block: APBlock, n: int, m: int) -> tuple[int, ...]:
    """The ordered elements (head, head+m, ...) of a block on Z_n.

    Raises SelfOverlappingBlockError if the walk revisits an element before
    taking `length` steps, so the result always has exactly `length` distinct
    entries.
    """
    head, length = block
    if not 1 <= head <= n:
        raise ValueError(f"head {head} outside [1, {n}]")
    if not 1 <= length <= n:
        raise ValueError(f"length {length} outside [1, {n}]")
    step = m % n
    seen = bytearray(n + 1)
    out = []
    e = head
    for _ in range(length):
        if seen[e]:
            raise SelfOverlappingBlockError(
                f"self-overlapping block ({head}:{length}) with difference {m} on Z_{n}: "
                f"element {e} revisited"
            )
        seen[e] = 1
        out.append(e)
        e += step
        if e > n:
            e -= n
    return tuple(out)


def underlying_set(block: APBlock, n: int, m: int) -> frozenset[int]:
    """The underlying set of a block; exactly `length` elements or an error."""
    return frozenset(block_elements(block, n, m))


def block_from_set(s: Iterable[int], n: int, m: int) -> list[APBlock]:
    """All AP-blocks of difference m on Z_n whose underlying set equals s.

    Returned in increasing head order.  A set that is not a difference-m
    progression yields the empty list.  More than one block exists exactly
    when the progression closes up on itself (len(s)*m divisible by n), in
    which case every element of s serves as a head.
    """
    elems = frozenset(s)
    if not elems:
        raise ValueError("empty set")
    for x in elems:
        if not 1 <= x <= n:
            raise ValueError(f"element {x} outside [1, {n}]")
    size = len(elems)
    found = []
    for head in sorted(elems):
        e = head
        seen = set()
        for _ in range(size):
            if e not in elems or e in seen:
                break
            seen.add(e)
            e = wrap(e + m, n)
        else:
            found.append(APBlock(head, size))
    return found


@dataclass(frozen=True)
class APPartition:
    """A set of AP-blocks with one common difference, canonically ordered by head.

    Construction checks only local well-formedness (ranges, distinct heads);
    the exact-cover property is checked by validate_partition / require_valid
    so that broken partitions can still be built and reported on.
    """

    n: int
    difference: int
    blocks: tuple[APBlock, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if self.difference < 1:
            raise ValueError(f"difference must be positive, got {self.difference}")
        blocks = tuple(sorted(APBlock(int(h), int(l)) for h, l in self.blocks))
        if not blocks:
            raise ValueError("a partition needs at least one block")
        for b in blocks:
            if not 1 <= b.head <= self.n:
                raise ValueError(f"head {b.head} outside [1, {self.n}]")
            if b.length < 1:
                raise ValueError(f"length {b.length} must be positive")
        for a, b in zip(blocks, blocks[1:]):
            if a.head == b.head:
                raise InvalidPartitionError(f"duplicate head {a.head}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def rotated(self, offset: int) -> "APPartition":
        """The partition with every head shifted by offset, lengths kept."""
        return APPartition(
            self.n,
            self.difference,
            tuple(APBlock(wrap(b.head + offset, self.n), b.length) for b in self.blocks),
        )

    def __str__(self) -> str:
        return format_partition(self)


@dataclass(frozen=True)
class Violation:
    """First duplicated and first missing element of a failed cover check."""

    duplicated: int | None
    missing: int | None

    def __str__(self) -> str:
        parts = []
        if self.duplicated is not None:
            parts.append(f"element {self.duplicated} covered twice")
        if self.missing is not None:
            parts.append(f"element {self.missing} uncovered")
        return "; ".join(parts)


def validate_partition(p: APPartition) -> Violation | None:
    """None when the block underlying sets tile Z_n exactly, else the offences.

    A block walking onto an already-covered element (including a self
    overlap) shows up as a duplicated element.
    """
    counts = [0] * (p.n + 1)
    step = p.difference % p.n
    for head, length in p.blocks:
        e = head
        for _ in range(length):
            counts[e] += 1
            e += step
            if e > p.n:
                e -= p.n
    duplicated = next((i for i in range(1, p.n + 1) if counts[i] > 1), None)
    missing = next((i for i in range(1, p.n + 1) if counts[i] == 0), None)
    if duplicated is None and missing is None:
        return None
    return Violation(duplicated, missing)


def is_valid(p: APPartition) -> bool:
    return validate_partition(p) is None


def require_valid(p: APPartition) -> APPartition:
    violation = validate_partition(p)
    if violation is not None:
        raise InvalidPartitionError(f"invalid partition of Z_{p.n}: {violation}")
    return p


@dataclass(frozen=True)
class PartitionType:
    """Multiset signature of block sizes: parts ((1,4),(2,1),(3,2)) is 1^4,2^1,3^2."""

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        parts = tuple((int(s), int(k)) for s, k in self.parts)
        if not parts:
            raise ValueError("empty type")
        for s, k in parts:
            if s < 1:
                raise ValueError(f"size {s} must be positive")
            if k < 1:
                raise ValueError(f"multiplicity {k} must be positive (zero exponents are omitted)")
        for (a, _), (b, _) in zip(parts, parts[1:]):
            if a >= b:
                raise ValueError("sizes must be strictly increasing")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_sizes(cls, sizes: Iterable[int]) -> "PartitionType":
        counts = Counter(sizes)
        if not counts:
            raise ValueError("empty type")
        return cls(tuple(sorted(counts.items())))

    @classmethod
    def parse(cls, text: str) -> "PartitionType":
        """Parse the comma-separated grammar "1^4,2^1,3^2"."""
        parts = []
        for term in text.split(","):
            match = re.fullmatch(r"\s*(\d+)\^(\d+)\s*", term)
            if not match:
                raise FormatError(f"bad type term {term!r}; expected size^multiplicity")
            parts.append((int(match.group(1)), int(match.group(2))))
        try:
            return cls(tuple(parts))
        except ValueError as exc:
            raise FormatError(f"bad type {text!r}: {exc}") from None

    def __str__(self) -> str:
        return ",".join(f"{s}^{k}" for s, k in self.parts)

    @property
    def weight(self) -> int:
        return sum(s * k for s, k in self.parts)

    @property
    def block_count(self) -> int:
        return sum(k for _, k in self.parts)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(s for s, _ in self.parts)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(k for _, k in self.parts)

    @property
    def largest_size(self) -> int:
        return self.parts[-1][0]

    @property
    def is_mixed(self) -> bool:
        """True when the type has at least one singleton and one larger block."""
        return self.parts[0][0] == 1 and len(self.parts) >= 2


def type_of(p: APPartition) -> PartitionType:
    """The multiset signature of block lengths of a valid partition."""
    require_valid(p)
    return PartitionType.from_sizes(length for _, length in p.blocks)


def check_condition(t: PartitionType, m: int, m_prime: int = 1) -> bool:
    """Whether the singleton surplus of the type supports separation.

    The test is ceil(k1 / (k2+...+kr)) >= (max(m, m_prime) - 1) * (ir - 1),
    i.e. the singletons, split among the larger blocks, leave some run long
    enough to fill the gaps a block of the widest difference opens up.  Only
    mixed types (a singleton part plus a larger part) are supported.
    """
    if m < 1 or m_prime < 1:
        raise ValueError("differences must be positive")
    if not t.is_mixed:
        raise UnsupportedTypeError(
            f"unsupported type {t}: need at least one singleton and one larger block"
        )
    k1 = t.parts[0][1]
    rest = t.block_count - k1
    bound = (max(m, m_prime) - 1) * (t.largest_size - 1)
    return -(-k1 // rest) >= bound


_PARTITION_RE = re.compile(r"n=(\d+) m=(\d+) blocks=((?:\(\d+:\d+\))+)")
_BLOCK_RE = re.compile(r"\((\d+):(\d+)\)")


def format_partition(p: APPartition) -> str:
    """Canonical line: `n=<n> m=<m> blocks=(h:l)...` in increasing head order."""
    return f"n={p.n} m={p.difference} blocks=" + "".join(map(str, p.blocks))


def parse_partition(text: str, normalize: bool = False) -> APPartition:
    """Parse the canonical line format.

    Blocks must appear in increasing head order; pass normalize=True to
    accept a non-canonical line and reorder it.
    """
    match = _PARTITION_RE.fullmatch(text.strip())
    if not match:
        raise FormatError(f"not a canonical partition line: {text.strip()!r}")
    n, difference = int(match.group(1)), int(match.group(2))
    blocks = [APBlock(int(h), int(l)) for h, l in _BLOCK_RE.findall(match.group(3))]
    heads = [b.head for b in blocks]
    if heads != sorted(heads) and not normalize:
        raise FormatError(
            "blocks are not in increasing head order (pass normalize=True to reorder)"
        )
    return APPartition(n, difference, tuple(blocks))


def partition_to_json(p: APPartition) -> str:
    """Canonical structured form {n, m, blocks: [{head, len}, ...]}, exact integers."""
    return json.dumps(
        {
            "n": p.n,
            "m": p.difference,
            "blocks": [{"head": b.head, "len": b.length} for b in p.blocks],
        }
    )


def _exact_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError(f"{what} must be an exact integer, got {value!r}")
    return value


def partition_from_json(text: str, normalize: bool = False) -> APPartition:
    """Parse the structured form; rejects non-integer fields and, unless
    normalize=True, blocks out of increasing head order."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"bad JSON: {exc}") from None
    if not isinstance(obj, dict) or set(obj) != {"n", "m", "blocks"}:
        raise FormatError("expected an object with exactly the keys n, m, blocks")
    n = _exact_int(obj["n"], "n")
    difference = _exact_int(obj["m"], "m")
    raw = obj["blocks"]
    if not isinstance(raw, list):
        raise FormatError("blocks must be a list")
    blocks = []
    for entry in raw:
        if not isinstance(entry, dict) or set(entry) != {"head", "len"}:
            raise FormatError("each block must be an object with exactly the keys head, len")
        blocks.append(APBlock(_exact_int(entry["head"], "head"), _exact_int(entry["len"], "len")))
    heads = [b.head for b in blocks]
    if heads != sorted(heads) and not normalize:
        raise FormatError(
            "blocks are not in increasing head order (pass normalize=True to reorder)"
        )
    return APPartition(n, difference, tuple(blocks))
