"""Pure-Python enumeration kernels.

Reference implementation of the backtracking search over AP-partitions.
The compiled extension (_ckernels) follows this file statement for
statement and must produce identical output, node counts included.

The search branches on the smallest uncovered element x (natural order
1 < 2 < ... < n).  For each block size s still available in the type
multiset, x can sit at any offset j = 0, 1, ..., s-1 inside the block, so
the candidate block has head x - j*m; it is placed when its whole walk is
uncovered (a walk that revisits one of its own elements fails the same
check).  Within a finished partition the block covering the smallest
uncovered element is unique, so every partition is generated exactly once,
and the fixed iteration order (sizes ascending, then j ascending) makes the
output order deterministic.

A node is one entry into the branching step, leaves included.  When
max_nodes is positive and the node count passes it, the search unwinds and
reports truncation; partial results are returned as-is.
"""

from __future__ import annotations

__all__ = ["count_partitions", "list_partitions"]


def _run(n, m, sizes, mults, max_nodes, collect):
    m_red = m % n
    covered = bytearray(n + 1)
    remaining = list(mults)
    nsizes = len(sizes)
    heads = []
    lens = []
    out = [] if collect else None
    nodes = 0
    count = 0
    truncated = False

    def rec(uncovered, lo):
        nonlocal nodes, count, truncated
        nodes += 1
        if max_nodes and nodes > max_nodes:
            truncated = True
            return
        if uncovered == 0:
            count += 1
            if collect:
                out.append(tuple(sorted(zip(heads, lens))))
            return
        x = lo
        while covered[x]:
            x += 1
        for si in range(nsizes):
            if remaining[si] == 0:
                continue
            s = sizes[si]
            off = 0
            for _j in range(s):
                head = x - off
                if head < 1:
                    head += n
                off += m_red
                if off >= n:
                    off -= n
                e = head
                placed = 0
                for _ in range(s):
                    if covered[e]:
                        break
                    covered[e] = 1
                    placed += 1
                    e += m_red
                    if e > n:
                        e -= n
                if placed == s:
                    remaining[si] -= 1
                    heads.append(head)
                    lens.append(s)
                    rec(uncovered - s, x + 1)
                    heads.pop()
                    lens.pop()
                    remaining[si] += 1
                e = head
                for _ in range(placed):
                    covered[e] = 0
                    e += m_red
                    if e > n:
                        e -= n
                if truncated:
                    return

    rec(n, 1)
    return count, out, nodes, truncated


def count_partitions(n, m, sizes, mults, max_nodes=0):
    """(count, nodes, truncated) for the AP-partition search, no materialization."""
    count, _, nodes, truncated = _run(n, m, tuple(sizes), tuple(mults), max_nodes, False)
    return count, nodes, truncated


def list_partitions(n, m, sizes, mults, max_nodes=0):
    """(partitions, nodes, truncated); each partition is a tuple of (head, length)
    pairs sorted by head, and partitions appear in search order."""
    _, out, nodes, truncated = _run(n, m, tuple(sizes), tuple(mults), max_nodes, True)
    return out, nodes, truncated
