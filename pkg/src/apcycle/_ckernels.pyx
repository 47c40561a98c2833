# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled enumeration kernels.

Contract and traversal order are identical to _pykernels; see that module
for the algorithm notes.  Node counts, output order and truncation behavior
must stay bit-for-bit equal between the two implementations.
"""

import array

from cpython cimport array


cdef class _Search:
    cdef int n, m_red, nsizes, depth
    cdef unsigned long long max_nodes, nodes, count
    cdef bint truncated, collect
    cdef unsigned char[::1] covered
    cdef int[::1] sizes
    cdef int[::1] remaining
    cdef int[::1] bheads
    cdef int[::1] blens
    cdef list out

    def __init__(self, int n, int m, sizes, mults, unsigned long long max_nodes, bint collect):
        self.n = n
        self.m_red = m % n
        self.nsizes = len(sizes)
        self.max_nodes = max_nodes
        self.nodes = 0
        self.count = 0
        self.truncated = False
        self.collect = collect
        self.depth = 0
        self.covered = bytearray(n + 1)
        self.sizes = array.array("i", sizes)
        self.remaining = array.array("i", mults)
        nblocks = sum(mults)
        self.bheads = array.array("i", bytes(4 * nblocks))
        self.blens = array.array("i", bytes(4 * nblocks))
        self.out = [] if collect else None

    cdef void rec(self, int uncovered, int lo) except *:
        cdef int x, si, s, j, off, head, e, placed, i
        self.nodes += 1
        if self.max_nodes and self.nodes > self.max_nodes:
            self.truncated = True
            return
        if uncovered == 0:
            self.count += 1
            if self.collect:
                part = [(self.bheads[i], self.blens[i]) for i in range(self.depth)]
                part.sort()
                self.out.append(tuple(part))
            return
        x = lo
        while self.covered[x]:
            x += 1
        for si in range(self.nsizes):
            if self.remaining[si] == 0:
                continue
            s = self.sizes[si]
            off = 0
            for j in range(s):
                head = x - off
                if head < 1:
                    head += self.n
                off += self.m_red
                if off >= self.n:
                    off -= self.n
                e = head
                placed = 0
                while placed < s:
                    if self.covered[e]:
                        break
                    self.covered[e] = 1
                    placed += 1
                    e += self.m_red
                    if e > self.n:
                        e -= self.n
                if placed == s:
                    self.remaining[si] -= 1
                    self.bheads[self.depth] = head
                    self.blens[self.depth] = s
                    self.depth += 1
                    self.rec(uncovered - s, x + 1)
                    self.depth -= 1
                    self.remaining[si] += 1
                e = head
                for i in range(placed):
                    self.covered[e] = 0
                    e += self.m_red
                    if e > self.n:
                        e -= self.n
                if self.truncated:
                    return


def count_partitions(int n, int m, sizes, mults, unsigned long long max_nodes=0):
    """(count, nodes, truncated) for the AP-partition search, no materialization."""
    cdef _Search search = _Search(n, m, list(sizes), list(mults), max_nodes, False)
    search.rec(n, 1)
    return int(search.count), int(search.nodes), bool(search.truncated)


def list_partitions(int n, int m, sizes, mults, unsigned long long max_nodes=0):
    """(partitions, nodes, truncated); each partition is a tuple of (head, length)
    pairs sorted by head, and partitions appear in search order."""
    cdef _Search search = _Search(n, m, list(sizes), list(mults), max_nodes, True)
    search.rec(n, 1)
    return search.out, int(search.nodes), bool(search.truncated)
