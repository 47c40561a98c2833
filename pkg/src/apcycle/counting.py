"""Exact closed-form counts for cycle dissections and constrained subsets.

Everything is arbitrary-precision integer arithmetic.  Each formula is
integral on its stated domain, so every division is performed exactly and a
nonzero remainder raises instead of rounding.
"""

from __future__ import annotations

from math import comb

from .core import PartitionType

__all__ = [
    "OutOfRegimeError",
    "cyclic_multinomial",
    "generalized_kaplansky",
    "kaplansky",
    "msun_count",
    "multinomial",
]


class OutOfRegimeError(ValueError):
    """Parameters violate the validity hypothesis of a counting formula."""


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"non-integral division {num}/{den} in an exact count")
    return q


def multinomial(counts) -> int:
    """(c1+...+cr)! / (c1! * ... * cr!) as an exact integer."""
    total = 0
    out = 1
    for c in counts:
        if c < 0:
            raise ValueError("negative multiplicity")
        total += c
        out *= comb(total, c)
    return out


def kaplansky(n: int, k: int) -> int:
    """Number of k-subsets of Z_n with no two elements cyclically adjacent.

    Equals n/(n-k) * C(n-k, k), valid for n >= 2k+1 when k >= 1; the empty
    selection gives 1 for k = 0.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return 1
    if n <= 2 * k:
        raise OutOfRegimeError(f"out of regime: kaplansky(n={n}, k={k}) needs n >= {2 * k + 1}")
    return _exact_div(n * comb(n - k, k), n - k)


def generalized_kaplansky(n: int, p: int, k: int) -> int:
    """Number of k-subsets of Z_n whose pairwise directed distances all exceed p.

    Equals n/(n-pk) * C(n-pk, k), valid for n >= pk+1.
    """
    if p < 1:
        raise ValueError("p must be positive")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if n < p * k + 1:
        raise OutOfRegimeError(
            f"out of regime: generalized_kaplansky(n={n}, p={p}, k={k}) needs n >= {p * k + 1}"
        )
    if k == 0:
        return 1
    return _exact_div(n * comb(n - p * k, k), n - p * k)


def msun_count(n: int, m: int, p: int, k: int) -> int:
    """Number of k-subsets of Z_n avoiding the directed differences m, 2m, ..., pm.

    The value is independent of m and equals generalized_kaplansky(n, p, k);
    m only sharpens the validity regime to n >= mpk+1.
    """
    if m < 1 or p < 1 or k < 1:
        raise ValueError("m, p, k must be positive")
    if n < m * p * k + 1:
        raise OutOfRegimeError(
            f"out of regime: msun_count(n={n}, m={m}, p={p}, k={k}) needs n >= {m * p * k + 1}"
        )
    return generalized_kaplansky(n, p, k)


def cyclic_multinomial(n: int, t: PartitionType) -> int:
    """Number of dissections of an n-cycle of the given type.

    Equals n/(k1+...+kr) * (k1+...+kr choose k1, ..., kr); the type weight
    must be n.  The product is formed first and divided last so that every
    intermediate stays integral.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if t.weight != n:
        raise ValueError(f"type weight {t.weight} does not match n={n}")
    return _exact_div(n * multinomial(t.multiplicities), t.block_count)
