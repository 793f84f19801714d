"""Pure-Python kernel: residue counts of a Z/4 quadratic form."""

from __future__ import annotations

from typing import Sequence


def residue_counts(rows: Sequence[int], phi: Sequence[int]) -> tuple[int, int, int, int]:
    """Count x in (Z/2)^b by the value of phi(x) mod 4.

    ``rows[j]`` is row j of the bilinear form as a bit mask. Vectors are
    visited in Gray-code order, so each step flips one basis bit j and
    updates phi by phi[j] + 2·B(x, e_j).
    """
    b = len(rows)
    counts = [1, 0, 0, 0]
    x = 0
    value = 0
    for i in range(1, 1 << b):
        j = (i & -i).bit_length() - 1
        value = (value + phi[j] + 2 * ((x & rows[j]).bit_count() & 1)) & 3
        x ^= 1 << j
        counts[value] += 1
    return counts[0], counts[1], counts[2], counts[3]
