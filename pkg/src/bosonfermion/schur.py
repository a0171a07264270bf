"""The bosonic Fock space on the Schur basis.

Vectors are finite rational combinations of partitions.  The generators add
or remove a single box; their divided powers add or remove horizontal and
vertical strips, enumerated directly on diagrams.
"""

from __future__ import annotations

from .formal import FormalSum
from .partitions import (
    add_horizontal_strips,
    add_vertical_strips,
    as_partition,
    ind_set,
    remove_horizontal_strips,
    remove_vertical_strips,
    res_set,
)


class SchurVector(FormalSum):
    """Finite rational linear combination of partitions."""

    def __init__(self, terms=None):
        cleaned = None
        if terms is not None:
            items = terms.items() if isinstance(terms, dict) else terms
            cleaned = [(as_partition(k), c) for k, c in items]
        super().__init__(cleaned)

    def to_json(self):
        return [
            {
                "partition": list(k),
                "coefficient": f"{c.numerator}/{c.denominator}" if c.denominator != 1 else str(c.numerator),
            }
            for k, c in self.sorted_items()
        ]


def schur_basis(p) -> SchurVector:
    return SchurVector.basis(as_partition(p))


def apply_q(v: SchurVector) -> SchurVector:
    """Remove one box in all ways; the empty partition maps to zero."""
    return v.apply(lambda p: [(1, q) for q in sorted(res_set(p))])


def apply_p(v: SchurVector) -> SchurVector:
    """Add one box in all ways."""
    return v.apply(lambda p: [(1, q) for q in sorted(ind_set(p))])


def apply_p_row(m: int, v: SchurVector) -> SchurVector:
    """Add a horizontal m-strip (no two new boxes in one column); m = 0 is the identity."""
    if m == 0:
        return v
    return v.apply(lambda p: [(1, q) for q in add_horizontal_strips(p, m)])


def apply_p_col(m: int, v: SchurVector) -> SchurVector:
    """Add a vertical m-strip (no two new boxes in one row); m = 0 is the identity."""
    if m == 0:
        return v
    return v.apply(lambda p: [(1, q) for q in add_vertical_strips(p, m)])


def apply_q_row(n: int, v: SchurVector) -> SchurVector:
    """Remove a horizontal n-strip in all ways; n = 0 is the identity."""
    if n == 0:
        return v
    return v.apply(lambda p: [(1, q) for q in remove_horizontal_strips(p, n)])


def apply_q_col(n: int, v: SchurVector) -> SchurVector:
    """Remove a vertical n-strip in all ways; n = 0 is the identity."""
    if n == 0:
        return v
    return v.apply(lambda p: [(1, q) for q in remove_vertical_strips(p, n)])
