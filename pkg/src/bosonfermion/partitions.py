"""Partitions, charged even-integer sequences, and the bijections between them.

Partitions are plain tuples of weakly decreasing positive integers; the empty
tuple is the empty partition.  A charged sequence is a semi-infinite strictly
increasing sequence of even integers that eventually agrees with the shifted
vacuum tail ``x_i = 2i + 2k``; ``k`` is its charge.  Only the finite head that
deviates from the tail is stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product


Partition = tuple[int, ...]
Box = tuple[int, int]  # (row, col), both 1-based

EMPTY: Partition = ()


def as_partition(parts) -> Partition:
    """Normalize an iterable of parts: drop trailing zeros, validate monotonicity."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for a, b in zip(p, p[1:]):
        if a < b:
            raise ValueError(f"parts are not weakly decreasing: {parts!r}")
    if p and p[-1] < 0:
        raise ValueError(f"negative part in {parts!r}")
    return p


def part(p: Partition, i: int) -> int:
    """The i-th part (1-based), zero beyond the last row."""
    return p[i - 1] if 1 <= i <= len(p) else 0


def size(p: Partition) -> int:
    return sum(p)


def dual(p: Partition) -> Partition:
    """Conjugate partition (transpose of the diagram)."""
    if not p:
        return ()
    return tuple(sum(1 for row in p if row >= j) for j in range(1, p[0] + 1))


def contains(outer: Partition, inner: Partition) -> bool:
    return all(part(outer, i + 1) >= v for i, v in enumerate(inner))


def content(box: Box) -> int:
    """Content col - row of a box."""
    row, col = box
    return col - row


def removable_corners(p: Partition) -> list[Box]:
    corners = []
    for i, row in enumerate(p):
        if row > part(p, i + 2):
            corners.append((i + 1, row))
    return corners


def addable_boxes(p: Partition) -> list[Box]:
    boxes = [(1, p[0] + 1)] if p else [(1, 1)]
    for i in range(1, len(p)):
        if p[i] < p[i - 1]:
            boxes.append((i + 1, p[i] + 1))
    if p:
        boxes.append((len(p) + 1, 1))
    return boxes


def remove_box(p: Partition, box: Box) -> Partition:
    row = box[0]
    return as_partition(p[: row - 1] + (p[row - 1] - 1,) + p[row:])


def add_box(p: Partition, box: Box) -> Partition:
    row = box[0]
    padded = p + (0,) * (row - len(p))
    return as_partition(padded[: row - 1] + (padded[row - 1] + 1,) + padded[row:])


def res_set(p: Partition) -> set[Partition]:
    """All partitions obtained by removing one removable corner box."""
    return {remove_box(p, b) for b in removable_corners(p)}


def ind_set(p: Partition) -> set[Partition]:
    """All partitions obtained by adding one addable box."""
    return {add_box(p, b) for b in addable_boxes(p)}


def added_box(smaller: Partition, larger: Partition) -> Box:
    """The unique box of ``larger`` not in ``smaller``; requires |larger| = |smaller|+1."""
    if size(larger) != size(smaller) + 1 or not contains(larger, smaller):
        raise ValueError(f"{larger} does not cover {smaller}")
    for i in range(len(larger)):
        if part(larger, i + 1) != part(smaller, i + 1):
            return (i + 1, larger[i])
    raise AssertionError("unreachable")


def union_columns(p: Partition, n: int) -> Partition:
    """Add one box to each of the first n rows (missing rows count as empty)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if len(p) > n:
        raise ValueError(f"{p} has more than {n} nonzero rows")
    return tuple(part(p, i) + 1 for i in range(1, n + 1))


def lambda_t(lam: Partition, n: int, t: int) -> Partition:
    """The t-th label of the length-n chain attached to ``lam``.

    For t = 0 this is ``lam`` with one box added to each of the n rows; for
    t >= 1 the (n-t+1)-th row is dropped, the rows above keep their extra box,
    and the rows below are left unchanged.
    """
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} rows")
    if not 0 <= t <= n:
        raise ValueError(f"t={t} out of range [0, {n}]")
    rows = [part(lam, i) for i in range(1, n + 1)]
    if t == 0:
        return as_partition([r + 1 for r in rows])
    head = [rows[i] + 1 for i in range(n - t)]
    tail = rows[n - t + 1:]
    return as_partition(head + tail)


def partitions_of(n: int):
    """Yield all partitions of n in descending lexicographic order."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    yield from rec(n, n)


def partitions_up_to(max_size: int):
    """All partitions of size 0..max_size."""
    for n in range(max_size + 1):
        yield from partitions_of(n)


def partitions_bounded(max_rows: int, max_size: int):
    """All partitions with at most ``max_rows`` rows and size at most ``max_size``."""
    for p in partitions_up_to(max_size):
        if len(p) <= max_rows:
            yield p


# ---------------------------------------------------------------------------
# strips

def add_horizontal_strips(p: Partition, m: int):
    """All partitions obtained from p by adding m boxes, no two in one column."""
    if m < 0:
        raise ValueError("strip size must be nonnegative")
    if m == 0:
        yield p
        return
    rows = len(p) + 1
    # row i may grow at most up to the original length of row i-1
    lows = [part(p, i) for i in range(1, rows + 1)]
    caps = [None] + [part(p, i) for i in range(1, rows)]

    def rec(i, remaining):
        if i > rows:
            if remaining == 0:
                yield ()
            return
        low = lows[i - 1]
        hi = remaining + low if caps[i - 1] is None else min(caps[i - 1], remaining + low)
        for val in range(low, hi + 1):
            for rest in rec(i + 1, remaining - (val - low)):
                yield (val,) + rest

    for raw in rec(1, m):
        yield as_partition(raw)


def add_vertical_strips(p: Partition, m: int):
    """All partitions obtained from p by adding m boxes, no two in one row."""
    seen = set()
    for q in add_horizontal_strips(dual(p), m):
        d = dual(q)
        if d not in seen:
            seen.add(d)
            yield d


def remove_horizontal_strips(p: Partition, m: int):
    """All partitions obtained from p by removing m boxes, no two in one column."""
    if m < 0:
        raise ValueError("strip size must be nonnegative")
    if m == 0:
        yield p
        return
    n = len(p)
    # row i may shrink down to the row below it
    def rec(i, remaining):
        if i > n:
            if remaining == 0:
                yield ()
            return
        low = max(part(p, i + 1), p[i - 1] - remaining)
        for val in range(p[i - 1], low - 1, -1):
            for rest in rec(i + 1, remaining - (p[i - 1] - val)):
                yield (val,) + rest

    for raw in rec(1, m):
        yield as_partition(raw)


def remove_vertical_strips(p: Partition, m: int):
    """All partitions obtained from p by removing m boxes, no two in one row."""
    seen = set()
    for q in remove_horizontal_strips(dual(p), m):
        d = dual(q)
        if d not in seen:
            seen.add(d)
            yield d


# ---------------------------------------------------------------------------
# charged sequences

@dataclass(frozen=True, order=True)
class ChargedSequence:
    """Strictly increasing even sequence equal to ``2i + 2k`` beyond its head.

    The stored head is minimal: trailing head entries that already match the
    vacuum tail are trimmed, so equality of values is equality of fields.
    """

    charge: int
    head: tuple[int, ...] = ()

    def __post_init__(self):
        for x in self.head:
            if x % 2 != 0:
                raise ValueError(f"odd entry {x} in {self.head}")
        for a, b in zip(self.head, self.head[1:]):
            if a >= b:
                raise ValueError(f"head not strictly increasing: {self.head}")
        m = len(self.head)
        if m and self.head[-1] >= 2 * (m + 1) + 2 * self.charge:
            raise ValueError(f"head {self.head} overlaps the charge-{self.charge} tail")
        if m and self.head[-1] == 2 * m + 2 * self.charge:
            raise ValueError(f"head {self.head} is not in canonical (minimal) form")

    @classmethod
    def of(cls, charge: int, entries) -> "ChargedSequence":
        """Build from the explicit leading values of the sequence, canonicalizing."""
        head = list(entries)
        while head and head[-1] == 2 * len(head) + 2 * charge:
            head.pop()
        return cls(charge, tuple(head))

    @classmethod
    def vacuum(cls, charge: int) -> "ChargedSequence":
        return cls(charge, ())

    def value(self, i: int) -> int:
        """The i-th entry, 1-based."""
        if i <= 0:
            raise IndexError(i)
        if i <= len(self.head):
            return self.head[i - 1]
        return 2 * i + 2 * self.charge

    def prefix(self, count: int) -> tuple[int, ...]:
        return tuple(self.value(i) for i in range(1, count + 1))

    @property
    def first_tail_value(self) -> int:
        return 2 * (len(self.head) + 1) + 2 * self.charge

    def __contains__(self, x: int) -> bool:
        if x % 2 != 0:
            return False
        return x in self.head or x >= self.first_tail_value

    def count_below(self, x: int) -> int:
        """Number of entries strictly less than x."""
        n = sum(1 for h in self.head if h < x)
        tail_count = (x - 2 * self.charge - 1) // 2 - len(self.head)
        return n + max(0, tail_count)

    def insert(self, x: int) -> tuple[int, "ChargedSequence"] | None:
        """Insert x, returning (number of entries below x, new sequence).

        Returns None when x is already present.  The new sequence has charge
        one lower.
        """
        if x % 2 != 0:
            raise ValueError(f"cannot insert odd value {x}")
        if x in self:
            return None
        n = self.count_below(x)
        head = sorted(self.head + (x,))
        return n, ChargedSequence.of(self.charge - 1, head)

    def remove(self, x: int) -> tuple[int, "ChargedSequence"] | None:
        """Remove x, returning (1-based position of x, new sequence).

        Returns None when x is absent.  The new sequence has charge one higher.
        """
        if x not in self:
            return None
        pos = self.count_below(x) + 1
        if x in self.head:
            head = [h for h in self.head if h != x]
        else:
            # x sits in the tail; materialize the gap
            gap_index = (x - 2 * self.charge) // 2
            head = list(self.head) + [
                2 * i + 2 * self.charge for i in range(len(self.head) + 1, gap_index)
            ]
        return pos, ChargedSequence.of(self.charge + 1, head)

    def shift(self, steps: int) -> "ChargedSequence":
        """Add 2*steps to every entry; charge moves by steps."""
        return ChargedSequence(self.charge + steps, tuple(h + 2 * steps for h in self.head))

    @property
    def energy(self) -> int:
        total = sum(2 * self.charge + 2 * (i + 1) - x for i, x in enumerate(self.head))
        assert total % 2 == 0
        return total // 2

    def display(self, extra: int = 2) -> str:
        shown = self.prefix(len(self.head) + extra)
        return "(" + ",".join(str(x) for x in shown) + ",...)"


def to_sequence(p: Partition) -> ChargedSequence:
    """The charge-0 sequence ``(2j - 2*dual(p)_j)`` indexed by the columns of p."""
    d = dual(p)
    return ChargedSequence.of(0, tuple(2 * (j + 1) - 2 * d[j] for j in range(len(d))))


def from_sequence(s: ChargedSequence) -> Partition:
    """Inverse of :func:`to_sequence`; defined on charge-0 sequences only."""
    if s.charge != 0:
        raise ValueError(f"sequence has charge {s.charge}, expected 0")
    cols = tuple(j - x // 2 for j, x in enumerate(s.head, start=1))
    return dual(as_partition(cols))


def energy(values, k: int | None = None) -> int:
    """Half the total deviation from the charge-k vacuum.

    ``values`` is either a ChargedSequence (k optional, must agree when given)
    or the explicit leading values of a sequence whose remaining entries are
    the charge-k tail.  Repeated values are allowed.
    """
    if isinstance(values, ChargedSequence):
        if k is not None and k != values.charge:
            raise ValueError(f"charge mismatch: {k} != {values.charge}")
        return values.energy
    if k is None:
        raise ValueError("charge is required for explicit value lists")
    vals = list(values)
    total = sum(2 * k + 2 * (i + 1) - x for i, x in enumerate(vals))
    if total % 2 != 0:
        raise ValueError(f"odd total deviation for {vals}")
    return total // 2


def normalize(values, k: int) -> tuple[int, ChargedSequence] | None:
    """Sort an explicit prefix into a charged sequence, tracking the sign.

    Returns ``(sign, sequence)`` where sign is the parity of the sorting
    permutation, or None when any value repeats (including collisions with
    the implied tail), which annihilates a fermionic wedge.
    """
    vals = [int(x) for x in values]
    for x in vals:
        if x % 2 != 0:
            raise ValueError(f"odd entry {x}")
    m = len(vals)
    top = max(vals, default=0)
    combined = vals + [2 * i + 2 * k for i in range(m + 1, (top - 2 * k) // 2 + 1)]
    if len(set(combined)) != len(combined):
        return None
    inversions = sum(
        1
        for i, j in product(range(len(combined)), repeat=2)
        if i < j and combined[i] > combined[j]
    )
    sign = -1 if inversions % 2 else 1
    return sign, ChargedSequence.of(k, sorted(combined))
