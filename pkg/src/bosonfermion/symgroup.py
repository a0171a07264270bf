"""Symmetric group irreducibles in the rescaled content eigenbasis.

Basis vectors are indexed by standard tableaux, simultaneous eigenvectors of
the Jucys-Murphy elements.  Each adjacent transposition acts through the
content difference d of the swapped entries: diagonally by 1/d when the swap
is not standard, and otherwise by

    s . v_T  =  (1/d) v_T + ((d-1)/d) v_{T'},      T' = swapped tableau,

after rescaling each basis vector by a constant c_T normalized to 1 on the
row-major filling.  The module also computes the rescaling constant h
attached to each box-adding edge and the structure constants of the
restriction map on projectives, both in closed form and from first
principles (the oracle).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .partitions import (
    Partition,
    added_box,
    add_box,
    as_partition,
    content,
    dual,
    ind_set,
    removable_corners,
    remove_box,
)
from .ratmat import RationalMatrix, solve_in_span

LAM_BRANCH = "lam"
NU_BRANCH = "nu"


@dataclass(frozen=True)
class StandardTableau:
    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def position(self, value: int) -> tuple[int, int]:
        for r, row in enumerate(self.rows, start=1):
            for c, entry in enumerate(row, start=1):
                if entry == value:
                    return (r, c)
        raise KeyError(value)

    def content_vector(self) -> tuple[int, ...]:
        n = sum(self.shape)
        pos = {}
        for r, row in enumerate(self.rows, start=1):
            for c, entry in enumerate(row, start=1):
                pos[entry] = c - r
        return tuple(pos[v] for v in range(1, n + 1))

    def with_entry(self, box: tuple[int, int], value: int) -> "StandardTableau":
        r = box[0]
        rows = [list(row) for row in self.rows]
        if r - 1 < len(rows):
            rows[r - 1].append(value)
        else:
            rows.append([value])
        return StandardTableau(add_box(self.shape, box), tuple(tuple(row) for row in rows))

    def swap(self, i: int) -> "StandardTableau":
        rows = tuple(
            tuple(i + 1 if e == i else i if e == i + 1 else e for e in row) for row in self.rows
        )
        return StandardTableau(self.shape, rows)


@lru_cache(maxsize=None)
def tableaux(shape: Partition) -> tuple[StandardTableau, ...]:
    """All standard tableaux of the shape, largest content vector first."""
    shape = as_partition(shape)
    if not shape:
        return (StandardTableau((), ()),)
    n = sum(shape)
    out = []
    for corner in removable_corners(shape):
        for t in tableaux(remove_box(shape, corner)):
            out.append(t.with_entry(corner, n))
    return tuple(sorted(out, key=lambda t: t.content_vector(), reverse=True))


def row_filling(shape: Partition) -> StandardTableau:
    """The tableau filled 1..n left to right along consecutive rows."""
    shape = as_partition(shape)
    rows = []
    next_entry = 1
    for length in shape:
        rows.append(tuple(range(next_entry, next_entry + length)))
        next_entry += length
    return StandardTableau(shape, tuple(rows))


def _index_of(shape: Partition) -> dict[StandardTableau, int]:
    return {t: i for i, t in enumerate(tableaux(shape))}


def _length(t: StandardTableau) -> int:
    # Coxeter length of the permutation carrying the row-major filling to t
    base = row_filling(t.shape)
    boxes = [(r, c) for r, row in enumerate(base.rows, start=1) for c in range(1, len(row) + 1)]
    word = [t.rows[r - 1][c - 1] for (r, c) in boxes]
    return sum(1 for a in range(len(word)) for b in range(a + 1, len(word)) if word[a] > word[b])


@lru_cache(maxsize=None)
def _scale_table(shape: Partition) -> dict[StandardTableau, Fraction]:
    """Rescaling constants, checked for independence of the defining path."""
    all_t = tableaux(shape)
    lengths = {t: _length(t) for t in all_t}
    table: dict[StandardTableau, Fraction] = {row_filling(shape): Fraction(1)}
    n = sum(shape)
    for t in sorted(all_t, key=lambda t: lengths[t]):
        for i in range(1, n):
            r1, c1 = t.position(i)
            r2, c2 = t.position(i + 1)
            if r1 == r2 or c1 == c2:
                continue
            other = t.swap(i)
            if lengths[other] != lengths[t] + 1:
                continue
            d = (c2 - r2) - (c1 - r1)
            value = Fraction(d, d - 1) * table[t]
            if other in table:
                if table[other] != value:
                    raise ValueError(f"inconsistent rescaling constants for {other}")
            else:
                table[other] = value
    assert len(table) == len(all_t)
    return table


def c_scale(t: StandardTableau) -> Fraction:
    return _scale_table(as_partition(t.shape))[t]


@lru_cache(maxsize=None)
def _rep_rows(i: int, shape: Partition) -> tuple[tuple[Fraction, ...], ...]:
    ts = tableaux(shape)
    index = _index_of(shape)
    size = len(ts)
    rows = [[Fraction(0)] * size for _ in range(size)]
    for t_idx, t in enumerate(ts):
        r1, c1 = t.position(i)
        r2, c2 = t.position(i + 1)
        d = (c2 - r2) - (c1 - r1)
        rows[t_idx][t_idx] = Fraction(1, d)
        if r1 != r2 and c1 != c2:
            rows[t_idx][index[t.swap(i)]] = Fraction(d - 1, d)
    return tuple(tuple(row) for row in rows)


def rep_action(i: int, shape) -> RationalMatrix:
    """Matrix of the i-th adjacent transposition in the rescaled basis.

    Row t holds the expansion of the image of the t-th basis vector, so
    composite actions multiply on the right.
    """
    shape = as_partition(shape)
    n = sum(shape)
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for n={n}")
    return RationalMatrix(_rep_rows(i, shape))


def f_map(lam, mu) -> RationalMatrix:
    """Inclusion sending a tableau of lam to its extension by the next entry.

    Rows are indexed by tableaux of lam, columns by tableaux of mu.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if mu not in ind_set(lam):
        raise ValueError(f"{mu} does not cover {lam}")
    box = added_box(lam, mu)
    n = sum(mu)
    index = _index_of(mu)
    src = tableaux(lam)
    rows = [[Fraction(0)] * len(index) for _ in src]
    for t_idx, t in enumerate(src):
        rows[t_idx][index[t.with_entry(box, n)]] = Fraction(1)
    return RationalMatrix(rows)


def _flatten(m: RationalMatrix) -> list[Fraction]:
    return [x for row in m.data for x in row]


def _composite(lam1, lam, mu) -> RationalMatrix:
    return f_map(lam1, lam) @ f_map(lam, mu)


def _validate_path(lam1, lam, mu):
    lam1, lam, mu = as_partition(lam1), as_partition(lam), as_partition(mu)
    if lam not in ind_set(lam1) or mu not in ind_set(lam):
        raise ValueError(f"{lam1} -> {lam} -> {mu} is not a path of single box additions")
    return lam1, lam, mu


def square_coeffs(lam1, lam, nu, mu) -> tuple[Fraction, Fraction]:
    """Decompose the swapped composite inclusion over the two sides of a square.

    Returns (alpha, beta) with  s . (f through lam)  =  alpha * (f through lam)
    + beta * (f through nu), solved exactly on the composed matrices.
    """
    lam1, lam, mu = _validate_path(lam1, lam, mu)
    nu = as_partition(nu)
    if nu == lam or nu not in ind_set(lam1) or mu not in ind_set(nu):
        raise ValueError(f"{lam1} -> {lam},{nu} -> {mu} is not a square")
    f_through_lam = _composite(lam1, lam, mu)
    f_through_nu = _composite(lam1, nu, mu)
    swapped = f_through_lam @ rep_action(sum(mu) - 1, mu)
    coeffs = solve_in_span(
        [_flatten(f_through_lam), _flatten(f_through_nu)], _flatten(swapped)
    )
    if coeffs is None:
        raise ValueError("swapped composite is not in the span of the square composites")
    return coeffs[0], coeffs[1]


def h_coeff(lam1, lam) -> Fraction:
    """Rescaling constant of the edge adding one box to lam1.

    With the new box in row t+1 and column s+1, the value is a signed ratio
    of products over the boxes directly above and directly to the left.
    """
    lam1, lam = as_partition(lam1), as_partition(lam)
    if lam not in ind_set(lam1):
        raise ValueError(f"{lam} does not cover {lam1}")
    row, col = added_box(lam1, lam)
    s, t = col - 1, row - 1
    arm = Fraction(1)
    for i in range(1, t + 1):
        arm *= lam[i - 1] - col + t + 1 - i
    leg = Fraction(1)
    cols = dual(lam)
    for j in range(1, s + 1):
        leg *= cols[j - 1] - row + s + 2 - j
    return Fraction(-1 if s % 2 else 1) * arm / leg


def _classify(lam1, lam, mu):
    b1 = added_box(lam1, lam)
    b2 = added_box(lam, mu)
    two_dim = b1[0] != b2[0] and b1[1] != b2[1]
    return b1, b2, two_dim


def a_coeff(lam1, lam, mu, branch: str) -> Fraction:
    """Structure constant of the restriction map, in closed ratio form.

    In the square case the nu branch is 1 and the lam branch is the h ratio
    divided by the content difference d; in the degenerate (domino) case the
    sign is +1 for a horizontal and -1 for a vertical domino.
    """
    lam1, lam, mu = _validate_path(lam1, lam, mu)
    b1, b2, two_dim = _classify(lam1, lam, mu)
    if branch == NU_BRANCH:
        if not two_dim:
            raise ValueError("no second branch: the added boxes form a domino")
        return Fraction(1)
    if branch != LAM_BRANCH:
        raise ValueError(f"unknown branch {branch!r}")
    ratio = h_coeff(lam, mu) / h_coeff(lam1, lam)
    if two_dim:
        return ratio / (content(b2) - content(b1))
    eps = 1 if b1[0] == b2[0] else -1
    return eps * ratio


def a_closed_expanded(lam1, lam, mu) -> Fraction:
    """Fully expanded product form of the lam branch coefficient.

    Valid only for the configuration with the first added box strictly above
    and strictly to the right of the second one.
    """
    lam1, lam, mu = _validate_path(lam1, lam, mu)
    b1, b2, two_dim = _classify(lam1, lam, mu)
    if not two_dim or not (b1[0] < b2[0] and b1[1] > b2[1]):
        raise ValueError("expanded form requires the first box at the top right of the second")
    s1, t1 = b2[1] - 1, b1[0] - 1
    s2 = b1[1] - b2[1] - 1
    t2 = b2[0] - b1[0] - 1
    cols = dual(mu)
    xs = [mu[i - 1] - (s1 + s2 + 2) for i in range(1, t1 + 1)]
    zs = [mu[t1 + 1 + i - 1] - (s1 + 1) for i in range(1, t2 + 1)]
    zbars = [cols[s1 + 1 + j - 1] - (t1 + 1) for j in range(1, s2 + 1)]
    ybars = [cols[j - 1] - (t1 + t2 + 2) for j in range(1, s1 + 1)]
    value = Fraction(-1 if s2 % 2 else 1) * (s2 + t2 + 2)
    for j, y in enumerate(ybars, start=1):
        value *= Fraction(y + s1 + s2 + t2 - j + 4, y + s1 - j + 2)
    for i, x in enumerate(xs, start=1):
        value *= Fraction(x + s2 + t2 + t1 - i + 3, x + t1 - i + 1)
    for j, z in enumerate(zbars, start=1):
        value *= z + s2 - j + 2
    for i, z in enumerate(zs, start=1):
        value *= z + t2 - i + 1
    return value


def a_oracle(lam1, lam, mu, branch: str) -> Fraction:
    """Structure constant recomputed from first principles.

    Builds the composed inclusion matrices, acts by the adjacent swap on the
    target module, decomposes exactly, and rescales by the h ratio.  The
    closed forms above are never consulted.
    """
    lam1, lam, mu = _validate_path(lam1, lam, mu)
    b1, b2, two_dim = _classify(lam1, lam, mu)
    if branch not in (LAM_BRANCH, NU_BRANCH):
        raise ValueError(f"unknown branch {branch!r}")
    if branch == NU_BRANCH and not two_dim:
        raise ValueError("no second branch: the added boxes form a domino")
    f_through_lam = _composite(lam1, lam, mu)
    swapped = f_through_lam @ rep_action(sum(mu) - 1, mu)
    h_base = h_coeff(lam1, lam)
    if two_dim:
        nu = add_box(lam1, b2)
        f_through_nu = _composite(lam1, nu, mu)
        coeffs = solve_in_span(
            [_flatten(f_through_lam), _flatten(f_through_nu)], _flatten(swapped)
        )
        if coeffs is None:
            raise ValueError("swapped composite escaped the span of the square composites")
        alpha, beta = coeffs
        if branch == LAM_BRANCH:
            return alpha * h_coeff(lam, mu) / h_base
        return beta * h_coeff(nu, mu) / h_base
    coeffs = solve_in_span([_flatten(f_through_lam)], _flatten(swapped))
    if coeffs is None:
        raise ValueError("swapped composite is not proportional to the composite")
    return coeffs[0] * h_coeff(lam, mu) / h_base
