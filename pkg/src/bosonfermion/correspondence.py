"""Coefficient verification for the box-removal complex.

Tensoring the removal complex against the projective labelled by a partition
collapses, for each column index of the partition, to copies of the same
projective in two neighbouring degrees plus one extra projective for every
removable corner.  The differential between the repeated copies is the
factorial matrix C below; it is nonsingular, with determinant given by a
Cauchy-type closed form, and inverting it against the corner column yields
the coefficients named a-tilde here.  The module solves that system exactly
and checks the resulting coefficients against the representation-theoretic
values from :mod:`bosonfermion.symgroup`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .partitions import (
    Partition,
    added_box,
    as_partition,
    dual,
    part,
    res_set,
    to_sequence,
)
from .ratmat import RationalMatrix, format_fraction
from .symgroup import LAM_BRANCH, NU_BRANCH, a_coeff, a_oracle


def inv_factorial(s: int) -> Fraction:
    """1/s!, with the convention that the reciprocal of a negative factorial is zero."""
    return Fraction(0) if s < 0 else Fraction(1, factorial(s))


def f_sum(s: int, t: int) -> Fraction:
    """Alternating factorial sum, by its defining expression."""
    if t < 1:
        raise ValueError("t must be at least 1")
    total = Fraction(0)
    for j in range(t):
        e = s + t - 1 - j
        term = inv_factorial(e) * inv_factorial(j)
        total += -term if e % 2 else term
    return total


def f_closed(s: int, t: int) -> Fraction:
    """Closed form of :func:`f_sum`."""
    if t < 1:
        raise ValueError("t must be at least 1")
    if s <= 0:
        return Fraction(1) if t + s == 1 else Fraction(0)
    sign = -1 if s % 2 else 1
    return Fraction(sign, factorial(s - 1) * factorial(t - 1) * (s + t - 1))


def cauchy_det(a, b) -> Fraction:
    """Closed-form determinant of the matrix with entries 1/(a_i + b_j)."""
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    if len(a) != len(b):
        raise ValueError("index lists must have equal length")
    denom = Fraction(1)
    for x in a:
        for y in b:
            s = x + y
            if s == 0:
                raise ValueError(f"singular denominator: {x} + {y} = 0")
            denom *= s
    numer = Fraction(1)
    k = len(a)
    for i in range(k):
        for j in range(i + 1, k):
            numer *= (a[i] - a[j]) * (b[i] - b[j])
    return numer / denom


def _padded_dual(lam: Partition, k: int) -> list[int]:
    cols = dual(lam)
    if k < len(cols):
        raise ValueError(f"k={k} is smaller than the {len(cols)} columns of {lam}")
    return [part(cols, j) for j in range(1, k + 1)]


def matrix_c(lam, k: int) -> RationalMatrix:
    """The k x k factorial matrix of the collapsed differential."""
    lam = as_partition(lam)
    cols = _padded_dual(lam, k)
    data = [
        [inv_factorial(i - (-cols[j - 1] + j)) for j in range(1, k + 1)]
        for i in range(1, k + 1)
    ]
    return RationalMatrix(data)


def matrix_b(k: int) -> RationalMatrix:
    """Unitriangular matrix with alternating inverse factorials below the diagonal."""
    if k < 1:
        raise ValueError("k must be positive")
    data = []
    for i in range(1, k + 1):
        row = []
        for j in range(1, k + 1):
            if i >= j:
                v = inv_factorial(i - j)
                row.append(-v if (i - j) % 2 else v)
            else:
                row.append(Fraction(0))
        data.append(row)
    return RationalMatrix(data)


def matrix_a_closed(lam, k: int) -> RationalMatrix:
    """Closed form of the product of :func:`matrix_b` and :func:`matrix_c`."""
    lam = as_partition(lam)
    cols = _padded_dual(lam, k)
    data = []
    for i in range(1, k + 1):
        row = []
        for j in range(1, k + 1):
            e = cols[j - 1] - j
            if e >= 0:
                sign = 1 if (i + 1) % 2 == 0 else -1
                row.append(Fraction(sign, factorial(e) * factorial(i - 1) * (e + i)))
            else:
                row.append(Fraction(1 if i == j - cols[j - 1] else 0))
        data.append(row)
    return RationalMatrix(data)


def det_a_closed(lam, k: int) -> Fraction:
    """Closed-form determinant of :func:`matrix_a_closed` (equals det of C).

    Unit columns are expanded away; the remaining block is diagonal scalings
    of a Cauchy matrix on the row indices and the shifted column counts, so
    the determinant is a signed ratio of factorials and Vandermonde products.
    """
    lam = as_partition(lam)
    cols = _padded_dual(lam, k)
    p = sum(1 for j in range(1, k + 1) if cols[j - 1] - j >= 0)
    unit_rows = {j - cols[j - 1] for j in range(p + 1, k + 1)}
    idx = [i for i in range(1, k + 1) if i not in unit_rows]
    shifts = [cols[j - 1] - j for j in range(1, p + 1)]
    v = sum(i + 1 for i in idx) + sum(cols[j - 1] for j in range(p + 1, k + 1))
    value = Fraction(-1 if v % 2 else 1)
    for e in shifts:
        value /= factorial(e)
    for i in idx:
        value /= factorial(i - 1)
    for i in idx:
        for e in shifts:
            value /= e + i
    for x in range(len(shifts)):
        for y in range(x + 1, len(shifts)):
            value *= shifts[x] - shifts[y]
    for x in range(len(idx)):
        for y in range(x + 1, len(idx)):
            value *= idx[x] - idx[y]
    return value


# ---------------------------------------------------------------------------
# the collapsed complex

@dataclass
class WtqComplex:
    """Collapsed form of the removal complex tensored against one projective.

    ``components`` lists the degree-zero summands by increasing window index:
    one repeated copy for each column of the partition and one corner copy
    for each removable corner.  Degree one carries ``k`` repeated copies; the
    repeated-to-repeated differential is ``c_matrix`` and each corner copy
    maps in through its ``corner_columns`` vector of inverse factorials.
    """

    lam: Partition
    k: int
    # (window index, "copy"|"corner", label, j for copies / l for corners)
    components: list[tuple[int, str, Partition, int]]
    c_matrix: RationalMatrix
    corner_columns: dict[int, list[Fraction]]  # keyed by corner column index l

    def quotient_labels(self) -> list[Partition]:
        return [label for (_, kind, label, _) in self.components if kind == "corner"]

    def degree0_labels(self) -> list[Partition]:
        return [label for (_, _, label, _) in self.components]

    def arrows_for(self, component) -> list[Fraction]:
        """Differential coefficients from one degree-0 summand into the k copies."""
        _, kind, _, ref = component
        if kind == "copy":
            return self.c_matrix.column(ref - 1)
        return list(self.corner_columns[ref])

    def to_json(self):
        return {
            "partition": list(self.lam),
            "copies": self.k,
            "degree0": [
                {"window": i, "kind": kind, "label": list(label), "index": ref}
                for (i, kind, label, ref) in self.components
            ],
            "c_matrix": self.c_matrix.to_strings(),
            "corner_columns": {
                str(l): [format_fraction(x) for x in col]
                for l, col in sorted(self.corner_columns.items())
            },
        }


def wtq_tensor(lam) -> WtqComplex:
    """Classify the window indices and assemble the collapsed differential."""
    lam = as_partition(lam)
    cols = dual(lam)
    k = len(cols)
    if k == 0:
        return WtqComplex(lam, 0, [], RationalMatrix([]), {})
    copy_index = {-cols[j - 1] + j: j for j in range(1, k + 1)}
    corner_index = {}
    for l in range(1, k + 1):
        if cols[l - 1] > part(cols, l + 1):
            corner_index[-cols[l - 1] + l + 1] = l
    components = []
    corner_columns = {}
    for i in range(-cols[0] + 1, k + 1):
        if i in copy_index:
            components.append((i, "copy", lam, copy_index[i]))
        elif i in corner_index:
            l = corner_index[i]
            smaller_cols = tuple(c - 1 if j == l - 1 else c for j, c in enumerate(cols))
            label = dual(as_partition(smaller_cols))
            components.append((i, "corner", label, l))
            corner_columns[l] = [inv_factorial(row - i) for row in range(1, k + 1)]
    return WtqComplex(lam, k, components, matrix_c(lam, k), corner_columns)


def g_vector(lam, lam1, copies: int | None = None) -> list[Fraction]:
    """Unique solution of the chain-map condition for the corner at lam1.

    The right-hand side carries inverse factorials measured from the corner's
    window index; nonsingularity of C makes the solution unique.  ``copies``
    may enlarge the window past the column count; the added columns belong to
    contractible pairs of the untruncated complex and leave the lower
    components unchanged.
    """
    lam, lam1 = as_partition(lam), as_partition(lam1)
    if lam1 not in res_set(lam):
        raise ValueError(f"{lam1} is not obtained from {lam} by removing a corner")
    cols = dual(lam)
    k = len(cols) if copies is None else copies
    if k < len(cols):
        raise ValueError(f"copies={copies} is smaller than the column count of {lam}")
    j1 = added_box(lam1, lam)[1]
    anchor = -cols[j1 - 1] + j1 + 1
    rhs = [-inv_factorial(i - anchor) for i in range(1, k + 1)]
    return matrix_c(lam, k).solve(rhs)


def tilde_a(lam1, lam, mu, branch: str) -> Fraction:
    """Coefficient read off from the collapsed complex.

    The second branch is structurally 1; the first is the component of the
    linear solve at the column of the box added last.
    """
    lam1, lam, mu = as_partition(lam1), as_partition(lam), as_partition(mu)
    if lam1 not in res_set(lam) or lam not in res_set(mu):
        raise ValueError(f"{lam1} -> {lam} -> {mu} is not a path of single box additions")
    b1 = added_box(lam1, lam)
    b2 = added_box(lam, mu)
    if branch == NU_BRANCH:
        if b1[0] == b2[0] or b1[1] == b2[1]:
            raise ValueError("no second branch: the added boxes form a domino")
        return Fraction(1)
    if branch != LAM_BRANCH:
        raise ValueError(f"unknown branch {branch!r}")
    j0 = b2[1]
    copies = max(len(dual(lam)), j0)
    return g_vector(lam, lam1, copies)[j0 - 1]


def verify_bf_hcl(mu) -> dict:
    """Check the three coefficient computations against each other under mu.

    For every length-two removal path below mu and every branch, the solved
    coefficient, the closed ratio form, and the representation-theoretic
    oracle must agree exactly.
    """
    mu = as_partition(mu)
    cases = []
    for lam in sorted(res_set(mu)):
        for lam1 in sorted(res_set(lam)):
            b1 = added_box(lam1, lam)
            b2 = added_box(lam, mu)
            branches = [LAM_BRANCH]
            if b1[0] != b2[0] and b1[1] != b2[1]:
                branches.append(NU_BRANCH)
            for branch in branches:
                a = a_coeff(lam1, lam, mu, branch)
                oracle = a_oracle(lam1, lam, mu, branch)
                solved = tilde_a(lam1, lam, mu, branch)
                cases.append(
                    {
                        "lam1": list(lam1),
                        "lam": list(lam),
                        "branch": branch,
                        "a": format_fraction(a),
                        "a_oracle": format_fraction(oracle),
                        "a_tilde": format_fraction(solved),
                        "pass": a == oracle == solved,
                    }
                )
    return {"mu": list(mu), "cases": cases, "passed": all(c["pass"] for c in cases)}


def subclaim_identity(mu) -> bool:
    """Factorial identity over the rows and columns of a nonempty partition."""
    mu = as_partition(mu)
    if not mu:
        raise ValueError("the identity needs a nonempty partition")
    t = len(mu)
    s = mu[0]
    cols = dual(mu)
    lhs = 1
    for j in range(1, s + 1):
        lhs *= j + t - cols[j - 1]
    for i in range(1, t + 1):
        lhs *= mu[i - 1] + t + 1 - i
    return lhs == factorial(s + t)


def sn_bridge_holds(lam, n: int) -> bool:
    """Alternating drop-label sum against the shifted even partial sum.

    The signed sum of the charge sequences of the drop labels must equal the
    even-generator partial sum applied to the sequence of lam, exactly.
    """
    from .fock import FockVector, s_n_op
    from .partitions import lambda_t

    lam = as_partition(lam)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} rows")
    lhs = FockVector.zero()
    for t in range(n + 1):
        sign = -1 if (t + n) % 2 else 1
        lhs = lhs + sign * FockVector.basis(to_sequence(lambda_t(lam, n, t)))
    rhs = s_n_op(n, FockVector.basis(to_sequence(lam)))
    return lhs == rhs
