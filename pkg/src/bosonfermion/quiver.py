"""The path algebra on Young's lattice with interlacing basis, and its truncations.

A basis element joins a source partition to a target partition whenever the
two interlace (equivalently, their skew diagram is a horizontal strip); the
product of two basis elements is the joined element when the middle labels
match and the outer pair still interlaces, and zero otherwise.  Truncations
bound the number of rows, of columns, or of rows and total size at once.
The module also builds the finite projective resolutions used by the
Serre-twist computations and checks them by exact rank computations and
graded Euler characteristics.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .formal import FormalSum
from .partitions import (
    Partition,
    as_partition,
    dual,
    lambda_t,
    part,
    partitions_bounded,
    size,
    union_columns,
)
from .ratmat import RationalMatrix


def exists_hom(lam, mu) -> bool:
    """True when mu_i >= lam_i >= mu_{i+1} for all i."""
    lam, mu = as_partition(lam), as_partition(mu)
    for i in range(1, max(len(lam), len(mu)) + 1):
        if not part(mu, i) >= part(lam, i) >= part(mu, i + 1):
            return False
    return True


@dataclass(frozen=True, order=True)
class ArrowElement:
    """Basis element (source || target); valid only when the pair interlaces."""

    source: Partition
    target: Partition

    def __post_init__(self):
        if not exists_hom(self.source, self.target):
            raise ValueError(f"({self.source} || {self.target}) does not interlace")

    def __repr__(self):
        return f"({self.source}||{self.target})"


class FElement(FormalSum):
    """Rational combination of interlacing basis elements."""

    def __mul__(self, other: "FElement") -> "FElement":
        out = FElement.zero()
        for a, ca in self.items():
            for b, cb in other.items():
                out = out + (ca * cb) * multiply(a, b)
        return out


def arrow(source, target) -> ArrowElement:
    return ArrowElement(as_partition(source), as_partition(target))


def multiply(a: ArrowElement, b: ArrowElement) -> FElement:
    """Product of two basis elements; zero on mismatch or broken interlacing."""
    if a.target != b.source or not exists_hom(a.source, b.target):
        return FElement.zero()
    return FElement.basis(ArrowElement(a.source, b.target))


@dataclass(frozen=True)
class Truncation:
    kind: str  # "none" | "rows" | "columns" | "rows_size"
    n: int = 0
    m: int = 0

    @classmethod
    def none(cls):
        return cls("none")

    @classmethod
    def rows(cls, n: int):
        return cls("rows", n)

    @classmethod
    def columns(cls, n: int):
        return cls("columns", n)

    @classmethod
    def rows_and_size(cls, n: int, m: int):
        return cls("rows_size", n, m)

    def admits(self, p) -> bool:
        p = as_partition(p)
        if self.kind == "none":
            return True
        if self.kind == "rows":
            return len(p) <= self.n
        if self.kind == "columns":
            return (p[0] if p else 0) <= self.n
        if self.kind == "rows_size":
            return len(p) <= self.n and size(p) <= self.m
        raise ValueError(f"unknown truncation kind {self.kind!r}")

    @property
    def is_finite(self) -> bool:
        return self.kind == "rows_size"

    def iter_labels(self):
        if not self.is_finite:
            raise ValueError("only the rows-and-size truncation is finite")
        yield from partitions_bounded(self.n, self.m)


def projective_basis(lam, tr: Truncation) -> list[ArrowElement]:
    """All basis elements with target lam and source admitted by the truncation."""
    lam = as_partition(lam)
    if not tr.admits(lam):
        raise ValueError(f"{lam} is not admitted by {tr}")
    rows = len(lam)
    out = []

    def rec(i, chosen):
        if i > rows:
            eta = as_partition(chosen)
            if tr.admits(eta):
                out.append(ArrowElement(eta, lam))
            return
        for val in range(part(lam, i + 1), lam[i - 1] + 1):
            rec(i + 1, chosen + [val])

    rec(1, [])
    return sorted(out)


def q_module_basis(lam, n: int, m: int) -> list[ArrowElement]:
    """Basis of the twisted module: column-augmented sources over an admitted core."""
    lam = as_partition(lam)
    tr = Truncation.rows_and_size(n, m)
    if not tr.admits(lam):
        raise ValueError(f"{lam} is not in the rows<={n}, size<={m} truncation")
    lifted = union_columns(lam, n)
    if not tr.admits(lifted):
        raise ValueError(f"{lifted} leaves the rows<={n}, size<={m} truncation")
    out = []
    for eta in partitions_bounded(n, m):
        if exists_hom(eta, lam):
            out.append(ArrowElement(union_columns(eta, n), lifted))
    return sorted(out)


# ---------------------------------------------------------------------------
# resolutions

@dataclass(frozen=True)
class LimitLabel:
    """Projective label with an unbounded first row over a fixed lower tail."""

    tail: tuple[int, ...]  # n-1 weakly decreasing values, zeros kept
    n: int

    def multiplicity(self, eta) -> int:
        eta = as_partition(eta)
        if len(eta) > self.n:
            return 0
        if self.n == 1:
            return 1
        t = self.tail
        if part(eta, 1) < t[0]:
            return 0
        for i in range(1, self.n):
            upper = t[i - 1]
            lower = t[i] if i < self.n - 1 else 0
            if not upper >= part(eta, i + 1) >= lower:
                return 0
        return 1

    def __repr__(self):
        return f"(oo,{','.join(str(x) for x in self.tail)})"


Boundary = tuple[int, int, ArrowElement, int]  # (source position, target position, generator, sign)


@dataclass
class Resolution:
    kind: str
    base: Partition
    n: int
    terms: list[tuple[int, tuple]]  # (homological degree, labels), degree ascending
    boundaries: dict[int, tuple[Boundary, ...]] | None = None

    def labels_at(self, degree: int) -> tuple:
        for d, labels in self.terms:
            if d == degree:
                return labels
        return ()

    @property
    def top_degree(self) -> int:
        return max(d for d, _ in self.terms)

    def to_json(self):
        out = []
        for d, labels in self.terms:
            entry = {"degree": d, "labels": [list(l) if isinstance(l, tuple) else repr(l) for l in labels]}
            if self.boundaries and d in self.boundaries:
                entry["boundary"] = [
                    {"from": s, "to": t, "generator": [list(g.source), list(g.target)], "sign": sign}
                    for (s, t, g, sign) in self.boundaries[d]
                ]
            out.append(entry)
        return out

    def arrow_text(self) -> str:
        parts = []
        for d, labels in sorted(self.terms, key=lambda x: -x[0]):
            names = " (+) ".join(f"P({label_text(l)})" for l in labels)
            parts.append(names)
        return " -> ".join(parts)


def label_text(label) -> str:
    if isinstance(label, LimitLabel):
        return repr(label)
    return "(" + ",".join(str(x) for x in label) + ")"


def resolution_q(lam, n: int) -> Resolution:
    """Length-n chain of projectives under the column-augmented label of lam.

    Degree t carries the t-th drop label; consecutive boundary generators
    join neighbouring labels and compose to zero.
    """
    lam = as_partition(lam)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} rows")
    labels = [lambda_t(lam, n, t) for t in range(n + 1)]
    terms = [(t, (labels[t],)) for t in range(n + 1)]
    boundaries = {
        t: ((0, 0, ArrowElement(labels[t], labels[t - 1]), 1),) for t in range(1, n + 1)
    }
    return Resolution("q", lam, n, terms, boundaries)


def _remove_rows(padded: list[int], rows) -> Partition | None:
    vals = list(padded)
    for j in rows:
        vals[j - 1] -= 1
    if any(v < 0 for v in vals):
        return None
    try:
        return as_partition(vals)
    except ValueError:
        return None


def resolution_df_p(mu, n: int) -> Resolution:
    """Resolution of the dualizing-twist of a projective by limit projectives.

    Degenerates to a single limit projective when the n-th row is empty.
    Otherwise degree k < n carries the limit projective whose tail keeps the
    first n-k-1 rows and decrements the rows below the dropped one, and the
    final degree carries the finite projective with one box removed from
    every row.  Boundary maps are not constructed; the resolution is checked
    at the graded Euler level.
    """
    mu = as_partition(mu)
    if len(mu) > n:
        raise ValueError(f"{mu} has more than {n} rows")
    padded = [part(mu, i) for i in range(1, n + 1)]
    if padded[n - 1] == 0:
        return Resolution("df_p", mu, n, [(0, (LimitLabel(tuple(padded[: n - 1]), n),))])
    terms: list[tuple[int, tuple]] = []
    for k in range(n):
        tail = tuple(padded[: n - k - 1]) + tuple(v - 1 for v in padded[n - k:])
        terms.append((k, (LimitLabel(tail, n),)))
    terms.append((n, (as_partition([v - 1 for v in padded]),)))
    return Resolution("df_p", mu, n, terms)


def resolution_simple(lam, n: int) -> Resolution:
    """Inclusion-exclusion resolution of the simple module at lam.

    Degree s carries the labels with one box removed from each row of an
    s-subset of the nonzero rows.  Signed boundary maps are attached when
    the shape has at most two nonzero rows.
    """
    lam = as_partition(lam)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} rows")
    k = len(lam)
    from itertools import combinations

    terms: list[tuple[int, tuple]] = [(0, (lam,))]
    subsets_by_degree: dict[int, list[tuple]] = {}
    for s in range(1, k + 1):
        labels = []
        subsets = []
        for subset in combinations(range(1, k + 1), s):
            label = _remove_rows(list(lam), subset)
            if label is not None:
                labels.append(label)
                subsets.append(subset)
        if labels:
            terms.append((s, tuple(labels)))
            subsets_by_degree[s] = subsets
    boundaries = None
    if k <= 2:
        boundaries = {}
        position = {0: {(): 0}}
        for s, subsets in subsets_by_degree.items():
            position[s] = {subset: i for i, subset in enumerate(subsets)}
        for s in range(1, k + 1):
            if s not in subsets_by_degree:
                continue
            comps = []
            source_labels = dict(terms)[s]
            target_subsets = position.get(s - 1, {})
            for pos, subset in enumerate(subsets_by_degree[s]):
                for idx, j in enumerate(subset):
                    smaller = tuple(x for x in subset if x != j)
                    if smaller not in target_subsets:
                        continue
                    dst = target_subsets[smaller]
                    dst_label = dict(terms)[s - 1][dst]
                    sign = -1 if idx % 2 else 1
                    comps.append((pos, dst, ArrowElement(source_labels[pos], dst_label), sign))
            boundaries[s] = tuple(comps)
    return Resolution("simple", lam, n, terms, boundaries)


# ---------------------------------------------------------------------------
# verification

def graded_euler_check(res: Resolution, target, tr: Truncation) -> bool:
    """Alternating multiplicity count against a target dimension function.

    For every label admitted by the (finite) truncation, the signed number of
    basis vectors of that label across the complex must equal the target.
    """
    if not tr.is_finite:
        raise ValueError("graded Euler check needs a finite truncation")
    for eta in tr.iter_labels():
        total = 0
        for degree, labels in res.terms:
            sign = -1 if degree % 2 else 1
            for label in labels:
                if isinstance(label, LimitLabel):
                    total += sign * label.multiplicity(eta)
                elif exists_hom(eta, label):
                    total += sign
        if total != target(eta):
            return False
    return True


def _boundary_matrix(res: Resolution, t: int, tr: Truncation,
                     bases: dict[int, list]) -> RationalMatrix:
    src_basis = bases[t]
    dst_basis = bases[t - 1]
    dst_index = {elem: i for i, elem in enumerate(dst_basis)}
    data = [[Fraction(0)] * len(src_basis) for _ in range(len(dst_basis))]
    src_offsets = {}
    offset = 0
    for pos, label in enumerate(res.labels_at(t)):
        src_offsets[pos] = offset
        offset += len(projective_basis(label, tr))
    for (src_pos, dst_pos, gen, sign) in res.boundaries.get(t, ()):
        block = projective_basis(res.labels_at(t)[src_pos], tr)
        for local, elem in enumerate(block):
            image = multiply(elem, gen)
            for img_arrow, coeff in image.items():
                row = dst_index[(dst_pos, img_arrow)]
                data[row][src_offsets[src_pos] + local] += sign * coeff
    return RationalMatrix(data)


def _bases(res: Resolution, tr: Truncation) -> dict[int, list]:
    bases = {}
    for degree, labels in res.terms:
        flat = []
        for pos, label in enumerate(labels):
            if isinstance(label, LimitLabel):
                raise ValueError("rank checks need finite projectives")
            flat.extend((pos, elem) for elem in projective_basis(label, tr))
        bases[degree] = flat
    return bases


def rank_exactness(res: Resolution, tr: Truncation) -> bool:
    """Squared boundary and rank test inside a finite truncation.

    Checks that consecutive boundaries compose to zero and that at every
    position with an incoming and outgoing map (counting the zero map into
    the top) the two ranks fill the middle dimension.
    """
    if res.boundaries is None:
        raise ValueError("resolution carries no boundary maps")
    bases = _bases(res, tr)
    top = res.top_degree
    mats = {t: _boundary_matrix(res, t, tr, bases) for t in range(1, top + 1)}
    for t in range(1, top):
        product = mats[t] @ mats[t + 1]
        if any(any(x for x in row) for row in product.data):
            return False
    for t in range(1, top + 1):
        incoming = mats[t + 1].rank() if t + 1 <= top else 0
        if mats[t].rank() + incoming != len(bases[t]):
            return False
    return True


def cokernel_dim(res: Resolution, tr: Truncation) -> int:
    """Dimension of the cokernel of the lowest boundary map."""
    if res.boundaries is None:
        raise ValueError("resolution carries no boundary maps")
    bases = _bases(res, tr)
    return len(bases[0]) - _boundary_matrix(res, 1, tr, bases).rank()


def serre_bar_k0(lam, n: int) -> Partition:
    """Class-level Serre twist on the column-bounded side: the image projective label."""
    lam = as_partition(lam)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} rows")
    return dual(union_columns(lam, n))


def q_module_dims(lam, n: int, m: int):
    sources = {a.source for a in q_module_basis(lam, n, m)}
    return lambda eta: 1 if as_partition(eta) in sources else 0


def df_tensor_dims(mu, n: int):
    mu = as_partition(mu)
    return lambda eta: 1 if len(as_partition(eta)) <= n and exists_hom(mu, eta) else 0


def simple_dims(lam):
    lam = as_partition(lam)
    return lambda eta: 1 if as_partition(eta) == lam else 0
