"""Named verification sweeps behind the command line ``verify`` subcommand.

Each suite enumerates its cases deterministically, never skips silently, and
reports failures as sorted case keys.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import correspondence as co
from . import fock, quiver, schur, symgroup
from .partitions import (
    added_box,
    as_partition,
    content,
    dual,
    partitions_bounded,
    partitions_up_to,
    res_set,
    to_sequence,
    union_columns,
)
from .fock import FockVector
from .ratmat import RationalMatrix
from .schur import SchurVector, schur_basis


@dataclass
class SuiteResult:
    name: str
    max_size: int
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, key: str, ok: bool):
        self.cases += 1
        if not ok:
            self.failures.append(key)

    def to_json(self):
        return {
            "suite": self.name,
            "max_size": self.max_size,
            "cases": self.cases,
            "failures": sorted(self.failures),
            "passed": self.passed,
        }


def energy_basis(max_energy: int, charge: int):
    """Charge-``charge`` basis sequences of energy at most ``max_energy``."""
    for p in partitions_up_to(max_energy):
        yield to_sequence(p).shift(charge)


def suite_clifford(max_size: int) -> SuiteResult:
    """Generator relations, exactly, on low-energy vectors of small charge."""
    result = SuiteResult("clifford", max_size)
    keys = [s for k in range(-2, 3) for s in energy_basis(max_size, k)]
    indices = range(-6, 7)
    for i in indices:
        for s in keys:
            v = FockVector.basis(s)
            result.check(f"square i={i} {s}", fock.apply_word((i, i), v).is_zero())
        for j in indices:
            if abs(i - j) > 1 and i < j:
                for s in keys:
                    v = FockVector.basis(s)
                    anti = fock.apply_word((i, j), v) + fock.apply_word((j, i), v)
                    result.check(f"anticommute i={i} j={j} {s}", anti.is_zero())
            if j == i + 1:
                for s in keys:
                    v = FockVector.basis(s)
                    total = fock.apply_word((i, j), v) + fock.apply_word((j, i), v)
                    result.check(f"adjacent i={i} j={j} {s}", total == v)
    return result


def suite_heisenberg(max_size: int) -> SuiteResult:
    """Single-box commutator and the divided-power strip relations."""
    result = SuiteResult("heisenberg", max_size)
    for lam in partitions_up_to(max_size):
        v = schur_basis(lam)
        lhs = schur.apply_q(schur.apply_p(v))
        rhs = schur.apply_p(schur.apply_q(v)) + v
        result.check(f"qp-pq lam={lam}", lhs == rhs)
    strip_cap = min(max_size, 6)
    for lam in partitions_up_to(strip_cap):
        v = schur_basis(lam)
        for m in range(4):
            for n in range(4):
                if m + n > 6:
                    continue
                result.check(
                    f"p_row commute lam={lam} m={m} n={n}",
                    schur.apply_p_row(m, schur.apply_p_row(n, v))
                    == schur.apply_p_row(n, schur.apply_p_row(m, v)),
                )
                result.check(
                    f"q_col commute lam={lam} m={m} n={n}",
                    schur.apply_q_col(m, schur.apply_q_col(n, v))
                    == schur.apply_q_col(n, schur.apply_q_col(m, v)),
                )
        for m in range(4):
            for n in range(4):
                rhs = SchurVector.zero()
                for k in range(min(m, n) + 1):
                    rhs = rhs + schur.apply_p_row(m - k, schur.apply_q_row(n - k, v))
                result.check(
                    f"row exchange lam={lam} m={m} n={n}",
                    schur.apply_q_row(n, schur.apply_p_row(m, v)) == rhs,
                )
                rhs = SchurVector.zero()
                for k in range(min(m, n) + 1):
                    rhs = rhs + schur.apply_p_col(m - k, schur.apply_q_col(n - k, v))
                result.check(
                    f"col exchange lam={lam} m={m} n={n}",
                    schur.apply_q_col(n, schur.apply_p_col(m, v)) == rhs,
                )
                mixed = schur.apply_p_col(m, schur.apply_q_row(n, v))
                if m >= 1 and n >= 1:
                    mixed = mixed + schur.apply_p_col(m - 1, schur.apply_q_row(n - 1, v))
                result.check(
                    f"mixed exchange lam={lam} m={m} n={n}",
                    schur.apply_q_row(n, schur.apply_p_col(m, v)) == mixed,
                )
    return result


def _transported(v: SchurVector) -> FockVector:
    return FockVector([(to_sequence(p), c) for p, c in v.items()])


def suite_bfhcl(max_size: int) -> SuiteResult:
    """Coefficient equality sweep plus the golden example and the transport."""
    result = SuiteResult("bfhcl", max_size)
    golden = co.matrix_c((2,), 2).to_strings() == [["1", "1"], ["1/2", "1"]]
    golden = golden and co.g_vector((2,), (1,)) == [Fraction(2), Fraction(-2)]
    golden = golden and co.tilde_a((1,), (2,), (2, 1), symgroup.LAM_BRANCH) == 2
    golden = golden and co.tilde_a((1,), (2,), (2, 1), symgroup.NU_BRANCH) == 1
    golden = golden and symgroup.a_coeff((1,), (2,), (2, 1), symgroup.LAM_BRANCH) == 2
    golden = golden and symgroup.h_coeff((2,), (2, 1)) == 2
    golden = golden and symgroup.h_coeff((1,), (2,)) == Fraction(-1, 2)
    result.check("golden example", golden)
    for mu in partitions_up_to(max_size):
        if not mu:
            continue
        report = co.verify_bf_hcl(mu)
        for case in report["cases"]:
            result.check(
                f"mu={mu} lam={tuple(case['lam'])} lam1={tuple(case['lam1'])} {case['branch']}",
                case["pass"],
            )
    for lam in partitions_up_to(min(max_size, 8)):
        n_stable = fock.stable_truncation(lam)
        fv = FockVector.basis(to_sequence(lam))
        result.check(
            f"transport q lam={lam}",
            fock.g_q_trunc(n_stable, fv) == _transported(schur.apply_q(schur_basis(lam))),
        )
        result.check(
            f"transport p lam={lam}",
            fock.g_p_trunc(n_stable, fv) == _transported(schur.apply_p(schur_basis(lam))),
        )
    return result


def suite_serre(max_size: int) -> SuiteResult:
    """Column and row Serre twists at the sequence level, plus the pairing biconditional."""
    result = SuiteResult("serre", max_size)
    for n in range(5):
        for lam in partitions_bounded(n, max_size):
            lhs = fock.s_bar_n(n, FockVector.basis(to_sequence(dual(lam))))
            rhs = FockVector.basis(to_sequence(dual(union_columns(lam, n))))
            result.check(f"bar twist n={n} lam={lam}", lhs == rhs)
    for n in range(4):
        for lam in partitions_bounded(n, min(max_size, 8)):
            result.check(f"row twist n={n} lam={lam}", co.sn_bridge_holds(lam, n))
    for n in range(1, 5):
        cap = min(max_size, 8)
        for lam in partitions_bounded(n, cap):
            target = quiver.serre_bar_k0(lam, n)
            for mu in partitions_bounded(n, cap):
                lhs = quiver.exists_hom(dual(lam), dual(mu))
                rhs = quiver.exists_hom(dual(mu), target)
                result.check(f"pairing n={n} lam={lam} mu={mu}", lhs == rhs)
                if lhs:
                    prod = quiver.multiply(
                        quiver.ArrowElement(dual(lam), dual(mu)),
                        quiver.ArrowElement(dual(mu), target),
                    )
                    expected = quiver.FElement.basis(quiver.ArrowElement(dual(lam), target))
                    result.check(f"factor n={n} lam={lam} mu={mu}", prod == expected)
    return result


def suite_resolutions(max_size: int) -> SuiteResult:
    """Rank exactness and graded Euler checks for the three resolution families."""
    result = SuiteResult("resolutions", max_size)
    cap = min(max_size, 6)
    for n in (1, 2, 3):
        for lam in partitions_bounded(n, cap):
            m = sum(lam) + 2 * n + 2
            tr = quiver.Truncation.rows_and_size(n, m)
            res = quiver.resolution_q(lam, n)
            result.check(f"q rank n={n} lam={lam}", quiver.rank_exactness(res, tr))
            result.check(
                f"q cokernel n={n} lam={lam}",
                quiver.cokernel_dim(res, tr) == len(quiver.q_module_basis(lam, n, m)),
            )
            result.check(
                f"q euler n={n} lam={lam}",
                quiver.graded_euler_check(res, quiver.q_module_dims(lam, n, m), tr),
            )
            result.check(
                f"df euler n={n} lam={lam}",
                quiver.graded_euler_check(
                    quiver.resolution_df_p(lam, n), quiver.df_tensor_dims(lam, n), tr
                ),
            )
            simple = quiver.resolution_simple(lam, n)
            result.check(
                f"simple euler n={n} lam={lam}",
                quiver.graded_euler_check(simple, quiver.simple_dims(lam), tr),
            )
            if simple.boundaries is not None and lam:
                result.check(f"simple rank n={n} lam={lam}", quiver.rank_exactness(simple, tr))
                result.check(
                    f"simple cokernel n={n} lam={lam}", quiver.cokernel_dim(simple, tr) == 1
                )
    return result


def suite_identities(max_size: int) -> SuiteResult:
    """Factorial sum, Cauchy determinant, factorial identity, determinant forms."""
    result = SuiteResult("identities", max_size)
    for s in range(-5, 9):
        for t in range(1, 9):
            result.check(f"f s={s} t={t}", co.f_sum(s, t) == co.f_closed(s, t))
    rng = random.Random(20250808)
    for trial in range(20):
        k = rng.randint(1, 6)
        while True:
            a = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(k)]
            b = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(k)]
            if all(x + y != 0 for x in a for y in b):
                break
        direct = RationalMatrix([[1 / (x + y) for y in b] for x in a]).det()
        result.check(f"cauchy trial={trial}", co.cauchy_det(a, b) == direct)
    for mu in partitions_up_to(max(max_size, 12)):
        if mu:
            result.check(f"factorial identity mu={mu}", co.subclaim_identity(mu))
    for lam in partitions_up_to(min(max_size, 8)):
        k = lam[0] if lam else 1
        c = co.matrix_c(lam, k)
        result.check(
            f"BC=A lam={lam}", co.matrix_b(k) @ c == co.matrix_a_closed(lam, k)
        )
        d = c.det()
        result.check(f"det lam={lam}", d == co.det_a_closed(lam, k) and d != 0)
    for mu in partitions_up_to(min(max_size, 8)):
        corners = sorted(res_set(mu))
        for x in range(len(corners)):
            for y in range(len(corners)):
                if x == y:
                    continue
                lam, mu1 = corners[x], corners[y]
                d = content(added_box(lam, mu)) - content(added_box(mu1, mu))
                lam1 = as_partition(
                    [min(a, b) for a, b in zip(lam + (0,) * len(mu), mu1 + (0,) * len(mu))]
                )
                lhs = symgroup.h_coeff(mu1, mu) * (d - 1)
                rhs = d * symgroup.h_coeff(lam1, lam)
                result.check(f"h square mu={mu} lam={lam} mu1={mu1}", lhs == rhs)
    return result


SUITES = {
    "clifford": (suite_clifford, 6),
    "heisenberg": (suite_heisenberg, 10),
    "bfhcl": (suite_bfhcl, 8),
    "serre": (suite_serre, 10),
    "resolutions": (suite_resolutions, 6),
    "identities": (suite_identities, 12),
}


def run_suite(name: str, max_size: int | None = None) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(name)
    fn, default_size = SUITES[name]
    return fn(default_size if max_size is None else max_size)
