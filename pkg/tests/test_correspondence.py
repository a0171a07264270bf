import random
from fractions import Fraction

import pytest

from bosonfermion.correspondence import (
    cauchy_det,
    det_a_closed,
    f_closed,
    f_sum,
    g_vector,
    matrix_a_closed,
    matrix_b,
    matrix_c,
    sn_bridge_holds,
    subclaim_identity,
    tilde_a,
    verify_bf_hcl,
    wtq_tensor,
)
from bosonfermion.partitions import partitions_bounded, partitions_up_to, res_set
from bosonfermion.ratmat import RationalMatrix
from bosonfermion.symgroup import LAM_BRANCH, NU_BRANCH


def test_f_sum_examples():
    assert f_sum(1, 1) == -1
    assert f_sum(0, 1) == 1
    assert f_sum(-2, 3) == 1
    with pytest.raises(ValueError):
        f_sum(2, 0)


def test_f_closed_examples():
    assert f_closed(1, 1) == -1
    assert f_closed(0, 1) == 1
    assert f_closed(2, 3) == Fraction(1, 8)


def test_f_sum_equals_closed_form():
    for s in range(-5, 9):
        for t in range(1, 9):
            assert f_sum(s, t) == f_closed(s, t), (s, t)


def test_cauchy_examples():
    assert cauchy_det([0], [1]) == 1
    assert cauchy_det([1, 2], [0, 1]) == Fraction(1, 12)
    with pytest.raises(ValueError):
        cauchy_det([1, -1], [1, 1])


def test_cauchy_against_direct_determinant():
    rng = random.Random(20250808)
    for _ in range(20):
        k = rng.randint(1, 6)
        while True:
            a = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(k)]
            b = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(k)]
            if all(x + y != 0 for x in a for y in b):
                break
        direct = RationalMatrix([[1 / (x + y) for y in b] for x in a]).det()
        assert cauchy_det(a, b) == direct


def test_matrix_c_examples():
    assert matrix_c((2,), 2) == RationalMatrix([[1, 1], [Fraction(1, 2), 1]])
    assert matrix_c((), 1) == RationalMatrix([[1]])
    assert matrix_c((2,), 2).det() == Fraction(1, 2)
    with pytest.raises(ValueError):
        matrix_c((3,), 2)


def test_matrix_b_examples():
    assert matrix_b(1) == RationalMatrix([[1]])
    assert matrix_b(2) == RationalMatrix([[1, 0], [-1, 1]])
    for k in range(1, 7):
        assert matrix_b(k).det() == 1


def test_matrix_a_and_determinants():
    assert (matrix_b(2) @ matrix_c((2,), 2)) == RationalMatrix(
        [[1, 1], [Fraction(-1, 2), 0]]
    )
    assert matrix_a_closed((), 1) == matrix_c((), 1)
    for lam in partitions_up_to(8):
        k = lam[0] if lam else 1
        assert matrix_b(k) @ matrix_c(lam, k) == matrix_a_closed(lam, k), lam
        d = matrix_c(lam, k).det()
        assert d == det_a_closed(lam, k), lam
        assert d != 0, lam
        # padded windows agree too
        assert matrix_c(lam, k + 2).det() == det_a_closed(lam, k + 2), lam


def test_unit_columns_of_closed_matrix():
    # columns past the shifted-positive block are standard basis vectors
    lam = (3, 1)
    k = 5
    cols = matrix_a_closed(lam, k)
    from bosonfermion.partitions import dual, part

    d = dual(lam)
    for j in range(1, k + 1):
        e = part(d, j) - j
        if e < 0:
            column = cols.column(j - 1)
            assert column.count(0) == k - 1
            assert column[j - part(d, j) - 1] == 1


def test_wtq_tensor_example():
    w = wtq_tensor((2,))
    assert w.k == 2
    kinds = [(i, kind) for (i, kind, _, _) in w.components]
    assert kinds == [(0, "copy"), (1, "copy"), (2, "corner")]
    assert w.c_matrix == matrix_c((2,), 2)
    assert w.corner_columns[2] == [Fraction(0), Fraction(1)]
    assert w.quotient_labels() == [(1,)]


def test_wtq_tensor_second_example():
    # the complex against (2,1): copies at windows -1 and 1, corners at 0 and 2,
    # with inverse-factorial arrows 1/2, 1/6 and 1, 1/2
    w = wtq_tensor((2, 1))
    comp = [(i, kind, label) for (i, kind, label, _) in w.components]
    assert comp == [
        (-1, "copy", (2, 1)),
        (0, "corner", (2,)),
        (1, "copy", (2, 1)),
        (2, "corner", (1, 1)),
    ]
    assert w.c_matrix == RationalMatrix([[Fraction(1, 2), 1], [Fraction(1, 6), 1]])
    assert w.corner_columns[1] == [Fraction(1), Fraction(1, 2)]
    assert w.corner_columns[2] == [Fraction(0), Fraction(1)]


def test_wtq_tensor_vacuum_and_quotients():
    assert wtq_tensor(()).k == 0
    for lam in partitions_up_to(10):
        w = wtq_tensor(lam)
        assert sorted(w.quotient_labels()) == sorted(res_set(lam)), lam


def test_g_vector_examples():
    assert g_vector((2,), (1,)) == [Fraction(2), Fraction(-2)]
    g = g_vector((2, 1), (2,))
    c = matrix_c((2, 1), 2)
    rhs = [sum(c.at(i, j) * g[j] for j in range(2)) for i in range(2)]
    from bosonfermion.correspondence import inv_factorial

    anchor = 0  # the corner removed from column 1 of (2,1) sits at window 0
    assert rhs == [-inv_factorial(1 - anchor), -inv_factorial(2 - anchor)]
    with pytest.raises(ValueError):
        g_vector((2,), (2,))


def test_tilde_a_examples():
    assert tilde_a((1,), (2,), (2, 1), LAM_BRANCH) == 2
    assert tilde_a((1,), (2,), (2, 1), NU_BRANCH) == 1
    assert tilde_a((), (1,), (2,), LAM_BRANCH) == Fraction(-1, 2)
    with pytest.raises(ValueError):
        tilde_a((), (1,), (2,), NU_BRANCH)
    with pytest.raises(ValueError):
        tilde_a((1,), (2, 1), (2, 2), LAM_BRANCH)


def test_verify_small():
    report = verify_bf_hcl((2, 1))
    assert report["passed"]
    assert {c["branch"] for c in report["cases"]} == {LAM_BRANCH, NU_BRANCH}
    trivial = verify_bf_hcl((1,))
    assert trivial["passed"] and trivial["cases"] == []


def test_verify_sweep_medium():
    for mu in partitions_up_to(6):
        if mu:
            assert verify_bf_hcl(mu)["passed"], mu


def test_subclaim_examples_and_sweep():
    assert subclaim_identity((1,))
    assert subclaim_identity((2, 1))
    with pytest.raises(ValueError):
        subclaim_identity(())
    for mu in partitions_up_to(12):
        if mu:
            assert subclaim_identity(mu), mu


def test_row_twist_bridge():
    for n in range(4):
        for lam in partitions_bounded(n, 8):
            assert sn_bridge_holds(lam, n), (lam, n)
