import pytest

from bosonfermion.partitions import (
    dual,
    partitions_bounded,
    partitions_up_to,
    union_columns,
)
from bosonfermion.quiver import (
    ArrowElement,
    FElement,
    LimitLabel,
    Truncation,
    arrow,
    cokernel_dim,
    df_tensor_dims,
    exists_hom,
    graded_euler_check,
    multiply,
    projective_basis,
    q_module_basis,
    q_module_dims,
    rank_exactness,
    resolution_df_p,
    resolution_q,
    resolution_simple,
    serre_bar_k0,
    simple_dims,
)


def horizontal_skew(inner, outer):
    # oracle: containment plus at most one new box per column
    from bosonfermion.partitions import part

    if not all(part(outer, i + 1) >= v for i, v in enumerate(inner)):
        return False
    cols_used = []
    for r in range(1, len(outer) + 1):
        lo, hi = part(inner, r), part(outer, r)
        cols_used.extend(range(lo + 1, hi + 1))
    return len(set(cols_used)) == len(cols_used)


def test_exists_hom_examples():
    assert exists_hom((1,), (2, 1))
    assert not exists_hom((), (1, 1))
    for lam in partitions_up_to(6):
        assert exists_hom(lam, lam)


def test_exists_hom_matches_strip_oracle():
    for outer in partitions_up_to(7):
        for inner in partitions_up_to(7):
            assert exists_hom(inner, outer) == horizontal_skew(inner, outer), (inner, outer)


def test_multiply_examples():
    assert multiply(arrow((), (1,)), arrow((1,), (2,))) == FElement.basis(arrow((), (2,)))
    assert multiply(arrow((), (1,)), arrow((1,), (1, 1))).is_zero()
    assert multiply(arrow((1,), (1,)), arrow((1,), (2, 1))) == FElement.basis(arrow((1,), (2, 1)))
    assert multiply(arrow((), (1,)), arrow((2,), (3,))).is_zero()
    with pytest.raises(ValueError):
        ArrowElement((1, 1), (2,))


def test_multiply_associative_on_composable_triples():
    labels = list(partitions_up_to(8))
    for delta in labels:
        gammas = [g for g in partitions_up_to(sum(delta)) if exists_hom(g, delta)]
        for gamma in gammas:
            betas = [b for b in partitions_up_to(sum(gamma)) if exists_hom(b, gamma)]
            for beta in betas:
                for alpha in partitions_up_to(sum(beta)):
                    if not exists_hom(alpha, beta):
                        continue
                    a = arrow(alpha, beta)
                    b = arrow(beta, gamma)
                    c = arrow(gamma, delta)
                    assert multiply(a, b) * FElement.basis(c) == FElement.basis(a) * multiply(b, c)


def test_projective_basis_examples():
    assert [x.source for x in projective_basis((1,), Truncation.rows_and_size(1, 4))] == [
        (),
        (1,),
    ]
    assert [x.source for x in projective_basis((), Truncation.none())] == [()]
    sources = [x.source for x in projective_basis((2, 1), Truncation.rows_and_size(2, 4))]
    assert sources == [(1,), (1, 1), (2,), (2, 1)]
    with pytest.raises(ValueError):
        projective_basis((1, 1), Truncation.rows(1))


def test_projective_basis_matches_oracle():
    tr = Truncation.rows_and_size(3, 9)
    for lam in partitions_bounded(3, 6):
        got = {x.source for x in projective_basis(lam, tr)}
        want = {eta for eta in partitions_bounded(3, 9) if horizontal_skew(eta, lam)}
        assert got == want, lam


def test_q_module_basis_examples():
    assert [(x.source, x.target) for x in q_module_basis((), 1, 3)] == [((1,), (1,))]
    got = [(x.source, x.target) for x in q_module_basis((1,), 1, 4)]
    assert got == [((1,), (2,)), ((2,), (2,))]
    with pytest.raises(ValueError):
        q_module_basis((2,), 1, 2)
    with pytest.raises(ValueError):
        q_module_basis((3,), 1, 2)


def test_resolution_q_shape():
    r = resolution_q((1,), 2)
    assert [labels for _, labels in r.terms] == [(((2, 1),)), (((2,),)), (((),))]
    assert r.arrow_text() == "P(()) -> P((2)) -> P((2,1))"
    r0 = resolution_q((), 1)
    assert r0.arrow_text() == "P(()) -> P((1))"


def test_resolution_q_consecutive_boundaries_vanish():
    for n in (1, 2, 3):
        for lam in partitions_bounded(n, 6):
            r = resolution_q(lam, n)
            for t in range(2, n + 1):
                (_, _, g2, _), = r.boundaries[t]
                (_, _, g1, _), = r.boundaries[t - 1]
                assert multiply(g2, g1).is_zero(), (lam, n, t)


def test_rank_exactness_and_cokernel():
    for n in (1, 2, 3):
        for lam in partitions_bounded(n, 6):
            m = sum(lam) + 2 * n + 2
            tr = Truncation.rows_and_size(n, m)
            res = resolution_q(lam, n)
            assert rank_exactness(res, tr), (lam, n)
            assert cokernel_dim(res, tr) == len(q_module_basis(lam, n, m)), (lam, n)


def test_rank_exactness_negative_control():
    res = resolution_q((1,), 2)
    # corrupt the lowest boundary generator
    res.boundaries[1] = ((0, 0, arrow((2,), (2, 1)), 1),)
    res.terms[1] = (1, ((2,),))
    res.boundaries[2] = ((0, 0, arrow((1,), (2,)), 1),)
    res.terms[2] = (2, ((1,),))
    tr = Truncation.rows_and_size(2, 9)
    assert not rank_exactness(res, tr)


def test_graded_euler_checks():
    for n in (1, 2, 3):
        for lam in partitions_bounded(n, 6):
            m = sum(lam) + 2 * n + 2
            tr = Truncation.rows_and_size(n, m)
            assert graded_euler_check(resolution_q(lam, n), q_module_dims(lam, n, m), tr)
            assert graded_euler_check(resolution_df_p(lam, n), df_tensor_dims(lam, n), tr)
            assert graded_euler_check(resolution_simple(lam, n), simple_dims(lam), tr)


def test_graded_euler_negative_control():
    res = resolution_q((1,), 2)
    res.terms[1] = (1, ((1, 1),))
    tr = Truncation.rows_and_size(2, 9)
    assert not graded_euler_check(res, q_module_dims((1,), 2, 9), tr)


def test_resolution_df_p_shapes():
    r = resolution_df_p((1, 1), 2)
    assert r.labels_at(0) == (LimitLabel((1,), 2),)
    assert r.labels_at(1) == (LimitLabel((0,), 2),)
    assert r.labels_at(2) == ((),)
    degenerate = resolution_df_p((1,), 2)
    assert degenerate.terms == [(0, (LimitLabel((1,), 2),))]
    single = resolution_df_p((1,), 1)
    assert single.labels_at(1) == ((),)


def test_resolution_df_p_final_term_restores_base():
    # the top term appears exactly when the n-th row is nonempty, and adding
    # one box per row recovers the base partition
    for n in (1, 2, 3):
        for mu in partitions_bounded(n, 6):
            res = resolution_df_p(mu, n)
            if len(mu) == n:
                assert res.top_degree == n
                final = res.labels_at(n)[0]
                assert union_columns(final, n) == mu
            else:
                assert res.top_degree == 0


def test_resolution_simple_shapes():
    r = resolution_simple((1,), 1)
    assert r.arrow_text() == "P(()) -> P((1))"
    r0 = resolution_simple((), 2)
    assert r0.terms == [(0, ((),))]
    r2 = resolution_simple((2, 1), 2)
    assert r2.labels_at(1) == ((1, 1), (2,))
    assert r2.labels_at(2) == ((1,),)


def test_resolution_simple_rank_exactness_two_rows():
    for n in (1, 2):
        for lam in partitions_bounded(n, 6):
            if not lam:
                continue
            res = resolution_simple(lam, n)
            assert res.boundaries is not None
            tr = Truncation.rows_and_size(n, sum(lam) + 2 * n + 2)
            assert rank_exactness(res, tr), (lam, n)
            assert cokernel_dim(res, tr) == 1, (lam, n)


def test_resolution_lengths():
    # the q chain always has length n; the simple resolution has length equal
    # to the number of nonzero rows, so global dimension n is never exceeded
    for n in (1, 2, 3, 4):
        for lam in partitions_bounded(n, 6):
            assert resolution_q(lam, n).top_degree == n
            assert resolution_simple(lam, n).top_degree == len(lam)


def test_serre_bar_examples():
    assert serre_bar_k0((3,), 1) == (1, 1, 1, 1)
    assert serre_bar_k0((), 2) == (2,)
    for n in range(1, 5):
        for lam in partitions_bounded(n, 8):
            assert exists_hom(dual(lam), serre_bar_k0(lam, n))


def test_column_pairing_biconditional():
    for n in range(1, 5):
        for lam in partitions_bounded(n, 8):
            target = serre_bar_k0(lam, n)
            for mu in partitions_bounded(n, 8):
                lhs = exists_hom(dual(lam), dual(mu))
                rhs = exists_hom(dual(mu), target)
                assert lhs == rhs, (n, lam, mu)
                if lhs:
                    prod = multiply(
                        ArrowElement(dual(lam), dual(mu)), ArrowElement(dual(mu), target)
                    )
                    assert prod == FElement.basis(ArrowElement(dual(lam), target))


def test_degree_n_label_realizes_adjunction_count():
    # the only finite label in the dualizing-twist resolution sits at degree n
    # and equals lam exactly when the base is lam with one box added per row
    for n in (1, 2, 3):
        shapes = list(partitions_bounded(n, 6))
        for mu in shapes:
            res = resolution_df_p(mu, n)
            for lam in shapes:
                hits = sum(
                    1
                    for degree, labels in res.terms
                    if degree == n
                    for label in labels
                    if not isinstance(label, LimitLabel) and label == lam
                )
                expected = 1 if len(mu) == n and union_columns(lam, n) == mu else 0
                assert hits == expected, (mu, lam, n)


def test_column_truncation_twisted_basis():
    # inside the column-bounded truncation, the basis of the projective at the
    # twisted label consists exactly of the duals paired by the biconditional
    for n in (1, 2, 3):
        for lam in partitions_bounded(n, 6):
            target = serre_bar_k0(lam, n)
            tr = Truncation.columns(n)
            got = {a.source for a in projective_basis(target, tr)}
            want = {
                dual(mu)
                for mu in partitions_bounded(n, sum(lam) + n)
                if exists_hom(dual(lam), dual(mu))
            }
            assert got == want, (lam, n)


def test_limit_label_multiplicity():
    limit = LimitLabel((2, 1), 3)
    assert limit.multiplicity((5, 2, 1)) == 1
    assert limit.multiplicity((2, 2, 1)) == 1
    assert limit.multiplicity((1, 1, 1)) == 0  # first row below the tail start
    assert limit.multiplicity((5, 3, 1)) == 0  # second row exceeds the tail
    assert limit.multiplicity((5, 2, 1, 1)) == 0  # too many rows
