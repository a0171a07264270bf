from fractions import Fraction

import pytest

from bosonfermion.fock import (
    FockVector,
    apply_psi,
    apply_psi_star,
    apply_t,
    apply_word,
    g_p_trunc,
    g_q_trunc,
    s_bar_n,
    s_n_op,
    stable_truncation,
    tau,
    vacuum,
)
from bosonfermion.partitions import (
    ChargedSequence,
    dual,
    ind_set,
    normalize,
    partitions_bounded,
    partitions_up_to,
    res_set,
    to_sequence,
    union_columns,
)


def basis(seq):
    return FockVector.basis(seq)


def seq(charge, head=()):
    return ChargedSequence.of(charge, head)


def energy_keys(max_energy, charges=(-2, -1, 0, 1, 2)):
    return [to_sequence(p).shift(k) for k in charges for p in partitions_up_to(max_energy)]


# -- creation and annihilation ------------------------------------------------

def psi_via_normalize(j, s):
    """Oracle: prepend the new value and sort, instead of position arithmetic."""
    prefix = list(s.prefix(len(s.head) + 1))
    result = normalize([2 * j] + prefix, s.charge - 1)
    if result is None:
        return FockVector.zero()
    sign, sorted_seq = result
    return sign * FockVector.basis(sorted_seq)


def test_psi_examples():
    assert apply_psi(0, basis(seq(1))) == basis(seq(0, (0,)))
    assert apply_psi(1, vacuum(0)).is_zero()
    assert apply_psi(2, basis(seq(1, (2,)))) == -1 * vacuum(0)


def test_psi_matches_normalize_oracle():
    for s in energy_keys(5):
        for j in range(-6, 7):
            assert apply_psi(j, basis(s)) == psi_via_normalize(j, s), (s, j)


def test_psi_star_examples():
    assert apply_psi_star(1, vacuum(0)) == basis(seq(1))
    assert apply_psi_star(0, vacuum(0)).is_zero()
    assert apply_psi_star(2, vacuum(0)) == -1 * basis(seq(1, (2,)))


def test_psi_pair_inverse_signs():
    for s in energy_keys(5, charges=(0,)):
        for j in range(-5, 6):
            created = apply_psi(j, basis(s))
            if created.is_zero():
                continue
            assert apply_psi_star(j, created) == basis(s)


def test_sign_coherence_projections():
    # delete-then-insert projects onto sequences containing the value;
    # insert-then-delete onto the complement; their sum is the identity
    for s in energy_keys(6):
        v = basis(s)
        for j in range(-6, 7):
            onto_present = apply_psi(j, apply_psi_star(j, v))
            onto_absent = apply_psi_star(j, apply_psi(j, v))
            assert onto_present + onto_absent == v
            assert onto_present == (v if 2 * j in s else FockVector.zero())
            assert apply_psi(j, apply_psi_star(j, onto_present)) == onto_present


# -- Clifford generators ------------------------------------------------------

def test_t_examples():
    assert apply_t(2, basis(seq(1))) == vacuum(0)
    assert apply_t(1, vacuum(0)) == basis(seq(1))
    assert apply_t(0, vacuum(0)) == basis(seq(-1, (0,)))


def test_t_charge_shift():
    for s in energy_keys(4, charges=(-1, 0, 1)):
        for i in range(-5, 6):
            out = apply_t(i, basis(s))
            expected = s.charge - 1 if i % 2 == 0 else s.charge + 1
            assert all(key.charge == expected for key in out.support)


def test_word_examples():
    v = vacuum(0)
    assert apply_word((), v) == v
    assert apply_word((1, 2), v) + apply_word((2, 1), v) == v
    assert apply_word((3, 3), v).is_zero()


def test_clifford_relations_sweep():
    keys = energy_keys(4, charges=(-1, 0, 1))
    for i in range(-4, 5):
        for s in keys:
            v = basis(s)
            assert apply_word((i, i), v).is_zero()
            assert apply_word((i, i + 1), v) + apply_word((i + 1, i), v) == v
            for j in range(i + 2, 5):
                assert (apply_word((i, j), v) + apply_word((j, i), v)).is_zero()


# -- translation and partial sums ---------------------------------------------

def test_tau():
    assert tau(vacuum(0)) == basis(seq(1))
    assert tau(tau(vacuum(0), 1), -1) == vacuum(0)
    assert tau(basis(to_sequence((2,)))) == basis(seq(1, (2, 4)))


def test_s_bar_examples():
    assert s_bar_n(1, basis(to_sequence(()))) == basis(to_sequence((1,)))
    lhs = s_bar_n(2, basis(to_sequence((1,))))
    assert lhs == basis(to_sequence(dual(union_columns((1,), 2))))
    assert s_bar_n(3, FockVector.zero()).is_zero()


def test_s_bar_column_twist_identity():
    for n in range(5):
        for lam in partitions_bounded(n, 10):
            lhs = s_bar_n(n, basis(to_sequence(dual(lam))))
            rhs = basis(to_sequence(dual(union_columns(lam, n))))
            assert lhs == rhs, (n, lam)


def test_s_n_linearity_and_zero():
    assert s_n_op(2, FockVector.zero()).is_zero()
    v = basis(to_sequence((1,))) + 2 * basis(to_sequence((2,)))
    assert s_n_op(2, v) == s_n_op(2, basis(to_sequence((1,)))) + 2 * s_n_op(
        2, basis(to_sequence((2,)))
    )


# -- quadratic truncations ------------------------------------------------------

def test_g_q_examples():
    assert g_q_trunc(5, basis(to_sequence((2, 1)))) == basis(to_sequence((2,))) + basis(
        to_sequence((1, 1))
    )
    assert g_q_trunc(3, basis(to_sequence(()))).is_zero()
    assert g_q_trunc(4, basis(to_sequence((1,)))) == basis(to_sequence(()))


def test_g_p_examples():
    assert g_p_trunc(2, basis(to_sequence(()))) == basis(to_sequence((1,)))
    assert g_p_trunc(5, basis(to_sequence((1,)))) == basis(to_sequence((2,))) + basis(
        to_sequence((1, 1))
    )
    assert g_p_trunc(3, FockVector.zero()).is_zero()


def test_g_stability():
    for lam in partitions_up_to(8):
        base = stable_truncation(lam)
        v = basis(to_sequence(lam))
        want_q = FockVector([(to_sequence(x), 1) for x in res_set(lam)])
        want_p = FockVector([(to_sequence(x), 1) for x in ind_set(lam)])
        for bump in (0, 1, 3):
            assert g_q_trunc(base + bump, v) == want_q, (lam, bump)
            assert g_p_trunc(base + bump, v) == want_p, (lam, bump)


def test_vector_json_round_shape():
    v = -1 * basis(to_sequence((2,))) + Fraction(1, 2) * vacuum(0)
    data = v.to_json()
    assert data == [
        {"sequence": {"charge": 0, "head": []}, "coefficient": "1/2"},
        {"sequence": {"charge": 0, "head": [0, 2]}, "coefficient": "-1"},
    ]


def test_fockvector_rejects_bad_keys():
    with pytest.raises(TypeError):
        FockVector([((1, 2), 1)])
