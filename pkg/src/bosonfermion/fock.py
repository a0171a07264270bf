"""The fermionic Fock space and the Clifford generator action.

Vectors are finite rational combinations of charged sequences.  The odd and
even generators act by contraction and insertion; the vertex-operator style
partial sums are evaluated over the finite index window that can act
nontrivially on the support of the input.
"""

from __future__ import annotations

from .formal import FormalSum
from .partitions import ChargedSequence

CliffordWord = tuple[int, ...]


class FockVector(FormalSum):
    """Finite rational linear combination of charged sequences."""

    def __init__(self, terms=None):
        super().__init__(terms)
        for key in self._terms:
            if not isinstance(key, ChargedSequence):
                raise TypeError(f"FockVector keys must be ChargedSequence, got {key!r}")

    def to_json(self):
        return [
            {
                "sequence": {"charge": k.charge, "head": list(k.head)},
                "coefficient": f"{c.numerator}/{c.denominator}" if c.denominator != 1 else str(c.numerator),
            }
            for k, c in self.sorted_items()
        ]


def vacuum(charge: int = 0) -> FockVector:
    return FockVector.basis(ChargedSequence.vacuum(charge))


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def _psi_key(j: int, key: ChargedSequence):
    ins = key.insert(2 * j)
    if ins is None:
        return None
    n, seq = ins
    return [(_sign(n), seq)]


def _psi_star_key(j: int, key: ChargedSequence):
    rem = key.remove(2 * j)
    if rem is None:
        return None
    n, seq = rem
    return [(_sign(n - 1), seq)]


def apply_psi(j: int, v: FockVector) -> FockVector:
    """Insert the value 2j with the fermionic sign; zero where 2j is present."""
    return v.apply(lambda key: _psi_key(j, key))


def apply_psi_star(j: int, v: FockVector) -> FockVector:
    """Delete the value 2j with the fermionic sign; zero where 2j is absent."""
    return v.apply(lambda key: _psi_star_key(j, key))


def apply_t(i: int, v: FockVector) -> FockVector:
    """The Clifford generator: insertion for even i, double contraction for odd.

    Even generators lower the charge by one, odd generators raise it by one.
    """
    if i % 2 == 0:
        return apply_psi(i // 2, v)
    j = (i + 1) // 2
    return apply_psi_star(j, v) + apply_psi_star(j - 1, v)


def apply_word(word, v: FockVector) -> FockVector:
    """Right-to-left composition of generators: the last index acts first."""
    for i in reversed(tuple(word)):
        v = apply_t(i, v)
    return v


def tau(v: FockVector, steps: int = 1) -> FockVector:
    """Shift every entry by 2*steps; the charge moves by steps."""
    return v.map_keys(lambda key: key.shift(steps))


def s_bar_n(n: int, v: FockVector) -> FockVector:
    """Shifted alternating sum of odd generators with indices up to n.

    Only indices i with 2i or 2i+2 in the support can contribute, which makes
    the a priori infinite lower range finite.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = FockVector.zero()
    for key, coeff in v.items():
        lo = key.value(1) // 2 - 1
        for i in range(lo, n + 1):
            total = total + (coeff * _sign(i)) * apply_t(2 * i + 1, FockVector.basis(key))
    return tau(total, -1)


def s_n_op(n: int, v: FockVector) -> FockVector:
    """Shifted alternating sum of even generators with indices down to -n.

    Insertions at or beyond the tail vanish, which bounds the upper range.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = FockVector.zero()
    for key, coeff in v.items():
        hi = key.first_tail_value // 2 - 1
        for i in range(-n, hi + 1):
            total = total + (coeff * _sign(i)) * apply_t(2 * i, FockVector.basis(key))
    return tau(total, 1)


def g_q_trunc(N: int, v: FockVector) -> FockVector:
    """Truncation of the quadratic expression acting as the box-removal operator."""
    if N < 1:
        raise ValueError("N must be positive")
    total = FockVector.zero()
    for i in range(-N, 1):
        total = total + apply_word((2 * i, 2 * i - 1), v)
    for i in range(1, N + 1):
        total = total - apply_word((2 * i - 1, 2 * i), v)
    return total


def g_p_trunc(N: int, v: FockVector) -> FockVector:
    """Truncation of the quadratic expression acting as the box-addition operator."""
    if N < 1:
        raise ValueError("N must be positive")
    total = FockVector.zero()
    for i in range(-N, 1):
        total = total + apply_word((2 * i, 2 * i + 1), v)
    for i in range(1, N + 1):
        total = total - apply_word((2 * i + 1, 2 * i), v)
    return total


def stable_truncation(p) -> int:
    """A truncation order beyond which the quadratic sums act as removal/addition.

    Large enough to cover every present value below the vacuum region and
    every hole above it for the charge-0 sequence of the partition p.
    """
    rows = len(p)
    cols = p[0] if p else 0
    return rows + cols + 2
