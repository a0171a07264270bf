"""Finite formal sums with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction


class FormalSum:
    """A finite linear combination of hashable basis keys over the rationals.

    Zero coefficients are never stored, so equality of term dictionaries is
    equality of vectors.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, coeff in items:
                c = data.get(key, 0) + Fraction(coeff)
                if c:
                    data[key] = c
                elif key in data:
                    del data[key]
        self._terms = data

    @classmethod
    def basis(cls, key, coeff=1):
        return cls([(key, coeff)])

    @classmethod
    def zero(cls):
        return cls()

    def items(self):
        return self._terms.items()

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda kv: kv[0])

    def coefficient(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    @property
    def support(self):
        return set(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            c = out.get(key, 0) + coeff
            if c:
                out[key] = c
            elif key in out:
                del out[key]
        result = type(self).__new__(type(self))
        result._terms = out
        return result

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, scalar):
        c = Fraction(scalar)
        result = type(self).__new__(type(self))
        result._terms = {k: c * v for k, v in self._terms.items()} if c else {}
        return result

    def apply(self, action):
        """Linear extension of a basis-level map.

        ``action(key)`` returns an iterable of (coefficient, key) pairs, or
        None for the zero vector.
        """
        out = []
        for key, coeff in self._terms.items():
            images = action(key)
            if images is None:
                continue
            for c, new_key in images:
                out.append((new_key, coeff * c))
        return type(self)(out)

    def map_keys(self, fn):
        return type(self)([(fn(k), c) for k, c in self._terms.items()])

    def __repr__(self):
        if not self._terms:
            return f"{type(self).__name__}(0)"
        body = " + ".join(f"{c}*{k}" for k, c in self.sorted_items())
        return f"{type(self).__name__}({body})"
