"""Exact integer Laurent polynomials in one variable x.

This is the coefficient ring for everything else in the package: module
elements, transition matrices and edge-weight extraction all live over
Z[x, x^-1].  A polynomial is stored as a sparse exponent -> coefficient
map with no zero coefficients, so equal values always have identical
representations (safe to hash, safe to compare).
"""

from __future__ import annotations

from typing import Iterable, Mapping, Union

Coeffish = Union[int, "LaurentPolynomial"]


class LaurentPolynomial:
    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[int, int], Iterable[tuple[int, int]], int, None] = None):
        data: dict[int, int] = {}
        if terms is None:
            pass
        elif isinstance(terms, int):
            if terms:
                data[0] = terms
        else:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for k, c in items:
                c = data.get(k, 0) + c
                if c:
                    data[k] = c
                elif k in data:
                    del data[k]
        self._terms = data

    @classmethod
    def _raw(cls, data: dict[int, int]) -> "LaurentPolynomial":
        # internal: caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p._terms = data
        return p

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        if coefficient == 0:
            return ZERO
        return cls._raw({exponent: coefficient})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def coeff(self, exponent: int) -> int:
        """Coefficient of x^exponent (0 if absent)."""
        return self._terms.get(exponent, 0)

    def eval_at_one(self) -> int:
        """Sum of all coefficients, i.e. the specialization x = 1."""
        return sum(self._terms.values())

    def bar(self) -> "LaurentPolynomial":
        """The ring involution x -> x^-1 (negate every exponent)."""
        return LaurentPolynomial._raw({-k: c for k, c in self._terms.items()})

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by the monomial x^k."""
        if k == 0:
            return self
        return LaurentPolynomial._raw({e + k: c for e, c in self._terms.items()})

    def min_exponent(self) -> int:
        return min(self._terms) if self._terms else 0

    def max_exponent(self) -> int:
        return max(self._terms) if self._terms else 0

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        if isinstance(other, LaurentPolynomial):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: Coeffish) -> "LaurentPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        data = dict(self._terms)
        for k, c in other._terms.items():
            s = data.get(k, 0) + c
            if s:
                data[k] = s
            elif k in data:
                del data[k]
        return LaurentPolynomial._raw(data)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: Coeffish) -> "LaurentPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coeffish) -> "LaurentPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Coeffish) -> "LaurentPolynomial":
        if isinstance(other, int):
            if other == 0:
                return ZERO
            if other == 1:
                return self
            return LaurentPolynomial._raw({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        data: dict[int, int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = k1 + k2
                s = data.get(k, 0) + c1 * c2
                if s:
                    data[k] = s
                elif k in data:
                    del data[k]
        return LaurentPolynomial._raw(data)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k in sorted(self._terms, reverse=True):
            c = self._terms[k]
            if k == 0:
                body = str(abs(c))
            else:
                var = "x" if k == 1 else f"x^{k}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self})"


def _coerce(value: Coeffish):
    if isinstance(value, LaurentPolynomial):
        return value
    if isinstance(value, int):
        return LaurentPolynomial(value)
    return NotImplemented


ZERO = LaurentPolynomial()
ONE = LaurentPolynomial(1)
X = LaurentPolynomial.monomial(1)
X_INV = LaurentPolynomial.monomial(-1)
X_MINUS_X_INV = LaurentPolynomial({1: 1, -1: -1})
X_PLUS_X_INV = LaurentPolynomial({1: 1, -1: 1})
