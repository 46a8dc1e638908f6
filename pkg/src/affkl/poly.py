"""Dense integer polynomials in the Hecke parameter $q$.

A polynomial is a tuple of coefficients, index $i$ holding the coefficient
of $q^i$.  The zero polynomial is the empty tuple; every other value carries
no trailing zeros, so two polynomials are equal iff their tuples are.
"""

from __future__ import annotations

from typing import Iterable


class Polynomial:
    """Immutable dense polynomial with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> Polynomial:
        return _ZERO

    @classmethod
    def one(cls) -> Polynomial:
        return _ONE

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> Polynomial:
        """coeff * q**power"""
        if coeff == 0:
            return _ZERO
        return cls([0] * power + [coeff])

    @classmethod
    def ones(cls, degree: int) -> Polynomial:
        """1 + q + ... + q**degree"""
        return cls([1] * (degree + 1))

    @classmethod
    def even_ones(cls, degree: int) -> Polynomial:
        """1 + q^2 + q^4 + ... + q**degree (degree must be even)"""
        if degree % 2 != 0:
            raise ValueError("degree must be even")
        return cls(1 if i % 2 == 0 else 0 for i in range(degree + 1))

    # -- queries -----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: Polynomial) -> Polynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __sub__(self, other: Polynomial) -> Polynomial:
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return Polynomial(out)

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            return Polynomial(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> Polynomial:
        """Multiply by q**k."""
        if not self.coeffs or k == 0:
            return self if self.coeffs or k == 0 else _ZERO
        return Polynomial((0,) * k + self.coeffs)

    def reverse(self, n: int) -> Polynomial:
        """q**n * P(1/q); requires n >= degree."""
        if n < self.degree:
            raise ValueError("reversal length below degree")
        out = [0] * (n + 1)
        for i, c in enumerate(self.coeffs):
            out[n - i] = c
        return Polynomial(out)

    # -- comparison / hashing ------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- rendering -------------------------------------------------------------

    def __str__(self) -> str:
        """Ascending powers with explicit coefficients, e.g. ``1+2q+q^2``."""
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                var = "q" if i == 1 else f"q^{i}"
                body = var if abs(c) == 1 else f"{abs(c)}{var}"
            sign = "-" if c < 0 else ("+" if parts else "")
            parts.append(sign + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)})"


_ZERO = Polynomial()
_ONE = Polynomial([1])

ZERO = Polynomial.zero()
ONE = Polynomial.one()
Q = Polynomial.monomial(1)
