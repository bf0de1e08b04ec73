"""Exact cyclotomic arithmetic in the group ring Z[x]/(x^N - 1).

Elements are stored with a full vector of N coefficients (integers or
Fractions) and multiplied by cyclic convolution, which keeps products
cheap and exact.  Canonical questions (equality, rationality) are decided
by reducing modulo the N-th cyclotomic polynomial, i.e. in Q(zeta_N)
itself, where 1, zeta, ..., zeta^(phi(N)-1) form a basis.
"""
from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd


class NotRationalError(ValueError):
    """An element expected to be a rational integer is not."""


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("order must be positive")
    # x^n - 1 divided by the cyclotomic polynomials of all proper divisors.
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _polydiv_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _polydiv_exact(num: list, den: list) -> list:
    """Exact quotient of integer polynomials (den monic, remainder 0)."""
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c == 0:
            continue
        out[i - dn] = c
        for j, dj in enumerate(den):
            num[i - dn + j] -= c * dj
    if any(num):
        raise AssertionError("division was not exact")
    return out


def _polymod(coeffs: list, den: tuple[int, ...]) -> list:
    """Remainder of coeffs modulo the monic integer polynomial den."""
    rem = list(coeffs)
    dn = len(den) - 1
    for i in range(len(rem) - 1, dn - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        for j, dj in enumerate(den):
            rem[i - dn + j] -= c * dj
    return rem[:dn]


class CyclotomicElement:
    """Element of Z[zeta_N] (or Q(zeta_N)) in group-ring representation."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=None):
        if order < 1:
            raise ValueError("order must be positive")
        self.order = order
        if coeffs is None:
            coeffs = (0,) * order
        else:
            coeffs = tuple(coeffs)
            if len(coeffs) != order:
                raise ValueError("coefficient vector must have length = order")
        self.coeffs = coeffs

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> CyclotomicElement:
        c = [0] * order
        c[power % order] = 1
        return cls(order, c)

    @classmethod
    def constant(cls, order: int, value) -> CyclotomicElement:
        c = [0] * order
        c[0] = value
        return cls(order, c)

    def _coerce(self, other) -> CyclotomicElement:
        if isinstance(other, CyclotomicElement):
            if other.order != self.order:
                raise ValueError("mixed cyclotomic orders")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicElement.constant(self.order, other)
        raise TypeError(f"cannot coerce {type(other)!r}")

    def __add__(self, other) -> CyclotomicElement:
        other = self._coerce(other)
        return CyclotomicElement(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CyclotomicElement:
        return CyclotomicElement(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> CyclotomicElement:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> CyclotomicElement:
        return self._coerce(other) - self

    def __mul__(self, other) -> CyclotomicElement:
        if isinstance(other, (int, Fraction)):
            return CyclotomicElement(self.order, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        n = self.order
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                k = i + j
                if k >= n:
                    k -= n
                out[k] += a * b
        return CyclotomicElement(n, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> CyclotomicElement:
        if e < 0:
            raise ValueError("negative powers not supported")
        result = CyclotomicElement.constant(self.order, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def galois(self, u: int) -> CyclotomicElement:
        """Apply zeta -> zeta^u; u must be a unit modulo the order."""
        n = self.order
        u %= n
        if gcd(u, n) != 1:
            raise ValueError("substitution exponent must be coprime to the order")
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            out[(i * u) % n] += a
        return CyclotomicElement(n, out)

    def conjugate(self) -> CyclotomicElement:
        return self.galois(self.order - 1) if self.order > 1 else self

    def promote(self, order_to: int) -> CyclotomicElement:
        """Re-express in Z[zeta_M] for a multiple M of the current order."""
        if order_to % self.order != 0:
            raise ValueError("target order must be a multiple of the current order")
        step = order_to // self.order
        out = [0] * order_to
        for i, a in enumerate(self.coeffs):
            out[i * step] += a
        return CyclotomicElement(order_to, out)

    def reduced(self) -> tuple:
        """Canonical coordinates on the basis 1, zeta, ..., zeta^(phi(N)-1)."""
        return tuple(_polymod(list(self.coeffs), cyclotomic_polynomial(self.order)))

    def is_zero(self) -> bool:
        return not any(self.reduced())

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CyclotomicElement.constant(self.order, other)
        if not isinstance(other, CyclotomicElement) or other.order != self.order:
            return NotImplemented
        return self.reduced() == other.reduced()

    def __hash__(self) -> int:
        return hash((self.order, self.reduced()))

    def is_rational(self) -> bool:
        red = self.reduced()
        return not any(red[1:])

    def rational_value(self):
        """The element as a rational number; raises if it is not one."""
        red = self.reduced()
        if any(red[1:]):
            raise NotRationalError(f"element is not rational: {self!r}")
        return red[0] if red else 0

    def is_galois_invariant(self) -> bool:
        n = self.order
        return all(self.galois(u) == self for u in range(2, n) if gcd(u, n) == 1)

    def embedding(self, root_power: int = 1) -> complex:
        """Numerical image under zeta -> exp(2*pi*i*root_power/N)."""
        n = self.order
        z = cmath.exp(2j * cmath.pi * root_power / n)
        value = 0j
        acc = 1 + 0j
        for a in self.coeffs:
            if a:
                value += float(a) * acc
            acc *= z
        return value

    def norm_squared_exact(self):
        """|self|^2 as an exact rational when self * conj(self) is rational.

        For the character sums in this package the product with the complex
        conjugate is Galois invariant, so this succeeds and gives the square
        of the archimedean absolute value with no floating point.
        """
        return (self * self.conjugate()).rational_value()

    def __repr__(self) -> str:
        return f"CyclotomicElement(order={self.order}, reduced={list(self.reduced())})"

    def __str__(self) -> str:
        red = self.reduced()
        sym = f"z{self.order}"
        parts = []
        for i, a in enumerate(red):
            if a == 0:
                continue
            if i == 0:
                parts.append(str(a))
            elif i == 1:
                parts.append(f"{a}*{sym}" if a != 1 else sym)
            else:
                parts.append(f"{a}*{sym}^{i}" if a != 1 else f"{sym}^{i}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"
