"""Binary forms and transvectants over an arbitrary exact coefficient ring.

A form of order n in (x, y) is a coefficient list of length n + 1 where
``coeffs[k]`` multiplies ``x**(n-k) * y**k``.  The order is part of the
data: top coefficients may vanish (a root at (1:0)); the zero form of a
given order is allowed, since derivatives and transvectants produce it.

Coefficients live in any ``Ring`` from :mod:`.scalars` /
:mod:`.polys` (rationals, a prime field, or a polynomial ring for
symbolic identities), so the same covariant code serves numeric and
symbolic callers.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .polys import UniPoly
from .scalars import Field, Ring


class BinaryForm:
    """Homogeneous binary form of a fixed order."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs: Sequence):
        if not coeffs:
            raise ValueError("a binary form needs at least one coefficient")
        self.ring = ring
        self.coeffs = tuple(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(c) for c in self.coeffs)

    @classmethod
    def zero(cls, ring: Ring, order: int) -> "BinaryForm":
        return cls(ring, [ring.zero] * (order + 1))

    def _check(self, other: "BinaryForm"):
        if self.ring is not other.ring:
            raise ValueError("ring mismatch between binary forms")

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        self._check(other)
        if self.order != other.order:
            raise ValueError("cannot add forms of different orders")
        R = self.ring
        return BinaryForm(R, [R.add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        self._check(other)
        if self.order != other.order:
            raise ValueError("cannot subtract forms of different orders")
        R = self.ring
        return BinaryForm(R, [R.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "BinaryForm":
        R = self.ring
        return BinaryForm(R, [R.neg(c) for c in self.coeffs])

    def __mul__(self, other: "BinaryForm") -> "BinaryForm":
        self._check(other)
        R = self.ring
        out = [R.zero] * (self.order + other.order + 1)
        for i, a in enumerate(self.coeffs):
            if R.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = R.add(out[i + j], R.mul(a, b))
        return BinaryForm(R, out)

    def scale(self, c) -> "BinaryForm":
        R = self.ring
        return BinaryForm(R, [R.mul(c, a) for a in self.coeffs])

    def dx(self) -> "BinaryForm":
        """Partial derivative in x; drops the order by one."""
        n = self.order
        if n == 0:
            raise ValueError("cannot differentiate an order-0 form as a form")
        R = self.ring
        return BinaryForm(R, [R.mul(R.from_int(n - k), self.coeffs[k]) for k in range(n)])

    def dy(self) -> "BinaryForm":
        n = self.order
        if n == 0:
            raise ValueError("cannot differentiate an order-0 form as a form")
        R = self.ring
        return BinaryForm(R, [R.mul(R.from_int(k + 1), self.coeffs[k + 1]) for k in range(n)])

    def eval(self, x, y):
        R = self.ring
        n = self.order
        xp = [R.one]
        yp = [R.one]
        for _ in range(n):
            xp.append(R.mul(xp[-1], x))
            yp.append(R.mul(yp[-1], y))
        acc = R.zero
        for k, c in enumerate(self.coeffs):
            if not R.is_zero(c):
                acc = R.add(acc, R.mul(c, R.mul(xp[n - k], yp[k])))
        return acc

    def substituted(self, m: Sequence[Sequence]) -> "BinaryForm":
        """Apply the linear substitution (x, y) -> (a x + b y, c x + d y).

        ``m = ((a, b), (c, d))`` with entries in the coefficient ring.
        """
        R = self.ring
        (a, b), (c, d) = m
        lin1 = BinaryForm(R, [a, b])
        lin2 = BinaryForm(R, [c, d])
        n = self.order
        p1 = [BinaryForm(R, [R.one])]
        p2 = [BinaryForm(R, [R.one])]
        for _ in range(n):
            p1.append(p1[-1] * lin1)
            p2.append(p2[-1] * lin2)
        acc = BinaryForm.zero(R, n)
        for k, coeff in enumerate(self.coeffs):
            if not R.is_zero(coeff):
                acc = acc + (p1[n - k] * p2[k]).scale(coeff)
        return acc

    def to_unipoly(self) -> UniPoly:
        """Dehomogenise at y = 1, i.e. f(X, 1) as a univariate polynomial."""
        if not isinstance(self.ring, Field):
            raise ValueError("dehomogenisation needs field coefficients")
        return UniPoly(self.ring, list(reversed(self.coeffs)))

    def swapped(self) -> "BinaryForm":
        """The form with x and y interchanged."""
        return BinaryForm(self.ring, tuple(reversed(self.coeffs)))

    def __eq__(self, other):
        return (
            isinstance(other, BinaryForm)
            and self.ring is other.ring
            and self.order == other.order
            and all(
                self.ring.is_zero(self.ring.sub(a, b))
                for a, b in zip(self.coeffs, other.coeffs)
            )
        )

    def __hash__(self):
        return hash((id(self.ring), self.coeffs))

    def __repr__(self):
        return f"BinaryForm({self.ring!r}, {list(self.coeffs)!r})"


class BinaryQuintic(BinaryForm):
    """An order-5 binary form, required to be nonzero."""

    def __init__(self, ring: Ring, coeffs: Sequence):
        if len(coeffs) != 6:
            raise ValueError("a binary quintic has exactly 6 coefficients")
        super().__init__(ring, coeffs)
        if self.is_zero():
            raise ValueError("the zero form is not a valid binary quintic")

    @classmethod
    def from_ints(cls, ring: Ring, ints: Sequence[int]) -> "BinaryQuintic":
        return cls(ring, [ring.from_int(n) for n in ints])


def transvectant(g: BinaryForm, h: BinaryForm, k: int) -> BinaryForm:
    """k-th transvectant of two forms, with the symmetric factorial scaling.

    (g, h)_k = ((m-k)! (n-k)!)/(m! n!) * sum_r (-1)^r C(k, r)
               * d^k g/dx^(k-r) dy^r * d^k h/dx^r dy^(k-r)

    Result order: m + n - 2k.  Requires k <= min(m, n).
    """
    if g.ring is not h.ring:
        raise ValueError("ring mismatch in transvectant")
    m, n = g.order, h.order
    if k > min(m, n):
        raise ValueError(f"transvectant index {k} exceeds min order {min(m, n)}")
    R = g.ring
    if k == 0:
        return g * h
    # d^r/dy^r first, then x-derivatives down from there
    g_dy = [g]
    h_dy = [h]
    for _ in range(k):
        g_dy.append(g_dy[-1].dy())
        h_dy.append(h_dy[-1].dy())
    acc = BinaryForm.zero(R, m + n - 2 * k)
    for r in range(k + 1):
        gd = g_dy[r]
        for _ in range(k - r):
            gd = gd.dx()
        hd = h_dy[k - r]
        for _ in range(r):
            hd = hd.dx()
        term = gd * hd
        c = comb(k, r)
        if r & 1:
            c = -c
        acc = acc + term.scale(R.from_int(c))
    scaling = Fraction(factorial(m - k) * factorial(n - k), factorial(m) * factorial(n))
    return acc.scale(R.from_fraction(scaling))
