"""Quotient rings GF(p)[u]/(h) with dynamic splitting on zero divisors.

For a squarefree modulus h the quotient is a product of fields, one per
irreducible factor.  Computations proceed as if over a single field; the
moment an inversion hits a zero divisor, the attempted gcd exposes a
nontrivial factor of h and a ``SplitNeeded`` escape carries it upward.
The caller reruns the computation modulo each factor.  This decides
questions "at every root of h simultaneously" without ever factoring h
into irreducibles.
"""

from __future__ import annotations

from typing import Sequence

from .elimination import xgcd_uni
from .polys import UniPoly
from .scalars import PrimeField, Ring


class SplitNeeded(Exception):
    """A zero divisor was hit; ``factor`` properly divides the modulus."""

    def __init__(self, factor: UniPoly):
        super().__init__(f"modulus splits off a degree-{factor.degree} factor")
        self.factor = factor


class ResidueRing(Ring):
    """GF(p)[u] modulo a monic polynomial; elements are reduced ``UniPoly``."""

    def __init__(self, modulus: UniPoly):
        if not isinstance(modulus.field, PrimeField):
            raise ValueError("residue rings are built over prime fields")
        if modulus.degree < 1:
            raise ValueError("modulus must be nonconstant")
        self.base = modulus.field
        self.modulus = modulus.monic()
        self.zero = UniPoly.zero(self.base)
        self.one = UniPoly.constant(self.base, self.base.one)

    @property
    def degree(self) -> int:
        return self.modulus.degree

    def generator(self) -> UniPoly:
        """The class of u itself."""
        return UniPoly.x(self.base) % self.modulus

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return (a * b) % self.modulus

    def from_int(self, n):
        return UniPoly.constant(self.base, self.base.from_int(n))

    def from_fraction(self, q):
        return UniPoly.constant(self.base, self.base.from_fraction(q))

    def from_base(self, c) -> UniPoly:
        """Embed a GF(p) scalar."""
        return UniPoly.constant(self.base, c)

    def reduce(self, poly: UniPoly) -> UniPoly:
        """The class of an arbitrary GF(p)[u] polynomial."""
        return poly % self.modulus

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def inv(self, a):
        """Inverse of a unit; raises SplitNeeded on a zero divisor."""
        if a.is_zero():
            raise ZeroDivisionError("inverse of zero in residue ring")
        d, s, _ = xgcd_uni(a, self.modulus)
        if d.degree == 0:
            return s % self.modulus
        if d.degree < self.modulus.degree:
            raise SplitNeeded(d)
        raise ZeroDivisionError("inverse of zero in residue ring")

    def is_unit(self, a) -> bool:
        """True/False for unit/zero; zero divisors raise SplitNeeded."""
        if a.is_zero():
            return False
        d, _, _ = xgcd_uni(a, self.modulus)
        if d.degree == 0:
            return True
        if d.degree < self.modulus.degree:
            raise SplitNeeded(d)
        return False

    def __repr__(self):
        return f"ResidueRing({self.modulus!r})"


def split_modulus(ring: ResidueRing, factor: UniPoly) -> tuple[UniPoly, UniPoly]:
    """The two complementary moduli exposed by a SplitNeeded factor."""
    h = ring.modulus
    other = (h // factor).monic()
    return factor.monic(), other


def residue_poly_trim(coeffs: list, ring: ResidueRing) -> list:
    coeffs = list(coeffs)
    while coeffs and ring.is_zero(coeffs[-1]):
        coeffs.pop()
    return coeffs


def residue_poly_gcd(a: Sequence, b: Sequence, ring: ResidueRing) -> list:
    """Monic gcd of two polynomials with residue-ring coefficients.

    Behaves like the field case branchwise; leading-coefficient inversions
    may raise SplitNeeded, which the caller handles by splitting.
    """
    a = residue_poly_trim(a, ring)
    b = residue_poly_trim(b, ring)
    while b:
        db = len(b) - 1
        inv_lb = ring.inv(b[-1])
        r = list(a)
        while len(r) - 1 >= db:
            c = ring.mul(r[-1], inv_lb)
            shift = len(r) - 1 - db
            for j in range(db + 1):
                r[shift + j] = ring.sub(r[shift + j], ring.mul(c, b[j]))
            r.pop()  # top coefficient is now exactly zero
            r = residue_poly_trim(r, ring)
        a, b = b, r
    if not a:
        return []
    inv_la = ring.inv(a[-1])
    return [ring.mul(inv_la, c) for c in a]
