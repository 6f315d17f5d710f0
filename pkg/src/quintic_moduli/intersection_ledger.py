"""Exact intersection theory on the triple blow-up of the dual plane.

For a general quintic, the line-to-moduli map is undefined exactly at the
45 cusps of the degree-20 dual curve (the inflectional lines).  Blowing
each cusp up three times yields a surface on which the map is a morphism;
this module encodes the resulting intersection pairing on the basis

    Dtilde, E1^(i), E2^(i), E3^(i)   (i = 1..n_cusps)

and extracts the mapping degree from it:

  * Dtilde^2 = 130 (= 20^2 minus the drop 2^2 + 1^2 + 1^2 per cusp),
  * per cusp E1^2 = -3, E2^2 = -2, E3^2 = -1, and E3 meets E1, E2 and
    Dtilde transversally; every other basis pairing vanishes,
  * the discriminant curve in the weighted plane WP(1, 2, 3) is a degree-2
    section, so it has self-intersection 4/6 = 2/3 (cross-checked against
    the boundary of the moduli space of 5-pointed rational curves),
  * the projection formula forces pullback multiplicities (2/3, 1, 2) on
    (E1, E2, E3), giving pullback self-intersection 280 and degree
    280 / (2/3) = 420.

The completely independent count "two per bitangent, four per flex" gives
the same 420.  Everything here is exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .linalg import solve
from .scalars import QQ

#: Multiplicity of the strict transform of the dual curve in the pullback of
#: the discriminant: the map is unramified over a general point of the dual
#: curve, so this coefficient is exactly 1 (an input assumption here).
STRICT_TRANSFORM_COEFFICIENT = Fraction(1)


class Ledger:
    """Symmetric intersection pairing on the blow-up basis.

    Basis order: index 0 is Dtilde, then (E1, E2, E3) per cusp.  The
    per-cusp self-intersections are parameters so synthetic variants can
    exercise the solver; defaults are the geometric values.
    """

    def __init__(
        self,
        n_cusps: int,
        e1_sq: Fraction = Fraction(-3),
        e2_sq: Fraction = Fraction(-2),
        e3_sq: Fraction = Fraction(-1),
        dtilde_sq: Fraction = Fraction(130),
    ):
        if n_cusps < 1:
            raise ValueError("need at least one cusp")
        self.n_cusps = n_cusps
        self.e_sq = (Fraction(e1_sq), Fraction(e2_sq), Fraction(e3_sq))
        self.dtilde_sq = Fraction(dtilde_sq)

    @property
    def dim(self) -> int:
        return 1 + 3 * self.n_cusps

    def pairing(self, a: int, b: int) -> Fraction:
        """Intersection number of two basis classes."""
        if not (0 <= a < self.dim and 0 <= b < self.dim):
            raise IndexError("basis index out of range")
        if a > b:
            a, b = b, a
        if a == b:
            if a == 0:
                return self.dtilde_sq
            return self.e_sq[(a - 1) % 3]
        if a == 0:
            # Dtilde meets only the last exceptional divisor of each cusp
            return Fraction(1) if (b - 1) % 3 == 2 else Fraction(0)
        cusp_a, kind_a = divmod(a - 1, 3)
        cusp_b, kind_b = divmod(b - 1, 3)
        if cusp_a != cusp_b:
            return Fraction(0)
        # within a cusp, E3 meets E1 and E2; E1.E2 = 0
        if 2 in (kind_a, kind_b):
            return Fraction(1)
        return Fraction(0)

    def matrix(self) -> list[list[Fraction]]:
        return [[self.pairing(a, b) for b in range(self.dim)] for a in range(self.dim)]


@dataclass(frozen=True)
class DivisorClass:
    """Formal rational combination of the ledger basis classes."""

    coefficients: tuple[Fraction, ...]

    @classmethod
    def from_parts(
        cls, ledger: Ledger, dtilde: Fraction, per_cusp: Sequence[Fraction]
    ) -> "DivisorClass":
        """Class dtilde*Dtilde + sum over cusps of (a E1 + b E2 + c E3)."""
        if len(per_cusp) != 3:
            raise ValueError("per-cusp part must be (a, b, c)")
        coeffs = [Fraction(dtilde)]
        for _ in range(ledger.n_cusps):
            coeffs.extend(Fraction(x) for x in per_cusp)
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls, ledger: Ledger) -> "DivisorClass":
        return cls((Fraction(0),) * ledger.dim)


def build_ledger(n_cusps: int) -> Ledger:
    """Ledger for the triple blow-up at ``n_cusps`` cusps of the dual curve.

    For the quintic case (45 cusps) the stored Dtilde^2 = 130 is recomputed
    from the independent bookkeeping 20^2 - 45*(2^2 + 1^2 + 1^2): the dual
    curve has degree 20 and passes through each cusp with multiplicity 2,
    then once through each of the next two infinitely-near points.
    """
    ledger = Ledger(n_cusps)
    if n_cusps == 45:
        drop = sum(m * m for m in (2, 1, 1))
        recomputed = Fraction(20 * 20 - 45 * drop)
        if recomputed != ledger.dtilde_sq:
            raise ArithmeticError("blow-up bookkeeping for Dtilde^2 failed")
    return ledger


def self_intersection(cls: DivisorClass, ledger: Ledger) -> Fraction:
    """Exact value of the intersection quadratic form."""
    v = cls.coefficients
    if len(v) != ledger.dim:
        raise ValueError("class does not match ledger basis")
    total = ledger.dtilde_sq * v[0] * v[0]
    e1s, e2s, e3s = ledger.e_sq
    for i in range(ledger.n_cusps):
        a, b, c = v[1 + 3 * i], v[2 + 3 * i], v[3 + 3 * i]
        total += e1s * a * a + e2s * b * b + e3s * c * c
        total += 2 * c * (a + b)  # E3.E1 = E3.E2 = 1
        total += 2 * v[0] * c  # Dtilde.E3 = 1
    return total


def solve_pullback_multiplicities(
    ledger: Ledger, delta_sq: Fraction = Fraction(2, 3)
) -> tuple[Fraction, Fraction, Fraction]:
    """Multiplicities (a, b, c) of (E1, E2, E3) in the discriminant pullback.

    The pullback class is Dtilde + a E1 + b E2 + c E3 per cusp (coefficient
    1 on Dtilde is an input assumption, see STRICT_TRANSFORM_COEFFICIENT).
    Pushing forward against each contracted E-divisor kills its pairing, and
    E3 maps isomorphically onto the discriminant, whose self-intersection is
    ``delta_sq``; this yields one linear equation per exceptional divisor.
    """
    rows, rhs = projection_equations(ledger, delta_sq)
    try:
        a, b, c = solve(rows, rhs, QQ)
    except ValueError as exc:
        raise ArithmeticError(f"projection-formula system is singular: {exc}") from exc
    return a, b, c


def projection_equations(
    ledger: Ledger, delta_sq: Fraction = Fraction(2, 3)
) -> tuple[list[list[Fraction]], list[Fraction]]:
    """The three linear equations (rows, rhs) in the unknowns (a, b, c)."""
    rows = []
    rhs = []
    # pair the unknown class with E1, E2, E3 of one cusp (index 1..3)
    for k in range(1, 4):
        rows.append([ledger.pairing(j, k) for j in (1, 2, 3)])
        base = STRICT_TRANSFORM_COEFFICIENT * ledger.pairing(0, k)
        target = Fraction(delta_sq) if k == 3 else Fraction(0)
        rhs.append(target - base)
    return rows, rhs


def wps_section_self_intersection(
    weights: tuple[int, int, int] = (1, 2, 3), k: int = 2
) -> Fraction:
    """Self-intersection of a degree-k divisor on a weighted projective plane."""
    w1, w2, w3 = weights
    if min(w1, w2, w3) <= 0 or k <= 0:
        raise ValueError("weights and degree must be positive")
    return Fraction(k * k, w1 * w2 * w3)


def m05_boundary_matrix() -> list[list[int]]:
    """Pairing of the ten boundary (-1)-curves of the 5-pointed moduli space.

    Boundary classes are indexed by 2-element subsets of the 5 markings;
    two distinct classes meet exactly when the subsets are disjoint.
    """
    labels = list(combinations(range(5), 2))
    mat = []
    for s in labels:
        row = []
        for t in labels:
            if s == t:
                row.append(-1)
            elif not set(s) & set(t):
                row.append(1)
            else:
                row.append(0)
        mat.append(row)
    return mat


def m05_cross_check() -> Fraction:
    """Discriminant self-intersection via the 5-pointed moduli space.

    The boundary divisor is the sum of the ten (-1)-curves, its pullback of
    the discriminant is twice that, and forgetting the marking order has
    degree 120: (2*boundary)^2 / 120 = 4 * 20 / 120 = 2/3.
    """
    mat = m05_boundary_matrix()
    boundary_sq = Fraction(sum(sum(row) for row in mat))
    if boundary_sq != 20:
        raise ArithmeticError("boundary self-intersection bookkeeping failed")
    return Fraction(4) * boundary_sq / Fraction(120)


def degree_via_ledger(
    delta_sq: Fraction | None = None, pullback_sq: Fraction | None = None
) -> Fraction:
    """Mapping degree as (pullback of discriminant)^2 / discriminant^2.

    With no arguments this runs the full quintic pipeline (result 420);
    synthetic values can be supplied for formula sanity checks.
    """
    if delta_sq is None:
        delta_sq = wps_section_self_intersection()
    delta_sq = Fraction(delta_sq)
    if delta_sq == 0:
        raise ZeroDivisionError("discriminant self-intersection must be nonzero")
    if pullback_sq is None:
        ledger = build_ledger(45)
        a, b, c = solve_pullback_multiplicities(ledger, delta_sq)
        pullback = DivisorClass.from_parts(
            ledger, STRICT_TRANSFORM_COEFFICIENT, (a, b, c)
        )
        pullback_sq = self_intersection(pullback, ledger)
    return Fraction(pullback_sq) / delta_sq


def combinatorial_degree(bitangents: int, flexes: int) -> int:
    """Preimage count of a maximally degenerate 5-point configuration.

    A three-component stable curve is hit twice per bitangent (the two
    tangency components can be swapped) and four times per flex (either
    outer component can carry the line, with its two markings swappable).
    """
    if bitangents < 0 or flexes < 0:
        raise ValueError("counts must be nonnegative")
    return 2 * bitangents + 4 * flexes


def derivation_table() -> list[dict]:
    """The full exact derivation, one record per quantity."""
    ledger = build_ledger(45)
    delta_wp = wps_section_self_intersection()
    delta_m05 = m05_cross_check()
    a, b, c = solve_pullback_multiplicities(ledger, delta_wp)
    pullback = DivisorClass.from_parts(ledger, STRICT_TRANSFORM_COEFFICIENT, (a, b, c))
    pb_sq = self_intersection(pullback, ledger)
    degree = degree_via_ledger()
    rows = [
        {
            "quantity": "delta_sq_weighted_plane",
            "value": delta_wp,
            "note": "discriminant is a degree-2 section of WP(1,2,3): 2^2/(1*2*3)",
        },
        {
            "quantity": "delta_sq_m05_route",
            "value": delta_m05,
            "note": "via the ten boundary (-1)-curves of the 5-pointed moduli space",
        },
        {
            "quantity": "dtilde_sq",
            "value": ledger.dtilde_sq,
            "note": "strict transform of the degree-20 dual curve after 45 triple blow-ups",
        },
        {
            "quantity": "exceptional_self_intersections",
            "value": ledger.e_sq,
            "note": "(E1^2, E2^2, E3^2) per cusp",
        },
        {
            "quantity": "pullback_multiplicities",
            "value": (a, b, c),
            "note": "solved from the projection formula; Dtilde coefficient fixed at 1",
        },
        {
            "quantity": "pullback_sq",
            "value": pb_sq,
            "note": "self-intersection of the discriminant pullback",
        },
        {
            "quantity": "degree",
            "value": degree,
            "note": "pullback_sq / delta_sq",
        },
        {
            "quantity": "combinatorial_degree",
            "value": Fraction(combinatorial_degree(120, 45)),
            "note": "2 per bitangent (120) + 4 per flex (45), independent route",
        },
    ]
    return rows
