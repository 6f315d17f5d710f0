"""Limits of the moduli map along arcs approaching an inflectional line.

Present the quintic near a flex as x0^3 (x0 - x1) x1 + x2 f4(x0, x1, x2)
with f4(0, 1, 0) = 1, and move a line z = alpha(t) x + beta(t) y toward
the flex line z = 0.  The limiting 5-point configuration depends only on
the leading exponents (n, m) and leading coefficients (alpha0, beta0) of
the two series:

    beta != 0 and m <= n                    -> one double point, j = 0
    alpha != 0 and (beta == 0 or m >= 2n)   -> one double point, j = 1728
    n < m < 2n and 2m > 3n                  -> j = 1728
    n < m < 2n and 2m < 3n                  -> j = 0
    2m == 3n (both leading coeffs nonzero)  -> j = 1728 * 4 alpha0^3
                                                / (4 alpha0^3 - 27 beta0^2),
                                               or two double points when
                                               that denominator vanishes

In the balanced case the rescaled limit equation is u^3 - alpha0 u -
beta0 = 0 (substitute x = t^k u into the family and keep the lowest
order), so the four surviving points are its roots plus a doubled point
at infinity and the j above is the classical one of a depressed cubic
with p = -alpha0, q = -beta0.  Note the minus sign in the denominator:
the degenerate two-double-point locus is 4 alpha0^3 = 27 beta0^2.

The symbolic path implements this table directly.  The numeric oracle
never looks at the table: it evaluates the family at small t > 0, isolates
the five complex roots in arbitrary precision, renormalises the
configuration into a spread-out chart, merges the one genuinely colliding
pair, takes the cross-ratio j, and extrapolates t -> 0 from a geometric
schedule.  Agreement of the two paths is the module's main test surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .invariants import ConfigClass, OneDouble, TwoDoubles
from .polys import MultiPoly
from .scalars import QQ

J_HARMONIC = Fraction(1728)


def _lead(coeffs: Sequence[Fraction]):
    for k, c in enumerate(coeffs):
        if c != 0:
            return k, c
    return None


class ArcSpec:
    """A pair of truncated power series (alpha(t), beta(t)) with alpha(0) = beta(0) = 0.

    ``truncation=None`` declares the coefficient lists exact (polynomial
    arcs); a finite truncation means "known below this order only" and must
    exceed max(3n, 2m) so the limit classification is decidable.  An
    all-zero list with finite truncation is rejected as undecidable.
    """

    __slots__ = ("alpha", "beta", "truncation")

    def __init__(self, alpha: Sequence, beta: Sequence, truncation: int | None = None):
        alpha = tuple(Fraction(c) for c in alpha)
        beta = tuple(Fraction(c) for c in beta)
        if alpha and alpha[0] != 0 or beta and beta[0] != 0:
            raise ValueError("arcs must satisfy alpha(0) = beta(0) = 0")
        if truncation is not None:
            if len(alpha) > truncation or len(beta) > truncation:
                raise ValueError("more coefficients supplied than the declared truncation")
            la, lb = _lead(alpha), _lead(beta)
            if la is None or lb is None:
                if (la is None and alpha) or (lb is None and beta) or not (alpha and beta):
                    raise ValueError(
                        "truncation insufficient: a series vanishes to its declared "
                        "order; pass truncation=None for exactly-zero series"
                    )
            needed = max(3 * la[0], 2 * lb[0])
            if truncation <= needed:
                raise ValueError(
                    f"truncation {truncation} insufficient: need more than {needed} "
                    "known orders to classify this arc"
                )
        self.alpha = alpha
        self.beta = beta
        self.truncation = truncation

    @property
    def alpha_lead(self):
        """(exponent, coefficient) of the lowest alpha term, or None."""
        return _lead(self.alpha)

    @property
    def beta_lead(self):
        return _lead(self.beta)

    def __repr__(self):
        return f"ArcSpec(alpha={list(self.alpha)}, beta={list(self.beta)}, truncation={self.truncation})"


def compose_series(outer: Sequence[Fraction], inner: Sequence[Fraction], order: int):
    """Coefficients of outer(inner(t)) up to (excluding) the given order.

    ``inner`` must have zero constant term; used for reparametrisation
    invariance checks t -> u(t) with u(0) = 0.
    """
    outer = [Fraction(c) for c in outer]
    inner = [Fraction(c) for c in inner]
    if inner and inner[0] != 0:
        raise ValueError("inner series must vanish at 0")
    out = [Fraction(0)] * order
    power = [Fraction(0)] * order  # inner^k, truncated
    if order > 0:
        power[0] = Fraction(1)
    for k, c in enumerate(outer):
        if k > 0:
            new = [Fraction(0)] * order
            for i, a in enumerate(power):
                if a == 0:
                    continue
                for j, b in enumerate(inner):
                    if i + j >= order:
                        break
                    new[i + j] += a * b
            power = new
        if c != 0:
            for i, a in enumerate(power):
                out[i] += c * a
    return out


def stretch_series(coeffs: Sequence[Fraction], k: int):
    """Base change t -> t^k on a coefficient list."""
    if k < 1:
        raise ValueError("base-change exponent must be positive")
    out = [Fraction(0)] * ((len(coeffs) - 1) * k + 1 if coeffs else 0)
    for i, c in enumerate(coeffs):
        if c != 0:
            out[i * k] = Fraction(c)
    return out


def arc_limit(arc: ArcSpec) -> ConfigClass:
    """Limit configuration class of the moduli point along the arc."""
    la, lb = arc.alpha_lead, arc.beta_lead
    if la is None and lb is None:
        raise ValueError("both series vanish: the arc does not leave the flex line")
    if lb is not None and (la is None or lb[0] <= la[0]):
        return OneDouble(Fraction(0))
    if la is not None and (lb is None or lb[0] >= 2 * la[0]):
        return OneDouble(J_HARMONIC)
    # remaining: n < m < 2n with both leads present
    n, alpha0 = la
    m, beta0 = lb
    if 2 * m > 3 * n:
        return OneDouble(J_HARMONIC)
    if 2 * m < 3 * n:
        return OneDouble(Fraction(0))
    # balanced case: limit cubic u^3 - alpha0 u - beta0, doubled point at infinity
    disc = 4 * alpha0**3 - 27 * beta0**2
    if disc == 0:
        return TwoDoubles()
    return OneDouble(J_HARMONIC * 4 * alpha0**3 / disc)


def arc_case_label(arc: ArcSpec) -> str:
    """Which branch of the case table the arc falls in (for reporting)."""
    la, lb = arc.alpha_lead, arc.beta_lead
    if la is None and lb is None:
        raise ValueError("both series vanish")
    if lb is not None and (la is None or lb[0] <= la[0]):
        return "beta-dominant-j0"
    if la is not None and (lb is None or lb[0] >= 2 * la[0]):
        return "alpha-dominant-j1728"
    n, alpha0 = la
    m, beta0 = lb
    if 2 * m > 3 * n:
        return "intermediate-j1728"
    if 2 * m < 3 * n:
        return "intermediate-j0"
    if 4 * alpha0**3 - 27 * beta0**2 == 0:
        return "balanced-degenerate"
    return "balanced"


@dataclass(frozen=True)
class ProjectivePair:
    """A point (a : b) of the projective line over the rationals."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise ValueError("(0 : 0) is not a projective point")

    def __eq__(self, other):
        if not isinstance(other, ProjectivePair):
            return NotImplemented
        return self.a * other.b == other.a * self.b

    def __hash__(self):
        raise TypeError("ProjectivePair is unhashable (projective equality)")


def exceptional_coordinate(arc: ArcSpec) -> ProjectivePair:
    """Where a balanced arc (2m = 3n) hits the last exceptional divisor.

    Two arcs with equal coordinates (alpha0^3 : beta0^2) have equal limits.
    """
    la, lb = arc.alpha_lead, arc.beta_lead
    if la is None or lb is None or 2 * lb[0] != 3 * la[0]:
        raise ValueError("exceptional coordinate is defined only for balanced arcs")
    return ProjectivePair(la[1] ** 3, lb[1] ** 2)


class FlexNormalForm:
    """The quartic f4 presenting the curve as x0^3 (x0-x1) x1 + x2 f4 = 0.

    Normalised by f4(0, 1, 0) = 1 (smoothness at the flex point).
    """

    __slots__ = ("quartic",)

    def __init__(self, quartic: MultiPoly):
        if quartic.arity != 3 or quartic.field is not QQ:
            raise ValueError("the flex quartic is a rational ternary form")
        if any(sum(e) != 4 for e in quartic.terms):
            raise ValueError("f4 must be homogeneous of degree 4")
        if quartic.terms.get((0, 4, 0)) != Fraction(1):
            raise ValueError("normalisation requires f4(0, 1, 0) = 1")
        self.quartic = quartic

    @classmethod
    def default(cls) -> "FlexNormalForm":
        """A fixed sample quartic exercising genuine x2-dependence."""
        terms = {
            (0, 4, 0): Fraction(1),
            (3, 0, 1): Fraction(1),
            (0, 0, 4): Fraction(1),
            (1, 1, 2): Fraction(1),
        }
        return cls(MultiPoly(QQ, 3, terms))

    @classmethod
    def from_terms(cls, terms: dict) -> "FlexNormalForm":
        return cls(MultiPoly(QQ, 3, {e: Fraction(c) for e, c in terms.items()}))


@dataclass(frozen=True)
class NumericLimit:
    """Extrapolated limit of the numeric oracle."""

    j: complex | None  # None when the sequence diverges (two double points)
    error: float  # estimated extrapolation error (absolute)
    diverged: bool
    points_used: int
    points_skipped: int


def default_schedule(n_points: int = 12, first: float = 0.08, ratio: float = 0.22):
    """Strictly decreasing geometric t-schedule for the oracle."""
    out = []
    t = first
    for _ in range(n_points):
        out.append(t)
        t *= ratio
    return out


def arc_limit_numeric(
    normal_form: FlexNormalForm,
    arc: ArcSpec,
    t_schedule: Sequence[float] | None = None,
    dps: int = 120,
    ambiguity_ratio: float = 3.0,
    divergence_threshold: float = 1e9,
    target_error: float = 1e-8,
    max_points: int = 20,
) -> NumericLimit:
    """Floating-point limit of j along the arc, without the case table.

    For each t in the schedule the five intersection points of the moving
    line with the curve are isolated in arbitrary-precision complex
    arithmetic, the configuration is moved to a balanced chart, the single
    colliding pair is merged, and j of the remaining quadruple is computed;
    the t -> 0 limit is extrapolated from the geometric schedule.  An
    explicit schedule is used as given; the default one is extended
    adaptively until the extrapolation's own error estimate clears
    ``target_error`` (or ``max_points`` is reached).  A t whose root
    clustering is ambiguous is skipped; if fewer than 4 points survive,
    the schedule is too coarse and a ValueError is raised.
    """
    import mpmath as mp

    adaptive = t_schedule is None
    if adaptive:
        t_schedule = default_schedule()
    if len(t_schedule) < 4:
        raise ValueError("the schedule needs at least 4 points")
    if any(t <= 0 for t in t_schedule) or any(
        t_schedule[i] <= t_schedule[i + 1] for i in range(len(t_schedule) - 1)
    ):
        raise ValueError("the schedule must be strictly decreasing and positive")

    with mp.workdps(dps):
        schedule = [mp.mpf(t) for t in t_schedule]
        ratio = schedule[-1] / schedule[-2] if adaptive else None
        js = []
        skipped = 0
        for t in schedule:
            jt = _j_at_parameter(mp, normal_form, arc, t, ambiguity_ratio)
            if jt is None:
                skipped += 1
            else:
                js.append(jt)
        while True:
            if len(js) < 4:
                raise ValueError(
                    "root clustering was ambiguous at almost every scheduled t; "
                    "refine the schedule"
                )
            tail = [abs(v) for v in js[-3:]]
            if all(v > divergence_threshold for v in tail) and tail[0] < tail[-1]:
                return NumericLimit(
                    j=None,
                    error=float("inf"),
                    diverged=True,
                    points_used=len(js),
                    points_skipped=skipped,
                )
            estimate, err = _extrapolate(mp, js)
            good_enough = err < target_error * (1 + abs(estimate))
            if not adaptive or good_enough or len(js) + skipped >= max_points:
                return NumericLimit(
                    j=complex(estimate),
                    error=float(err),
                    diverged=False,
                    points_used=len(js),
                    points_skipped=skipped,
                )
            t = schedule[-1] * ratio
            schedule.append(t)
            jt = _j_at_parameter(mp, normal_form, arc, t, ambiguity_ratio)
            if jt is None:
                skipped += 1
            else:
                js.append(jt)


def _family_coefficients(mp, normal_form: FlexNormalForm, arc: ArcSpec, t):
    """Descending coefficient list of the restricted quintic at parameter t."""
    alpha = mp.mpf(0)
    for c in reversed(arc.alpha):
        alpha = alpha * t + mp.mpf(c.numerator) / c.denominator
    beta = mp.mpf(0)
    for c in reversed(arc.beta):
        beta = beta * t + mp.mpf(c.numerator) / c.denominator
    # coeffs[k] multiplies x0^(5-k) x1^k;  x0^3 (x0 - x1) x1 = x0^4 x1 - x0^3 x1^2
    coeffs = [mp.mpf(0)] * 6
    coeffs[1] += 1
    coeffs[2] -= 1
    ap = [mp.mpf(1)]
    bp = [mp.mpf(1)]
    for _ in range(5):
        ap.append(ap[-1] * alpha)
        bp.append(bp[-1] * beta)
    for (i, j, k), c in normal_form.quartic.terms.items():
        cf = mp.mpf(c.numerator) / c.denominator
        for r in range(k + 2):  # (alpha x0 + beta x1)^(k+1)
            coeffs[j + k + 1 - r] += cf * comb(k + 1, r) * ap[r] * bp[k + 1 - r]
    return coeffs  # descending in x = x0/x1


def _j_at_parameter(mp, normal_form, arc, t, ambiguity_ratio):
    coeffs = _family_coefficients(mp, normal_form, arc, t)
    # projective roots as pairs (a : b); exact-zero top coefficients are
    # roots at infinity of the x-chart
    lead_zeros = 0
    while lead_zeros < 5 and coeffs[lead_zeros] == 0:
        lead_zeros += 1
    poly = coeffs[lead_zeros:]
    if len(poly) > 1:
        # balance extreme coefficient magnitudes before root finding:
        # x = sigma * y puts the geometric mean of the roots near 1
        deg = len(poly) - 1
        tail = next((c for c in reversed(poly) if c != 0), None)
        sigma = (abs(tail) / abs(poly[0])) ** (mp.mpf(1) / deg)
        if sigma == 0 or mp.isinf(sigma):
            sigma = mp.mpf(1)
        scaled = [c * sigma ** (deg - k) for k, c in enumerate(poly)]
        roots = mp.polyroots(scaled, maxsteps=1000, extraprec=3 * mp.mp.prec)
        roots = [r * sigma for r in roots]
    else:
        roots = []
    points = [(mp.mpc(r), mp.mpc(1)) for r in roots]
    points.extend([(mp.mpc(1), mp.mpc(0))] * lead_zeros)
    if len(points) != 5:
        return None
    points = [_unit(mp, p) for p in points]
    points = _spread_chart(mp, points)
    # the colliding pair is the unique closest one
    dists = []
    for i in range(5):
        for j in range(i + 1, 5):
            dists.append((_chordal(mp, points[i], points[j]), i, j))
    dists.sort(key=lambda d: d[0])
    if dists[0][0] > 0 and dists[1][0] / dists[0][0] < ambiguity_ratio:
        return None
    _, i, j = dists[0]
    merged = _midpoint(mp, points[i], points[j])
    quad = [p for k, p in enumerate(points) if k not in (i, j)] + [merged]
    return _j_of_quadruple(mp, quad)


def _unit(mp, p):
    a, b = p
    norm = mp.sqrt(abs(a) ** 2 + abs(b) ** 2)
    return (a / norm, b / norm)


def _chordal(mp, p, q):
    # pairs are unit-normalised, so the determinant is the chordal distance
    return abs(p[0] * q[1] - q[0] * p[1])


def _midpoint(mp, p, q):
    phase = p[0] * mp.conj(q[0]) + p[1] * mp.conj(q[1])
    if phase != 0:
        phase = phase / abs(phase)
    else:
        phase = mp.mpc(1)
    m = (p[0] + phase * q[0], p[1] + phase * q[1])
    return _unit(mp, m)


def _spread_chart(mp, points):
    """Send the best triple to (0, 1, inf) so only a true collision stays close.

    The triple is chosen (cheaply, in double precision) to maximise the
    minimal pairwise distance of the mapped configuration; the chosen map
    is then applied at working precision.
    """
    fl = [(complex(a), complex(b)) for a, b in points]

    def det_f(p, q):
        return p[0] * q[1] - q[0] * p[1]

    best = None
    for i in range(5):
        for j in range(5):
            for k in range(5):
                if len({i, j, k}) != 3:
                    continue
                c1 = det_f(fl[j], fl[k])
                c2 = det_f(fl[j], fl[i])
                mapped = []
                for p in fl:
                    a = det_f(p, fl[i]) * c1
                    b = det_f(p, fl[k]) * c2
                    norm = (abs(a) ** 2 + abs(b) ** 2) ** 0.5
                    if norm == 0:
                        break
                    mapped.append((a / norm, b / norm))
                else:
                    dmin = min(
                        abs(det_f(mapped[r], mapped[s]))
                        for r in range(5)
                        for s in range(r + 1, 5)
                    )
                    if best is None or dmin > best[0]:
                        best = (dmin, i, j, k)
    if best is None:
        return points
    _, i, j, k = best
    c1 = points[j][0] * points[k][1] - points[k][0] * points[j][1]
    c2 = points[j][0] * points[i][1] - points[i][0] * points[j][1]
    out = []
    for p in points:
        a = (p[0] * points[i][1] - points[i][0] * p[1]) * c1
        b = (p[0] * points[k][1] - points[k][0] * p[1]) * c2
        out.append(_unit(mp, (a, b)))
    return out


def _j_of_quadruple(mp, quad):
    p1, p2, p3, p4 = quad

    def det(p, q):
        return p[0] * q[1] - q[0] * p[1]

    num = det(p1, p3) * det(p2, p4)
    den = det(p1, p4) * det(p2, p3)
    # j as a homogeneous expression in the cross-ratio pair (num : den)
    s = num * num - num * den + den * den
    trip = num * den * (num - den)
    if trip == 0:
        return mp.mpf("inf")
    return 256 * s**3 / trip**2


def _extrapolate(mp, values):
    """Iterated Aitken acceleration with a last-correction error estimate."""
    seq = list(values)
    last = seq[-1]
    err = abs(seq[-1] - seq[-2]) if len(seq) > 1 else mp.mpf("inf")
    while len(seq) >= 3:
        nxt = []
        for k in range(len(seq) - 2):
            d1 = seq[k + 1] - seq[k]
            d2 = seq[k + 2] - seq[k + 1]
            den = d2 - d1
            if abs(den) == 0:
                nxt.append(seq[k + 2])
            else:
                nxt.append(seq[k + 2] - d2 * d2 / den)
        new_err = abs(nxt[-1] - last)
        if not nxt:
            break
        last = nxt[-1]
        err = new_err
        seq = nxt
    return last, err
