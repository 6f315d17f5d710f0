import random
from fractions import Fraction
from math import comb

import pytest

from quintic_moduli.binary_forms import BinaryForm, BinaryQuintic
from quintic_moduli.elimination import gcd_uni, resultant_bivar_elim
from quintic_moduli.invariants import (
    UnstableQuinticError,
    WPPoint,
    invariant_triple,
    moduli_point,
)
from quintic_moduli.plane_curves import (
    LineChart,
    LineInCurveError,
    PlaneCurve,
    fermat_degree_factorization,
    fermat_quintic,
    genericity_report,
    hessian,
    load_curve,
    phi,
    plucker_counts,
    random_invertible_frame,
    restrict_to_line,
)
from quintic_moduli.polys import MultiPoly, UniPoly, interpolate
from quintic_moduli.scalars import GF, QQ

from conftest import CURVES_DIR

F = GF(10007)


def test_curve_records_roundtrip(generic_quintic):
    loaded = load_curve(CURVES_DIR / "generic.json")
    assert loaded == generic_quintic
    assert PlaneCurve.from_records(loaded.to_records()) == loaded


def test_curve_validation():
    with pytest.raises(ValueError):
        PlaneCurve.from_records([[5, 0, 0, "1"], [3, 0, 0, "1"]])  # mixed degrees
    with pytest.raises(ValueError):
        PlaneCurve.from_records([])
    with pytest.raises(ValueError):
        PlaneCurve.from_records([[5, 0, 0, "1"], [5, 0, 0, "-1"]])  # cancels to zero


def test_fermat_restriction_closed_form():
    a, b, c = Fraction(2), Fraction(3), Fraction(5)
    frame = (
        (1 / a, Fraction(0), Fraction(0)),
        (Fraction(0), 1 / b, Fraction(0)),
        (Fraction(0), Fraction(0), 1 / c),
    )
    chart = LineChart(QQ, frame, Fraction(-1), Fraction(-1))
    r = restrict_to_line(fermat_quintic(QQ), chart)
    l, m, n = b**5 * c**5, a**5 * c**5, a**5 * b**5
    scale = 1 / (a * b * c) ** 5
    expected = [
        scale * ((l if k == 0 else 0) + (m if k == 5 else 0) - n * comb(5, k))
        for k in range(6)
    ]
    assert list(r.coeffs) == expected


def test_phi_fermat_closed_form():
    for a, b, c in [(2, 3, 5), (1, 2, 3), (7, 2, 9)]:
        a, b, c = Fraction(a), Fraction(b), Fraction(c)
        frame = (
            (1 / a, Fraction(0), Fraction(0)),
            (Fraction(0), 1 / b, Fraction(0)),
            (Fraction(0), Fraction(0), 1 / c),
        )
        chart = LineChart(QQ, frame, Fraction(-1), Fraction(-1))
        s1 = a**5 + b**5 + c**5
        s2 = (a * b) ** 5 + (a * c) ** 5 + (b * c) ** 5
        s3 = (a * b * c) ** 5
        assert phi(fermat_quintic(QQ), chart) == WPPoint(QQ, s1 * s1 - 4 * s2, s1 * s3, s3 * s3)


def test_line_contained_in_curve_is_an_error():
    z = MultiPoly.variable(QQ, 3, 2)
    quartic = MultiPoly(QQ, 3, {(4, 0, 0): QQ.one, (0, 4, 0): QQ.one})
    curve = PlaneCurve(z * quartic)
    with pytest.raises(LineInCurveError):
        restrict_to_line(curve, LineChart.identity(QQ, Fraction(0), Fraction(0)))


def test_phi_is_frame_independent(generic_quintic):
    curve = generic_quintic.reduce_mod(F)
    rng = random.Random(10)
    dual = (F.from_int(3), F.from_int(5), F.from_int(7))
    reference = None
    checked = 0
    while checked < 50:
        frame = random_invertible_frame(F, rng)
        try:
            chart = LineChart.for_line(F, dual, frame)
        except ValueError:
            continue  # line vertical in this frame
        point = phi(curve, chart)
        if reference is None:
            reference = point
        else:
            assert point == reference
        checked += 1


def test_restriction_is_linear_in_the_curve(generic_quintic):
    rng = random.Random(11)
    curve1 = generic_quintic.reduce_mod(F)
    terms = {
        (i, j, 5 - i - j): F.from_int(rng.randrange(F.p))
        for i in range(6)
        for j in range(6 - i)
    }
    curve2 = PlaneCurve(MultiPoly(F, 3, terms))
    chart = LineChart.identity(F, F.from_int(17), F.from_int(23))
    r1 = restrict_to_line(curve1, chart)
    r2 = restrict_to_line(curve2, chart)
    summed = PlaneCurve(curve1.poly + curve2.poly)
    r12 = restrict_to_line(summed, chart)
    assert list(r12.coeffs) == [F.add(x, y) for x, y in zip(r1.coeffs, r2.coeffs)]


def test_random_lines_have_stable_restrictions(generic_quintic):
    from quintic_moduli.invariants import is_stable

    curve = generic_quintic.reduce_mod(F)
    rng = random.Random(12)
    for _ in range(25):
        chart = LineChart.identity(
            F, F.from_int(rng.randrange(F.p)), F.from_int(rng.randrange(F.p))
        )
        assert is_stable(restrict_to_line(curve, chart))


def test_hessian_degree_and_fermat_shape():
    h = hessian(fermat_quintic(QQ))
    assert h.degree == 9
    assert set(h.poly.terms) == {(3, 3, 3)}
    rng = random.Random(13)
    for _ in range(5):
        terms = {
            (i, j, 5 - i - j): F.from_int(rng.randrange(F.p))
            for i in range(6)
            for j in range(6 - i)
        }
        assert hessian(PlaneCurve(MultiPoly(F, 3, terms))).degree == 9
    with pytest.raises(ValueError):
        conic = PlaneCurve(MultiPoly(QQ, 3, {(2, 0, 0): QQ.one, (0, 1, 1): QQ.one}))
        hessian(conic)


def test_plucker_counts():
    assert plucker_counts(5) == (20, 45, 120)
    assert plucker_counts(4) == (12, 24, 28)
    d = 5
    assert plucker_counts(5).bitangent_count == d * (d - 2) * (d - 3) * (d + 3) // 2 == 120
    with pytest.raises(ValueError):
        plucker_counts(3)


def test_flex_cycle_has_degree_45(generic_quintic):
    curve = generic_quintic.reduce_mod(F)
    h = hessian(curve)

    def dehom(poly):
        terms = {}
        for (i, j, k), c in poly.terms.items():
            e = (i, k)
            terms[e] = F.add(terms.get(e, F.zero), c)
        return MultiPoly(F, 2, terms)

    flex_res = resultant_bivar_elim(dehom(curve.poly), dehom(h.poly), 1)
    assert flex_res.degree == 45


def test_genericity_fixture_is_generic(generic_quintic):
    for prime in (10007, 3001):
        report = genericity_report(generic_quintic, prime, seed=1)
        assert report.smooth
        assert report.flex_cycle_ok
        assert report.distinct_flex_count == 45
        assert report.flexes_verified == 45
        assert report.generic


def test_genericity_flags_fermat():
    report = genericity_report(fermat_quintic(QQ), 10007, seed=1)
    assert report.smooth
    assert report.flex_cycle_ok  # the cycle still has total degree 45
    assert report.distinct_flex_count == 15  # each flex triples
    assert report.flexes_verified == 0  # contact order is 5, not 3
    assert not report.generic


def test_genericity_flags_nodal_curve():
    # force a singular point at (0:0:1): kill z^5, x z^4 and y z^4
    rng = random.Random(14)
    while True:
        terms = {}
        for i in range(6):
            for j in range(6 - i):
                k = 5 - i - j
                if (i, j, k) in ((0, 0, 5), (1, 0, 4), (0, 1, 4)):
                    continue
                coeff = rng.randint(-9, 9)
                if coeff:
                    terms[(i, j, k)] = Fraction(coeff)
        if terms:
            nodal = PlaneCurve(MultiPoly(QQ, 3, terms))
            if nodal.degree == 5:
                break
    report = genericity_report(nodal, 10007, seed=2)
    assert not report.smooth
    assert not report.generic


def test_phi_rejects_inflectional_lines(generic_quintic):
    curve = generic_quintic.reduce_mod(F)
    h = hessian(curve)

    def dehom(poly):
        terms = {}
        for (i, j, k), c in poly.terms.items():
            e = (i, k)
            terms[e] = F.add(terms.get(e, F.zero), c)
        return MultiPoly(F, 2, terms)

    flex_res = resultant_bivar_elim(dehom(curve.poly), dehom(h.poly), 1)
    u0 = next(x for x in range(F.p) if flex_res.eval(x) == 0)

    # lift to the flex point: common z-root of curve and hessian above u0
    def fiber_poly(poly, u):
        out = {}
        for (i, j, k), c in poly.terms.items():
            val = F.mul(c, F.pow(F.from_int(u), i))  # y = 1
            out[k] = F.add(out.get(k, F.zero), val) if k in out else val
        n = max(out)
        return UniPoly(F, [out.get(k, F.zero) for k in range(n + 1)])

    g = gcd_uni(fiber_poly(curve.poly, u0), fiber_poly(h.poly, u0))
    assert g.degree == 1
    z0 = F.neg(F.mul(g.coeffs[0], F.inv(g.coeffs[1])))
    point = (F.from_int(u0), F.one, z0)
    dual = tuple(
        curve.poly.derivative(v).eval(point) for v in range(3)
    )
    rng = random.Random(15)
    while True:
        frame = random_invertible_frame(F, rng)
        try:
            chart = LineChart.for_line(F, dual, frame)
            break
        except ValueError:
            continue
    with pytest.raises(UnstableQuinticError):
        phi(curve, chart)


def test_pencil_through_random_point_has_no_unstable_lines(generic_quintic):
    # lines through Q, parametrised by a moving second point R0 + s R1;
    # an unstable restriction would be a common root of the three invariant
    # charts, whose gcd must therefore be constant
    curve = generic_quintic.reduce_mod(F)
    rng = random.Random(16)
    q = tuple(F.from_int(rng.randrange(F.p)) for _ in range(3))
    r0 = tuple(F.from_int(rng.randrange(F.p)) for _ in range(3))
    r1 = tuple(F.from_int(rng.randrange(F.p)) for _ in range(3))

    def restriction_at(s):
        rs = tuple(F.add(a, F.mul(F.from_int(s), b)) for a, b in zip(r0, r1))
        lins = [BinaryForm(F, [q[i], rs[i]]) for i in range(3)]
        pows = []
        for lin in lins:
            row = [BinaryForm(F, [F.one])]
            for _ in range(5):
                row.append(row[-1] * lin)
            pows.append(row)
        acc = BinaryForm.zero(F, 5)
        for (i, j, k), c in curve.poly.terms.items():
            acc = acc + (pows[0][i] * pows[1][j] * pows[2][k]).scale(c)
        return BinaryQuintic(F, acc.coeffs)

    samples4, samples8, samples12 = [], [], []
    for s in range(61):
        i4, i8, i12 = invariant_triple(restriction_at(s))
        x = F.from_int(s)
        samples4.append((x, i4))
        samples8.append((x, i8))
        samples12.append((x, i12))
    p4 = interpolate(samples4, F)
    p8 = interpolate(samples8, F)
    p12 = interpolate(samples12, F)
    assert gcd_uni(gcd_uni(p4, p8), p12).degree == 0


def test_fermat_degree_factorization():
    assert fermat_degree_factorization() == 150
