"""Shared fixtures: the frozen generic quintic and the arc test suite."""

from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

import pytest

from quintic_moduli import ArcSpec, PlaneCurve, QQ

REPO_ROOT = Path(__file__).resolve().parent.parent
CURVES_DIR = REPO_ROOT / "curves"

#: Frozen generic witness: random search certified this quintic smooth with
#: 45 distinct honest flexes over both acceptance primes.
GENERIC_QUINTIC_RECORDS = [
    [4, 1, 0, "-3"], [4, 0, 1, "6"], [3, 2, 0, "9"], [3, 1, 1, "7"],
    [2, 3, 0, "-8"], [2, 2, 1, "-1"], [2, 1, 2, "3"], [2, 0, 3, "-6"],
    [1, 4, 0, "4"], [1, 3, 1, "-9"], [1, 2, 2, "-6"], [1, 1, 3, "4"],
    [1, 0, 4, "9"], [0, 5, 0, "-8"], [0, 4, 1, "6"], [0, 3, 2, "-9"],
    [0, 2, 3, "2"], [0, 1, 4, "-8"], [0, 0, 5, "1"],
]

ACCEPTANCE_PRIMES = (10007, 3001)


@pytest.fixture(scope="session")
def generic_quintic() -> PlaneCurve:
    return PlaneCurve.from_records(GENERIC_QUINTIC_RECORDS, QQ)


def _nonzero(rng, lo=-6, hi=6) -> Fraction:
    while True:
        v = rng.randint(lo, hi)
        if v:
            return Fraction(v)


def make_arc_suite(count: int = 100, seed: int = 42) -> list[ArcSpec]:
    """Deterministic arcs spanning all four limit regimes (moderate exponents)."""
    rng = random.Random(seed)
    arcs = []
    for trial in range(count):
        case = trial % 4
        if case == 0:  # beta-dominant: m <= n
            m = rng.randint(1, 3)
            n = rng.randint(m, 4)
            alpha = [Fraction(0)] * n + [Fraction(rng.randint(-6, 6))] + [
                Fraction(rng.randint(-3, 3)) for _ in range(2)
            ]
            beta = [Fraction(0)] * m + [_nonzero(rng)] + [
                Fraction(rng.randint(-3, 3)) for _ in range(2)
            ]
        elif case == 1:  # alpha-dominant: beta == 0 or m >= 2n
            n = rng.randint(1, 3)
            alpha = [Fraction(0)] * n + [_nonzero(rng)] + [Fraction(rng.randint(-3, 3))]
            if rng.random() < 0.4:
                beta = []
            else:
                m = rng.randint(2 * n, 2 * n + 2)
                beta = [Fraction(0)] * m + [_nonzero(rng)]
        elif case == 2:  # intermediate: n < m < 2n off the balance line
            while True:
                n = rng.randint(2, 4)
                m = rng.randint(n + 1, 2 * n - 1)
                if 2 * m != 3 * n:
                    break
            alpha = [Fraction(0)] * n + [_nonzero(rng)] + [Fraction(rng.randint(-3, 3))]
            beta = [Fraction(0)] * m + [_nonzero(rng)]
        else:  # balanced: (n, m) = (2k, 3k), including engineered degeneracies
            k = rng.randint(1, 2)
            a0, b0 = _nonzero(rng), _nonzero(rng)
            if rng.random() < 0.2:
                c = rng.choice([1, 2, -1])
                a0, b0 = Fraction(3 * c * c), Fraction(2 * c**3)  # 4 a0^3 = 27 b0^2
            alpha = [Fraction(0)] * (2 * k) + [a0]
            beta = [Fraction(0)] * (3 * k) + [b0]
        arcs.append(ArcSpec(alpha, beta))
    return arcs
