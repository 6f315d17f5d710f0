from fractions import Fraction

import pytest

from quintic_moduli.gw_recursion import (
    SYM_I0_A1A1_BRM2,
    SYM_I0_A1A1A1_BRM3,
    SYM_I0_A1A2_BRM3,
    SYM_I1_A1_5,
    SYM_I1_A1A1A1A2,
    SYM_I1_A1A1A3,
    SYM_I1_A1A2A2,
    GWSymbol,
    RationalInR,
    base_values,
    chain_trace,
    evaluate_chain,
    r_independence_check,
)
from quintic_moduli.intersection_ledger import combinatorial_degree


def test_base_values():
    base = base_values()
    assert base[SYM_I1_A1A1A3].constant_value() == 90
    assert base[SYM_I1_A1A2A2].constant_value() == 240
    assert base[SYM_I0_A1A1_BRM2] == RationalInR.one_over_r()
    assert base[SYM_I0_A1A2_BRM3] == RationalInR.one_over_r()


def test_chain_values():
    values = evaluate_chain()
    assert values[SYM_I1_A1_5].is_constant()
    assert values[SYM_I1_A1_5].constant_value() == 420
    assert values[SYM_I1_A1A1A1A2].constant_value() == 330
    assert values[SYM_I0_A1A1A1_BRM3] == RationalInR.one_over_r()


def test_final_identity():
    # closing identity: the final count is the two-base-value combination
    values = evaluate_chain()
    total = (
        values[SYM_I1_A1A2A2].constant_value()
        + 2 * values[SYM_I1_A1A1A3].constant_value()
    )
    assert values[SYM_I1_A1_5].constant_value() == total == 420


def test_matches_combinatorial_count():
    assert evaluate_chain()[SYM_I1_A1_5].constant_value() == combinatorial_degree(120, 45)


def test_r_independence():
    assert r_independence_check(list(range(4, 11)))
    with pytest.raises(ValueError):
        r_independence_check([3])
    with pytest.raises(ValueError):
        r_independence_check([4, 2])


def test_symbol_validation():
    with pytest.raises(ValueError):
        GWSymbol(2, ("a1", "a1", "a1"))
    with pytest.raises(ValueError):
        GWSymbol(1, ("a1", "a9", "a1"))
    with pytest.raises(ValueError):
        GWSymbol(1, ("a1", "a1", "a2"))  # not one of the admitted counts
    # insertion order does not matter for admitted symbols
    assert GWSymbol(1, ("a3", "a1", "a1")) == SYM_I1_A1A1A3


def test_rational_in_r_arithmetic():
    r = RationalInR.r()
    inv = RationalInR.one_over_r()
    prod = r * inv
    assert prod.is_constant() and prod.constant_value() == 1
    s = inv + inv
    assert s.evaluate(Fraction(4)) == Fraction(1, 2)
    assert not inv.is_constant()
    with pytest.raises(ValueError):
        inv.constant_value()
    with pytest.raises(ZeroDivisionError):
        inv.evaluate(0)


def test_trace_mentions_all_values():
    text = "\n".join(chain_trace())
    assert "420" in text and "330" in text and "1/r" in text.replace("(1)/(r)", "1/r")
