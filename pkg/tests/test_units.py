import random

import pytest
from hypothesis import given, settings, strategies as st

from hamilton import AlgebraParams, BasicVector, CenterPoly, HamiltonElement, invert, norm, zero_divisors_of_side
from hamilton.automorphisms import factor_unit
from hamilton.errors import NotAUnitError, PreconditionError
from hamilton.parser import parse_element, parse_poly
from hamilton.units import (BasicUnit, SemiBasicUnit, canonical_block, reduce_factors, sb_generator, sb_parameter,
                            semi_basic_unit)

from support import PARAM_SPECS, params, random_poly, random_unit

ZD_SPECS = [s for s in PARAM_SPECS if zero_divisors_of_side(params(s), "a") or zero_divisors_of_side(params(s), "b")]


def zd_cases():
    for spec in ZD_SPECS:
        P = params(spec)
        for side in "ab":
            for alpha in zero_divisors_of_side(P, side):
                yield pytest.param(spec, alpha, id=f"{'/'.join(spec)}-{alpha}")


def test_sb_generator_examples():
    P = AlgebraParams.parse("q", "t^2-t", "t^2")
    a, b = HamiltonElement.generator(P, "a"), HamiltonElement.generator(P, "b")
    alpha = BasicVector.make(P, "a", 1, 0)
    assert sb_generator(P, alpha) == a * (HamiltonElement.central(P, P.omega) - b.star())
    beta = BasicVector.make(P, "b", 1, 0)
    assert sb_generator(P, beta) == b
    with pytest.raises(PreconditionError):
        sb_generator(P, BasicVector.make(P, "a", 2, 0))


@pytest.mark.parametrize("spec,alpha", list(zd_cases()))
def test_semibasic_group_law(spec, alpha, rng):
    P = params(spec)
    z = sb_generator(P, alpha)
    assert (z * z).is_zero()
    one = HamiltonElement.one(P)
    assert semi_basic_unit(P, alpha, CenterPoly.zero(P.field)) == one
    for _ in range(10):
        r, s = random_poly(P, rng, 3), random_poly(P, rng, 3)
        ur, us = semi_basic_unit(P, alpha, r), semi_basic_unit(P, alpha, s)
        assert ur * us == semi_basic_unit(P, alpha, r + s) == us * ur
        assert invert(ur) == semi_basic_unit(P, alpha, -r)
        assert norm(ur) == CenterPoly.one(P.field)
        assert sb_parameter(P, alpha, ur) == r


def test_sb_parameter_rejects_outsiders():
    P = AlgebraParams.parse("q", "t^2-t", "t^2")
    alpha = BasicVector.make(P, "b", 1, 0)
    with pytest.raises(PreconditionError):
        sb_parameter(P, alpha, parse_element("1+a", P))


def test_factor_unit_field_case():
    P = AlgebraParams.parse("q", "t^2+1", "t^2-2")
    d = factor_unit(parse_element("(2+2a)*(1+b)*(3-a)", P))
    assert d.render() == "-2 * [a+1] * [b+1] * [a-3]"
    assert d.sides() == ["a", "b", "a"]


def test_factor_unit_semibasic_case():
    P = AlgebraParams.parse("q", "t^2-t", "t^2")
    g = parse_element("(1+a*(-w+b)')*(1+w*b)", P)
    d = factor_unit(g)
    assert d.render() == "1 * SB(a; -1) * SB(b; w)"
    assert d.element(P) == g
    five = factor_unit(g.scale(CenterPoly.constant(P.field, 5)))
    assert five.factors == d.factors and five.scalar.value == 5


def test_factor_unit_rejects_nonunits():
    P = AlgebraParams.parse("q", "t^2-t", "t^2")
    with pytest.raises(NotAUnitError):
        factor_unit(HamiltonElement.generator(P, "a"))
    s = factor_unit(HamiltonElement.scalar(P, 3))
    assert s.factors == () and s.scalar.value == 3


def test_canonical_block_merges_same_idempotent():
    P = AlgebraParams.parse("q", "t^2-t", "t^2-t")
    alpha = BasicVector.make(P, "a", 1, 0)
    r, s = parse_poly("t", P.field), parse_poly("1-t", P.field)
    scalar, out = canonical_block(P, "a", [SemiBasicUnit(alpha, r), SemiBasicUnit(alpha, s)])
    assert scalar.value == 1 and out == [SemiBasicUnit(alpha, CenterPoly.one(P.field))]
    scalar, out = canonical_block(P, "a", [SemiBasicUnit(alpha, r), SemiBasicUnit(alpha, -r)])
    assert out == []


def test_reduce_factors_merges_adjacent_blocks():
    P = AlgebraParams.parse("q", "t^2+1", "t^2+1")
    one = P.value(1)
    va, vb = BasicVector.make(P, "a", 1, 1), BasicVector.make(P, "b", 1, 1)
    d = reduce_factors(P, one, [BasicUnit(va), BasicUnit(va), BasicUnit(vb)])
    assert d.is_reduced() and d.sides() == ["a", "b"]
    assert d.element(P) == parse_element("(1+a)^2*(1+b)", P)


@pytest.mark.parametrize("spec", PARAM_SPECS, ids=lambda s: "/".join(s))
@settings(max_examples=8)
@given(seed=st.integers(0, 2**32 - 1), length=st.integers(1, 6))
def test_factor_unit_round_trip(spec, seed, length):
    P = params(spec)
    rng = random.Random(seed)
    g, _ = random_unit(P, rng, length)
    d = factor_unit(g)
    assert d.element(P) == g
    assert d.is_reduced()
    c = P.field.random_nonzero(rng, 5)
    d2 = factor_unit(g.scale(CenterPoly.constant(P.field, c)))
    assert d2.factors == d.factors
    assert d2.scalar.value == P.field.mul(c, d.scalar.value)
