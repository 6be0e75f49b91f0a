import random

import pytest
from hypothesis import given, settings, strategies as st

from hamilton import AlgebraParams, BasicVector, CenterPoly, HamiltonElement, invert, zero_divisors_of_side
from hamilton.conjugacy import BasicClass, SharpClass, conjugacy_invariant, is_special_degenerate, sharp_generator
from hamilton.errors import PreconditionError
from hamilton.parser import parse_element
from hamilton.units import sb_generator

from support import PARAM_SPECS, params, random_quadratic, random_unit


def idempotent_cases():
    for spec in PARAM_SPECS:
        P = params(spec)
        for side in "ab":
            for alpha in zero_divisors_of_side(P, side):
                if alpha.trace(P) == 1:
                    yield pytest.param(spec, alpha, id=f"{'/'.join(spec)}-{alpha}")


@pytest.mark.parametrize("spec,alpha", list(idempotent_cases()))
def test_sharp_generator_squares_to_zero_and_matches_sb(spec, alpha):
    P = params(spec)
    z = sharp_generator(P, alpha)
    assert (z * z).is_zero()
    e = alpha.element(P)
    assert (e.star() * z).is_zero() and (z * e).is_zero()
    sb = sb_generator(P, alpha)
    k = next(i for i in range(4) if not z.coords[i].is_zero())
    c = P.field.div(sb.coords[k].lc, z.coords[k].lc)
    assert sb == z.scale(CenterPoly.constant(P.field, c))
    inv = conjugacy_invariant(z)
    assert isinstance(inv, SharpClass) and not inv.conjugate_to_basic
    assert inv.idempotent == alpha


def test_sharp_generator_rejects_non_idempotents():
    P = AlgebraParams.parse("q", "t^2-t", "t^2")
    with pytest.raises(PreconditionError):
        sharp_generator(P, BasicVector.make(P, "b", 1, 0))
    with pytest.raises(PreconditionError):
        sharp_generator(P, BasicVector.make(P, "a", 1, 1))


def test_special_degenerate_examples():
    P = AlgebraParams.parse("q", "t^2-t", "t^2+1")
    z = sharp_generator(P, BasicVector.make(P, "a", 1, 0))
    assert is_special_degenerate(z) == BasicVector.make(P, "a", 1, 0)
    assert is_special_degenerate(z.scale(P.omega) + 3) == BasicVector.make(P, "a", 1, 0)
    assert is_special_degenerate(HamiltonElement.generator(P, "a")) is None
    assert is_special_degenerate(parse_element("a + w*b", P)) is None
    Q = AlgebraParams.parse("q", "t^2", "t^2+1")
    assert is_special_degenerate(HamiltonElement.generator(Q, "a").scale(Q.omega)) == BasicVector.make(Q, "a", 1, 0)


def test_omega_times_nilpotent_is_not_basic():
    P = AlgebraParams.parse("q", "t^2", "t^2+1")
    x = HamiltonElement.generator(P, "a").scale(P.omega)
    inv = conjugacy_invariant(x)
    assert isinstance(inv, BasicClass) and not inv.conjugate_to_basic
    assert inv.render() == "basic class: 0 + (w)*(a)"
    assert conjugacy_invariant(HamiltonElement.generator(P, "a")).conjugate_to_basic


def test_invariant_rejects_nonquadratic():
    P = AlgebraParams.parse("q", "t^2", "t^2+1")
    with pytest.raises(PreconditionError):
        conjugacy_invariant(HamiltonElement.omega(P))


@pytest.mark.parametrize("spec", PARAM_SPECS, ids=lambda s: "/".join(s))
@settings(max_examples=10)
@given(seed=st.integers(0, 2**32 - 1))
def test_invariant_is_conjugation_invariant(spec, seed):
    P = params(spec)
    rng = random.Random(seed)
    x = random_quadratic(P, rng)
    u, _ = random_unit(P, rng, rng.randint(1, 3))
    assert conjugacy_invariant(x) == conjugacy_invariant(u * x * invert(u))
