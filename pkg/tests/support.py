"""Shared generators for the test suite."""
from __future__ import annotations

import random

from hamilton import AlgebraParams, BasicVector, HamiltonElement, conjugate, semi_basic_unit, zero_divisors_of_side
from hamilton.automorphisms import BasicAut
from hamilton.poly import CenterPoly
from hamilton.units import BasicUnit, SemiBasicUnit, sb_generator

# (field, p, q) covering irreducible / split-simple / double-root sides in several characteristics.
PARAM_SPECS = [
    ("q", "t^2+1", "t^2+1"),
    ("q", "t^2+1", "t^2-2"),
    ("q", "t^2-t", "t^2-t"),
    ("q", "t^2-t", "t^2+1"),
    ("q", "t^2", "t^2-t"),
    ("q", "t^2", "t^2"),
    ("q", "t^2-1", "t^2+t+1"),
    ("fp:2", "t^2+t+1", "t^2+t+1"),
    ("fp:2", "t^2+t", "t^2"),
    ("fp:2", "t^2", "t^2+1"),
    ("fp:3", "t^2+1", "t^2-t"),
    ("fp:5", "t^2+2", "t^2+2"),
    ("fp:7", "t^2-t", "t^2"),
    ("fp:13", "t^2+2", "t^2-3"),
]

IRREDUCIBLE_SPECS = [
    ("q", "t^2+1", "t^2+1"),
    ("q", "t^2+1", "t^2-2"),
    ("q", "t^2+t+1", "t^2+3"),
    ("fp:2", "t^2+t+1", "t^2+t+1"),
    ("fp:3", "t^2+1", "t^2+t+2"),
    ("fp:5", "t^2+2", "t^2-2"),
    ("fp:7", "t^2+1", "t^2-3"),
    ("fp:13", "t^2+2", "t^2+5"),
]

SPLIT_SPECS = [s for s in PARAM_SPECS if s not in IRREDUCIBLE_SPECS and s[1:] != ("t^2+1", "t^2-2")]


def params(spec) -> AlgebraParams:
    return AlgebraParams.parse(*spec)


def random_poly(P: AlgebraParams, rng: random.Random, max_degree: int = 2, height: int = 3) -> CenterPoly:
    f = P.field
    return CenterPoly(f, [f.random(rng, height) for _ in range(rng.randint(0, max_degree) + 1)])


def random_element(P: AlgebraParams, rng: random.Random, degree: int = 2, height: int = 3) -> HamiltonElement:
    return HamiltonElement._make(P, [random_poly(P, rng, degree, height) for _ in range(4)])


def basic_units_exist(P: AlgebraParams, side: str) -> bool:
    f = P.field
    if not f.is_finite:
        return True
    return any(BasicVector.make(P, side, 1, m).is_unit(P) for m in f.elements())


def random_basic_unit(P: AlgebraParams, side: str, rng: random.Random) -> BasicVector:
    f = P.field
    for _ in range(200):
        v = BasicVector.make(P, side, f.random_nonzero(rng, 3), f.random(rng, 3))
        if v.is_unit(P):
            return v
    raise RuntimeError("no nonscalar basic unit found")


def random_factor(P: AlgebraParams, side: str, rng: random.Random, semibasic_bias: float = 0.5):
    zs = zero_divisors_of_side(P, side)
    if zs and (rng.random() < semibasic_bias or not basic_units_exist(P, side)):
        r = random_poly(P, rng, 2, 3)
        while r.is_zero():
            r = random_poly(P, rng, 2, 3)
        return SemiBasicUnit(rng.choice(zs), r)
    return BasicUnit(random_basic_unit(P, side, rng))


def random_unit(P: AlgebraParams, rng: random.Random, length: int, semibasic_bias: float = 0.5):
    """A unit assembled from ``length`` alternating factors; returns (element, factors)."""
    start = rng.choice("ab")
    factors = []
    for i in range(length):
        side = start if i % 2 == 0 else ("b" if start == "a" else "a")
        if not basic_units_exist(P, side) and not zero_divisors_of_side(P, side):
            continue
        factors.append(random_factor(P, side, rng, semibasic_bias))
    g = HamiltonElement.one(P)
    for fac in factors:
        g = g * fac.element(P)
    return g, factors


def random_monomial_unit(P: AlgebraParams, rng: random.Random, length: int) -> HamiltonElement:
    g, _ = random_unit(P, rng, length, semibasic_bias=0.0)
    return g


def semibasic(P, alpha, r):
    return semi_basic_unit(P, alpha, r)


def random_quadratic(P: AlgebraParams, rng: random.Random) -> HamiltonElement:
    """A conjugate of a basic vector, of ``lam + s alpha`` or of ``lam + s z`` (z a semi-basic generator)."""
    f = P.field
    side = rng.choice("ab")
    zs = zero_divisors_of_side(P, side)
    if zs and rng.random() < 0.4:
        alpha = rng.choice(zs)
        idempotent = alpha.trace(P) == 1
        if idempotent and rng.random() < 0.5:
            base = sb_generator(P, alpha)
            s = random_poly(P, rng, 2)
            while s.is_zero():
                s = random_poly(P, rng, 2)
        else:
            base = alpha.element(P)
            s = CenterPoly.constant(f, f.random_nonzero(rng, 3)) if idempotent else random_poly(P, rng, 2)
            while s.is_zero():
                s = random_poly(P, rng, 2)
        x = HamiltonElement.scalar(P, f.random(rng, 3)) + base.scale(s)
    else:
        x = BasicVector.make(P, side, f.random_nonzero(rng, 3), f.random(rng, 3)).element(P)
    g, _ = random_unit(P, rng, rng.randint(0, 3))
    return conjugate(x, g)


def instantiate_aut(P: AlgebraParams, entry, rng: random.Random):
    """A concrete basic automorphism from a catalogue entry, drawing family parameters at random."""
    f = P.field

    def pick(base, fam):
        if fam is None:
            return base
        c = f.random_nonzero(rng, 4)
        return BasicVector.make(P, base.side, c, f.add(base.mu.value, f.mul(c, fam.mu.value)))

    return BasicAut(pick(entry.image_of_a, entry.family_a), pick(entry.image_of_b, entry.family_b))
