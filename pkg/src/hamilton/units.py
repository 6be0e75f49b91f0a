"""Basic and semi-basic unit factors, and reduced decompositions built from them.

A semi-basic unit attached to a canonical basic zero divisor ``alpha`` is
written ``1 + r * z`` with ``r`` central, where

* ``z = alpha (w' - beta*)``, ``w' = <alpha, beta>``, when ``alpha`` is idempotent
  and ``beta`` is the generator of the opposite side;
* ``z = alpha`` when ``alpha**2 = 0``.

In both cases ``r -> 1 + r z`` is an isomorphism from ``(C, +)`` onto the group.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .basic import BasicVector, canonical_zero_divisor, opposite, side_kind
from .core import HamiltonElement, inner, invert, star
from .errors import InternalError, PreconditionError
from .field import FieldValue
from .params import AlgebraParams
from .poly import CenterPoly


def sb_generator(params: AlgebraParams, alpha: BasicVector) -> HamiltonElement:
    """The element ``z`` with ``SB(alpha) = {1 + r z}``."""
    canon = canonical_zero_divisor(params, alpha)
    if canon != alpha:
        raise PreconditionError(f"zero divisor {alpha} is not in canonical form (expected {canon})")
    a_el = alpha.element(params)
    if alpha.trace(params).is_zero():
        return a_el
    beta = HamiltonElement.generator(params, opposite(alpha.side))
    w_prime = inner(a_el, beta)
    return a_el * (HamiltonElement.central(params, w_prime) - star(beta))


def semi_basic_unit(params: AlgebraParams, alpha: BasicVector, r: CenterPoly) -> HamiltonElement:
    return HamiltonElement.one(params) + sb_generator(params, alpha).scale(r)


def sb_parameter(params: AlgebraParams, alpha: BasicVector, u: HamiltonElement) -> CenterPoly:
    """The parameter ``r`` with ``u = 1 + r z``; raises if ``u`` is not in ``SB(alpha)``."""
    z = sb_generator(params, alpha)
    d = u - 1
    k = next(i for i, c in enumerate(z.coords) if not c.is_zero())
    q, rem = divmod(d.coords[k], z.coords[k])
    if not rem.is_zero() or z.scale(q) != d:
        raise PreconditionError("element is not a semi-basic unit attached to this zero divisor")
    return q


@dataclass(frozen=True)
class BasicUnit:
    vector: BasicVector

    kind = "basic"

    @property
    def side(self) -> str:
        return self.vector.side

    def element(self, params: AlgebraParams) -> HamiltonElement:
        return self.vector.element(params)

    def render(self) -> str:
        return f"[{self.vector}]"

    def to_json(self) -> dict:
        return {"kind": "basic", "side": self.side, "vector": self.vector.to_json()}


@dataclass(frozen=True)
class SemiBasicUnit:
    zero_divisor: BasicVector
    parameter: CenterPoly

    kind = "semibasic"

    @property
    def side(self) -> str:
        return self.zero_divisor.side

    def element(self, params: AlgebraParams) -> HamiltonElement:
        return semi_basic_unit(params, self.zero_divisor, self.parameter)

    def inverse(self) -> "SemiBasicUnit":
        return SemiBasicUnit(self.zero_divisor, -self.parameter)

    def render(self) -> str:
        return f"SB({self.zero_divisor}; {self.parameter.render('w')})"

    def to_json(self) -> dict:
        f = self.parameter.field
        return {"kind": "semibasic", "side": self.side, "zero_divisor": self.zero_divisor.to_json(),
                "parameter": [f.render(c) for c in self.parameter.coeffs]}


UnitFactor = Union[BasicUnit, SemiBasicUnit]


def product(params: AlgebraParams, factors: Sequence[UnitFactor]) -> HamiltonElement:
    out = HamiltonElement.one(params)
    for fac in factors:
        out = out * fac.element(params)
    return out


@dataclass(frozen=True)
class ReducedDecomposition:
    """``scalar * prod(factors)``; consecutive runs of one side form the blocks."""

    scalar: FieldValue
    factors: tuple

    def blocks(self) -> list[tuple]:
        out: list[list] = []
        for fac in self.factors:
            if out and out[-1][0].side == fac.side:
                out[-1].append(fac)
            else:
                out.append([fac])
        return [tuple(b) for b in out]

    def sides(self) -> list[str]:
        return [b[0].side for b in self.blocks()]

    def is_reduced(self) -> bool:
        s = self.sides()
        return all(s[i] != s[i + 1] for i in range(len(s) - 1))

    def element(self, params: AlgebraParams) -> HamiltonElement:
        return product(params, self.factors).scale(self.scalar)

    def render(self) -> str:
        body = " * ".join(f.render() for f in self.factors)
        return f"{self.scalar}" + (f" * {body}" if body else "")

    def to_json(self) -> dict:
        return {"scalar": str(self.scalar), "factors": [f.to_json() for f in self.factors]}


# -- canonical forms of SB(C) blocks ------------------------------------------------

def _basic_from_element(x: HamiltonElement, side: str):
    """Split a unit of ``F[g]`` into ``(scalar, BasicVector | None)`` with the vector monic."""
    f = x.field
    idx = 1 if side == "a" else 2
    lam = x.coords[idx].constant_term if not x.coords[idx].is_zero() else f.zero
    mu = x.x1.constant_term if not x.x1.is_zero() else f.zero
    if lam == 0:
        return FieldValue(f, mu), None
    v = BasicVector(side, FieldValue(f, lam), FieldValue(f, mu))
    return FieldValue(f, lam), v.monic()


def canonical_block(params: AlgebraParams, side: str, block: Sequence[UnitFactor]):
    """Rewrite a product of factors from ``SB(side)`` as ``scalar * canonical factors``."""
    kind = side_kind(params, side)
    f = params.field
    if kind == "field":
        x = product(params, block)
        scalar, v = _basic_from_element(x, side)
        return scalar, ([BasicUnit(v)] if v is not None else [])
    if kind == "degenerate":
        # Every element is lam + r alpha; split as basic (lam + r0 alpha) times 1 + lam^-1 (r - r0) alpha.
        alpha = next(z for z in _zero_divisors(params, side))
        x = product(params, block)
        idx = 1 if side == "a" else 2
        r = x.coords[idx]
        lam_poly = x - alpha.element(params).scale(r)
        if not lam_poly.is_scalar():
            raise InternalError("degenerate block is not of the form lam + r alpha")
        lam = lam_poly.scalar_value()
        r_scaled = r.scale(lam.inverse().value)
        r0 = r_scaled.constant_term if not r_scaled.is_zero() else f.zero
        out: list[UnitFactor] = []
        scalar = lam
        if r0 != 0:
            basic_el = HamiltonElement.one(params) + alpha.element(params).scale(r0)
            s2, v = _basic_from_element(basic_el, side)
            scalar = scalar * s2
            out.append(BasicUnit(v))
        rest = r_scaled - CenterPoly.constant(f, r0)
        if not rest.is_zero():
            out.append(SemiBasicUnit(alpha, rest))
        return scalar, out
    return _canonical_split_block(params, side, block)


def _zero_divisors(params: AlgebraParams, side: str):
    from .basic import zero_divisors_of_side

    return zero_divisors_of_side(params, side)


def _canonical_split_block(params: AlgebraParams, side: str, block: Sequence[UnitFactor]):
    """Basic unit first, then alternating semi-basic factors of the two idempotents."""
    basic = HamiltonElement.one(params)
    semis: list[SemiBasicUnit] = []
    for fac in block:
        if isinstance(fac, BasicUnit):
            b = fac.element(params)
            b_inv = invert(b)
            moved = []
            for s in semis:
                conj = b_inv * s.element(params) * b
                moved.append(SemiBasicUnit(s.zero_divisor, sb_parameter(params, s.zero_divisor, conj)))
            semis = moved
            basic = basic * b
        else:
            alpha = canonical_zero_divisor(params, fac.zero_divisor)
            r = fac.parameter
            if alpha != fac.zero_divisor:
                r = sb_parameter(params, alpha, fac.element(params))
            if semis and semis[-1].zero_divisor == alpha:
                merged = semis[-1].parameter + r
                semis.pop()
                if not merged.is_zero():
                    semis.append(SemiBasicUnit(alpha, merged))
            elif not r.is_zero():
                semis.append(SemiBasicUnit(alpha, r))
    scalar, v = _basic_from_element(basic, side)
    out: list[UnitFactor] = [BasicUnit(v)] if v is not None else []
    return scalar, out + semis


def reduce_factors(params: AlgebraParams, scalar: FieldValue, factors: Sequence[UnitFactor]) -> ReducedDecomposition:
    """Canonicalize each same-side run, absorb scalars, and merge runs until stable."""
    current = list(factors)
    while True:
        decomp = ReducedDecomposition(scalar, tuple(current))
        new: list[UnitFactor] = []
        for block in decomp.blocks():
            s, canon = canonical_block(params, block[0].side, block)
            scalar = scalar * s
            new.extend(canon)
        if new == current:
            return ReducedDecomposition(scalar, tuple(new))
        current = new
