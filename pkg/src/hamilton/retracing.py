"""Distances, leading vectors and the two retracing algorithms."""
from __future__ import annotations

from dataclasses import dataclass

from .basic import BasicVector, canonical_zero_divisor, opposite
from .core import HamiltonElement, deployed_coordinates, inner, invert, is_quadratic, star, trace
from .errors import BudgetExceededError, InternalError, PreconditionError
from .field import FieldValue
from .params import AlgebraParams
from .poly import CenterPoly
from .units import BasicUnit, SemiBasicUnit, UnitFactor, sb_generator

DEFAULT_BUDGET = 10_000


def _gen(params: AlgebraParams, side: str) -> HamiltonElement:
    return HamiltonElement.generator(params, side)


def distance(x: HamiltonElement, side: str):
    """max over nonscalar alpha of the side of deg <alpha, x>; equals max(deg <g,x>, deg tr x)."""
    return max(inner(_gen(x.params, side), x).degree, trace(x).degree)


def absolute_distance(x: HamiltonElement):
    return max(distance(x, "a"), distance(x, "b"))


def _require_quadratic_nonscalar(x: HamiltonElement) -> None:
    if x.is_scalar():
        raise PreconditionError("expected a nonscalar element")
    if not is_quadratic(x):
        raise PreconditionError("expected a quadratic element (constant trace and norm)")


def leading_side(x: HamiltonElement) -> str:
    _require_quadratic_nonscalar(x)
    n = x.degree()
    da, db = x.xa.degree, x.xb.degree
    if (da == n) == (db == n):
        raise InternalError("quadratic element with no unique dominant side")
    return "a" if da == n else "b"


def leading_vector(x: HamiltonElement) -> BasicVector:
    """The leading vector ``g + c`` (monic in the generator ``g`` of the leading side)."""
    side = leading_side(x)
    P = x.params
    g, h = _gen(P, side), _gen(P, opposite(side))
    c1, cg, _, _ = deployed_coordinates(x, g, h)
    n = cg.degree
    lam = cg.lc
    mu = c1.coeff(n)
    f = P.field
    v = BasicVector(side, FieldValue(f, f.one), FieldValue(f, f.div(mu, lam)))
    d1, dv, _, _ = deployed_coordinates(x, v.element(P), h)
    if not d1.degree < dv.degree:
        raise InternalError("computed leading vector fails the defining degree property")
    return v


# -- outcomes ------------------------------------------------------------------------

@dataclass(frozen=True)
class RetraceSuccess:
    basic_result: HamiltonElement
    conjugators: tuple

    ok = True

    def to_json(self) -> dict:
        return {"status": "success", "basic_result": self.basic_result.to_json(),
                "basic_text": self.basic_result.render(compact=True),
                "conjugators": [_factor_json(c) for c in self.conjugators]}


@dataclass(frozen=True)
class RetraceFailure:
    at: HamiltonElement
    zero_divisor_leading: BasicVector
    conjugators: tuple = ()

    ok = False

    def to_json(self) -> dict:
        return {"status": "failure", "at": self.at.to_json(), "at_text": self.at.render(compact=True),
                "zero_divisor": self.zero_divisor_leading.to_json(),
                "conjugators": [_factor_json(c) for c in self.conjugators]}


@dataclass(frozen=True)
class RefinedFailure:
    """The current vector is special degenerate, attached to ``witness``."""

    at: HamiltonElement
    witness: BasicVector
    conjugators: tuple = ()

    ok = False

    def to_json(self) -> dict:
        return {"status": "failure", "reason": "special-degenerate", "at": self.at.to_json(),
                "at_text": self.at.render(compact=True), "witness": self.witness.to_json(),
                "conjugators": [_factor_json(c) for c in self.conjugators]}


def _factor_json(c) -> dict:
    return c.to_json() if hasattr(c, "kind") else {"kind": "basic", **c.to_json()}


# -- plain retracing -------------------------------------------------------------------

def retrace(x: HamiltonElement, budget: int = DEFAULT_BUDGET):
    """Conjugate by basic units only; fails when a leading vector is a zero divisor."""
    _require_quadratic_nonscalar(x)
    P = x.params
    y = x
    conj: list[BasicVector] = []
    while not y.is_basic():
        if len(conj) >= budget:
            raise BudgetExceededError(f"retracing exceeded {budget} steps")
        alpha = leading_vector(y)
        if alpha.norm(P).is_zero():
            return RetraceFailure(y, alpha, tuple(conj))
        a_el = alpha.element(P)
        y = invert(a_el) * y * a_el
        conj.append(alpha)
    return RetraceSuccess(y, tuple(conj))


# -- refined retracing -----------------------------------------------------------------

def _monomial(P: AlgebraParams, degree: int, coeff) -> CenterPoly:
    if degree < 0:
        raise InternalError("reducer parameter would need a negative degree")
    return CenterPoly.monomial(P.field, degree, coeff)


def semibasic_reducer(y: HamiltonElement, alpha: BasicVector):
    """Choose ``r`` so that conjugating by ``1 + r z`` lowers the absolute distance.

    Returns ``(canonical zero divisor, r)`` or ``(canonical zero divisor, None)``
    when ``y`` is special degenerate.
    """
    P = y.params
    f = P.field
    e = canonical_zero_divisor(P, alpha)
    e_el = e.element(P)
    beta_side = opposite(e.side)
    beta = _gen(P, beta_side)
    w_prime = inner(e_el, beta)
    if not e.trace(P).is_zero():
        beta_star = star(beta)
        c1, ce, cbs, _ = deployed_coordinates(y, e_el, beta_star)
        if not c1.is_constant():
            tb, nb = P.trace_of(beta_side), P.norm_of(beta_side)
            Q = w_prime * w_prime - w_prime.scale(tb) + CenterPoly.constant(f, nb)
            QX = Q * cbs
            if QX.is_zero():
                raise InternalError("nonconstant first coordinate without a beta* component")
            r = _monomial(P, c1.degree - QX.degree, f.div(c1.lc, QX.lc))
            return e, r
        c = trace(y) - c1.scale(2)
        if not c.is_zero():
            if not c.is_constant():
                raise InternalError("trace of a quadratic element is not constant")
            r = _monomial(P, ce.degree - 1, f.div(ce.lc, f.mul(w_prime.lc, c.constant_term)))
            return e, r
        return e, None
    c1, ce, cb, _ = deployed_coordinates(y, e_el, beta)
    if not c1.is_constant():
        W = w_prime * cb
        if W.is_zero():
            raise InternalError("nonconstant first coordinate without a beta component")
        r = _monomial(P, c1.degree - W.degree, f.neg(f.div(c1.lc, W.lc)))
        return e, r
    return e, None


def refined_retrace(x: HamiltonElement, budget: int = DEFAULT_BUDGET, pinned: HamiltonElement | None = None):
    """Conjugate by basic and semi-basic units down to a basic vector.

    On success ``basic_result == G^{-1} x G`` with ``G`` the product of the
    returned factors.  Failure means the current vector is special degenerate.
    When ``pinned`` is given, every conjugator must commute with it (used by
    the automorphism decomposition); a violation raises PreconditionError.
    """
    _require_quadratic_nonscalar(x)
    P = x.params
    y = x
    conj: list[UnitFactor] = []
    while not y.is_basic():
        if len(conj) >= budget:
            raise BudgetExceededError(f"refined retracing exceeded {budget} steps")
        alpha = leading_vector(y)
        before = absolute_distance(y)
        if not alpha.norm(P).is_zero():
            g_el = alpha.element(P)
            g_inv = invert(g_el)
            factor: UnitFactor = BasicUnit(alpha)
        else:
            e, r = semibasic_reducer(y, alpha)
            if r is None:
                return RefinedFailure(y, e, tuple(conj))
            z = sb_generator(P, e)
            g_el = HamiltonElement.one(P) - z.scale(r)      # gamma = gamma'^{-1}
            g_inv = HamiltonElement.one(P) + z.scale(r)     # gamma'
            factor = SemiBasicUnit(e, -r)
        if pinned is not None and g_el * pinned != pinned * g_el:
            raise PreconditionError("conjugator does not fix the pinned element")
        y = g_inv * y * g_el
        if not absolute_distance(y) < before:
            raise InternalError("retracing step did not lower the absolute distance")
        conj.append(factor)
    return RetraceSuccess(y, tuple(conj))


def conjugator_product(P: AlgebraParams, conjugators) -> HamiltonElement:
    out = HamiltonElement.one(P)
    for c in conjugators:
        out = out * (c.element(P))
    return out
