"""Elements of the algebra as 4-vectors over the centre ``C = F[w]``.

Coordinates refer to the deployed basis ``(1, a, b, ab)``.  Products use the
structure table frozen in :class:`~hamilton.params.AlgebraParams`.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .errors import NotAUnitError, ParamsMismatchError, PreconditionError
from .field import FieldValue
from .matrices import PolyMatrix
from .params import AlgebraParams, mat4_generators
from .poly import CenterPoly, poly_gcd


class HamiltonElement:
    __slots__ = ("params", "coords")

    def __init__(self, params: AlgebraParams, x1=None, xa=None, xb=None, xab=None):
        f = params.field
        vals = []
        for c in (x1, xa, xb, xab):
            if c is None:
                vals.append(CenterPoly.zero(f))
            elif isinstance(c, CenterPoly):
                if c.field != f:
                    raise ParamsMismatchError("coordinate over a different field")
                vals.append(c)
            else:
                vals.append(CenterPoly.constant(f, c))
        self.params = params
        self.coords = tuple(vals)

    @classmethod
    def _make(cls, params: AlgebraParams, coords) -> "HamiltonElement":
        obj = object.__new__(cls)
        obj.params = params
        obj.coords = tuple(coords)
        return obj

    # -- constructors ---------------------------------------------------------
    @classmethod
    def zero(cls, params: AlgebraParams) -> "HamiltonElement":
        z = CenterPoly.zero(params.field)
        return cls._make(params, (z, z, z, z))

    @classmethod
    def one(cls, params: AlgebraParams) -> "HamiltonElement":
        return cls.scalar(params, 1)

    @classmethod
    def scalar(cls, params: AlgebraParams, c) -> "HamiltonElement":
        return cls(params, c)

    @classmethod
    def central(cls, params: AlgebraParams, r: CenterPoly) -> "HamiltonElement":
        return cls(params, r)

    @classmethod
    def omega(cls, params: AlgebraParams) -> "HamiltonElement":
        return cls(params, CenterPoly.variable(params.field))

    @classmethod
    def generator(cls, params: AlgebraParams, name: str) -> "HamiltonElement":
        if name == "a":
            return cls(params, 0, 1)
        if name == "b":
            return cls(params, 0, 0, 1)
        if name == "w":
            return cls.omega(params)
        raise PreconditionError(f"unknown generator {name!r}")

    @classmethod
    def basic(cls, params: AlgebraParams, side: str, lam, mu=0) -> "HamiltonElement":
        """``lam * g + mu`` for the generator ``g`` of the given side."""
        if side == "a":
            return cls(params, mu, lam)
        if side == "b":
            return cls(params, mu, 0, lam)
        raise PreconditionError(f"side must be 'a' or 'b', got {side!r}")

    @classmethod
    def random(cls, params: AlgebraParams, rng: random.Random, degree: int = 3, height: int = 5) -> "HamiltonElement":
        f = params.field

        def rp():
            d = rng.randint(-1, degree)
            return CenterPoly(f, tuple(f.random(rng, height) for _ in range(d + 1)))

        return cls._make(params, (rp(), rp(), rp(), rp()))

    # -- coordinates ----------------------------------------------------------
    x1 = property(lambda self: self.coords[0])
    xa = property(lambda self: self.coords[1])
    xb = property(lambda self: self.coords[2])
    xab = property(lambda self: self.coords[3])

    @property
    def field(self):
        return self.params.field

    def degree(self):
        """Largest coordinate degree."""
        return max(c.degree for c in self.coords)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def is_central(self) -> bool:
        return all(c.is_zero() for c in self.coords[1:])

    def is_scalar(self) -> bool:
        return self.is_central() and self.x1.is_constant()

    def scalar_value(self) -> FieldValue:
        if not self.is_scalar():
            raise PreconditionError("element is not a scalar")
        return FieldValue(self.field, self.x1.constant_term)

    def basic_side(self) -> str | None:
        """``'a'`` or ``'b'`` for a nonscalar basic vector, ``'scalar'`` for scalars, else None."""
        x1, xa, xb, xab = self.coords
        if not (x1.is_constant() and xa.is_constant() and xb.is_constant() and xab.is_zero()):
            return None
        if xa.is_zero() and xb.is_zero():
            return "scalar"
        if xb.is_zero():
            return "a"
        if xa.is_zero():
            return "b"
        return None

    def is_basic(self) -> bool:
        return self.basic_side() is not None

    # -- arithmetic -----------------------------------------------------------
    def _check(self, other: "HamiltonElement") -> None:
        if other.params != self.params:
            raise ParamsMismatchError("elements over different parameters")

    def _lift(self, other):
        if isinstance(other, HamiltonElement):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, FieldValue)):
            return HamiltonElement.scalar(self.params, other)
        if isinstance(other, CenterPoly):
            return HamiltonElement.central(self.params, other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return HamiltonElement._make(self.params, [x + y for x, y in zip(self.coords, o.coords)])

    __radd__ = __add__

    def __neg__(self) -> "HamiltonElement":
        return HamiltonElement._make(self.params, [-x for x in self.coords])

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return HamiltonElement._make(self.params, [x - y for x, y in zip(self.coords, o.coords)])

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def scale(self, r) -> "HamiltonElement":
        """Multiply by a central element (CenterPoly or scalar)."""
        return HamiltonElement._make(self.params, [x * r for x in self.coords])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldValue, CenterPoly)):
            return self.scale(other)
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return hamilton_mul(self, o)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, FieldValue, CenterPoly)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "HamiltonElement":
        if n < 0:
            return self.inverse() ** (-n)
        out = HamiltonElement.one(self.params)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def exact_div(self, r: CenterPoly) -> "HamiltonElement":
        return HamiltonElement._make(self.params, [x.exact_div(r) for x in self.coords])

    # -- quadratic machinery ----------------------------------------------------
    def star(self) -> "HamiltonElement":
        return star(self)

    def trace(self) -> CenterPoly:
        return trace(self)

    def norm(self) -> CenterPoly:
        return norm(self)

    def inner(self, other: "HamiltonElement") -> CenterPoly:
        return inner(self, other)

    def is_unit(self) -> bool:
        return is_unit(self)

    def inverse(self) -> "HamiltonElement":
        return invert(self)

    # -- comparison ---------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, HamiltonElement):
            return self.params == other.params and self.coords == other.coords
        if isinstance(other, (int, Fraction, FieldValue, CenterPoly)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.params, self.coords))

    # -- text -----------------------------------------------------------------------
    def render(self, compact: bool = False) -> str:
        names = ("", "a", "b", "ab")
        parts = []
        for c, n in zip(self.coords, names):
            if compact and c.is_zero():
                continue
            parts.append(f"({c.render('w')}){n}")
        return " + ".join(parts) if parts else "(0)"

    def to_json(self) -> dict:
        f = self.field
        return {k: [f.render(c) for c in poly.coeffs]
                for k, poly in zip(("x1", "xa", "xb", "xab"), self.coords)}

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"HamiltonElement({self.render(compact=True)})"


# -- products -------------------------------------------------------------------

def hamilton_mul(x: HamiltonElement, y: HamiltonElement) -> HamiltonElement:
    x._check(y)
    table = x.params.table
    zero = CenterPoly.zero(x.field)
    out = [zero, zero, zero, zero]
    for i, xi in enumerate(x.coords):
        if xi.is_zero():
            continue
        row = table[i]
        for j, yj in enumerate(y.coords):
            if yj.is_zero():
                continue
            prod = xi * yj
            for k, c in enumerate(row[j]):
                if c.coeffs:
                    out[k] = out[k] + (prod if c.coeffs == (1,) or c.coeffs == (Fraction(1),) else prod * c)
    return HamiltonElement._make(x.params, out)


def star(x: HamiltonElement) -> HamiltonElement:
    """Adjoint, from a* = tau_p - a, b* = tau_q - b, (ab)* = tau_p tau_q - w - ab."""
    P = x.params
    f = P.field
    x1, xa, xb, xab = x.coords
    st = CenterPoly.constant(f, f.mul(P.tau_p, P.tau_q)) - CenterPoly.variable(f)
    new1 = x1 + xa.scale(P.tau_p) + xb.scale(P.tau_q) + xab * st
    return HamiltonElement._make(P, (new1, -xa, -xb, -xab))


def trace(x: HamiltonElement) -> CenterPoly:
    return (x + star(x)).x1


def norm(x: HamiltonElement) -> CenterPoly:
    return hamilton_mul(x, star(x)).x1


def inner(x: HamiltonElement, y: HamiltonElement) -> CenterPoly:
    x._check(y)
    return trace(hamilton_mul(x, star(y)))


def commutator(x: HamiltonElement, y: HamiltonElement) -> HamiltonElement:
    return x * y - y * x


def conjugate(x: HamiltonElement, u: HamiltonElement) -> HamiltonElement:
    """``u x u^{-1}``."""
    return u * x * invert(u)


def fundamental_polynomial(params: AlgebraParams) -> CenterPoly:
    return params.fundamental_polynomial


def is_unit(x: HamiltonElement) -> bool:
    n = norm(x)
    return n.degree == 0


def invert(x: HamiltonElement) -> HamiltonElement:
    n = norm(x)
    if n.degree != 0:
        raise NotAUnitError(f"element with norm {n.render('w')} is not a unit")
    return star(x).scale(x.field.inv(n.constant_term))


def is_zero_divisor(x: HamiltonElement) -> bool:
    return not x.is_zero() and norm(x).is_zero()


def annihilator(x: HamiltonElement) -> HamiltonElement:
    """A nonzero element killing ``x`` on both sides (its adjoint)."""
    if x.is_zero() or not norm(x).is_zero():
        raise PreconditionError("annihilator requires a nonzero element of norm zero")
    return star(x)


def is_quadratic(x: HamiltonElement) -> bool:
    return trace(x).is_constant() and norm(x).is_constant()


def minimal_quadratic(x: HamiltonElement) -> CenterPoly:
    if x.is_scalar():
        raise PreconditionError("scalars have a linear minimal polynomial")
    tr, n = trace(x), norm(x)
    if not (tr.is_constant() and n.is_constant()):
        raise PreconditionError("element is not quadratic")
    f = x.field
    return CenterPoly(f, (n.constant_term, f.neg(tr.constant_term), f.one))


def normalize(x: HamiltonElement) -> tuple[CenterPoly, HamiltonElement]:
    """Split ``x = s * x_n`` with ``s`` the monic gcd of the coordinates."""
    if x.is_zero():
        raise PreconditionError("cannot normalize zero")
    nonzero = [c for c in x.coords if not c.is_zero()]
    s = nonzero[0].monic()
    for c in nonzero[1:]:
        s = poly_gcd(s, c)
    return s, x.exact_div(s)


def gram_matrix(basis: Sequence[HamiltonElement]) -> PolyMatrix:
    if not basis:
        raise PreconditionError("empty basis")
    return PolyMatrix(basis[0].field, tuple(tuple(inner(u, v) for v in basis) for u in basis))


def gram_det(basis: Sequence[HamiltonElement]) -> CenterPoly:
    return gram_matrix(basis).det()


def mat4_embedding(x: HamiltonElement) -> PolyMatrix:
    """Image under a -> A, b -> B, w -> t I."""
    A, B = mat4_generators(x.params)
    f = x.field
    mats = (PolyMatrix.identity(f, 4), A, B, A * B)
    out = PolyMatrix.zero(f, 4)
    for c, m in zip(x.coords, mats):
        if not c.is_zero():
            out = out + m.scale(c)
    return out


def deployed_coordinates(x: HamiltonElement, u: HamiltonElement, v: HamiltonElement) -> tuple[CenterPoly, ...]:
    """Coordinates of ``x`` in the deployed basis ``(1, u, v, uv)``.

    ``u`` and ``v`` must be nonscalar basic vectors on opposite sides.
    """
    su, sv = u.basic_side(), v.basic_side()
    if su not in ("a", "b") or sv not in ("a", "b") or su == sv:
        raise PreconditionError("deployed basis needs nonscalar basic vectors on opposite sides")
    uv = u * v
    # The ab-coordinate of uv is +-(lambda_u lambda_v), a nonzero constant.
    k = uv.xab.constant_term
    f = x.field
    c_uv = x.xab.scale(f.inv(k))
    rest = x - uv.scale(c_uv)
    idx = {"a": 1, "b": 2}
    lu = u.coords[idx[su]].constant_term
    lv = v.coords[idx[sv]].constant_term
    c_u = rest.coords[idx[su]].scale(f.inv(lu))
    c_v = rest.coords[idx[sv]].scale(f.inv(lv))
    c_1 = rest.x1 - c_u * u.x1 - c_v * v.x1
    return c_1, c_u, c_v, c_uv
