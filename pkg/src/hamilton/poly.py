"""Dense univariate polynomials over an exact :class:`~hamilton.field.Field`.

The same type models elements of the centre ``F[w]`` and the parameter
polynomials ``p, q, r`` in ``F[t]``; only the printed variable differs.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from sympy import factorint

from .errors import FieldMismatchError, HamiltonError, PreconditionError, UnsupportedError
from .field import NEG_INF, Field, FieldValue, Raw


def _trim(coeffs: Sequence[Raw]) -> tuple:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


@dataclass(frozen=True)
class CenterPoly:
    """Polynomial with coefficients lowest degree first and no trailing zeros."""

    field: Field
    coeffs: tuple = ()

    def __post_init__(self) -> None:
        f = self.field
        object.__setattr__(self, "coeffs", _trim([f.coerce(c) for c in self.coeffs]))

    # Fast constructor for already-canonical raw coefficient lists.
    @classmethod
    def _raw(cls, field: Field, coeffs) -> "CenterPoly":
        obj = object.__new__(cls)
        object.__setattr__(obj, "field", field)
        object.__setattr__(obj, "coeffs", _trim(coeffs))
        return obj

    @classmethod
    def zero(cls, field: Field) -> "CenterPoly":
        return cls._raw(field, ())

    @classmethod
    def one(cls, field: Field) -> "CenterPoly":
        return cls._raw(field, (field.one,))

    @classmethod
    def constant(cls, field: Field, c) -> "CenterPoly":
        return cls._raw(field, (field.coerce(c),))

    @classmethod
    def monomial(cls, field: Field, degree: int, c=1) -> "CenterPoly":
        return cls._raw(field, [field.zero] * degree + [field.coerce(c)])

    @classmethod
    def variable(cls, field: Field) -> "CenterPoly":
        return cls.monomial(field, 1)

    # -- inspection ---------------------------------------------------
    @property
    def degree(self):
        """Degree, with ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Raw:
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def coeff(self, k: int) -> Raw:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero

    @property
    def constant_term(self) -> Raw:
        return self.coeff(0)

    @property
    def coefficients(self) -> list[FieldValue]:
        return [FieldValue(self.field, c) for c in self.coeffs]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other) -> "CenterPoly":
        if isinstance(other, CenterPoly):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")
            return other
        if isinstance(other, (int, Fraction, FieldValue)):
            return CenterPoly.constant(self.field, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        f = self.field
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return CenterPoly._raw(f, out)

    __radd__ = __add__

    def __neg__(self) -> "CenterPoly":
        f = self.field
        return CenterPoly._raw(f, [f.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return CenterPoly._raw(self.field, ())
        p = self.field.characteristic
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        if p:
            out = [c % p for c in out]
        else:
            out = [Fraction(c) for c in out]
        return CenterPoly._raw(self.field, out)

    __rmul__ = __mul__

    def scale(self, c) -> "CenterPoly":
        f = self.field
        c = f.coerce(c)
        return CenterPoly._raw(f, [f.mul(c, x) for x in self.coeffs])

    def shift(self, k: int) -> "CenterPoly":
        """Multiply by ``t**k``."""
        if not self.coeffs:
            return self
        return CenterPoly._raw(self.field, [self.field.zero] * k + list(self.coeffs))

    def __pow__(self, n: int) -> "CenterPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = CenterPoly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        db = len(o.coeffs) - 1
        inv_lc = f.inv(o.lc)
        quot = [f.zero] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db]
            if c == 0:
                continue
            c = f.mul(c, inv_lc)
            quot[k] = c
            for i, y in enumerate(o.coeffs):
                rem[k + i] = f.sub(rem[k + i], f.mul(c, y))
        return CenterPoly._raw(f, quot), CenterPoly._raw(f, rem[:db] if db else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "CenterPoly") -> "CenterPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise PreconditionError("polynomial division is not exact")
        return q

    def monic(self) -> "CenterPoly":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lc))

    def derivative(self) -> "CenterPoly":
        f = self.field
        return CenterPoly._raw(f, [f.mul(f.from_int(i), c) for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        """Horner evaluation at a raw scalar, a FieldValue, or anything ring-like."""
        if isinstance(x, FieldValue):
            return FieldValue(self.field, self.eval_raw(x.value))
        if isinstance(x, (int, Fraction)):
            return FieldValue(self.field, self.eval_raw(self.field.coerce(x)))
        acc = None
        for c in reversed(self.coeffs):
            acc = (acc * x + c) if acc is not None else x * 0 + c
        return acc if acc is not None else x * 0

    def eval_raw(self, x: Raw) -> Raw:
        f = self.field
        acc = f.zero
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def compose(self, inner: "CenterPoly") -> "CenterPoly":
        acc = CenterPoly.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * inner + CenterPoly._raw(self.field, (c,))
        return acc

    # -- comparisons --------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, CenterPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, FieldValue)):
            try:
                return self == CenterPoly.constant(self.field, other)
            except FieldMismatchError:
                return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- text -----------------------------------------------------------
    def render(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        f = self.field
        parts: list[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            negative = f.characteristic == 0 and c < 0
            mag = -c if negative else c
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if mono and mag == 1:
                body = mono
            else:
                s = f.render(mag)
                body = s + (f"*{mono}" if mono and "/" in s else mono)
            if not parts:
                parts.append(("-" if negative else "") + body)
            else:
                parts.append(("-" if negative else "+") + body)
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"CenterPoly({self.field!r}, {self.render()})"


def poly(field: Field, coeffs: Iterable) -> CenterPoly:
    """Build a polynomial from coefficients listed lowest degree first."""
    return CenterPoly(field, tuple(coeffs))


def poly_gcd(a: CenterPoly, b: CenterPoly) -> CenterPoly:
    """Monic greatest common divisor; both zero is an error."""
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field!r} vs {b.field!r}")
    if a.is_zero() and b.is_zero():
        raise PreconditionError("gcd of two zero polynomials is undefined")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: CenterPoly, b: CenterPoly) -> tuple[CenterPoly, CenterPoly, CenterPoly]:
    """Return ``(g, s, t)`` with ``g = s*a + t*b`` monic."""
    f = a.field
    r0, r1 = a, b
    s0, s1 = CenterPoly.one(f), CenterPoly.zero(f)
    t0, t1 = CenterPoly.zero(f), CenterPoly.one(f)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        raise PreconditionError("xgcd of two zero polynomials")
    inv = f.inv(r0.lc)
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def poly_powmod(base: CenterPoly, exponent: int, modulus: CenterPoly) -> CenterPoly:
    result = CenterPoly.one(base.field) % modulus
    base = base % modulus
    while exponent:
        if exponent & 1:
            result = (result * base) % modulus
        base = (base * base) % modulus
        exponent >>= 1
    return result


def poly_roots_quadratic(r: CenterPoly) -> list[FieldValue]:
    """Roots in F of a monic quadratic, with multiplicity."""
    if r.degree != 2:
        raise PreconditionError(f"expected a quadratic, got degree {r.degree}")
    f = r.field
    r = r.monic()
    b, c = r.coeff(1), r.coeff(0)
    if f.characteristic == 2:
        roots = [x for x in f.elements() if r.eval_raw(x) == 0]
        if len(roots) == 1:
            roots = roots * 2
        return [FieldValue(f, x) for x in roots]
    disc = f.sub(f.mul(b, b), f.mul(f.from_int(4), c))
    s = f.sqrt(disc)
    if s is None:
        return []
    half = f.inv(f.from_int(2))
    x1 = f.mul(f.sub(f.neg(b), s), half)
    x2 = f.mul(f.add(f.neg(b), s), half)
    return sorted((FieldValue(f, x1), FieldValue(f, x2)), key=lambda v: v.value)


def poly_is_irreducible(r: CenterPoly) -> bool:
    """Irreducibility test for a monic polynomial of positive degree."""
    if not r.is_monic() or r.degree < 1:
        raise PreconditionError("irreducibility test expects a monic polynomial of degree >= 1")
    f = r.field
    n = r.degree
    if n == 1:
        return True
    if n == 2:
        return not poly_roots_quadratic(r)
    if f.characteristic == 0:
        raise UnsupportedError("irreducibility over the rationals is only supported up to degree 2")
    # Rabin's test over GF(p).
    p = f.characteristic
    x = CenterPoly.variable(f)
    for prime in factorint(n):
        h = poly_powmod(x, p ** (n // prime), r) - x
        if not poly_gcd(h, r).is_constant():
            return False
    return (poly_powmod(x, p**n, r) - x).is_zero()


def quadratic(field: Field, trace, norm) -> CenterPoly:
    """The monic quadratic ``t^2 - trace*t + norm``."""
    f = field
    return CenterPoly._raw(f, (f.coerce(norm), f.neg(f.coerce(trace)), f.one))


def has_double_root_over_closure(r: CenterPoly) -> bool:
    """A monic quadratic has a repeated root in an algebraic closure iff its discriminant vanishes."""
    f = r.field
    b, c = r.coeff(1), r.coeff(0)
    return f.sub(f.mul(b, b), f.mul(f.from_int(4), c)) == 0


def split_type(r: CenterPoly) -> str:
    """Classify a monic quadratic: ``irreducible``, ``split-simple`` or ``double-root``."""
    roots = poly_roots_quadratic(r)
    if not roots:
        return "irreducible"
    return "double-root" if roots[0] == roots[1] else "split-simple"


__all__ = [
    "CenterPoly",
    "HamiltonError",
    "poly",
    "poly_gcd",
    "poly_xgcd",
    "poly_powmod",
    "poly_roots_quadratic",
    "poly_is_irreducible",
    "quadratic",
    "split_type",
    "has_double_root_over_closure",
]
