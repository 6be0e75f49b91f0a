"""Exact base fields: the rationals and prime fields GF(p).

Elements are handled internally as *raw* Python values (``Fraction`` for the
rationals, ``int`` in ``range(p)`` for GF(p)); :class:`Field` carries the
arithmetic.  :class:`FieldValue` is the tagged, self-describing wrapper used at
API boundaries.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from sympy import isprime
from sympy.ntheory import sqrt_mod

from .errors import FieldMismatchError, HamiltonError, UnsupportedError

Raw = Union[int, Fraction]

# Degree of the zero polynomial; compares below every integer.
NEG_INF = float("-inf")


@dataclass(frozen=True)
class Field:
    """Field descriptor: characteristic 0 (rationals) or a prime p."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        c = self.characteristic
        if c != 0 and not (c > 1 and isprime(c)):
            raise HamiltonError(f"characteristic must be 0 or a prime, got {c}")

    # -- construction -------------------------------------------------
    @classmethod
    def rationals(cls) -> "Field":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(p)

    @classmethod
    def parse(cls, spec: str) -> "Field":
        """Parse ``q`` or ``fp:<prime>``."""
        s = spec.strip().lower()
        if s in ("q", "qq", "rationals"):
            return cls(0)
        if s.startswith("fp:") or s.startswith("gf:"):
            try:
                p = int(s[3:])
            except ValueError:
                raise HamiltonError(f"bad field spec {spec!r}") from None
            return cls(p)
        raise HamiltonError(f"bad field spec {spec!r}; expected 'q' or 'fp:<prime>'")

    # -- description --------------------------------------------------
    @property
    def kind(self) -> str:
        return "rationals" if self.characteristic == 0 else "prime"

    @property
    def is_finite(self) -> bool:
        return self.characteristic != 0

    @property
    def order(self) -> float:
        return math.inf if self.characteristic == 0 else self.characteristic

    def spec(self) -> str:
        return "q" if self.characteristic == 0 else f"fp:{self.characteristic}"

    def __repr__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    # -- raw arithmetic -----------------------------------------------
    @property
    def zero(self) -> Raw:
        return Fraction(0) if self.characteristic == 0 else 0

    @property
    def one(self) -> Raw:
        return Fraction(1) if self.characteristic == 0 else 1

    def coerce(self, x) -> Raw:
        p = self.characteristic
        if isinstance(x, FieldValue):
            if x.field != self:
                raise FieldMismatchError(f"value over {x.field!r} used in {self!r}")
            return x.value
        if isinstance(x, str):
            x = x.strip()
            if "/" in x:
                num, den = x.split("/", 1)
                return self.div(self.coerce(int(num)), self.coerce(int(den)))
            return self.coerce(int(x))
        if isinstance(x, bool):
            x = int(x)
        if p == 0:
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            raise TypeError(f"cannot coerce {x!r} into {self!r}")
        if isinstance(x, int):
            return x % p
        if isinstance(x, Fraction):
            return self.div(x.numerator % p, x.denominator % p)
        raise TypeError(f"cannot coerce {x!r} into {self!r}")

    def add(self, x: Raw, y: Raw) -> Raw:
        p = self.characteristic
        return x + y if p == 0 else (x + y) % p

    def sub(self, x: Raw, y: Raw) -> Raw:
        p = self.characteristic
        return x - y if p == 0 else (x - y) % p

    def neg(self, x: Raw) -> Raw:
        p = self.characteristic
        return -x if p == 0 else (-x) % p

    def mul(self, x: Raw, y: Raw) -> Raw:
        p = self.characteristic
        return x * y if p == 0 else (x * y) % p

    def inv(self, x: Raw) -> Raw:
        if x == 0:
            raise ZeroDivisionError("division by zero in field")
        p = self.characteristic
        return 1 / x if p == 0 else pow(x, -1, p)

    def div(self, x: Raw, y: Raw) -> Raw:
        return self.mul(x, self.inv(y))

    def pow(self, x: Raw, n: int) -> Raw:
        if n < 0:
            return self.pow(self.inv(x), -n)
        p = self.characteristic
        return x**n if p == 0 else pow(x, n, p)

    def from_int(self, n: int) -> Raw:
        return self.coerce(n)

    def sqrt(self, x: Raw) -> Raw | None:
        """A square root of ``x`` in the field, or ``None``."""
        p = self.characteristic
        if p == 0:
            if x < 0:
                return None
            n, d = x.numerator, x.denominator
            rn, rd = math.isqrt(n), math.isqrt(d)
            if rn * rn == n and rd * rd == d:
                return Fraction(rn, rd)
            return None
        if x == 0:
            return 0
        if p == 2:
            return x
        r = sqrt_mod(x, p)
        return None if r is None else r % p

    def render(self, x: Raw) -> str:
        if self.characteristic == 0:
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return str(x)

    def random(self, rng: random.Random, height: int = 5) -> Raw:
        p = self.characteristic
        if p:
            return rng.randrange(p)
        num = rng.randint(-height, height)
        den = rng.choice((1, 1, 1, 2, 3)) if height > 1 else 1
        return Fraction(num, den)

    def random_nonzero(self, rng: random.Random, height: int = 5) -> Raw:
        while True:
            x = self.random(rng, height)
            if x != 0:
                return x

    def elements(self) -> Iterator[Raw]:
        if not self.characteristic:
            raise UnsupportedError("cannot enumerate an infinite field")
        return iter(range(self.characteristic))

    def value(self, x) -> "FieldValue":
        return FieldValue(self, self.coerce(x))


@dataclass(frozen=True)
class FieldValue:
    """A scalar tagged with its field; mixing fields is an error."""

    field: Field
    value: Raw

    def __post_init__(self) -> None:
        canon = self.field.coerce(self.value)
        object.__setattr__(self, "value", canon)

    def _other(self, other) -> Raw:
        if isinstance(other, FieldValue):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.coerce(other)
        return NotImplemented

    def _wrap(self, raw: Raw) -> "FieldValue":
        return FieldValue(self.field, raw)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(o, self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, n: int):
        return self._wrap(self.field.pow(self.value, n))

    def inverse(self) -> "FieldValue":
        return self._wrap(self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldValue):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __str__(self) -> str:
        return self.field.render(self.value)

    def __repr__(self) -> str:
        return f"FieldValue({self.field!r}, {self})"
