"""Linear combinations of alternating words in ``a`` and ``b``.

Multiplication concatenates words and rewrites doubled letters with
``aa -> tau_p a - nu_p`` and ``bb -> tau_q b - nu_q``, always at the leftmost
doubled pair.  Terms keep the order in which the computation first produced
them; ``render(sort=True)`` prints them lexicographically instead.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import ParamsMismatchError, PreconditionError
from .field import FieldValue, Raw
from .params import AlgebraParams
from .poly import CenterPoly


def is_alternating(word: str) -> bool:
    return all(ch in "ab" for ch in word) and all(word[i] != word[i + 1] for i in range(len(word) - 1))


class WordExpr:
    """Immutable map from alternating words to nonzero scalars."""

    __slots__ = ("params", "_terms")

    def __init__(self, params: AlgebraParams, terms: Iterable[tuple[str, object]] | dict = ()):
        self.params = params
        f = params.field
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict[str, Raw] = {}
        for w, c in items:
            if not is_alternating(w):
                raise PreconditionError(f"word {w!r} is not alternating")
            _accumulate(f, acc, w, f.coerce(c))
        self._terms = acc

    @classmethod
    def _from_raw(cls, params: AlgebraParams, terms: dict) -> "WordExpr":
        obj = object.__new__(cls)
        obj.params = params
        obj._terms = terms
        return obj

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, params: AlgebraParams) -> "WordExpr":
        return cls._from_raw(params, {})

    @classmethod
    def scalar(cls, params: AlgebraParams, c) -> "WordExpr":
        return cls(params, [("", c)])

    @classmethod
    def word(cls, params: AlgebraParams, w: str, c=1) -> "WordExpr":
        return cls(params, [(w, c)])

    @classmethod
    def generator(cls, params: AlgebraParams, name: str) -> "WordExpr":
        if name in ("a", "b"):
            return cls.word(params, name)
        if name == "w":
            return cls.omega(params)
        raise PreconditionError(f"unknown generator {name!r}")

    @classmethod
    def omega(cls, params: AlgebraParams) -> "WordExpr":
        """w = tau_q a + tau_p b - ab - ba."""
        return cls(params, [("a", params.tau_q), ("b", params.tau_p), ("ab", -1), ("ba", -1)])

    @classmethod
    def random(cls, params: AlgebraParams, rng: random.Random, terms: int = 3, max_len: int = 6) -> "WordExpr":
        f = params.field
        out = []
        for _ in range(rng.randint(0, terms)):
            n = rng.randint(0, max_len)
            start = rng.choice("ab")
            w = "".join(start if i % 2 == 0 else ("b" if start == "a" else "a") for i in range(n))
            out.append((w, f.random(rng, 4)))
        return cls(params, out)

    # -- access -------------------------------------------------------------
    @property
    def terms(self) -> dict[str, FieldValue]:
        f = self.params.field
        return {w: FieldValue(f, c) for w, c in self._terms.items()}

    def items(self) -> Iterator[tuple[str, Raw]]:
        return iter(self._terms.items())

    def coefficient(self, w: str) -> FieldValue:
        return FieldValue(self.params.field, self._terms.get(w, self.params.field.zero))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    # -- arithmetic -----------------------------------------------------------
    def _check(self, other: "WordExpr") -> None:
        if other.params != self.params:
            raise ParamsMismatchError("word expressions over different parameters")

    def _lift(self, other):
        if isinstance(other, WordExpr):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, FieldValue)):
            return WordExpr.scalar(self.params, other)
        if isinstance(other, CenterPoly):
            return omega_poly_to_word(self.params, other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        f = self.params.field
        acc = dict(self._terms)
        for w, c in o._terms.items():
            _accumulate(f, acc, w, c)
        return WordExpr._from_raw(self.params, acc)

    __radd__ = __add__

    def __neg__(self) -> "WordExpr":
        f = self.params.field
        return WordExpr._from_raw(self.params, {w: f.neg(c) for w, c in self._terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return word_mul(self, o)

    def __rmul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return word_mul(o, self)

    def __pow__(self, n: int) -> "WordExpr":
        if n < 0:
            raise PreconditionError("negative powers are not defined on word expressions")
        out = WordExpr.scalar(self.params, 1)
        for _ in range(n):
            out = out * self
        return out

    def star(self) -> "WordExpr":
        """Adjoint: reverse each word and conjugate every letter."""
        a_star = WordExpr(self.params, [("", self.params.tau_p), ("a", -1)])
        b_star = WordExpr(self.params, [("", self.params.tau_q), ("b", -1)])
        out = WordExpr.zero(self.params)
        for w, c in self._terms.items():
            term = WordExpr._from_raw(self.params, {"": c})
            for ch in reversed(w):
                term = term * (a_star if ch == "a" else b_star)
            out = out + term
        return out

    # -- comparison ---------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, WordExpr):
            return self.params == other.params and self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.params, frozenset(self._terms.items())))

    # -- text -----------------------------------------------------------------------
    def render(self, sort: bool = False) -> str:
        f = self.params.field
        items = list(self._terms.items())
        if sort:
            items.sort(key=lambda kv: kv[0])
        if not items:
            return "0"
        parts = []
        for w, c in items:
            negative = f.characteristic == 0 and c < 0
            mag = -c if negative else c
            word = w if w else "()"
            body = word if mag == 1 else f"{f.render(mag)}.{word}"
            sign = "-" if negative else ("+" if parts else "")
            parts.append(sign + body)
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"WordExpr({self.render()})"


def _accumulate(f, acc: dict, w: str, c: Raw) -> None:
    """Add ``c`` to the coefficient of ``w``; zero coefficients are removed."""
    if c == 0:
        return
    new = f.add(acc[w], c) if w in acc else c
    if new == 0:
        del acc[w]
    else:
        acc[w] = new


def _rewrite_into(params: AlgebraParams, acc: dict, word: str, c: Raw) -> None:
    """Reduce ``c * word`` to alternating words, leftmost doubled pair first."""
    f = params.field
    i = next((k for k in range(len(word) - 1) if word[k] == word[k + 1]), None)
    if i is None:
        _accumulate(f, acc, word, c)
        return
    letter = word[i]
    tau, nu = (params.tau_p, params.nu_p) if letter == "a" else (params.tau_q, params.nu_q)
    head, tail = word[:i], word[i + 2:]
    ct = f.mul(c, tau)
    if ct != 0:
        _rewrite_into(params, acc, head + letter + tail, ct)
    cn = f.neg(f.mul(c, nu))
    if cn != 0:
        _rewrite_into(params, acc, head + tail, cn)


def word_mul(x: WordExpr, y: WordExpr) -> WordExpr:
    """Product in the word basis."""
    x._check(y)
    f = x.params.field
    acc: dict[str, Raw] = {}
    for w1, c1 in x._terms.items():
        for w2, c2 in y._terms.items():
            _rewrite_into(x.params, acc, w1 + w2, f.mul(c1, c2))
    return WordExpr._from_raw(x.params, acc)


def omega_poly_to_word(params: AlgebraParams, r: CenterPoly) -> WordExpr:
    """Evaluate a centre polynomial at w inside the word algebra."""
    if r.field != params.field:
        raise ParamsMismatchError("polynomial over a different field")
    w = WordExpr.omega(params)
    out = WordExpr.zero(params)
    for c in reversed(r.coeffs):
        out = out * w + WordExpr._from_raw(params, {"": c} if c != 0 else {})
    return out


def word_to_omega(x: WordExpr):
    """Coordinates in the deployed basis (1, a, b, ab), folding letters through the product."""
    from .core import HamiltonElement

    params = x.params
    gens = {"a": HamiltonElement.generator(params, "a"), "b": HamiltonElement.generator(params, "b")}
    out = HamiltonElement.zero(params)
    for w, c in x._terms.items():
        term = HamiltonElement.scalar(params, c)
        for ch in w:
            term = term * gens[ch]
        out = out + term
    return out


def omega_to_word(x) -> WordExpr:
    """The word expression equal to a deployed-basis element."""
    params = x.params
    basis = [WordExpr.word(params, w) for w in ("", "a", "b", "ab")]
    out = WordExpr.zero(params)
    for coeff, base in zip(x.coords, basis):
        if not coeff.is_zero():
            out = out + omega_poly_to_word(params, coeff) * base
    return out
