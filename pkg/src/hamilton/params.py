"""Algebra parameters ``p(t) = t^2 - tau_p t + nu_p`` and ``q(t) = t^2 - tau_q t + nu_q``.

Construction derives the multiplication table of the deployed basis
``(1, a, b, ab)`` over the centre by rewriting words, then checks it against
the 4x4 matrix representation before freezing it.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .errors import InternalError, PreconditionError
from .field import Field, FieldValue
from .matrices import PolyMatrix
from .poly import CenterPoly, quadratic

# Basis words of the free C-module, in coordinate order.
BASIS_WORDS = ("", "a", "b", "ab")


@dataclass(frozen=True)
class AlgebraParams:
    field: Field
    tau_p: object
    nu_p: object
    tau_q: object
    nu_q: object
    table: tuple = dc_field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        f = self.field
        for name in ("tau_p", "nu_p", "tau_q", "nu_q"):
            object.__setattr__(self, name, f.coerce(getattr(self, name)))
        table = _derive_table(self)
        object.__setattr__(self, "table", table)
        _validate_table(self)

    # -- constructors -------------------------------------------------
    @classmethod
    def from_polys(cls, p: CenterPoly, q: CenterPoly) -> "AlgebraParams":
        if p.field != q.field:
            raise PreconditionError("p and q live over different fields")
        for name, r in (("p", p), ("q", q)):
            if r.degree != 2 or not r.is_monic():
                raise PreconditionError(f"{name} must be a monic quadratic, got {r}")
        f = p.field
        return cls(f, f.neg(p.coeff(1)), p.coeff(0), f.neg(q.coeff(1)), q.coeff(0))

    @classmethod
    def parse(cls, field: Field | str, p: str, q: str) -> "AlgebraParams":
        from .parser import parse_poly

        if isinstance(field, str):
            field = Field.parse(field)
        return cls.from_polys(parse_poly(p, field), parse_poly(q, field))

    # -- derived data ---------------------------------------------------
    @property
    def p(self) -> CenterPoly:
        return quadratic(self.field, self.tau_p, self.nu_p)

    @property
    def q(self) -> CenterPoly:
        return quadratic(self.field, self.tau_q, self.nu_q)

    def generator_poly(self, side: str) -> CenterPoly:
        return self.p if side == "a" else self.q

    def trace_of(self, side: str):
        return self.tau_p if side == "a" else self.tau_q

    def norm_of(self, side: str):
        return self.nu_p if side == "a" else self.nu_q

    @cached_property
    def fundamental_polynomial(self) -> CenterPoly:
        f = self.field
        T, N, S, M = self.tau_p, self.nu_p, self.tau_q, self.nu_q
        c0 = f.add(f.add(f.mul(f.from_int(-4), f.mul(N, M)), f.mul(f.mul(T, T), M)), f.mul(f.mul(S, S), N))
        c1 = f.neg(f.mul(T, S))
        return CenterPoly(f, (c0, c1, f.one))

    @property
    def omega(self) -> CenterPoly:
        return CenterPoly.variable(self.field)

    def value(self, x) -> FieldValue:
        return FieldValue(self.field, self.field.coerce(x))

    def describe(self) -> str:
        return f"field={self.field.spec()} p={self.p} q={self.q}"

    def __str__(self) -> str:
        return self.describe()


# -- table derivation --------------------------------------------------------

def _rewrite_rules(params: AlgebraParams):
    """Map each forbidden pair to its expansion as {word: CenterPoly}."""
    f = params.field
    C = lambda c: CenterPoly.constant(f, c)  # noqa: E731
    T, N, S, M = params.tau_p, params.nu_p, params.tau_q, params.nu_q
    return {
        "aa": {"a": C(T), "": C(f.neg(N))},
        "bb": {"b": C(S), "": C(f.neg(M))},
        # ba = -ab + tau_q a + tau_p b - w
        "ba": {"ab": C(-1), "a": C(S), "b": C(T), "": -CenterPoly.variable(f)},
    }


def reduce_word(params: AlgebraParams, word: str) -> dict[str, CenterPoly]:
    """Normal form of a word in the basis (1, a, b, ab) using the three relations."""
    rules = _rewrite_rules(params)
    zero = CenterPoly.zero(params.field)
    todo = [(word, CenterPoly.one(params.field))]
    out: dict[str, CenterPoly] = {}
    while todo:
        w, c = todo.pop()
        if c.is_zero():
            continue
        hit = next(((i, w[i:i + 2]) for i in range(len(w) - 1) if w[i:i + 2] in rules), None)
        if hit is None:
            out[w] = out.get(w, zero) + c
            continue
        i, pair = hit
        for repl, coeff in rules[pair].items():
            todo.append((w[:i] + repl + w[i + 2:], c * coeff))
    return out


def _derive_table(params: AlgebraParams) -> tuple:
    zero = CenterPoly.zero(params.field)
    rows = []
    for u in BASIS_WORDS:
        row = []
        for v in BASIS_WORDS:
            nf = reduce_word(params, u + v)
            extra = set(nf) - set(BASIS_WORDS)
            if any(not nf[w].is_zero() for w in extra):
                raise InternalError(f"rewriting of {u + v!r} left non-basis words {extra}")
            row.append(tuple(nf.get(w, zero) for w in BASIS_WORDS))
        rows.append(tuple(row))
    return tuple(rows)


def mat4_generators(params: AlgebraParams) -> tuple[PolyMatrix, PolyMatrix]:
    """The 4x4 matrices over F[t] representing left multiplication by a and b."""
    f = params.field
    T, N, S, M = params.tau_p, params.nu_p, params.tau_q, params.nu_q
    t = CenterPoly.variable(f)
    neg = f.neg
    A = PolyMatrix.from_rows(f, [
        [0, neg(N), 0, 0],
        [1, T, 0, 0],
        [0, 0, 0, neg(N)],
        [0, 0, 1, T],
    ])
    B = PolyMatrix.from_rows(f, [
        [0, -t, neg(M), neg(f.mul(T, M))],
        [0, S, 0, M],
        [1, T, S, CenterPoly.constant(f, f.mul(T, S)) - t],
        [0, -1, 0, 0],
    ])
    return A, B


def _validate_table(params: AlgebraParams) -> None:
    A, B = mat4_generators(params)
    f = params.field
    I = PolyMatrix.identity(f, 4)
    images = (I, A, B, A * B)
    for i in range(4):
        for j in range(4):
            lhs = images[i] * images[j]
            rhs = PolyMatrix.zero(f, 4)
            for k, c in enumerate(params.table[i][j]):
                if not c.is_zero():
                    rhs = rhs + images[k].scale(c)
            if lhs != rhs:
                raise InternalError(
                    f"structure constant for {BASIS_WORDS[i] or '1'}*{BASIS_WORDS[j] or '1'} "
                    "disagrees with the matrix representation")
