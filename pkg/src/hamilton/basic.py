"""Basic vectors ``lam * g + mu`` of the two basic subalgebras ``F[a]`` and ``F[b]``."""
from __future__ import annotations

from dataclasses import dataclass

from .core import HamiltonElement
from .errors import PreconditionError
from .field import FieldValue
from .params import AlgebraParams
from .poly import poly_roots_quadratic


def opposite(side: str) -> str:
    return "b" if side == "a" else "a"


@dataclass(frozen=True)
class BasicVector:
    """``lam * g + mu`` with ``g`` the generator of ``side``."""

    side: str
    lam: FieldValue
    mu: FieldValue

    def __post_init__(self) -> None:
        if self.side not in ("a", "b"):
            raise PreconditionError(f"side must be 'a' or 'b', got {self.side!r}")

    @classmethod
    def make(cls, params: AlgebraParams, side: str, lam, mu=0) -> "BasicVector":
        f = params.field
        return cls(side, FieldValue(f, f.coerce(lam)), FieldValue(f, f.coerce(mu)))

    @classmethod
    def from_element(cls, x: HamiltonElement) -> "BasicVector":
        side = x.basic_side()
        if side not in ("a", "b"):
            raise PreconditionError("element is not a nonscalar basic vector")
        f = x.field
        idx = 1 if side == "a" else 2
        return cls(side, FieldValue(f, x.coords[idx].constant_term), FieldValue(f, x.x1.constant_term))

    def element(self, params: AlgebraParams) -> HamiltonElement:
        return HamiltonElement.basic(params, self.side, self.lam, self.mu)

    def is_scalar(self) -> bool:
        return self.lam.is_zero()

    def trace(self, params: AlgebraParams) -> FieldValue:
        return self.lam * params.trace_of(self.side) + self.mu * 2

    def norm(self, params: AlgebraParams) -> FieldValue:
        t, n = params.trace_of(self.side), params.norm_of(self.side)
        return self.lam * self.lam * n + self.lam * self.mu * t + self.mu * self.mu

    def is_unit(self, params: AlgebraParams) -> bool:
        return not self.norm(params).is_zero()

    def scaled(self, c) -> "BasicVector":
        return BasicVector(self.side, self.lam * c, self.mu * c)

    def shifted(self, c) -> "BasicVector":
        return BasicVector(self.side, self.lam, self.mu + c)

    def monic(self) -> "BasicVector":
        """Scale so the generator coefficient is 1."""
        if self.is_scalar():
            raise PreconditionError("scalar basic vector has no monic form")
        return self.scaled(self.lam.inverse())

    def star(self, params: AlgebraParams) -> "BasicVector":
        # (lam g + mu)* = lam (tau - g) + mu
        return BasicVector(self.side, -self.lam, self.mu + self.lam * params.trace_of(self.side))

    def render(self) -> str:
        g = self.side
        lam, mu = self.lam, self.mu
        head = g if lam == 1 else ("-" + g if lam == -1 and lam.field.characteristic == 0 else f"{lam}{g}")
        if mu.is_zero():
            return head
        f = mu.field
        if f.characteristic == 0 and mu.value < 0:
            return f"{head}-{-mu}"
        return f"{head}+{mu}"

    def to_json(self) -> dict:
        return {"side": self.side, "lambda": str(self.lam), "mu": str(self.mu)}

    def __str__(self) -> str:
        return self.render()


def canonical_zero_divisor(params: AlgebraParams, alpha: BasicVector) -> BasicVector:
    """Idempotent scaling when the trace is nonzero, generator-monic scaling otherwise."""
    if not alpha.norm(params).is_zero() or alpha.is_scalar():
        raise PreconditionError(f"{alpha} is not a basic zero divisor")
    tr = alpha.trace(params)
    if tr.is_zero():
        return alpha.monic()
    return alpha.scaled(tr.inverse())


def zero_divisors_of_side(params: AlgebraParams, side: str) -> list[BasicVector]:
    """Canonical zero divisors of a basic subalgebra (0, 1 or 2 of them)."""
    roots = poly_roots_quadratic(params.generator_poly(side))
    out: list[BasicVector] = []
    for r in dict.fromkeys(roots):
        z = canonical_zero_divisor(params, BasicVector.make(params, side, 1, -r.value))
        if z not in out:
            out.append(z)
    return out


def side_kind(params: AlgebraParams, side: str) -> str:
    """``field``, ``split`` or ``degenerate`` for the basic subalgebra of ``side``."""
    roots = poly_roots_quadratic(params.generator_poly(side))
    if not roots:
        return "field"
    return "degenerate" if roots[0] == roots[1] else "split"
