"""Square-zero modules attached to idempotents, special degenerate elements and
complete conjugacy invariants of quadratic elements."""
from __future__ import annotations

from dataclasses import dataclass

from .basic import BasicVector, canonical_zero_divisor, zero_divisors_of_side
from .core import HamiltonElement, is_quadratic, minimal_quadratic, normalize
from .errors import InternalError, PreconditionError
from .field import FieldValue
from .matrices import PolyMatrix
from .poly import CenterPoly, poly_roots_quadratic
from .retracing import DEFAULT_BUDGET, refined_retrace
from .units import sb_generator


def _is_idempotent(params, alpha: BasicVector) -> bool:
    return alpha.norm(params).is_zero() and alpha.trace(params) == 1


def _basis(params):
    one = HamiltonElement.one(params)
    a, b = HamiltonElement.generator(params, "a"), HamiltonElement.generator(params, "b")
    return (one, a, b, a * b)


def sharp_generator(params, alpha: BasicVector) -> HamiltonElement:
    """Normalized generator of ``{x : alpha* x = 0 and x alpha = 0}``."""
    if alpha.is_scalar() or not _is_idempotent(params, alpha):
        raise PreconditionError(f"{alpha} is not a nontrivial basic idempotent")
    el = alpha.element(params)
    el_star = el.star()
    basis = _basis(params)
    left = [el_star * u for u in basis]
    right = [u * el for u in basis]
    rows = [[left[j].coords[i] for j in range(4)] for i in range(4)]
    rows += [[right[j].coords[i] for j in range(4)] for i in range(4)]
    v = PolyMatrix.from_rows(params.field, rows).kernel_vector()
    if v is None:
        raise InternalError("annihilator module of an idempotent is trivial")
    x = HamiltonElement._make(params, v)
    _, x = normalize(x)
    lead = next(c for c in x.coords if not c.is_zero())
    x = x.scale(params.field.inv(lead.lc))
    if not (x * x).is_zero():
        raise InternalError("sharp generator does not square to zero")
    return x


def _member_multiple(x: HamiltonElement, z: HamiltonElement):
    """``(lam, r)`` with ``x = lam + r z`` and ``lam`` a constant, else None."""
    k = next((i for i in (1, 2, 3) if not z.coords[i].is_zero()), None)
    if k is None:
        return None
    r, rem = divmod(x.coords[k], z.coords[k])
    if not rem.is_zero() or r.is_zero():
        return None
    rest = x - z.scale(r)
    if not rest.is_scalar():
        return None
    return rest.scalar_value(), r


def is_special_degenerate(x: HamiltonElement) -> BasicVector | None:
    """The canonical zero divisor ``alpha`` with ``x`` in ``F + SB(alpha)`` and ``x`` nonbasic, if any."""
    P = x.params
    if x.is_scalar() or x.is_basic():
        return None
    for side in ("a", "b"):
        for alpha in zero_divisors_of_side(P, side):
            z = sb_generator(P, alpha)
            if _member_multiple(x, z) is not None:
                return alpha
    return None


@dataclass(frozen=True)
class BasicClass:
    """Class of ``shift + modular_norm * representative`` (``shift`` None for no double root)."""

    minimal_poly: CenterPoly
    representative: BasicVector
    shift: FieldValue | None = None
    modular_norm: CenterPoly | None = None

    kind = "basic"

    @property
    def conjugate_to_basic(self) -> bool:
        return self.modular_norm is None or self.modular_norm.is_constant()

    def render(self) -> str:
        if self.shift is None:
            return f"basic class of {self.representative}"
        return (f"basic class: {self.shift} + ({self.modular_norm.render('w')})*({self.representative})")

    def to_json(self) -> dict:
        out = {"kind": "basic", "minimal_poly": self.minimal_poly.render(),
               "representative": self.representative.to_json(),
               "conjugate_to_basic": self.conjugate_to_basic}
        if self.shift is not None:
            out["shift"] = str(self.shift)
            out["modular_norm"] = self.modular_norm.render("w")
        return out


@dataclass(frozen=True)
class SharpClass:
    minimal_poly: CenterPoly
    idempotent: BasicVector
    shift: FieldValue
    modular_norm: CenterPoly

    kind = "sharp"
    conjugate_to_basic = False

    def render(self) -> str:
        return (f"sharp class of {self.idempotent}: {self.shift} + "
                f"({self.modular_norm.render('w')}) * normalized vector")

    def to_json(self) -> dict:
        return {"kind": "sharp", "minimal_poly": self.minimal_poly.render(),
                "idempotent": self.idempotent.to_json(), "shift": str(self.shift),
                "modular_norm": self.modular_norm.render("w"), "conjugate_to_basic": False}


def conjugacy_invariant(x: HamiltonElement, budget: int = DEFAULT_BUDGET):
    P = x.params
    if x.is_scalar() or not is_quadratic(x):
        raise PreconditionError("conjugacy invariant needs a nonscalar quadratic element")
    m = minimal_quadratic(x)
    roots = poly_roots_quadratic(m)
    if not roots or roots[0] != roots[1]:
        out = refined_retrace(x, budget)
        if not out.ok:
            raise InternalError("element without a double root failed to retrace")
        return BasicClass(m, BasicVector.from_element(out.basic_result))
    lam = roots[0]
    s, y = normalize(x - HamiltonElement.scalar(P, lam))
    out = refined_retrace(y, budget)
    if out.ok:
        return BasicClass(m, BasicVector.from_element(out.basic_result), lam, s)
    witness = canonical_zero_divisor(P, out.witness)
    return SharpClass(m, witness, lam, s)
