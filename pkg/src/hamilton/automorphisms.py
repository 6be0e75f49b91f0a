"""Basic automorphisms, the decomposition ``Phi = inner(gamma) o B`` and unit factorization."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .basic import BasicVector, opposite, side_kind
from .core import HamiltonElement, inner, invert, is_quadratic, is_unit, minimal_quadratic
from .errors import InternalError, NotAnAutomorphismError, NotAUnitError, PreconditionError
from .field import FieldValue
from .params import AlgebraParams
from .poly import CenterPoly, poly_roots_quadratic
from .retracing import DEFAULT_BUDGET, conjugator_product, refined_retrace
from .units import BasicUnit, ReducedDecomposition, UnitFactor, reduce_factors


@dataclass(frozen=True)
class BasicAut:
    image_of_a: BasicVector
    image_of_b: BasicVector

    @property
    def orientation(self) -> str:
        return "positive" if self.image_of_a.side == "a" else "negative"

    def validate(self, params: AlgebraParams) -> None:
        ia, ib = self.image_of_a.element(params), self.image_of_b.element(params)
        if self.image_of_a.side == self.image_of_b.side:
            raise PreconditionError("images of a and b must lie in opposite basic subalgebras")
        if minimal_quadratic(ia) != params.p or minimal_quadratic(ib) != params.q:
            raise PreconditionError("images do not satisfy p and q")

    def omega_image(self, params: AlgebraParams) -> CenterPoly:
        return inner(self.image_of_a.element(params), self.image_of_b.element(params))

    def apply(self, params: AlgebraParams, x: HamiltonElement) -> HamiltonElement:
        ia, ib = self.image_of_a.element(params), self.image_of_b.element(params)
        w = self.omega_image(params)
        parts = (HamiltonElement.one(params), ia, ib, ia * ib)
        out = HamiltonElement.zero(params)
        for c, base in zip(x.coords, parts):
            if not c.is_zero():
                out = out + base.scale(c.compose(w))
        return out

    def is_identity(self) -> bool:
        return (self.image_of_a.side == "a" and self.image_of_a.lam == 1 and self.image_of_a.mu.is_zero()
                and self.image_of_b.lam == 1 and self.image_of_b.mu.is_zero())

    def render(self) -> str:
        return f"a -> {self.image_of_a}, b -> {self.image_of_b} ({self.orientation})"

    def to_json(self) -> dict:
        return {"image_of_a": self.image_of_a.to_json(), "image_of_b": self.image_of_b.to_json(),
                "orientation": self.orientation}


@dataclass(frozen=True)
class AutDecomposition:
    basic: BasicAut
    conjugator: HamiltonElement
    factors: tuple

    def to_json(self) -> dict:
        return {"basic": self.basic.to_json(), "conjugator": self.conjugator.to_json(),
                "conjugator_text": self.conjugator.render(compact=True),
                "factors": [f.to_json() for f in self.factors]}


_KIND_RANK = {"field": 0, "split": 1, "degenerate": 2}


def _screen(X: HamiltonElement, Y: HamiltonElement) -> None:
    P = X.params
    for name, z, r in (("a", X, P.p), ("b", Y, P.q)):
        if z.is_scalar() or not is_quadratic(z) or minimal_quadratic(z) != r:
            raise NotAnAutomorphismError(f"image of {name} does not have minimal polynomial {r}")
    if inner(X, Y).degree != 1:
        raise NotAnAutomorphismError("inner product of the images does not have degree 1")


def decompose_automorphism(X: HamiltonElement, Y: HamiltonElement, budget: int = DEFAULT_BUDGET) -> AutDecomposition:
    """Find a basic automorphism B and a unit gamma with X = gamma B(a) gamma^-1, Y = gamma B(b) gamma^-1."""
    X._check(Y)
    _screen(X, Y)
    P = X.params
    # Retrace first the image whose basic subalgebra is least degenerate.
    if _KIND_RANK[side_kind(P, "a")] <= _KIND_RANK[side_kind(P, "b")]:
        first, second = X, Y
    else:
        first, second = Y, X
    r1 = refined_retrace(first, budget)
    if not r1.ok:
        raise NotAnAutomorphismError("first image is not conjugate to a basic vector")
    G1 = conjugator_product(P, r1.conjugators)
    pinned = r1.basic_result
    rest = invert(G1) * second * G1
    factors: list[UnitFactor] = list(r1.conjugators)
    if not rest.is_basic():
        try:
            r2 = refined_retrace(rest, budget, pinned=pinned)
        except PreconditionError as exc:
            raise NotAnAutomorphismError(str(exc)) from None
        if not r2.ok:
            raise NotAnAutomorphismError("second image cannot be brought to a basic vector")
        factors.extend(r2.conjugators)
    gamma = conjugator_product(P, factors)
    g_inv = invert(gamma)
    ia, ib = g_inv * X * gamma, g_inv * Y * gamma
    sa, sb = ia.basic_side(), ib.basic_side()
    if sa not in ("a", "b") or sb not in ("a", "b") or sa == sb:
        raise NotAnAutomorphismError("images are not simultaneously conjugate to a basic pair")
    B = BasicAut(BasicVector.from_element(ia), BasicVector.from_element(ib))
    if gamma * B.image_of_a.element(P) * g_inv != X or gamma * B.image_of_b.element(P) * g_inv != Y:
        raise InternalError("automorphism reconstruction failed")
    return AutDecomposition(B, gamma, tuple(_as_unit_factor(f) for f in factors))


def _as_unit_factor(f) -> UnitFactor:
    return f if hasattr(f, "kind") else BasicUnit(f)


def factor_unit(g: HamiltonElement, budget: int = DEFAULT_BUDGET) -> ReducedDecomposition:
    """Reduced decomposition ``g = scalar * prod(factors)``."""
    P = g.params
    if not is_unit(g):
        raise NotAUnitError("factor_unit expects a unit")
    if g.is_scalar():
        return ReducedDecomposition(g.scalar_value(), ())
    g_inv = invert(g)
    a, b = HamiltonElement.generator(P, "a"), HamiltonElement.generator(P, "b")
    dec = decompose_automorphism(g * a * g_inv, g * b * g_inv, budget)
    if not dec.basic.is_identity():
        raise InternalError("inner automorphism decomposed with a nontrivial basic part")
    lam = invert(dec.conjugator) * g
    if not lam.is_scalar():
        raise InternalError("conjugator differs from the unit by a non-scalar")
    result = reduce_factors(P, lam.scalar_value(), dec.factors)
    if result.element(P) != g:
        raise InternalError("reduced decomposition does not reconstruct the unit")
    if not result.is_reduced():
        raise InternalError("decomposition is not reduced")
    return result


# -- the basic automorphism group ----------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    """Images ``base + c * direction`` of a and b; ``direction`` is None for a fixed image."""

    image_of_a: BasicVector
    image_of_b: BasicVector
    family_a: BasicVector | None
    family_b: BasicVector | None
    fixes_omega: object  # bool, or a textual condition on the family parameters
    omega_image: str

    @property
    def orientation(self) -> str:
        return "positive" if self.image_of_a.side == "a" else "negative"

    def is_family(self) -> bool:
        return self.family_a is not None or self.family_b is not None

    def render(self) -> str:
        def img(base, fam, c):
            if fam is None:
                return str(base)
            return f"{base.mu} + {c}*({fam})" if not base.mu.is_zero() else f"{c}*({fam})"

        return (f"a -> {img(self.image_of_a, self.family_a, 'c1')}, "
                f"b -> {img(self.image_of_b, self.family_b, 'c2')} [{self.orientation}; "
                f"w -> {self.omega_image}; fixes w: {self.fixes_omega}]")

    def to_json(self) -> dict:
        return {"image_of_a": self.image_of_a.to_json(), "image_of_b": self.image_of_b.to_json(),
                "family_a": self.family_a.to_json() if self.family_a else None,
                "family_b": self.family_b.to_json() if self.family_b else None,
                "orientation": self.orientation, "fixes_omega": self.fixes_omega,
                "omega_image": self.omega_image}


@dataclass(frozen=True)
class AutCatalog:
    finite: bool
    entries: tuple

    @property
    def order(self):
        return len(self.entries) if self.finite else None

    def to_json(self) -> dict:
        return {"finite": self.finite, "order": self.order, "entries": [e.to_json() for e in self.entries]}


def _images(P: AlgebraParams, target_poly: CenterPoly, side: str):
    """Roots of ``target_poly`` in ``F[g]``: fixed vectors, or (base, direction) for a family."""
    f = P.field
    g_poly = P.generator_poly(side)
    tg, ng = P.trace_of(side), P.norm_of(side)
    tt, nt = f.neg(target_poly.coeff(1)), target_poly.coeff(0)
    disc = lambda tr, n: f.sub(f.mul(tr, tr), f.mul(f.from_int(4), n))  # noqa: E731
    g_roots = poly_roots_quadratic(g_poly)
    t_roots = poly_roots_quadratic(target_poly)
    double_g = bool(g_roots) and g_roots[0] == g_roots[1]
    double_t = bool(t_roots) and t_roots[0] == t_roots[1]
    if double_g or double_t:
        if not (double_g and double_t):
            return [], None
        rho_g, rho_t = g_roots[0].value, t_roots[0].value
        # rho_t + c (g - rho_g), c != 0
        base = BasicVector.make(P, side, 0, rho_t)
        direction = BasicVector.make(P, side, 1, f.neg(rho_g))
        return [], (base, direction)
    out = []
    if f.characteristic == 2:
        for lam, mu in iproduct(range(1, 2), range(2)):
            v = BasicVector.make(P, side, lam, mu)
            if v.trace(P) == tt and v.norm(P) == nt:
                out.append(v)
        return out, None
    dg, dt = disc(tg, ng), disc(tt, nt)
    lam = f.sqrt(f.div(dt, dg))
    if lam is None:
        return [], None
    half = f.inv(f.from_int(2))
    for l in dict.fromkeys((lam, f.neg(lam))):
        mu = f.mul(f.sub(tt, f.mul(l, tg)), half)
        v = BasicVector.make(P, side, l, mu)
        if v.norm(P) == FieldValue(f, nt):
            out.append(v)
    return out, None


def basic_aut_catalog(params: AlgebraParams) -> AutCatalog:
    P = params
    entries: list[CatalogEntry] = []
    finite = True
    for orientation in ("positive", "negative"):
        side_a = "a" if orientation == "positive" else "b"
        fixed_a, fam_a = _images(P, P.p, side_a)
        fixed_b, fam_b = _images(P, P.q, opposite(side_a))
        options_a = [(v, None) for v in fixed_a] + ([fam_a] if fam_a else [])
        options_b = [(v, None) for v in fixed_b] + ([fam_b] if fam_b else [])
        for (va, da), (vb, db) in iproduct(options_a, options_b):
            if da is not None or db is not None:
                finite = False
            entries.append(_catalog_entry(P, va, da, vb, db))
    return AutCatalog(finite, tuple(entries))


def _catalog_entry(P, va, da, vb, db) -> CatalogEntry:
    el = lambda v: v.element(P)  # noqa: E731
    A0, B0 = el(va), el(vb)
    K0 = inner(A0, B0)
    K1 = inner(el(da), B0) if da else None
    K2 = inner(A0, el(db)) if db else None
    K12 = inner(el(da), el(db)) if (da and db) else None
    terms = [K0.render("w")]
    for k, name in ((K1, "c1"), (K2, "c2"), (K12, "c1*c2")):
        if k is not None and not k.is_zero():
            terms.append(f"{name}*({k.render('w')})")
    omega_text = " + ".join(t for t in terms if t != "0") or "0"
    w = CenterPoly.variable(P.field)
    if da is None and db is None:
        fixes: object = K0 == w
    else:
        fixes = _fixing_condition(P, [(K0, None), (K1, "c1"), (K2, "c2"), (K12, "c1*c2")])
    image_a = va if da is None else BasicVector.make(P, va.side, 0, va.mu.value)
    image_b = vb if db is None else BasicVector.make(P, vb.side, 0, vb.mu.value)
    return CatalogEntry(image_a, image_b, da, db, fixes, omega_text)


def _fixing_condition(P, parts) -> str:
    """Equations on the family parameters for the image of w to equal w, one per power of w."""
    f = P.field
    eqs = []
    for d in (1, 0):
        const = f.zero
        terms = []
        for k, name in parts:
            if k is None:
                continue
            c = k.coeff(d)
            if c == f.zero:
                continue
            if name is None:
                const = f.add(const, c)
            else:
                if c == f.one:
                    terms.append(name)
                elif f.characteristic != 2 and c == f.neg(f.one):
                    terms.append(f"-{name}")
                else:
                    terms.append(f"{f.render(c)}*{name}")
        rhs = f.sub(f.one if d == 1 else f.zero, const)
        if not terms:
            if rhs != f.zero:
                return "never"
            continue
        eqs.append(f"{' + '.join(terms)} = {f.render(rhs)}")
    return " and ".join(dict.fromkeys(eqs)) if eqs else "always"


def basic_aut_group(params: AlgebraParams) -> list[BasicAut]:
    """All basic automorphisms when the catalog is finite."""
    cat = basic_aut_catalog(params)
    if not cat.finite:
        raise PreconditionError("basic automorphism group is infinite for these parameters")
    return [BasicAut(e.image_of_a, e.image_of_b) for e in cat.entries]
