"""Quotients of the algebra by ``(r(w))`` for a monic irreducible ``r``.

The quotient is a 4-dimensional algebra over the residue field
``L = F[t]/(r)``.  Linear algebra over ``L`` is plain Gaussian elimination on
reduced polynomial representatives.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .core import HamiltonElement, inner, norm, star
from .errors import BudgetExceededError, PreconditionError, UnsupportedError
from .field import Field
from .matrices import PolyMatrix
from .params import AlgebraParams
from .poly import CenterPoly, poly_gcd, poly_is_irreducible, poly_xgcd, split_type

DEFAULT_SEARCH_CAP = 200_000


class ResidueField:
    """``F[t]/(modulus)`` with elements stored as reduced :class:`CenterPoly` values."""

    def __init__(self, modulus: CenterPoly):
        if not modulus.is_monic() or modulus.degree < 1:
            raise PreconditionError("modulus must be monic of positive degree")
        if not poly_is_irreducible(modulus):
            raise PreconditionError(f"modulus {modulus} is reducible")
        self.modulus = modulus
        self.base = modulus.field
        self.degree = modulus.degree
        self.zero = CenterPoly.zero(self.base)
        self.one = CenterPoly.one(self.base)

    def __eq__(self, other) -> bool:
        return isinstance(other, ResidueField) and other.modulus == self.modulus

    def __hash__(self) -> int:
        return hash(self.modulus)

    @property
    def is_finite(self) -> bool:
        return self.base.is_finite

    @property
    def order(self):
        return self.base.characteristic ** self.degree if self.is_finite else None

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    def reduce(self, x) -> CenterPoly:
        if not isinstance(x, CenterPoly):
            x = CenterPoly.constant(self.base, x)
        return x % self.modulus

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return (x * y) % self.modulus

    def inv(self, x):
        if x.is_zero():
            raise ZeroDivisionError("inverse of zero in the residue field")
        g, s, _ = poly_xgcd(x, self.modulus)
        return self.reduce(s.scale(self.base.inv(g.lc)))

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def pow(self, x, n: int):
        out = self.one
        base = x
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def elements(self):
        if not self.is_finite:
            raise UnsupportedError("cannot enumerate an infinite residue field")
        vals = list(self.base.elements())
        for coeffs in itertools.product(vals, repeat=self.degree):
            yield CenterPoly(self.base, coeffs)

    def sqrt(self, x):
        """A square root of ``x`` in ``L``, or None."""
        if x.is_zero():
            return self.zero
        if self.degree == 1:
            s = self.base.sqrt(x.constant_term)
            return None if s is None else CenterPoly.constant(self.base, s)
        if self.is_finite:
            if self.characteristic == 2:
                return self.pow(x, self.order // 2)
            for y in self.elements():
                if self.mul(y, y) == x:
                    return y
            return None
        if self.degree == 2:
            return _sqrt_quadratic_number_field(self, x)
        raise UnsupportedError("square roots only supported in residue fields of degree <= 2")

    def render(self, x: CenterPoly) -> str:
        return x.render("t")


def _sqrt_quadratic_number_field(L: ResidueField, z: CenterPoly):
    f = L.base
    # theta^2 = -b theta - c; work in the basis (1, sqrt(D)) with theta = (-b + sqrt(D)) / 2.
    b, c = L.modulus.coeff(1), L.modulus.coeff(0)
    D = b * b - 4 * c
    z0, z1 = z.coeff(0), z.coeff(1)
    X, Y = z0 - z1 * b / 2, z1 / 2  # z = X + Y sqrt(D)
    theta = CenterPoly.variable(f)
    sqrtD = L.reduce(theta.scale(2) + CenterPoly.constant(f, b))

    def from_pair(u, v):
        return L.reduce(CenterPoly.constant(f, u) + sqrtD.scale(v))

    if Y == 0:
        s = f.sqrt(X)
        if s is not None:
            return from_pair(s, 0)
        s = f.sqrt(Fraction(X) / D)
        return None if s is None else from_pair(0, s)
    n = f.sqrt(X * X - D * Y * Y)
    if n is None:
        return None
    for sign in (1, -1):
        u = f.sqrt((X + sign * n) / 2)
        if u is not None and u != 0:
            return from_pair(u, Y / (2 * u))
    return None


# -- linear algebra over L ---------------------------------------------------------

def _rref(L: ResidueField, rows):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    a = [list(r) for r in rows]
    pivots = []
    row = 0
    m = len(a[0]) if a else 0
    for col in range(m):
        piv = next((i for i in range(row, len(a)) if not a[i][col].is_zero()), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = L.inv(a[row][col])
        a[row] = [L.mul(x, inv) for x in a[row]]
        for i in range(len(a)):
            if i != row and not a[i][col].is_zero():
                k = a[i][col]
                a[i] = [L.sub(x, L.mul(k, y)) for x, y in zip(a[i], a[row])]
        pivots.append(col)
        row += 1
    return a[:row], pivots


def rank(L: ResidueField, rows) -> int:
    return len(_rref(L, rows)[1]) if rows else 0


def kernel_basis(L: ResidueField, rows, m: int):
    """Basis of ``{v : M v = 0}`` for the matrix with the given rows and ``m`` columns."""
    if not rows:
        return [[L.one if i == j else L.zero for i in range(m)] for j in range(m)]
    red, pivots = _rref(L, rows)
    free = [c for c in range(m) if c not in pivots]
    out = []
    for fc in free:
        v = [L.zero] * m
        v[fc] = L.one
        for r, pc in zip(red, pivots):
            v[pc] = L.neg(r[fc])
        out.append(v)
    return out


def in_span(L: ResidueField, basis, v) -> bool:
    return rank(L, list(basis) + [v]) == rank(L, list(basis))


# -- the specialized algebra ------------------------------------------------------

@dataclass(frozen=True)
class SpecElement:
    algebra: "SpecializedAlgebra"
    coords: tuple

    def lift(self) -> HamiltonElement:
        return HamiltonElement._make(self.algebra.params, self.coords)

    def __add__(self, other):
        return SpecElement(self.algebra, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return SpecElement(self.algebra, tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __mul__(self, other):
        if isinstance(other, SpecElement):
            return self.algebra.reduce(self.lift() * other.lift())
        L = self.algebra.residue
        c = L.reduce(other)
        return SpecElement(self.algebra, tuple(L.mul(x, c) for x in self.coords))

    def __eq__(self, other) -> bool:
        return isinstance(other, SpecElement) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def star(self) -> "SpecElement":
        return self.algebra.reduce(star(self.lift()))

    def norm(self) -> CenterPoly:
        return self.algebra.residue.reduce(norm(self.lift()))

    def trace(self) -> CenterPoly:
        return self.algebra.residue.reduce(self.lift().trace())

    def render(self) -> str:
        names = ("", "a", "b", "ab")
        parts = []
        for c, n in zip(self.coords, names):
            if not c.is_zero():
                parts.append(f"({c.render('w')}){n}" if n else f"({c.render('w')})")
        return " + ".join(parts) or "0"

    def to_json(self) -> list:
        return [[self.algebra.params.field.render(x) for x in c.coeffs] for c in self.coords]


class SpecializedAlgebra:
    def __init__(self, params: AlgebraParams, residue: ResidueField):
        if residue.base != params.field:
            raise PreconditionError("residue field is over a different base field")
        self.params = params
        self.residue = residue
        lam = params.fundamental_polynomial
        self.divides_lambda = (lam % residue.modulus).is_zero()
        self.basis = tuple(self.reduce(e) for e in _basis(params))
        self._gram = None

    @property
    def is_quaternion(self) -> bool:
        return not self.divides_lambda

    def reduce(self, x: HamiltonElement) -> SpecElement:
        return SpecElement(self, tuple(self.residue.reduce(c) for c in x.coords))

    def element(self, coords) -> SpecElement:
        return SpecElement(self, tuple(self.residue.reduce(c) for c in coords))

    def gram(self):
        """Gram matrix of the inner product in the basis ``(1, a, b, ab)``, entries in ``L``."""
        if self._gram is None:
            B = [e.lift() for e in self.basis]
            self._gram = tuple(tuple(self.residue.reduce(inner(u, v)) for v in B) for u in B)
        return self._gram

    def norm_form(self, coords) -> CenterPoly:
        """``N_r`` of ``sum coords[i] e_i`` from the Gram data (no lifting)."""
        L, G = self.residue, self.gram()
        diag = [L.reduce(norm(e.lift())) for e in self.basis]
        acc = L.zero
        for i in range(4):
            ci = coords[i]
            if ci.is_zero():
                continue
            acc = acc + L.mul(L.mul(ci, ci), diag[i])
            for j in range(i + 1, 4):
                if not coords[j].is_zero():
                    acc = acc + L.mul(L.mul(ci, coords[j]), G[i][j])
        return L.reduce(acc)

    def describe(self) -> dict:
        return {"params": self.params.describe(), "r": self.residue.modulus.render(),
                "divides_lambda": self.divides_lambda, "quaternion": self.is_quaternion}


def _basis(params):
    one = HamiltonElement.one(params)
    a, b = HamiltonElement.generator(params, "a"), HamiltonElement.generator(params, "b")
    return (one, a, b, a * b)


def specialize(params: AlgebraParams, r: CenterPoly) -> SpecializedAlgebra:
    if r.field != params.field:
        raise PreconditionError("r is over a different field")
    return SpecializedAlgebra(params, ResidueField(r))


# -- radicals and maximal ideals ----------------------------------------------------

@dataclass(frozen=True)
class RadicalReport:
    dim_R: int
    dim_frakR: int
    radical_basis: tuple
    norm_radical_basis: tuple

    def to_json(self) -> dict:
        return {"dim_R": self.dim_R, "dim_frakR": self.dim_frakR,
                "radical_basis": [e.to_json() for e in self.radical_basis],
                "norm_radical_basis": [e.to_json() for e in self.norm_radical_basis]}


def radical_report(spec: SpecializedAlgebra) -> RadicalReport:
    if not spec.divides_lambda:
        raise PreconditionError("r is coprime to the fundamental polynomial: the radical is zero")
    L = spec.residue
    R = kernel_basis(L, [list(row) for row in spec.gram()], 4)
    R_el = tuple(spec.element(v) for v in R)
    if L.characteristic != 2:
        frak = R_el
    else:
        # N is additive on R and N(c x) = c^2 N(x), so N(sum c_i v_i) = (sum c_i s_i)^2 with s_i^2 = N(v_i).
        roots = []
        for v in R_el:
            s = L.sqrt(v.norm())
            if s is None:
                raise UnsupportedError("square root needed for the norm radical is unavailable")
            roots.append(s)
        combos = kernel_basis(L, [roots], len(roots)) if any(not s.is_zero() for s in roots) else \
            [[L.one if i == j else L.zero for i in range(len(roots))] for j in range(len(roots))]
        frak = tuple(_combine(spec, R_el, c) for c in combos)
    if len(R_el) not in (2, 3, 4):
        raise PreconditionError(f"unexpected radical dimension {len(R_el)}")
    return RadicalReport(len(R_el), len(frak), R_el, frak)


def _combine(spec, vectors, coeffs) -> SpecElement:
    L = spec.residue
    out = [L.zero] * 4
    for c, v in zip(coeffs, vectors):
        out = [L.reduce(o + L.mul(c, x)) for o, x in zip(out, v.coords)]
    return spec.element(out)


@dataclass(frozen=True)
class MaxIdealReport:
    count: int
    ideals: tuple  # each a tuple of SpecElement spanning the ideal of the quotient
    star_swapped: bool

    def to_json(self) -> dict:
        return {"count": self.count, "star_swapped": self.star_swapped,
                "ideals": [[e.to_json() for e in I] for I in self.ideals]}


def maximal_ideal_count_criterion(params: AlgebraParams) -> int:
    """1 when both p and q have a double root, or one is irreducible and the other
    does not split with simple roots; 2 otherwise."""
    tp, tq = split_type(params.p), split_type(params.q)
    if tp == "double-root" and tq == "double-root":
        return 1
    if (tp == "irreducible" and tq != "split-simple") or (tq == "irreducible" and tp != "split-simple"):
        return 1
    return 2


def maximal_ideals_above(params: AlgebraParams, r: CenterPoly) -> MaxIdealReport:
    spec = specialize(params, r)
    if not spec.divides_lambda:
        raise PreconditionError("r does not divide the fundamental polynomial")
    L = spec.residue
    frak = list(radical_report(spec).norm_radical_basis)
    frak_rows = [list(e.coords) for e in frak]
    if len(frak) != 2:
        return MaxIdealReport(1, (tuple(frak),), False)
    # Complete the norm radical by two basis vectors; the induced norm on the quotient is binary.
    comp = []
    for e in spec.basis:
        if not in_span(L, frak_rows + [list(c.coords) for c in comp], list(e.coords)):
            comp.append(e)
        if len(comp) == 2:
            break
    u1, u2 = comp
    n1, n2 = u1.norm(), u2.norm()
    m = L.reduce(inner(u1.lift(), u2.lift()))
    lines = _isotropic_lines(L, n1, m, n2)
    if not lines:
        return MaxIdealReport(1, (tuple(frak),), False)
    ideals = []
    for c1, c2 in lines:
        z = u1 * c1 + u2 * c2
        ideals.append(tuple(frak) + (z,))
    for I in ideals:
        if not _is_ideal(spec, I):
            raise PreconditionError("isotropic hyperplane failed the ideal check")
    rows0 = [list(e.coords) for e in ideals[0]]
    swapped = all(in_span(L, [list(e.coords) for e in ideals[1]], list(x.star().coords)) for x in ideals[0])
    swapped = swapped and not all(in_span(L, rows0, list(x.coords)) for x in ideals[1])
    return MaxIdealReport(2, tuple(ideals), swapped)


def _isotropic_lines(L: ResidueField, n1, m, n2):
    """Projective zeros ``(c1, c2)`` of ``n1 c1^2 + m c1 c2 + n2 c2^2``."""
    out = []
    if n1.is_zero():
        out.append((L.one, L.zero))
        if m.is_zero():
            return out  # degenerate: the quotient norm would not be regular
        out.append((L.neg(L.div(n2, m)), L.one))
        return out
    # n1 s^2 + m s + n2 = 0 with s = c1 / c2
    if L.characteristic == 2:
        if L.is_finite:
            roots = [s for s in L.elements() if L.reduce(L.mul(n1, L.mul(s, s)) + L.mul(m, s) + n2).is_zero()]
        else:
            roots = []
    else:
        disc = L.reduce(L.mul(m, m) - L.mul(L.reduce(CenterPoly.constant(L.base, 4)), L.mul(n1, n2)))
        d = L.sqrt(disc)
        if d is None:
            return out
        two_n1 = L.reduce(n1.scale(2))
        roots = [L.div(L.reduce(-m + d), two_n1), L.div(L.reduce(-m - d), two_n1)]
    for s in dict.fromkeys(roots):
        out.append((s, L.one))
    return out


def _is_ideal(spec: SpecializedAlgebra, gens) -> bool:
    L = spec.residue
    rows = [list(e.coords) for e in gens]
    a, b = spec.basis[1], spec.basis[2]
    for x in gens:
        for g in (a, b):
            for y in (g * x, x * g):
                if not in_span(L, rows, list(y.coords)):
                    return False
    return True


# -- split witnesses -------------------------------------------------------------

@dataclass(frozen=True)
class SplitWitnessResult:
    witness: SpecElement | None
    unknown: bool
    searched: int

    def to_json(self) -> dict:
        return {"found": self.witness is not None, "unknown": self.unknown, "searched": self.searched,
                "witness": self.witness.to_json() if self.witness else None,
                "witness_text": self.witness.render() if self.witness else None}


def _projective_vectors(values, dim):
    zero = values[0]
    for lead in range(dim):
        for tail in itertools.product(values, repeat=dim - lead - 1):
            yield (zero,) * lead + ("one",) + tail


def split_witness(spec: SpecializedAlgebra, bound: int = 4, cap: int = DEFAULT_SEARCH_CAP) -> SplitWitnessResult:
    """Search for a nonzero element of norm zero in a quaternion specialization."""
    if spec.divides_lambda:
        raise PreconditionError("split witness needs r coprime to the fundamental polynomial")
    L = spec.residue
    count = 0
    if L.is_finite:
        values = list(L.elements())
        total = sum(len(values) ** k for k in range(4))
        if total > cap:
            raise BudgetExceededError(f"projective search over {total} vectors exceeds the cap {cap}")
        candidates = _projective_vectors(values, 4)
    else:
        f = L.base
        ints = [0] + [s * k for k in range(1, bound + 1) for s in (1, -1)]
        scalars = []
        for combo in itertools.product(ints, repeat=L.degree):
            scalars.append(CenterPoly(f, combo))
        candidates = _projective_vectors(scalars, 4)
    for cand in candidates:
        coords = tuple(L.one if c == "one" else c for c in cand)
        count += 1
        if count > cap:
            raise BudgetExceededError(f"split witness search exceeded {cap} candidates")
        if spec.norm_form(coords).is_zero():
            return SplitWitnessResult(spec.element(coords), False, count)
    return SplitWitnessResult(None, not L.is_finite, count)


# -- two-idempotent generation of 2x2 matrices ------------------------------------------

@dataclass(frozen=True)
class LaffeyResult:
    field: str
    possible: bool
    delta: object = None
    P: tuple | None = None
    Q: tuple | None = None
    span_dimension: int | None = None
    reason: str = ""

    def to_json(self) -> dict:
        return {"field": self.field, "possible": self.possible,
                "delta": None if self.delta is None else str(self.delta),
                "P": _matrix_json(self.P), "Q": _matrix_json(self.Q),
                "span_dimension": self.span_dimension, "reason": self.reason}


def _matrix_json(m):
    return None if m is None else [[str(x) for x in row] for row in m]


def _mat_mul(f: Field, X, Y):
    return tuple(tuple(f.add(f.mul(X[i][0], Y[0][j]), f.mul(X[i][1], Y[1][j])) for j in range(2)) for i in range(2))


def _flat_rank(f: Field, mats) -> int:
    L = ResidueField(CenterPoly.variable(f))
    rows = [[CenterPoly.constant(f, m[i][j]) for i in range(2) for j in range(2)] for m in mats]
    return rank(L, rows)


def laffey_idempotents(field: Field) -> LaffeyResult:
    """Two idempotent 2x2 matrices generating all 2x2 matrices, from a split specialization at ``w = delta``."""
    f = field
    if f.is_finite and f.characteristic == 2:
        return LaffeyResult(f.spec(), False, reason="every delta in GF(2) is a root of t^2-t, so the specialization is degenerate")
    params = AlgebraParams.parse(f, "t^2-t", "t^2-t")
    delta = f.from_int(2)
    r = CenterPoly(f, (f.neg(delta), f.one))
    spec = specialize(params, r)
    a, b = spec.basis[1], spec.basis[2]
    # Left multiplication on the minimal left ideal spanned by (a, b a).
    v1, v2 = a, b * a
    L = spec.residue

    def coords_in(y):
        rows = [[v1.coords[k], v2.coords[k], y.coords[k]] for k in range(4)]
        sol = kernel_basis(L, rows, 3)
        if len(sol) != 1 or sol[0][2].is_zero():
            raise PreconditionError("element is not in the left ideal")
        s = sol[0]
        k = L.inv(s[2])
        return [L.neg(L.mul(s[0], k)).constant_term, L.neg(L.mul(s[1], k)).constant_term]

    def left_matrix(x):
        cols = [coords_in(x * v1), coords_in(x * v2)]
        return tuple(tuple(cols[j][i] for j in range(2)) for i in range(2))

    P, Q = left_matrix(a), left_matrix(b)
    I = ((f.one, f.zero), (f.zero, f.one))
    if _mat_mul(f, P, P) != P or _mat_mul(f, Q, Q) != Q:
        raise PreconditionError("constructed matrices are not idempotent")
    dim = _flat_rank(f, [I, P, Q, _mat_mul(f, P, Q)])
    P = tuple(tuple(f.value(x) for x in row) for row in P)
    Q = tuple(tuple(f.value(x) for x in row) for row in Q)
    return LaffeyResult(f.spec(), dim == 4, f.value(delta), P, Q, dim)


# -- explicit 2x2 embedding when p = q = t^2 ------------------------------------------

def mat2_generators(params: AlgebraParams) -> tuple[PolyMatrix, PolyMatrix]:
    f = params.field
    t = CenterPoly.variable(f)
    if params.p != t * t or params.q != t * t:
        raise PreconditionError("the 2x2 embedding is defined for p = q = t^2 only")
    A = PolyMatrix.from_rows(f, [[0, 0], [1, 0]])
    B = PolyMatrix.from_rows(f, [[0, -t], [0, 0]])
    return A, B


def mat2_demo_embedding(x: HamiltonElement) -> PolyMatrix:
    A, B = mat2_generators(x.params)
    f = x.field
    mats = (PolyMatrix.identity(f, 2), A, B, A * B)
    out = PolyMatrix.zero(f, 2)
    for c, m in zip(x.coords, mats):
        if not c.is_zero():
            out = out + m.scale(c)
    return out


def gcd_with_lambda(params: AlgebraParams, r: CenterPoly) -> CenterPoly:
    return poly_gcd(params.fundamental_polynomial, r)
