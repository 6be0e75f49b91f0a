"""Square and rectangular matrices over ``F[t]`` with fraction-free elimination."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import PreconditionError
from .field import Field
from .poly import CenterPoly


@dataclass(frozen=True)
class PolyMatrix:
    """Immutable matrix of :class:`CenterPoly` entries stored row by row."""

    field: Field
    rows: tuple

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence]) -> "PolyMatrix":
        def conv(e):
            return e if isinstance(e, CenterPoly) else CenterPoly.constant(field, e)

        return cls(field, tuple(tuple(conv(e) for e in row) for row in rows))

    @classmethod
    def zero(cls, field: Field, n: int, m: int | None = None) -> "PolyMatrix":
        m = n if m is None else m
        z = CenterPoly.zero(field)
        return cls(field, tuple(tuple(z for _ in range(m)) for _ in range(n)))

    @classmethod
    def identity(cls, field: Field, n: int) -> "PolyMatrix":
        return cls.scalar(field, n, CenterPoly.one(field))

    @classmethod
    def scalar(cls, field: Field, n: int, c: CenterPoly) -> "PolyMatrix":
        z = CenterPoly.zero(field)
        return cls(field, tuple(tuple(c if i == j else z for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        return PolyMatrix(self.field, tuple(
            tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return PolyMatrix(self.field, tuple(
            tuple(x - y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix(self.field, tuple(tuple(-x for x in r) for r in self.rows))

    def scale(self, c) -> "PolyMatrix":
        return PolyMatrix(self.field, tuple(tuple(x * c for x in r) for r in self.rows))

    def __mul__(self, other):
        if not isinstance(other, PolyMatrix):
            return self.scale(other)
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise PreconditionError(f"shape mismatch {self.shape} x {other.shape}")
        zero = CenterPoly.zero(self.field)
        out = []
        for i in range(n):
            row = []
            for j in range(m):
                acc = zero
                for s in range(k):
                    a = self.rows[i][s]
                    if a:
                        b = other.rows[s][j]
                        if b:
                            acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return PolyMatrix(self.field, tuple(out))

    __rmul__ = scale

    def __pow__(self, n: int) -> "PolyMatrix":
        result = PolyMatrix.identity(self.field, self.shape[0])
        for _ in range(n):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return all(e.is_zero() for r in self.rows for e in r)

    def det(self) -> CenterPoly:
        """Determinant by Bareiss fraction-free elimination (exact divisions in F[t])."""
        n, m = self.shape
        if n != m:
            raise PreconditionError("determinant of a non-square matrix")
        a = [list(r) for r in self.rows]
        sign = 1
        prev = CenterPoly.one(self.field)
        for k in range(n - 1):
            if a[k][k].is_zero():
                swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
                if swap is None:
                    return CenterPoly.zero(self.field)
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
            prev = a[k][k]
        d = a[n - 1][n - 1] if n else CenterPoly.one(self.field)
        return d if sign > 0 else -d

    def kernel_vector(self) -> list[CenterPoly] | None:
        """One nonzero polynomial vector ``v`` with ``M v = 0``, or ``None`` if the kernel is trivial.

        Gaussian elimination over the fraction field ``F(t)`` is carried out
        fraction-free (cross multiplication), then the solution is cleared
        of denominators.
        """
        n, m = self.shape
        a = [list(r) for r in self.rows]
        pivots: list[int] = []
        row = 0
        for col in range(m):
            piv = next((i for i in range(row, n) if not a[i][col].is_zero()), None)
            if piv is None:
                continue
            a[row], a[piv] = a[piv], a[row]
            for i in range(n):
                if i != row and not a[i][col].is_zero():
                    f, g = a[row][col], a[i][col]
                    a[i] = [x * f - y * g for x, y in zip(a[i], a[row])]
                    a[i] = _divide_content(a[i])
            pivots.append(col)
            row += 1
            if row == n:
                break
        free = [c for c in range(m) if c not in pivots]
        if not free:
            return None
        fc = free[0]
        # Reduced rows: a[i][piv_i] * v[piv_i] + a[i][fc] * v[fc] = 0 (other free vars zero).
        denom = CenterPoly.one(self.field)
        for i, pc in enumerate(pivots):
            denom = denom * a[i][pc]
        v = [CenterPoly.zero(self.field) for _ in range(m)]
        v[fc] = denom
        for i, pc in enumerate(pivots):
            v[pc] = -(a[i][fc] * denom).exact_div(a[i][pc])
        return _divide_content(v)


def _divide_content(vec: list[CenterPoly]) -> list[CenterPoly]:
    from .poly import poly_gcd

    nonzero = [v for v in vec if not v.is_zero()]
    if not nonzero:
        return vec
    g = nonzero[0].monic()
    for v in nonzero[1:]:
        g = poly_gcd(g, v)
        if g.is_constant():
            break
    if g.is_constant():
        return vec
    return [v.exact_div(g) for v in vec]


def poly_matrix_from_scalars(field: Field, rows) -> PolyMatrix:
    return PolyMatrix.from_rows(field, rows)
