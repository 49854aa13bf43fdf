"""Matrices over Z[x] with fraction-free elimination, and scaled inverses."""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .polynomial import ONE, ZERO, Polynomial, RationalFunction


class PolyMatrix:
    """Immutable rectangular matrix of Polynomials."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[Polynomial | int]]):
        out = []
        for r in rows:
            out.append(tuple(e if isinstance(e, Polynomial) else Polynomial((e,)) for e in r))
        if out and any(len(r) != len(out[0]) for r in out):
            raise ValueError("ragged matrix")
        self.rows: tuple[tuple[Polynomial, ...], ...] = tuple(out)

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def build(cls, n_rows: int, n_cols: int, f: Callable[[int, int], Polynomial]) -> "PolyMatrix":
        return cls([[f(i, j) for j in range(n_cols)] for i in range(n_rows)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij: tuple[int, int]) -> Polynomial:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "\n".join("  [" + ", ".join(str(e) for e in r) + "]" for r in self.rows)
        return f"PolyMatrix(\n{body}\n)"

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(zip(*self.rows)) if self.rows else self

    @property
    def T(self) -> "PolyMatrix":
        return self.transpose()

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        return PolyMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return PolyMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scale(self, c: Polynomial | int) -> "PolyMatrix":
        return PolyMatrix([[e * c for e in r] for r in self.rows])

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = ZERO
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def apply(self, vec: Sequence[Polynomial]) -> list[Polynomial]:
        out = []
        for r in self.rows:
            acc = ZERO
            for a, b in zip(r, vec):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return out

    def kron(self, other: "PolyMatrix") -> "PolyMatrix":
        """Kronecker product; ``self`` supplies the most significant index."""
        (ra, ca), (rb, cb) = self.shape, other.shape
        return PolyMatrix.build(
            ra * rb,
            ca * cb,
            lambda i, j: self.rows[i // rb][j // cb] * other.rows[i % rb][j % cb],
        )

    def map(self, f: Callable[[Polynomial], Polynomial]) -> "PolyMatrix":
        return PolyMatrix([[f(e) for e in r] for r in self.rows])

    # -- fraction-free elimination ----------------------------------------

    def det(self) -> Polynomial:
        """Determinant by Bareiss elimination (all divisions exact)."""
        n, m = self.shape
        if n != m:
            raise ValueError("determinant of a non-square matrix")
        if n == 0:
            return ONE
        a = [list(r) for r in self.rows]
        sign, prev = 1, ONE
        for k in range(n - 1):
            if a[k][k].is_zero():
                for r in range(k + 1, n):
                    if not a[r][k].is_zero():
                        a[k], a[r] = a[r], a[k]
                        sign = -sign
                        break
                else:
                    return ZERO
            pk = a[k][k]
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (pk * a[i][j] - a[i][k] * a[k][j]).divide_exact(prev)
            prev = pk
        return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]

    def adjugate_and_det(self) -> tuple["PolyMatrix", Polynomial]:
        """(adj(A), det(A)) with adj(A) A = det(A) I, by fraction-free Gauss-Jordan."""
        n, m = self.shape
        if n != m:
            raise ValueError("adjugate of a non-square matrix")
        aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self.rows)]
        sign, prev = 1, ONE
        for k in range(n):
            if aug[k][k].is_zero():
                for r in range(k + 1, n):
                    if not aug[r][k].is_zero():
                        aug[k], aug[r] = aug[r], aug[k]
                        sign = -sign
                        break
                else:
                    raise ZeroDivisionError("matrix is singular")
            pk = aug[k][k]
            rowk = aug[k]
            for i in range(n):
                if i == k:
                    continue
                row = aug[i]
                f = row[k]
                row[:] = [(pk * row[j] - f * rowk[j]).divide_exact(prev) for j in range(2 * n)]
            prev = pk
        det = prev if sign > 0 else -prev
        adj = PolyMatrix([r[n:] if sign > 0 else [-e for e in r[n:]] for r in aug])
        return adj, det

    def inverse(self) -> "RationalMatrix":
        adj, det = self.adjugate_and_det()
        return RationalMatrix(adj, det)

    def rank(self) -> int:
        """Rank over Q(x) by fraction-free row reduction."""
        a = [list(r) for r in self.rows]
        n_rows, n_cols = self.shape
        rank, prev = 0, ONE
        for col in range(n_cols):
            piv = next((r for r in range(rank, n_rows) if not a[r][col].is_zero()), None)
            if piv is None:
                continue
            a[rank], a[piv] = a[piv], a[rank]
            pk = a[rank][col]
            for i in range(rank + 1, n_rows):
                f = a[i][col]
                a[i] = [(pk * a[i][j] - f * a[rank][j]).divide_exact(prev) for j in range(n_cols)]
            prev = pk
            rank += 1
            if rank == n_rows:
                break
        return rank


class RationalMatrix:
    """A PolyMatrix numerator over one common Polynomial denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: PolyMatrix, den: Polynomial):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if den.leading < 0:
            num, den = num.scale(-1), -den
        self.num = num
        self.den = den

    @property
    def shape(self) -> tuple[int, int]:
        return self.num.shape

    def __getitem__(self, ij: tuple[int, int]) -> RationalFunction:
        return RationalFunction(self.num[ij], self.den)

    def kron(self, other: "RationalMatrix") -> "RationalMatrix":
        return RationalMatrix(self.num.kron(other.num), self.den * other.den)

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            return RationalMatrix(self.num @ other.num, self.den * other.den)
        return RationalMatrix(self.num @ other, self.den)

    def scaled_to(self, factor: Polynomial) -> PolyMatrix:
        """factor * self, which must have polynomial entries."""
        return self.num.map(lambda e: (e * factor).divide_exact(self.den))

    def equals_poly(self, m: PolyMatrix) -> bool:
        return self.num == m.scale(self.den)

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.num.scale(other.den) == other.num.scale(self.den)

    def __repr__(self):
        return f"RationalMatrix(den={self.den}, num={self.num!r})"


def kron_all(mats: Sequence[PolyMatrix]) -> PolyMatrix:
    """Kronecker product with the first factor as the least significant index."""
    out = PolyMatrix.identity(1)
    for m in mats:
        out = m.kron(out)
    return out
