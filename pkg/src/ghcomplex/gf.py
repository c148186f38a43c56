"""Exact linear algebra over prime fields GF(p).

Matrices are immutable, hashable, and carry their modulus.  Row reduction
uses left scalar multiplication, column reduction right scalar
multiplication; over a prime field the two coincide numerically but the
two canonical forms (row space vs column space representatives) are kept
as separate operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import DimensionMismatch, Singular, ZeroInverse

#: Largest supported modulus.  Desk-scale work needs single digits; the cap
#: keeps multiply-then-reduce inside machine integers everywhere.
MAX_MODULUS = 1 << 16


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def check_modulus(p: int) -> None:
    """Raise ValueError unless p is a prime within the supported range."""
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"modulus must be prime, got {p!r}")
    if p > MAX_MODULUS:
        raise ValueError(f"modulus {p} exceeds supported maximum {MAX_MODULUS}")


@dataclass(frozen=True)
class FieldElement:
    """A residue in GF(p)."""

    value: int
    modulus: int

    def __post_init__(self):
        check_modulus(self.modulus)
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.modulus != self.modulus:
                raise DimensionMismatch("mixed moduli")
            return other
        return FieldElement(other, self.modulus)

    def __add__(self, other):
        other = self._coerce(other)
        return FieldElement(self.value + other.value, self.modulus)

    def __sub__(self, other):
        other = self._coerce(other)
        return FieldElement(self.value - other.value, self.modulus)

    def __mul__(self, other):
        other = self._coerce(other)
        return FieldElement(self.value * other.value, self.modulus)

    def __neg__(self):
        return FieldElement(-self.value, self.modulus)

    def inverse(self) -> "FieldElement":
        return fq_inv(self)


def fq_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def fq_inv(a: FieldElement) -> FieldElement:
    """Multiplicative inverse in GF(p); raises ZeroInverse on 0."""
    if a.value == 0:
        raise ZeroInverse(f"0 has no inverse mod {a.modulus}")
    return FieldElement(pow(a.value, a.modulus - 2, a.modulus), a.modulus)


def _inv_mod(x: int, p: int) -> int:
    if x % p == 0:
        raise ZeroInverse(f"0 has no inverse mod {p}")
    return pow(x, p - 2, p)


class Matrix:
    """Immutable dense matrix over GF(p), entries stored row-major."""

    __slots__ = ("rows", "cols", "modulus", "data")

    def __init__(self, rows: int, cols: int, modulus: int, data):
        check_modulus(modulus)
        data = tuple(x % modulus for x in data)
        if len(data) != rows * cols:
            raise DimensionMismatch(
                f"need {rows * cols} entries for {rows}x{cols}, got {len(data)}"
            )
        object.__setattr__ if False else None
        self_set = object.__setattr__
        self_set(self, "rows", rows)
        self_set(self, "cols", cols)
        self_set(self, "modulus", modulus)
        self_set(self, "data", data)

    def __setattr__(self, *a):
        raise AttributeError("Matrix is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows, modulus: int) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(len(rows), ncols, modulus, [x for r in rows for x in r])

    @classmethod
    def zeros(cls, rows: int, cols: int, modulus: int) -> "Matrix":
        return cls(rows, cols, modulus, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int, modulus: int) -> "Matrix":
        data = [0] * (n * n)
        for i in range(n):
            data[i * n + i] = 1
        return cls(n, n, modulus, data)

    # -- access ------------------------------------------------------------

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.data[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.data[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.data[j :: self.cols] if self.cols else ()

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def is_zero(self) -> bool:
        return not any(self.data)

    # -- structure ---------------------------------------------------------

    def transpose(self) -> "Matrix":
        data = [self.data[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)]
        return Matrix(self.cols, self.rows, self.modulus, data)

    def hstack(self, other: "Matrix") -> "Matrix":
        if other.rows != self.rows or other.modulus != self.modulus:
            raise DimensionMismatch("hstack shape/modulus mismatch")
        data = []
        for i in range(self.rows):
            data.extend(self.row(i))
            data.extend(other.row(i))
        return Matrix(self.rows, self.cols + other.cols, self.modulus, data)

    def vstack(self, other: "Matrix") -> "Matrix":
        if other.cols != self.cols or other.modulus != self.modulus:
            raise DimensionMismatch("vstack shape/modulus mismatch")
        return Matrix(self.rows + other.rows, self.cols, self.modulus, self.data + other.data)

    def submatrix(self, row_range, col_range) -> "Matrix":
        rows = list(row_range)
        cols = list(col_range)
        data = [self.data[i * self.cols + j] for i in rows for j in cols]
        return Matrix(len(rows), len(cols), self.modulus, data)

    # -- arithmetic ----------------------------------------------------------

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def scale(self, c: int) -> "Matrix":
        p = self.modulus
        return Matrix(self.rows, self.cols, p, tuple((c * x) % p for x in self.data))

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols, self.modulus) != (other.rows, other.cols, other.modulus):
            raise DimensionMismatch("add shape/modulus mismatch")
        p = self.modulus
        return Matrix(self.rows, self.cols, p, tuple((a + b) % p for a, b in zip(self.data, other.data)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols, self.modulus) != (other.rows, other.cols, other.modulus):
            raise DimensionMismatch("sub shape/modulus mismatch")
        p = self.modulus
        return Matrix(self.rows, self.cols, p, tuple((a - b) % p for a, b in zip(self.data, other.data)))

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.modulus == other.modulus
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.modulus, self.data))

    def key(self) -> bytes:
        """Canonical byte encoding, usable as a deterministic class key."""
        head = f"{self.rows}x{self.cols}%{self.modulus}:".encode()
        return head + bytes(x % 256 for x in self.data)

    def __repr__(self):
        return f"Matrix({self.to_rows()!r} mod {self.modulus})"


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Matrix product over GF(p)."""
    if a.modulus != b.modulus:
        raise DimensionMismatch("mixed moduli")
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    p = a.modulus
    n, m, k = a.rows, b.cols, a.cols
    ad, bd = a.data, b.data
    out = [0] * (n * m)
    for i in range(n):
        arow = ad[i * k : (i + 1) * k]
        base = i * m
        for t in range(k):
            av = arow[t]
            if av:
                brow = bd[t * m : (t + 1) * m]
                for j in range(m):
                    out[base + j] += av * brow[j]
    return Matrix(n, m, p, [x % p for x in out])


@dataclass(frozen=True)
class RrefResult:
    reduced: Matrix
    rank: int
    pivots: tuple


def rref(m: Matrix) -> RrefResult:
    """Reduced row echelon form (unique), with rank and pivot columns.

    Row operations are left scalar multiplications.
    """
    p = m.modulus
    rows = [list(m.row(i)) for i in range(m.rows)]
    nrows, ncols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = _inv_mod(rows[r][c], p)
        if inv != 1:
            rows[r] = [(inv * x) % p for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    reduced = Matrix(nrows, ncols, p, [x for row in rows for x in row])
    return RrefResult(reduced, r, tuple(pivots))


def rank(m: Matrix) -> int:
    return rref(m).rank


def column_rref(m: Matrix):
    """Canonical column-space form: transpose convention of rref.

    Column operations are right scalar multiplications; two matrices have
    equal column spaces iff their column_rref forms coincide.
    """
    res = rref(m.transpose())
    return res.reduced.transpose(), res.rank


def mat_inv(m: Matrix) -> Matrix:
    """Inverse of a square matrix, via rref of the augmented matrix."""
    if m.rows != m.cols:
        raise DimensionMismatch("inverse requires a square matrix")
    n = m.rows
    aug = m.hstack(Matrix.identity(n, m.modulus))
    res = rref(aug)
    if res.pivots[:n] != tuple(range(n)) if res.rank else n > 0:
        raise Singular(f"matrix of rank {res.rank} < {n} has no inverse")
    if res.rank < n:
        raise Singular(f"matrix of rank {res.rank} < {n} has no inverse")
    return res.reduced.submatrix(range(n), range(n, 2 * n))


def null_space(m: Matrix) -> Matrix:
    """Basis of the right null space {x : m x = 0}, as matrix columns."""
    res = rref(m)
    p = m.modulus
    free = [j for j in range(m.cols) if j not in res.pivots]
    basis_cols = []
    for j in free:
        vec = [0] * m.cols
        vec[j] = 1
        for i, pc in enumerate(res.pivots):
            vec[pc] = (-res.reduced[i, j]) % p
        basis_cols.append(vec)
    data = [basis_cols[c][r] for r in range(m.cols) for c in range(len(free))]
    return Matrix(m.cols, len(free), p, data)


def left_null_basis(m: Matrix) -> Matrix:
    """Basis of the left null space {x : x m = 0}, as matrix rows."""
    return null_space(m.transpose()).transpose()


def left_solve(a: Matrix, b: Matrix):
    """One solution X of X a = b, or None if the system is inconsistent."""
    # X a = b  <=>  a^T X^T = b^T; solve column by column via one rref.
    at = a.transpose()
    bt = b.transpose()
    if at.rows != bt.rows:
        raise DimensionMismatch("left_solve shape mismatch")
    res = rref(at.hstack(bt))
    n_unknowns = at.cols
    for pc in res.pivots:
        if pc >= n_unknowns:
            return None
    p = a.modulus
    xt = [[0] * bt.cols for _ in range(n_unknowns)]
    for i, pc in enumerate(res.pivots):
        for j in range(bt.cols):
            xt[pc][j] = res.reduced[i, n_unknowns + j]
    cols = len(xt[0]) if xt else bt.cols
    data = [xt[r][c] for c in range(cols) for r in range(n_unknowns)]
    return Matrix(cols, n_unknowns, p, data)


def all_matrices(rows: int, cols: int, modulus: int):
    """Yield every rows x cols matrix over GF(p), in lexicographic data order."""
    for data in product(range(modulus), repeat=rows * cols):
        yield Matrix(rows, cols, modulus, data)
