"""Exact scalars (rationals or GF(p), p > 3) and dense exact linear algebra.

Everything downstream reduces to row reduction of small dense matrices
(ambient dimension never exceeds dim R_8 = 45), so this module keeps the
representation simple: a matrix is a list of rows of raw field elements,
Fraction for the rationals and ints in [0, p) for a prime field.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple


class FieldMismatch(Exception):
    pass


class NotInvertible(Exception):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class FieldSpec:
    """The rationals, or GF(p) with p prime and p not 2 or 3."""

    __slots__ = ("kind", "p")

    def __init__(self, kind: str, p: Optional[int] = None):
        assert kind in ("Rationals", "PrimeField")
        if kind == "PrimeField":
            assert p is not None and _is_prime(p), f"modulus {p} is not prime"
            assert p not in (2, 3), "characteristic 2 and 3 are unsupported"
        self.kind = kind
        self.p = p

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.kind == other.kind
            and self.p == other.p
        )

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return "QQ" if self.kind == "Rationals" else f"GF({self.p})"

    # -- element operations on raw values (Fraction, or int in [0, p)) --

    @property
    def zero(self):
        return Fraction(0) if self.kind == "Rationals" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "Rationals" else 1

    def of(self, n) -> "Scalar":
        """Coerce an int or Fraction into this field."""
        if self.kind == "Rationals":
            return Fraction(n)
        if isinstance(n, Fraction):
            if n.denominator % self.p == 0:
                raise ZeroDivisionError(f"{n} has no image in GF({self.p})")
            return n.numerator * pow(n.denominator, self.p - 2, self.p) % self.p
        return n % self.p

    def add(self, a, b):
        return a + b if self.kind == "Rationals" else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.kind == "Rationals" else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.kind == "Rationals" else (a * b) % self.p

    def neg(self, a):
        return -a if self.kind == "Rationals" else (-a) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of 0")
        if self.kind == "Rationals":
            return 1 / Fraction(a)
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def rand(self, rng: random.Random):
        if self.kind == "Rationals":
            return Fraction(rng.randint(-20, 20))
        return rng.randrange(self.p)

    def rand_nonzero(self, rng: random.Random):
        while True:
            a = self.rand(rng)
            if a:
                return a


QQ = FieldSpec("Rationals")


def GF(p: int) -> FieldSpec:
    return FieldSpec("PrimeField", p)


# Raw field element; tagged by the FieldSpec that owns it.
Scalar = object


class Matrix:
    """Dense matrix over a fixed FieldSpec. Immutable by convention."""

    __slots__ = ("rows", "cols", "entries", "field")

    def __init__(self, entries: Sequence[Sequence[Scalar]], field: FieldSpec, cols: Optional[int] = None):
        self.entries: List[List[Scalar]] = [list(r) for r in entries]
        self.rows = len(self.entries)
        if self.rows:
            self.cols = len(self.entries[0])
            assert all(len(r) == self.cols for r in self.entries)
        else:
            assert cols is not None, "empty matrix needs an explicit column count"
            self.cols = cols
        self.field = field

    @staticmethod
    def identity(n: int, field: FieldSpec) -> "Matrix":
        one, zero = field.one, field.zero
        return Matrix([[one if i == j else zero for j in range(n)] for i in range(n)], field)

    @staticmethod
    def zero(rows: int, cols: int, field: FieldSpec) -> "Matrix":
        z = field.zero
        return Matrix([[z] * cols for _ in range(rows)], field, cols=cols)

    @staticmethod
    def from_ints(entries: Sequence[Sequence[int]], field: FieldSpec) -> "Matrix":
        return Matrix([[field.of(e) for e in row] for row in entries], field,
                      cols=len(entries[0]) if entries else 0)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field, self.cols, tuple(tuple(r) for r in self.entries)))

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over {self.field})"

    def copy_entries(self) -> List[List[Scalar]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> "Matrix":
        return Matrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
                      self.field, cols=self.rows)

    def stack(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        assert self.cols == other.cols, "ambient mismatch"
        return Matrix(self.entries + other.entries, self.field, cols=self.cols)

    def mat_mul(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        assert self.cols == other.rows
        F = self.field
        out = []
        bt = other.transpose().entries
        for r in self.entries:
            out.append([_dot(F, r, c) for c in bt])
        return Matrix(out, F, cols=other.cols)

    def mul_vec(self, v: Sequence[Scalar]) -> List[Scalar]:
        F = self.field
        return [_dot(F, r, v) for r in self.entries]


def _dot(F: FieldSpec, u, v):
    acc = F.zero
    for a, b in zip(u, v):
        if a and b:
            acc = F.add(acc, F.mul(a, b))
    return acc


def rref(M: Matrix) -> Tuple[Matrix, List[int], int]:
    """Reduced row echelon form; returns (rref matrix, pivot columns, rank).

    The result keeps the input's row count; non-pivot rows are zero.
    Rational entries stay in lowest terms (Fraction normalizes on the fly).
    """
    F = M.field
    if F.kind == "PrimeField" and M.rows and M.cols:
        from . import kernel

        if kernel.HAVE_COMPILED and F.p < 256:
            ent, pivots = kernel.rref_mod_p(M.entries, M.cols, F.p)
            return Matrix(ent, F, cols=M.cols), pivots, len(pivots)
    A = M.copy_entries()
    m, n = M.rows, M.cols
    pivots: List[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        pr = None
        for i in range(r, m):
            if A[i][c]:
                pr = i
                break
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        inv = F.inv(A[r][c])
        if inv != F.one:
            A[r] = [F.mul(inv, e) for e in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                Ar = A[r]
                A[i] = [F.sub(e, F.mul(f, Ar[j])) for j, e in enumerate(A[i])]
        pivots.append(c)
        r += 1
    return Matrix(A, F, cols=n), pivots, len(pivots)


def kernel_basis(M: Matrix) -> Matrix:
    """Rows spanning the right null space {v : M v^T = 0}, in RREF."""
    F = M.field
    R, pivots, rank = rref(M)
    n = M.cols
    free = [c for c in range(n) if c not in pivots]
    rows = []
    for fc in free:
        v = [F.zero] * n
        v[fc] = F.one
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(R.entries[i][fc])
        rows.append(v)
    out, _, _ = rref(Matrix(rows, F, cols=n))
    return Matrix(out.entries[: len(free)], F, cols=n)


class Subspace:
    """Row space in canonical (RREF, zero rows dropped) form.

    Equality of subspaces is literal equality of the canonical matrices.
    """

    __slots__ = ("basis", "ambient", "field", "pivots")

    def __init__(self, M: Matrix):
        R, piv, rank = rref(M)
        self.basis = Matrix(R.entries[:rank], M.field, cols=M.cols)
        self.pivots = piv
        self.ambient = M.cols
        self.field = M.field

    @staticmethod
    def from_vectors(vecs: Iterable[Sequence[Scalar]], ambient: int, field: FieldSpec) -> "Subspace":
        return Subspace(Matrix(list(vecs), field, cols=ambient))

    @staticmethod
    def full(ambient: int, field: FieldSpec) -> "Subspace":
        return Subspace(Matrix.identity(ambient, field))

    @staticmethod
    def empty(ambient: int, field: FieldSpec) -> "Subspace":
        return Subspace(Matrix([], field, cols=ambient))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        return f"Subspace(dim {self.dim} in k^{self.ambient})"

    def contains(self, v: Sequence[Scalar]) -> bool:
        F = self.field
        w = list(v)
        for i, pc in enumerate(self.pivots):
            if w[pc]:
                f = w[pc]
                row = self.basis.entries[i]
                w = [F.sub(e, F.mul(f, row[j])) for j, e in enumerate(w)]
        return not any(w)

    def reduce(self, v: Sequence[Scalar]) -> List[Scalar]:
        """Remainder of v modulo this subspace (pivot coordinates cleared)."""
        F = self.field
        w = list(v)
        for i, pc in enumerate(self.pivots):
            if w[pc]:
                f = w[pc]
                row = self.basis.entries[i]
                w = [F.sub(e, F.mul(f, row[j])) for j, e in enumerate(w)]
        return w

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.basis.entries)

    def add(self, other: "Subspace") -> "Subspace":
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        assert self.ambient == other.ambient, "ambient mismatch"
        return Subspace(self.basis.stack(other.basis))

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        assert self.ambient == other.ambient, "ambient mismatch"
        # Zassenhaus: kernel of [A; B] glued as (u, v) with uA + vB = 0
        # gives intersection vectors uA.
        A, B = self.basis, other.basis
        if A.rows == 0 or B.rows == 0:
            return Subspace.empty(self.ambient, self.field)
        F = self.field
        glued = []
        for r in A.entries:
            glued.append(list(r))
        for r in B.entries:
            glued.append([F.neg(e) for e in r])
        K = kernel_basis(Matrix(glued, F, cols=self.ambient).transpose())
        vecs = []
        for krow in K.entries:
            u = krow[: A.rows]
            vecs.append([_dot(F, u, [A.entries[i][j] for i in range(A.rows)]) for j in range(self.ambient)])
        return Subspace.from_vectors(vecs, self.ambient, F)

    def perp(self) -> "Subspace":
        """Orthogonal complement under the coordinate dot pairing."""
        return Subspace(kernel_basis(self.basis))


def subspace_ops(A: Subspace, B: Subspace) -> dict:
    """Sum, intersection and containment (B <= A) in one report."""
    s = A.add(B)
    i = A.intersect(B)
    return {"sum": s, "intersection": i, "containment": A.contains_space(B)}


def random_matrix(rows: int, cols: int, field: FieldSpec, rng: random.Random) -> Matrix:
    return Matrix([[field.rand(rng) for _ in range(cols)] for _ in range(rows)], field, cols=cols)
