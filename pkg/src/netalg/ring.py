"""The graded ring R = k[x,y,z], its divided-power dual S, and PGL(3).

Monomials of each degree are ordered lexicographically with x > y > z;
this fixed order indexes every coordinate vector in the package.  The
pairing is contraction, x^a y^b z^c acting on X^[a']Y^[b']Z^[c'] by
subtracting exponents (no binomial coefficients, so it is valid in every
characteristic).  Transforms act on R by substitution and on S by the
inverse-transpose of the induced matrix, which is exactly the twist that
makes contraction equivariant.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .field import (
    FieldMismatch,
    FieldSpec,
    Matrix,
    NotInvertible,
    Scalar,
    Subspace,
    rref,
)

VARS = ("x", "y", "z")
DUAL_VARS = ("X", "Y", "Z")


@lru_cache(maxsize=None)
def monomials(d: int) -> Tuple[Tuple[int, int, int], ...]:
    """Degree-d exponent triples in lex order (x > y > z)."""
    out = [
        (a, b, d - a - b)
        for a in range(d, -1, -1)
        for b in range(d - a, -1, -1)
    ]
    out.sort(reverse=True)
    return tuple(out)


@lru_cache(maxsize=None)
def mono_index(d: int) -> Dict[Tuple[int, int, int], int]:
    return {m: i for i, m in enumerate(monomials(d))}


def dim_R(d: int) -> int:
    return (d + 2) * (d + 1) // 2 if d >= 0 else 0


class _Graded:
    """Shared coordinate-vector plumbing for GradedPoly and DualForm."""

    __slots__ = ("degree", "coords", "field")

    def __init__(self, degree: int, coords: Sequence[Scalar], field: FieldSpec):
        assert len(coords) == dim_R(degree)
        self.degree = degree
        self.coords = list(coords)
        self.field = field

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __eq__(self, other):
        return (
            type(self) is type(other)
            and self.degree == other.degree
            and self.field == other.field
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((type(self).__name__, self.degree, tuple(self.coords)))

    def _binop(self, other, op):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        assert self.degree == other.degree and type(self) is type(other)
        return type(self)(
            self.degree,
            [op(a, b) for a, b in zip(self.coords, other.coords)],
            self.field,
        )

    def __add__(self, other):
        return self._binop(other, self.field.add)

    def __sub__(self, other):
        return self._binop(other, self.field.sub)

    def scale(self, c: Scalar):
        F = self.field
        return type(self)(self.degree, [F.mul(c, e) for e in self.coords], F)

    def __neg__(self):
        return self.scale(self.field.neg(self.field.one))


class GradedPoly(_Graded):
    """Homogeneous element of R, coordinates on the degree-d monomials."""

    @staticmethod
    def zero(degree: int, field: FieldSpec) -> "GradedPoly":
        return GradedPoly(degree, [field.zero] * dim_R(degree), field)

    @staticmethod
    def monomial(expo: Tuple[int, int, int], field: FieldSpec, coeff=None) -> "GradedPoly":
        d = sum(expo)
        p = GradedPoly.zero(d, field)
        p.coords[mono_index(d)[expo]] = coeff if coeff is not None else field.one
        return p

    @staticmethod
    def variable(i: int, field: FieldSpec) -> "GradedPoly":
        e = [0, 0, 0]
        e[i] = 1
        return GradedPoly.monomial(tuple(e), field)

    def multiply(self, other: "GradedPoly") -> "GradedPoly":
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        F = self.field
        d = self.degree + other.degree
        out = [F.zero] * dim_R(d)
        idx = mono_index(d)
        mo = monomials(other.degree)
        for i, a in enumerate(self.coords):
            if not a:
                continue
            ma = monomials(self.degree)[i]
            for k, b in enumerate(other.coords):
                if not b:
                    continue
                mb = mo[k]
                t = (ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2])
                j = idx[t]
                out[j] = F.add(out[j], F.mul(a, b))
        return GradedPoly(d, out, F)

    def __str__(self):
        return format_poly(self, dual=False)

    __repr__ = __str__


class DualForm(_Graded):
    """Homogeneous divided-power form, coordinates on X^[a]Y^[b]Z^[c]."""

    @staticmethod
    def zero(degree: int, field: FieldSpec) -> "DualForm":
        return DualForm(degree, [field.zero] * dim_R(degree), field)

    @staticmethod
    def monomial(expo: Tuple[int, int, int], field: FieldSpec, coeff=None) -> "DualForm":
        d = sum(expo)
        f = DualForm.zero(d, field)
        f.coords[mono_index(d)[expo]] = coeff if coeff is not None else field.one
        return f

    @staticmethod
    def linear_power(lin: Sequence[Scalar], j: int, field: FieldSpec) -> "DualForm":
        """L^[j] for L = a X + b Y + c Z: coefficient a^u b^v c^w on X^[u]Y^[v]Z^[w].

        This is the divided-power j-th power, so no multinomial factors.
        """
        F = field
        a, b, c = lin
        coords = []
        for (u, v, w) in monomials(j):
            t = F.one
            for base, e in ((a, u), (b, v), (c, w)):
                for _ in range(e):
                    t = F.mul(t, base)
            coords.append(t)
        return DualForm(j, coords, F)

    def __str__(self):
        return format_poly(self, dual=True)

    __repr__ = __str__


def contract(g: GradedPoly, f: DualForm) -> DualForm:
    """g acting on f: monomial-wise exponent subtraction, bilinear."""
    if g.field != f.field:
        raise FieldMismatch(f"{g.field} vs {f.field}")
    F = g.field
    e, j = g.degree, f.degree
    if e > j:
        return DualForm.zero(0, F)
    d = j - e
    out = [F.zero] * dim_R(d)
    idx = mono_index(d)
    mg, mf = monomials(e), monomials(j)
    for i, a in enumerate(g.coords):
        if not a:
            continue
        (g0, g1, g2) = mg[i]
        for k, b in enumerate(f.coords):
            if not b:
                continue
            (f0, f1, f2) = mf[k]
            if f0 >= g0 and f1 >= g1 and f2 >= g2:
                t = idx[(f0 - g0, f1 - g1, f2 - g2)]
                out[t] = F.add(out[t], F.mul(a, b))
    return DualForm(d, out, F)


def contraction_matrix(d: int, f: DualForm) -> Matrix:
    """Matrix of R_d -> S_{j-d}, rows by R_d monomials, columns by S_{j-d}."""
    assert 0 <= d <= f.degree
    F = f.field
    rows = []
    for m in monomials(d):
        rows.append(contract(GradedPoly.monomial(m, F), f).coords)
    return Matrix(rows, F, cols=dim_R(f.degree - d))


class ProjectiveTransform:
    """Invertible substitution on <x,y,z>; row i is the image of variable i."""

    __slots__ = ("matrix", "field", "_induced", "_inv")

    def __init__(self, matrix: Sequence[Sequence[Scalar]], field: FieldSpec):
        self.matrix = [list(r) for r in matrix]
        assert len(self.matrix) == 3 and all(len(r) == 3 for r in self.matrix)
        self.field = field
        if not self.det():
            raise NotInvertible("transform matrix is singular")
        self._induced: Dict[int, Matrix] = {}
        self._inv: Optional["ProjectiveTransform"] = None

    @staticmethod
    def identity(field: FieldSpec) -> "ProjectiveTransform":
        return ProjectiveTransform(Matrix.identity(3, field).entries, field)

    @staticmethod
    def from_ints(rows: Sequence[Sequence[int]], field: FieldSpec) -> "ProjectiveTransform":
        return ProjectiveTransform([[field.of(e) for e in r] for r in rows], field)

    def det(self) -> Scalar:
        F = self.field
        m = self.matrix
        t1 = F.mul(m[0][0], F.sub(F.mul(m[1][1], m[2][2]), F.mul(m[1][2], m[2][1])))
        t2 = F.mul(m[0][1], F.sub(F.mul(m[1][0], m[2][2]), F.mul(m[1][2], m[2][0])))
        t3 = F.mul(m[0][2], F.sub(F.mul(m[1][0], m[2][1]), F.mul(m[1][1], m[2][0])))
        return F.add(F.sub(t1, t2), t3)

    def then(self, other: "ProjectiveTransform") -> "ProjectiveTransform":
        """Composite: apply self first, then other."""
        a = Matrix(self.matrix, self.field)
        b = Matrix(other.matrix, self.field)
        return ProjectiveTransform(a.mat_mul(b).entries, self.field)

    def induced_on(self, d: int) -> Matrix:
        """Matrix of the substitution on R_d (rows = images of monomials)."""
        if d not in self._induced:
            F = self.field
            if d == 0:
                self._induced[0] = Matrix.identity(1, F)
            elif d == 1:
                self._induced[1] = Matrix(self.matrix, F)
            else:
                prev = self.induced_on(d - 1)
                lin = [GradedPoly(1, r, F) for r in self.matrix]
                rows = []
                pi = mono_index(d - 1)
                for (a, b, c) in monomials(d):
                    if a:
                        head, rest = 0, (a - 1, b, c)
                    elif b:
                        head, rest = 1, (a, b - 1, c)
                    else:
                        head, rest = 2, (a, b, c - 1)
                    base = GradedPoly(d - 1, prev.entries[pi[rest]], F)
                    rows.append(lin[head].multiply(base).coords)
                self._induced[d] = Matrix(rows, F, cols=dim_R(d))
        return self._induced[d]

    def inverse(self) -> "ProjectiveTransform":
        if self._inv is None:
            F = self.field
            M = Matrix(self.matrix, F)
            aug = Matrix(
                [row + ident for row, ident in zip(M.entries, Matrix.identity(3, F).entries)],
                F, cols=6,
            )
            R, piv, rank = rref(aug)
            if rank < 3:
                raise NotInvertible("transform matrix is singular")
            self._inv = ProjectiveTransform([r[3:] for r in R.entries[:3]], F)
        return self._inv

    # -- applying the transform --

    def apply_poly(self, p: GradedPoly) -> GradedPoly:
        ind = self.induced_on(p.degree)
        F = self.field
        out = [F.zero] * dim_R(p.degree)
        for i, c in enumerate(p.coords):
            if not c:
                continue
            row = ind.entries[i]
            out = [F.add(o, F.mul(c, r)) for o, r in zip(out, row)]
        return GradedPoly(p.degree, out, F)

    def apply_dual(self, f: DualForm) -> DualForm:
        """Contragredient action: <g, t.F> = <t^{-1} g, F> for all g in R_d."""
        d = f.degree
        inv_ind = self.inverse().induced_on(d)
        # coordinate of t.F at monomial m equals <t^{-1} m, F>
        F = self.field
        out = []
        for i in range(dim_R(d)):
            row = inv_ind.entries[i]
            acc = F.zero
            for a, b in zip(row, f.coords):
                if a and b:
                    acc = F.add(acc, F.mul(a, b))
            out.append(acc)
        return DualForm(d, out, F)

    def apply_subspace(self, S: Subspace, degree: int, dual: bool = False) -> Subspace:
        assert S.ambient == dim_R(degree)
        if dual:
            ind = self.inverse().induced_on(degree)
            vecs = [ind.mul_vec(r) for r in S.basis.entries]
        else:
            ind = self.induced_on(degree)
            vecs = [
                GradedPoly(degree, r, self.field)
                for r in S.basis.entries
            ]
            vecs = [self.apply_poly(v).coords for v in vecs]
        return Subspace.from_vectors(vecs, S.ambient, self.field)

    def __repr__(self):
        return f"ProjectiveTransform({self.matrix})"


def apply_transform(t: ProjectiveTransform, obj):
    """Transform a GradedPoly, DualForm, or (Subspace, degree) pair."""
    if isinstance(obj, GradedPoly):
        return t.apply_poly(obj)
    if isinstance(obj, DualForm):
        return t.apply_dual(obj)
    if isinstance(obj, tuple) and isinstance(obj[0], Subspace):
        return t.apply_subspace(obj[0], obj[1])
    raise TypeError(f"cannot transform {type(obj).__name__}")


# ---------------------------------------------------------------------------
# text grammar (shared with the CLI)
#
#   poly     := term (('+'|'-') term)*
#   term     := coeff? ('*'? factor)*
#   factor   := var ('^'? int)?
#   coeff    := int ('/' int)?
#
# Lowercase x,y,z parse as ring elements, uppercase X,Y,Z as dual forms;
# mixing cases in one expression is an error.  "x2y" is shorthand for
# x^2*y.  Lists are ';'-separated; the token m^K is the formal truncation
# marker handled by the ideal layer.
# ---------------------------------------------------------------------------


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} (at position {pos})")
        self.pos = pos


class InhomogeneousError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+/\d+|\d+)|([xyzXYZ])|(\^)|(\*)|([+-]))")


def parse_poly(text: str, field: FieldSpec):
    """Parse one polynomial; returns GradedPoly or DualForm."""
    pos = 0
    n = len(text)
    terms: List[Tuple[Fraction, List[int]]] = []
    sign = 1
    cur_coeff: Optional[Fraction] = None
    cur_expo = [0, 0, 0]
    started = False
    case: Optional[bool] = None  # True = dual
    last_var: Optional[int] = None

    def flush(p):
        nonlocal sign, cur_coeff, cur_expo, started, last_var
        if not started:
            raise ParseError("empty term", p)
        c = cur_coeff if cur_coeff is not None else Fraction(1)
        terms.append((sign * c, cur_expo))
        sign, cur_coeff, cur_expo, started, last_var = 1, None, [0, 0, 0], False, None

    while pos < n:
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos:].lstrip()[0]!r}", pos)
        pos = m.end()
        num, var, caret, star, pm = m.groups()
        if pm:
            if started:
                flush(pos)
            elif cur_coeff is not None:
                raise ParseError("sign after coefficient", pos)
            if pm == "-":
                sign = -sign
            continue
        if num:
            val = Fraction(num) if "/" not in num else Fraction(num)
            if last_var is not None:
                # digit glued to a variable: exponent shorthand like x2y
                cur_expo[last_var] += int(num) - 1
                last_var = None
            elif started or cur_coeff is not None:
                raise ParseError("unexpected number", pos)
            else:
                cur_coeff = val
                started = True
            continue
        if var:
            is_dual = var.isupper()
            if case is None:
                case = is_dual
            elif case != is_dual:
                raise ParseError("mixed upper/lowercase variables", pos)
            i = ("x", "y", "z").index(var.lower())
            cur_expo[i] += 1
            last_var = i
            started = True
            continue
        if caret:
            m2 = re.compile(r"\s*(\d+)").match(text, pos)
            if not m2 or last_var is None:
                raise ParseError("misplaced '^'", pos)
            cur_expo[last_var] += int(m2.group(1)) - 1
            last_var = None
            pos = m2.end()
            continue
        if star:
            if not started:
                raise ParseError("misplaced '*'", pos)
            last_var = None
            continue
    if started or cur_coeff is not None:
        flush(pos)
    if not terms:
        raise ParseError("empty polynomial", 0)
    degs = {sum(e) for _, e in terms}
    if len(degs) > 1:
        raise InhomogeneousError(f"mixed degrees {sorted(degs)} in {text!r}")
    d = degs.pop()
    cls = DualForm if case else GradedPoly
    out = cls.zero(d, field)
    idx = mono_index(d)
    for c, e in terms:
        j = idx[tuple(e)]
        out.coords[j] = field.add(out.coords[j], field.of(c))
    return out


def format_poly(p, dual: Optional[bool] = None) -> str:
    """Canonical text form; parse(format(p)) == p."""
    if dual is None:
        dual = isinstance(p, DualForm)
    names = DUAL_VARS if dual else VARS
    F = p.field
    bits = []
    for i, c in enumerate(p.coords):
        if not c:
            continue
        e = monomials(p.degree)[i]
        factors = [
            (names[k] if e[k] == 1 else f"{names[k]}^{e[k]}")
            for k in range(3)
            if e[k]
        ]
        mono = "*".join(factors) if factors else "1"
        if c == F.one and factors:
            term = mono
        elif F.kind == "Rationals" and c == -1 and factors:
            term = f"-{mono}"
        else:
            term = f"{c}*{mono}" if factors else f"{c}"
        bits.append(term)
    if not bits:
        return "0"
    s = bits[0]
    for t in bits[1:]:
        s += " - " + t[1:] if t.startswith("-") else " + " + t
    return s
