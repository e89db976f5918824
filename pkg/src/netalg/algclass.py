"""Isomorphism-class labels for graded Artinian algebras with Hilbert
function (1, 3^k, 1), following the published case lists per net class.

The pipeline: label the net I_2, move the ideal to the catalogued frame
(identity when I_2 already equals the normal form, otherwise the orbit
oracle over a small field), then read the residual data - the degree-3
generator for scheme length two, the perp line I_j^perp for scheme
length three, and the (cubic, top space) pair over the line class.

Labels follow the published taxonomy.  Some printed subcases turn out to
be redundant: unipotent elements of the net stabilizers identify them
(see KNOWN_COINCIDENCES, each entry verified by an explicit coordinate
change in the tests).  classify_algebra canonicalizes the residual data
before pattern matching, so isomorphic inputs always get one label, the
lexicographically first of a merged pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .field import FieldSpec, Matrix, Subspace, kernel_basis
from .ideals import (
    GradedIdeal,
    INFINITY,
    NotArtinian,
    hilbert_function,
    ideal_from_generators,
    socle_dimension,
)
from .nets import (
    NET_CLASSES,
    SCHEME_LENGTHS,
    NetLabel,
    NetOfConics,
    classify_net,
    normal_form,
)
from .ring import (
    DualForm,
    GradedPoly,
    ProjectiveTransform,
    dim_R,
    mono_index,
    monomials,
    parse_poly,
)


class FrameUnavailable(Exception):
    pass


class EmptyFamily(Exception):
    pass


# pairs of published labels that name one isomorphism class (identified by
# explicit unipotent coordinate changes whenever j is invertible in k)
KNOWN_COINCIDENCES = (
    ("5a.i", "5a.ii"),
    ("5a.iv", "5a.vii"),
    ("6c.i", "6c.ii"),
    ("2b.i", "2b.ii"),
)


@dataclass(frozen=True)
class AlgebraClassLabel:
    net: str
    sub: Optional[str] = None
    params: Tuple = ()
    root_qualified: bool = False

    def __str__(self):
        s = self.net if self.sub is None else f"{self.net}.{self.sub}"
        if self.params:
            inner = ",".join(f"{k}={v}" for k, v in self.params)
            s += f"({inner})"
        if self.root_qualified:
            s += "?"
        return s


@dataclass
class AlgebraPresentation:
    ideal: GradedIdeal
    socle_degree: int
    T: List[int]
    net: NetOfConics

    @staticmethod
    def from_ideal(I: GradedIdeal) -> "AlgebraPresentation":
        H = hilbert_function(I)
        vals = H.values
        j = max(d for d, h in enumerate(vals) if h)
        T = vals[: j + 1]
        k = j - 1
        if not (k >= 2 and T[0] == 1 and T[j] == 1 and all(t == 3 for t in T[1:j])):
            raise ValueError(f"Hilbert function {T} is not (1, 3^k, 1) with k >= 2")
        if not I.is_artinian_by(j):
            raise NotArtinian(f"not artinian by degree {j}")
        return AlgebraPresentation(I, j, T, NetOfConics(I.component(2)))

    @property
    def field(self) -> FieldSpec:
        return self.ideal.field

    @property
    def k(self) -> int:
        return self.socle_degree - 1


def is_gorenstein(A: AlgebraPresentation) -> bool:
    return socle_dimension(A.ideal, A.socle_degree) == 1


# ---------------------------------------------------------------------------
# residual extraction helpers
# ---------------------------------------------------------------------------


def _residual_line(I: GradedIdeal, V: NetOfConics, d: int) -> List:
    """Coordinates of the one-dimensional I_d / (V)_d."""
    W = ideal_from_generators(V.polys(), d, field=I.field).component(d)
    for row in I.component(d).basis.entries:
        r = W.reduce(row)
        if any(r):
            return r
    raise ValueError("ideal agrees with the net ideal in this degree")


def _perp_line(I: GradedIdeal, d: int) -> DualForm:
    K = kernel_basis(I.component(d).basis)
    assert K.rows == 1, f"expected a one-dimensional perp, got {K.rows}"
    return DualForm(d, K.entries[0], I.field)


def _coeffs_on(vec: Sequence, d: int, monos: Sequence[Tuple[int, int, int]]) -> List:
    idx = mono_index(d)
    return [vec[idx[m]] for m in monos]


def _supported_on(vec: Sequence, d: int, monos: Sequence[Tuple[int, int, int]]) -> bool:
    allowed = {mono_index(d)[m] for m in monos}
    return all(not c or i in allowed for i, c in enumerate(vec))


# ---------------------------------------------------------------------------
# frame moving
# ---------------------------------------------------------------------------


def _move_to_frame(A: AlgebraPresentation, target: NetOfConics) -> GradedIdeal:
    if A.net == target:
        return A.ideal
    F = A.field
    # variable permutations are free over any field
    from itertools import permutations

    for perm in permutations(range(3)):
        rows = [[F.one if j == perm[i] else F.zero for j in range(3)] for i in range(3)]
        t = ProjectiveTransform(rows, F)
        if t.apply_subspace(A.net.space, 2) == target.space:
            return transform_ideal(A.ideal, t)
    if F.kind == "PrimeField" and F.p <= 7:
        from .oracle import orbit_oracle

        t = orbit_oracle(A.net, target)
        if t is None:
            raise FrameUnavailable(
                "net not equivalent to the catalogued basis over this field"
            )
        return transform_ideal(A.ideal, t)
    raise FrameUnavailable(
        f"frame search over {F} needs I_2 equal to the catalogued basis "
        "up to a variable permutation"
    )


def transform_ideal(I: GradedIdeal, t: ProjectiveTransform) -> GradedIdeal:
    comps = [
        t.apply_subspace(I.component(d), d) if 0 < d <= I.bound else I.component(d)
        for d in range(I.bound + 1)
    ]
    return GradedIdeal(I.field, I.bound, comps, [], I.truncate_at)


# ---------------------------------------------------------------------------
# per-class residual analysis
# ---------------------------------------------------------------------------


def _zero_pattern(coeffs) -> Tuple[int, ...]:
    return tuple(1 if c else 0 for c in coeffs)


def _classify_len2(cls: str, J: GradedIdeal, V: NetOfConics) -> AlgebraClassLabel:
    f = _residual_line(J, V, 3)
    F = J.field
    if cls == "7a":
        a, b = _coeffs_on(f, 3, [(0, 3, 0), (0, 0, 3)])
        return AlgebraClassLabel("7a", "i" if (a and b) else "ii")
    if cls == "6b":
        # f = alpha z^3 + beta y^3.  The stabilizer contains z -> -y - z,
        # which sends beta to 1 - beta, so the class parameter is the pair
        # {beta, 1 - beta}; we store the smaller representative.
        a, b = _coeffs_on(f, 3, [(0, 0, 3), (0, 3, 0)])
        if a:
            beta = F.div(b, a)
            beta = min(beta, F.sub(F.one, beta))
            return AlgebraClassLabel("6b", None, (("beta", beta),))
        return AlgebraClassLabel("6b", None, (("beta", "inf"),))
    if cls == "6c":
        # residual basis {y^3, x y^2}; the shift y -> y + t x identifies
        # every f with nonzero y^3 coefficient
        a, b = _coeffs_on(f, 3, [(0, 3, 0), (1, 2, 0)])
        return AlgebraClassLabel("6c", "i" if a else "iii")
    if cls == "5b":
        a, b = _coeffs_on(f, 3, [(3, 0, 0), (2, 0, 1)])
        if a and b:
            return AlgebraClassLabel("5b", "i")
        return AlgebraClassLabel("5b", "ii" if a else "iii")
    raise AssertionError(cls)


# dual-space bases for the scheme-length-three frames, per socle degree
def _len3_dual_basis(cls: str, j: int) -> List[Tuple[int, int, int]]:
    if cls == "6a":
        return [(j, 0, 0), (0, j, 0), (0, 0, j)]
    if cls == "5a":
        return [(j, 0, 0), (0, j, 0), (0, j - 1, 1)]
    if cls == "4":
        # span <Z^j, X Z^{j-1}, X^2 Z^{j-2} - Y Z^{j-1}> - the third vector
        # is handled separately
        return [(0, 0, j), (1, 0, j - 1), (2, 0, j - 2)]
    if cls == "2b":
        return [(1, 0, j - 1), (0, 1, j - 1), (0, 0, j)]
    raise AssertionError(cls)


def _classify_len3(cls: str, J: GradedIdeal, j: int) -> AlgebraClassLabel:
    Fm = _perp_line(J, j)
    F = J.field
    if cls == "6a":
        coeffs = _coeffs_on(Fm.coords, j, _len3_dual_basis("6a", j))
        assert _supported_on(Fm.coords, j, _len3_dual_basis("6a", j))
        n = sum(1 for c in coeffs if c)
        return AlgebraClassLabel("6a", {3: "i", 2: "ii", 1: "iii"}[n])
    if cls == "5a":
        monos = _len3_dual_basis("5a", j)
        assert _supported_on(Fm.coords, j, monos)
        a, b, g = _coeffs_on(Fm.coords, j, monos)
        if g:
            b = F.zero  # y -> y + t z kills the Y^j coefficient
        pat = _zero_pattern((a, b, g))
        label = {
            (1, 0, 1): "i",
            (1, 1, 0): "iii",
            (0, 0, 1): "vii",
            (1, 0, 0): "v",
            (0, 1, 0): "vi",
        }[pat]
        return AlgebraClassLabel("5a", label)
    if cls == "4":
        idx = mono_index(j)
        c3 = Fm.coords[idx[(2, 0, j - 2)]]
        c2 = Fm.coords[idx[(1, 0, j - 1)]]
        if c3:
            return AlgebraClassLabel("4", "i")
        return AlgebraClassLabel("4", "ii" if c2 else "iii")
    if cls == "2b":
        monos = _len3_dual_basis("2b", j)
        assert _supported_on(Fm.coords, j, monos)
        a, b, g = _coeffs_on(Fm.coords, j, monos)
        # z -> z + t x shifts the Z^j coefficient whenever (a, b) != 0
        return AlgebraClassLabel("2b", "i" if (a or b) else "iii")
    raise AssertionError(cls)


# ---------------------------------------------------------------------------
# the line class (net 2a): binary cubic residual plus top data
# ---------------------------------------------------------------------------

_BIN3 = [(0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3)]


def _binary_cubic_coeffs(f: Sequence, field) -> List:
    return _coeffs_on(f, 3, _BIN3)


def _cubic_disc(c, F):
    a, b, cc, d = c
    t = F.zero
    t = F.add(t, F.mul(F.of(18), F.mul(F.mul(a, b), F.mul(cc, d))))
    t = F.sub(t, F.mul(F.of(4), F.mul(F.mul(b, b), F.mul(b, d))))
    t = F.add(t, F.mul(F.mul(b, b), F.mul(cc, cc)))
    t = F.sub(t, F.mul(F.of(4), F.mul(a, F.mul(cc, F.mul(cc, cc)))))
    t = F.sub(t, F.mul(F.of(27), F.mul(F.mul(a, a), F.mul(d, d))))
    return t


def _binary_roots(c, F) -> Optional[List[Tuple]]:
    """Projective roots of a y^3 + b y^2 z + c y z^2 + d z^3, or None when
    some root is outside the field."""
    a, b, cc, d = c

    def ev(y0, z0):
        acc = F.zero
        for coef, (ey, ez) in zip((a, b, cc, d), ((3, 0), (2, 1), (1, 2), (0, 3))):
            term = coef
            for _ in range(ey):
                term = F.mul(term, y0)
            for _ in range(ez):
                term = F.mul(term, z0)
            acc = F.add(acc, term)
        return acc

    roots = []
    if F.kind == "PrimeField":
        for t in range(F.p):
            if not ev(F.one, F.of(t)):
                roots.append((F.one, F.of(t)))
        if not ev(F.zero, F.one):
            roots.append((F.zero, F.one))
        return roots
    # rationals: roots (1, t) have t a rational root of d t^3 + cc t^2 + b t + a
    if not ev(F.zero, F.one):
        roots.append((F.zero, F.one))
    coeffs = [Fraction(v) for v in (d, cc, b, a)]  # descending in t
    den = 1
    for fr in coeffs:
        den = den * fr.denominator // _gcd(den, fr.denominator)
    ints = [int(fr * den) for fr in coeffs]
    while ints and ints[0] == 0:
        ints = ints[1:]
    if not ints:
        return roots
    lead, const = ints[0], ints[-1]
    cands = {Fraction(0)} if ints[-1] == 0 else set()
    if const:
        for p in _divisors(const):
            for q in _divisors(lead):
                cands.add(Fraction(p, q))
                cands.add(Fraction(-p, q))
    for t in sorted(cands):
        if not ev(F.one, F.of(t)):
            roots.append((F.one, F.of(t)))
    return roots


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n):
    n = abs(n)
    if n == 0:
        return [1]
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _hessian_zero(c, F) -> bool:
    # f = a y^3 + b y^2 z + c y z^2 + d z^3 is a cube iff its Hessian vanishes
    a, b, cc, d = c
    h1 = F.sub(F.mul(F.of(3), F.mul(a, cc)), F.mul(b, b))  # coeff pattern of y^2
    h2 = F.sub(F.mul(F.of(9), F.mul(a, d)), F.mul(b, cc))
    h3 = F.sub(F.mul(F.of(3), F.mul(b, d)), F.mul(cc, cc))
    return not (h1 or h2 or h3)


def _double_and_simple_roots(c, F):
    """(double root, simple root) of a discriminant-zero, non-cube cubic.

    A root is multiple iff both partials vanish there (char > 3)."""
    roots = _binary_roots(c, F)
    assert roots is not None
    a, b, cc, d = c
    dy = (F.mul(F.of(3), a), F.mul(F.of(2), b), cc)
    dz = (b, F.mul(F.of(2), cc), F.mul(F.of(3), d))

    def ev2(coeffs, y0, z0):
        t1 = F.mul(coeffs[0], F.mul(y0, y0))
        t2 = F.mul(coeffs[1], F.mul(y0, z0))
        t3 = F.mul(coeffs[2], F.mul(z0, z0))
        return F.add(F.add(t1, t2), t3)

    dbl = None
    simple = None
    seen = []
    for r in roots:
        if any(_same_proj(r, s, F) for s in seen):
            continue
        seen.append(r)
        if not ev2(dy, *r) and not ev2(dz, *r):
            dbl = r
        else:
            simple = r
    return dbl, simple


def _same_proj(r, s, F):
    return not F.sub(F.mul(r[0], s[1]), F.mul(r[1], s[0]))


def _yz_transform(col_y, col_z, field) -> ProjectiveTransform:
    """x fixed; (y, z) substituted by the matrix with the given columns."""
    F = field
    rows = [
        [F.one, F.zero, F.zero],
        [F.zero, col_y[0], col_z[0]],
        [F.zero, col_y[1], col_z[1]],
    ]
    return ProjectiveTransform(rows, F)


def _cubic_type(c, F) -> str:
    if _cubic_disc(c, F):
        return "yzl"
    if _hessian_zero(c, F):
        return "y3"
    return "y2z"


def _classify_2a(J: GradedIdeal, j: int) -> AlgebraClassLabel:
    F = J.field
    V = normal_form("2a", F)
    if j == 3:
        # the whole degree-3 data is the dual line <F>; its root structure
        # is read off the binomial-weighted binary cubic
        Fm = _perp_line(J, 3)
        assert _supported_on(Fm.coords, 3, _BIN3)
        cd = _coeffs_on(Fm.coords, 3, _BIN3)
        three = F.of(3)
        c = [cd[0], F.mul(three, cd[1]), F.mul(three, cd[2]), cd[3]]
        ftype = _cubic_type(c, F)
        return AlgebraClassLabel("2a", {"yzl": "i", "y2z": "ii", "y3": "iii"}[ftype])
    fvec = _residual_line(J, V, 3)
    assert _supported_on(fvec, 3, _BIN3)
    c = _binary_cubic_coeffs(fvec, F)
    ftype = _cubic_type(c, F)

    # move f to the canonical cubic, then read the top residual
    if ftype == "yzl":
        roots = _binary_roots(c, F)
        distinct = []
        for r in roots or []:
            if not any(_same_proj(r, s, F) for s in distinct):
                distinct.append(r)
        if len(distinct) < 3:
            return AlgebraClassLabel("2a", "yzl", (), root_qualified=True)
        # every ordering of the roots gives an admissible frame; the label
        # is canonicalized over all six (the root permutations realize
        # stabilizer elements identifying parameter values)
        from itertools import permutations

        readings = []
        for (r1, r2, r3) in permutations(distinct[:3]):
            lam = _solve_2x2(r1, r2, r3, F)
            t = _yz_transform(
                (F.mul(lam[0], r1[0]), F.mul(lam[0], r1[1])),
                (F.mul(lam[1], r2[0]), F.mul(lam[1], r2[1])),
                F,
            )
            readings.append(_read_2a_yzl_pattern(transform_ideal(J, t), j))
        return _canonical_yzl_label(readings, F)
    if ftype == "y2z":
        dbl, simple = _double_and_simple_roots(c, F)
        t = _yz_transform(simple, dbl, F)
        Jn = transform_ideal(J, t)
        return _classify_2a_y2z(Jn, j)
    # triple root: put it at z = 0 ... the cube is L^3 with L from the
    # derivative of the Hessian-free direction; root of multiplicity 3
    roots = _binary_roots(c, F)
    r = roots[0]
    comp = (F.neg(r[1]), r[0])
    t = _yz_transform(comp, r, F)
    Jn = transform_ideal(J, t)
    return _classify_2a_y3(Jn, j)


def _solve_2x2(r1, r2, r3, F):
    det = F.sub(F.mul(r1[0], r2[1]), F.mul(r1[1], r2[0]))
    l1 = F.div(F.sub(F.mul(r3[0], r2[1]), F.mul(r3[1], r2[0])), det)
    l2 = F.div(F.sub(F.mul(r1[0], r3[1]), F.mul(r1[1], r3[0])), det)
    return l1, l2


def _top_residual_rows(J: GradedIdeal, j: int, f_gens: List[str]) -> Subspace:
    F = J.field
    base = ideal_from_generators(
        [p for p in normal_form("2a", F).polys()]
        + [parse_poly(s, F) for s in f_gens],
        j,
        field=F,
    ).component(j)
    rows = [base.reduce(r) for r in J.component(j).basis.entries]
    rows = [r for r in rows if any(r)]
    return Subspace.from_vectors(rows, dim_R(j), F)


def _read_2a_yzl_pattern(J: GradedIdeal, j: int):
    """One frame's reading of the top residual: ("W", a, b), ("Wa", a) or
    ("degen",) for the doubly degenerate column pattern."""
    F = J.field
    W = _top_residual_rows(J, j, ["y^2*z-y*z^2"])
    monos = [(0, j, 0), (0, 1, j - 1), (0, 0, j)]
    idx = mono_index(j)
    cols = [idx[m] for m in monos]
    assert all(_supported_on(r, j, monos) for r in W.basis.entries)
    M = Matrix([[r[c] for c in cols] for r in W.basis.entries], F, cols=3)
    S = Subspace(M)
    piv = tuple(S.pivots)
    rows = S.basis.entries
    if piv == (0, 1):
        return ("W", F.neg(rows[0][2]), rows[1][2])
    if piv == (0, 2):
        return ("Wa", rows[0][1])
    assert piv == (1, 2)
    return ("degen",)


def _canonical_yzl_label(readings, F) -> AlgebraClassLabel:
    if any(r == ("degen",) or r == ("W", F.zero, F.zero) for r in readings):
        return AlgebraClassLabel("2a", "W", (("a", F.zero), ("b", F.zero)))
    was = sorted(r[1] for r in readings if r[0] == "Wa")
    if was:
        return AlgebraClassLabel("2a", "Wa", (("a", was[0]),))
    pairs = sorted((r[1], r[2]) for r in readings)
    a, b = pairs[0]
    return AlgebraClassLabel("2a", "W", (("a", a), ("b", b)))


def _classify_2a_y2z(J: GradedIdeal, j: int) -> AlgebraClassLabel:
    F = J.field
    Fm = _perp_2a_top(J, j, ["y^2*z"])
    monos = [(0, j, 0), (0, 1, j - 1), (0, 0, j)]
    assert _supported_on(Fm.coords, j, monos)
    a, b, g = _coeffs_on(Fm.coords, j, monos)
    pat = _zero_pattern((a, b, g))
    named = {
        (0, 0, 1): "i",
        (0, 1, 0): "ii",
        (1, 0, 0): "iii",
        (1, 0, 1): "iv",
        (1, 1, 0): "v",
    }
    if pat in named:
        return AlgebraClassLabel("2a", "y2z." + named[pat])
    if pat == (0, 1, 1):
        return AlgebraClassLabel("2a", "y2z.vi")
    # full support: the torus leaves the cross-ratio-like modulus invariant
    mu = F.div(F.mul(a, _pow(F, g, j - 1)), _pow(F, b, j))
    return AlgebraClassLabel("2a", "y2z.vii", (("mu", mu),))


def _classify_2a_y3(J: GradedIdeal, j: int) -> AlgebraClassLabel:
    F = J.field
    Fm = _perp_2a_top(J, j, ["y^3"])
    monos = [(0, 2, j - 2), (0, 1, j - 1), (0, 0, j)]
    assert _supported_on(Fm.coords, j, monos)
    c1, c2, c3 = _coeffs_on(Fm.coords, j, monos)
    if c1:
        # kill c2 with z -> z + t y, then c3 decides the class
        t = F.div(c2, F.mul(F.of(j - 1), c1))
        jj = F.of(j)
        c22 = F.sub(c2, F.mul(F.mul(F.of(j - 1), t), c1))
        binom = F.of(j * (j - 1) // 2)
        c33 = F.add(
            F.sub(c3, F.mul(F.mul(jj, t), c2)),
            F.mul(F.mul(binom, F.mul(t, t)), c1),
        )
        assert not c22
        return AlgebraClassLabel("2a", "y3." + ("iv" if c33 else "iii"))
    if c2:
        return AlgebraClassLabel("2a", "y3.ii")
    return AlgebraClassLabel("2a", "y3.i")


def _pow(F, v, e):
    out = F.one
    for _ in range(e):
        out = F.mul(out, v)
    return out


def _perp_2a_top(J: GradedIdeal, j: int, f_gens: List[str]) -> DualForm:
    """Dual generator of I_j inside the span complementary to (V, f)_j."""
    return _perp_line(J, j)


# ---------------------------------------------------------------------------
# the classifier
# ---------------------------------------------------------------------------


def classify_algebra(A: AlgebraPresentation) -> AlgebraClassLabel:
    net_label = classify_net(A.net)
    cls = net_label.cls
    ell = SCHEME_LENGTHS[cls]
    j = A.socle_degree
    if ell in (0, 1):
        assert j == 3, "scheme length below two only occurs at socle degree 3"
        return AlgebraClassLabel(cls)
    if ell == 2 and j != 3:
        raise ValueError(f"scheme length 2 net cannot carry socle degree {j}")
    target = normal_form(cls, A.field)
    J = _move_to_frame(A, target)
    if ell == 2:
        return _classify_len2(cls, J, target)
    if ell == 3:
        return _classify_len3(cls, J, j)
    return _classify_2a(J, j)


# ---------------------------------------------------------------------------
# the catalogue of representatives
# ---------------------------------------------------------------------------


def _rep(field, j, conics: Sequence[str], extra: Sequence[str]) -> GradedIdeal:
    gens = [parse_poly(s, field) for s in list(conics) + list(extra)]
    return ideal_from_generators(gens, j + 3, field=field, truncate_at=j + 1)


_LEN2_CATALOG = {
    # class -> (net strings, [(sub, extra gens, betti name)])
    "7a": (("x^2+y*z", "x*y", "x*z"), [
        ("i", ("y^3+z^3",), "A"),
        ("ii", ("y^3",), "B"),
    ]),
    "6c": (("x^2+z^2", "x*z", "y*z"), [
        ("i", ("y^3-x*y^2",), "A"),
        ("ii", ("y^3",), "A"),
        ("iii", ("x*y^2",), "B"),
    ]),
    "5b": (("x*y", "y^2", "z^2"), [
        ("i", ("x^3+x^2*z",), "A"),
        ("ii", ("x^3",), "A"),
        ("iii", ("x^2*z",), "B"),
    ]),
}


def _len3_catalog(cls: str, j: int) -> Tuple[Tuple[str, str, str], List]:
    zj = f"z^{j}"
    yj = f"y^{j}"
    xj = f"x^{j}"
    yj1z = f"y^{j-1}*z"
    xzj1 = f"x*z^{j-1}"
    yzj1 = f"y*z^{j-1}"
    zjm = f"z^{j}"
    if cls == "6a":
        return ("x*y", "x*z", "y*z"), [
            ("i", (f"{xj}-{yj}", f"{xj}-{zj}"), f"C{j}"),
            ("ii", (f"{xj}-{yj}", zj), f"D{j}"),
            ("iii", (yj, zj), f"E{j}"),
        ]
    if cls == "5a":
        return ("x*y", "x*z", "z^2"), [
            ("i", (f"{xj}-{yj}", f"{yj1z}-{yj}"), f"C{j}"),
            ("ii", (f"{xj}-{yj1z}", yj), f"C{j}"),
            ("iii", (f"{xj}-{yj}", yj1z), f"D{j}"),
            ("iv", (f"{yj}-{yj1z}", xj), f"D{j}"),
            ("v", (yj, yj1z), f"E{j}"),
            ("vi", (xj, yj1z), f"E{j}"),
            ("vii", (xj, yj), f"D{j}"),
        ]
    if cls == "4":
        return ("x^2+y*z", "x*y", "y^2"), [
            ("i", (f"{xzj1}+{yzj1}", f"{yzj1}+{zjm}"), f"C{j}"),
            ("ii", (yzj1, f"{xzj1}+{zjm}"), f"D{j}"),
            ("iii", (xzj1, yzj1), f"E{j}"),
        ]
    if cls == "2b":
        return ("x^2", "x*y", "y^2"), [
            ("i", (f"{xzj1}-{zjm}", yzj1), f"D{j}"),
            ("ii", (xzj1, zjm), f"D{j}"),
            ("iii", (xzj1, yzj1), f"E{j}"),
        ]
    raise KeyError(cls)


def _2a_catalog(j: int, field: FieldSpec, params: Optional[dict] = None) -> List:
    """Representatives over the line class; continuous families sampled at
    the given parameter values."""
    params = params or {}
    F = field
    yj, zj, yzj1 = f"y^{j}", f"z^{j}", f"y*z^{j-1}"
    y2zj2 = f"y^2*z^{j-2}"
    fl = "y^2*z-y*z^2"
    out = []
    for (a, b) in params.get("wab", []):
        out.append((
            AlgebraClassLabel("2a", "W", (("a", F.of(a)), ("b", F.of(b)))),
            (fl, f"{yj}-{a}*{zj}" if a else yj, f"{yzj1}+{b}*{zj}" if b else yzj1),
            f"J{j}",
        ))
    for a in params.get("wa", []):
        out.append((
            AlgebraClassLabel("2a", "Wa", (("a", F.of(a)),)),
            (fl, f"{yj}+{a}*{yzj1}" if a else yj, zj),
            f"J{j}",
        ))
    out.append((AlgebraClassLabel("2a", "W", (("a", F.zero), ("b", F.zero))),
                (fl, yj, yzj1), f"K{j}"))
    out.extend([
        (AlgebraClassLabel("2a", "y2z.i"), ("y^2*z", yj, yzj1), f"K{j}"),
        (AlgebraClassLabel("2a", "y2z.ii"), ("y^2*z", yj, zj), f"J{j}"),
        (AlgebraClassLabel("2a", "y2z.iii"), ("y^2*z", yzj1, zj), f"K{j}"),
        (AlgebraClassLabel("2a", "y2z.iv"), ("y^2*z", f"{yj}-{zj}", yzj1), f"J{j}"),
        (AlgebraClassLabel("2a", "y2z.v"), ("y^2*z", f"{yj}-{yzj1}", zj), f"J{j}"),
        (AlgebraClassLabel("2a", "y3.i"), ("y^3", y2zj2, yzj1), f"K{j}"),
        (AlgebraClassLabel("2a", "y3.ii"), ("y^3", y2zj2, zj), f"J{j}"),
        (AlgebraClassLabel("2a", "y3.iii"), ("y^3", yzj1, zj), f"J{j}"),
        (AlgebraClassLabel("2a", "y3.iv"), ("y^3", f"{y2zj2}-{zj}", yzj1), f"J{j}"),
    ])
    return out


def enumerate_classes(
    net: str,
    k: int,
    field: FieldSpec,
    params: Optional[dict] = None,
) -> List[Tuple[AlgebraClassLabel, AlgebraPresentation, str]]:
    """Representatives (label, algebra, expected Betti name) for one net.

    Continuous families are sampled at the parameter values passed in
    `params` (keys "beta" for the 6b pencil, "wab"/"wa" for the line
    class).  Raises EmptyFamily for (net, k) combinations that admit no
    algebra of Hilbert function (1, 3^k, 1).
    """
    assert k >= 2
    j = k + 1
    ell = SCHEME_LENGTHS[net]
    params = params or {}
    if k >= 3 and not (ell == 3 or net == "2a"):
        raise EmptyFamily(
            f"no (1,3^{k},1) algebra has degree-2 component of class {net}"
        )
    out = []
    if ell in (0, 1):
        V = normal_form(net, field)
        I = ideal_from_generators(V.polys(), j + 3, field=field, truncate_at=j + 1)
        name = "CI" if ell == 0 else "SL1"
        out.append((AlgebraClassLabel(net), AlgebraPresentation.from_ideal(I), name))
        return out
    if ell == 2:
        if net == "6b":
            # the class parameter is {beta, 1 - beta}; Betti table B occurs
            # exactly for the class of beta = 0 (the pair {0, 1})
            conics = ("x^2", "x*y", "z^2+y*z")
            betas = params.get("beta", (0, 2, "inf"))
            for b in betas:
                if b == "inf":
                    extra, lab, betti = ("y^3",), "inf", "A"
                elif not field.of(b):
                    extra, lab, betti = ("z^3",), field.of(0), "B"
                else:
                    bf = field.of(b)
                    lab = min(bf, field.sub(field.one, bf))
                    extra = (f"z^3+{b}*y^3",)
                    betti = "B" if not lab else "A"
                I = _rep(field, j, conics, extra)
                out.append((
                    AlgebraClassLabel("6b", None, (("beta", lab),)),
                    AlgebraPresentation.from_ideal(I),
                    betti,
                ))
            return out
        conics, subs = _LEN2_CATALOG[net]
        for sub, extras, betti in subs:
            I = _rep(field, j, conics, extras)
            out.append((
                AlgebraClassLabel(net, sub),
                AlgebraPresentation.from_ideal(I),
                betti,
            ))
        return out
    if ell == 3:
        conics, subs = _len3_catalog(net, j)
        for sub, extras, betti in subs:
            I = _rep(field, j, conics, extras)
            out.append((
                AlgebraClassLabel(net, sub),
                AlgebraPresentation.from_ideal(I),
                betti,
            ))
        return out
    # the line class
    conics = ("x^2", "x*y", "x*z")
    if k == 2:
        triple = [
            (AlgebraClassLabel("2a", "i"), ("y^2*z-y*z^2", "y^3", "z^3"), "G"),
            (AlgebraClassLabel("2a", "ii"), ("y^2*z", "y^3", "z^3"), "G"),
            (AlgebraClassLabel("2a", "iii"), ("y^3", "y^2*z", "y*z^2"), "H"),
        ]
    else:
        triple = _2a_catalog(j, field, params)
    for label, extras, betti in triple:
        I = _rep(field, j, conics, extras)
        out.append((label, AlgebraPresentation.from_ideal(I), betti))
    return out
