"""Graded ideals of k[x,y,z] truncated at a degree bound, and apolarity.

Everything is degreewise exact linear algebra: an ideal is a list of
canonical subspaces I_d closed under multiplication by R_1, a Hilbert
function is dim R_d - dim I_d with a certified tail, and inverse systems
and annihilators are kernels of contraction matrices.  No Groebner bases
anywhere.
"""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .field import FieldSpec, Matrix, Subspace, kernel_basis, rref
from .ring import (
    DualForm,
    GradedPoly,
    contract,
    contraction_matrix,
    dim_R,
    mono_index,
    monomials,
)

INFINITY = math.inf


class NotArtinian(Exception):
    pass


class NotANet(Exception):
    pass


class NotOSequence(Exception):
    pass


@lru_cache(maxsize=None)
def _var_shift(d: int) -> Tuple[Tuple[int, ...], ...]:
    """Index of x_v * (degree-d monomial i) inside the degree-(d+1) basis."""
    idx = mono_index(d + 1)
    out = []
    for v in range(3):
        row = []
        for (a, b, c) in monomials(d):
            e = [a, b, c]
            e[v] += 1
            row.append(idx[tuple(e)])
        out.append(tuple(row))
    return tuple(out)


def _times_R1(vectors: Sequence[Sequence], d: int, field: FieldSpec) -> List[List]:
    """All x_v * w for w in vectors (degree d), as degree-(d+1) coordinate rows."""
    shifts = _var_shift(d)
    zero = field.zero
    n1 = dim_R(d + 1)
    out = []
    for w in vectors:
        for v in range(3):
            sh = shifts[v]
            row = [zero] * n1
            for i, c in enumerate(w):
                if c:
                    row[sh[i]] = c
            out.append(row)
    return out


class HilbertFunction:
    """Finite value list plus a certified tail marker.

    tail is ("const", a), ("growing", None) or ("undetermined", None).
    """

    __slots__ = ("values", "tail")

    def __init__(self, values: Sequence[int], tail: Tuple[str, Optional[int]]):
        self.values = list(values)
        self.tail = tail

    @property
    def tail_kind(self) -> str:
        return self.tail[0]

    @property
    def tail_value(self) -> Optional[int]:
        return self.tail[1]

    def value(self, d: int) -> int:
        if d < len(self.values):
            return self.values[d]
        if self.tail_kind == "const":
            return self.tail[1]
        raise ValueError(f"H_{d} not determined")

    def __eq__(self, other):
        return (
            isinstance(other, HilbertFunction)
            and self.values == other.values
            and self.tail == other.tail
        )

    def __repr__(self):
        s = ",".join(str(v) for v in self.values)
        if self.tail_kind == "const":
            return f"({s}; ->{self.tail[1]})"
        if self.tail_kind == "growing":
            return f"({s}; growing)"
        return f"({s}; ?)"


class GradedIdeal:
    """Degreewise canonical components of a homogeneous ideal up to `bound`."""

    __slots__ = ("field", "bound", "components", "generators", "truncate_at")

    def __init__(
        self,
        field: FieldSpec,
        bound: int,
        components: Sequence[Subspace],
        generators: Sequence[GradedPoly],
        truncate_at: Optional[int] = None,
    ):
        assert len(components) == bound + 1
        self.field = field
        self.bound = bound
        self.components = list(components)
        self.generators = list(generators)
        self.truncate_at = truncate_at

    @staticmethod
    def from_generators(
        gens: Sequence[GradedPoly],
        bound: int,
        field: Optional[FieldSpec] = None,
        truncate_at: Optional[int] = None,
    ) -> "GradedIdeal":
        if field is None:
            assert gens, "need a field for the empty ideal"
            field = gens[0].field
        by_deg: Dict[int, List[List]] = {}
        for g in gens:
            if g.is_zero():
                continue
            assert g.degree >= 1, "degree-0 generator would be the unit ideal"
            by_deg.setdefault(g.degree, []).append(list(g.coords))
        assert bound >= max(by_deg, default=1), "bound below a generator degree"
        comps: List[Subspace] = [Subspace.empty(1, field)]
        for d in range(1, bound + 1):
            vecs = _times_R1(comps[d - 1].basis.entries, d - 1, field)
            vecs.extend(by_deg.get(d, []))
            if truncate_at is not None and d >= truncate_at:
                comps.append(Subspace.full(dim_R(d), field))
            else:
                comps.append(Subspace.from_vectors(vecs, dim_R(d), field))
        return GradedIdeal(field, bound, comps, gens, truncate_at)

    @staticmethod
    def from_components(
        components: Sequence[Subspace],
        field: FieldSpec,
        truncate_at: Optional[int] = None,
    ) -> "GradedIdeal":
        I = GradedIdeal(field, len(components) - 1, components, [], truncate_at)
        I.generators = I.minimal_generators()
        return I

    def component(self, d: int) -> Subspace:
        assert 0 <= d <= self.bound, f"degree {d} beyond bound {self.bound}"
        return self.components[d]

    def max_generator_degree(self) -> int:
        g = max((p.degree for p in self.generators), default=1)
        if self.truncate_at is not None:
            g = max(g, self.truncate_at)
        return g

    def minimal_generators(self) -> List[GradedPoly]:
        """New generators per degree: a basis of I_d modulo R_1 * I_{d-1}."""
        out: List[GradedPoly] = []
        for d in range(1, self.bound + 1):
            prev = Subspace.from_vectors(
                _times_R1(self.components[d - 1].basis.entries, d - 1, self.field),
                dim_R(d),
                self.field,
            )
            for row in self.components[d].basis.entries:
                if not prev.contains(row):
                    out.append(GradedPoly(d, row, self.field))
                    prev = prev.add(Subspace.from_vectors([row], dim_R(d), self.field))
        return out

    def minimal_generator_count(self) -> int:
        n = 0
        for d in range(1, self.bound + 1):
            prev = Subspace.from_vectors(
                _times_R1(self.components[d - 1].basis.entries, d - 1, self.field),
                dim_R(d),
                self.field,
            )
            n += self.components[d].dim - prev.dim
        return n

    def hilbert_values(self, upto: Optional[int] = None) -> List[int]:
        D = self.bound if upto is None else min(upto, self.bound)
        return [dim_R(d) - self.components[d].dim for d in range(D + 1)]

    def hilbert_function(self) -> HilbertFunction:
        return hilbert_function(self)

    def is_artinian_by(self, j: int) -> bool:
        """I_d = R_d for all computed d > j."""
        return all(
            self.components[d].dim == dim_R(d) for d in range(j + 1, self.bound + 1)
        )

    def contains(self, p: GradedPoly) -> bool:
        if p.degree > self.bound:
            raise ValueError("degree beyond bound")
        return self.components[p.degree].contains(p.coords)

    def __eq__(self, other):
        if not isinstance(other, GradedIdeal) or self.field != other.field:
            return False
        D = min(self.bound, other.bound)
        if self.truncate_at != other.truncate_at:
            return False
        return all(self.components[d] == other.components[d] for d in range(D + 1))

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators[:6])
        more = ", ..." if len(self.generators) > 6 else ""
        t = f", m^{self.truncate_at}" if self.truncate_at is not None else ""
        return f"GradedIdeal({gens}{more}{t}; bound {self.bound})"


def ideal_from_generators(
    gens: Sequence[GradedPoly],
    bound: int,
    field: Optional[FieldSpec] = None,
    truncate_at: Optional[int] = None,
) -> GradedIdeal:
    return GradedIdeal.from_generators(gens, bound, field, truncate_at)


# ---------------------------------------------------------------------------
# Macaulay growth and tail certification
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _lex_monomials_general(r: int, j: int) -> Tuple[Tuple[int, ...], ...]:
    monos = [
        tuple(m.count(i) for i in range(r))
        for m in combinations_with_replacement(range(r), j)
    ]
    monos.sort(reverse=True)
    return tuple(monos)


def macaulay_growth(r: int, j: int, d: int) -> int:
    """dim R_1 * (span of the first d degree-j monomials in lex order)."""
    monos = _lex_monomials_general(r, j)
    assert 0 <= d <= len(monos), f"segment size {d} out of range"
    seg = monos[:d]
    grown = set()
    for m in seg:
        for v in range(r):
            e = list(m)
            e[v] += 1
            grown.add(tuple(e))
    return len(grown)


def _tail_certificate(h: List[int], sizes: List[int], gmax: int) -> Tuple[str, Optional[int]]:
    """Certify the eventual behaviour of h (quotient values, ideal sizes).

    Constant tails use the Gotzmann regularity bound for the constant
    Hilbert polynomial: h_i = h_{i+1} = s with i >= max(gmax, s) pins the
    tail at s.  Otherwise, if the top ideal component grows at exactly
    the lex-segment rate, persistence determines all later values; we
    iterate the lex model until it either stabilizes or shows a steady
    positive increment.
    """
    D = len(h) - 1
    for i in range(max(gmax, 0), D):
        s = h[i]
        if h[i + 1] == s and i >= max(gmax, s):
            return ("const", s)
    i0 = D - 1
    if i0 >= gmax and i0 >= 1:
        if sizes[i0 + 1] == macaulay_growth(3, i0, sizes[i0]):
            model_h = [h[i0], h[i0 + 1]]
            s = sizes[i0 + 1]
            m = i0 + 1
            for _ in range(8):
                s = macaulay_growth(3, m, s)
                m += 1
                model_h.append(dim_R(m) - s)
                sm = model_h[-2]
                if model_h[-1] == sm and m - 1 >= max(gmax, sm):
                    return ("const", sm)
            d1 = model_h[-1] - model_h[-2]
            d2 = model_h[-2] - model_h[-3]
            if d1 == d2 and d1 > 0:
                return ("growing", None)
    return ("undetermined", None)


def hilbert_function(I: GradedIdeal) -> HilbertFunction:
    h = I.hilbert_values()
    sizes = [I.components[d].dim for d in range(I.bound + 1)]
    tail = _tail_certificate(h, sizes, I.max_generator_degree())
    return HilbertFunction(h, tail)


# ---------------------------------------------------------------------------
# nets: scheme length
# ---------------------------------------------------------------------------

NET_TAIL_BOUND = 5  # h_4 = h_5 settles every finite tail of a net


def net_ideal(V: Subspace, bound: int = NET_TAIL_BOUND) -> GradedIdeal:
    if V.ambient != dim_R(2) or V.dim != 3:
        raise NotANet(f"dim {V.dim} subspace of k^{V.ambient} is not a net")
    gens = [GradedPoly(2, row, V.field) for row in V.basis.entries]
    return GradedIdeal.from_generators(gens, bound, V.field)


def scheme_length(V: Subspace):
    """Eventual constant of H(R/(V)); 0 for complete intersections, inf
    when the associated scheme is a line."""
    H = hilbert_function(net_ideal(V))
    if H.tail_kind == "growing":
        return INFINITY
    if H.tail_kind == "const":
        return H.tail_value
    raise ValueError(f"tail undecided for {H!r}")


# ---------------------------------------------------------------------------
# inverse systems and annihilators
# ---------------------------------------------------------------------------


class InverseSystem:
    """R-submodule of S generated by dual forms of possibly mixed degrees."""

    __slots__ = ("generators", "field")

    def __init__(self, generators: Sequence[DualForm]):
        assert generators, "empty inverse system"
        self.generators = [g for g in generators if not g.is_zero()]
        self.field = generators[0].field
        assert all(g.field == self.field for g in generators)

    @property
    def top_degree(self) -> int:
        return max(g.degree for g in self.generators)

    def module_component(self, d: int) -> Subspace:
        """Span of all contractions of the generators landing in S_d."""
        vecs = []
        F = self.field
        for g in self.generators:
            e = g.degree - d
            if e < 0:
                continue
            if e == 0:
                vecs.append(list(g.coords))
                continue
            for m in monomials(e):
                vecs.append(contract(GradedPoly.monomial(m, F), g).coords)
        return Subspace.from_vectors(vecs, dim_R(d), F)

    def hilbert_values(self) -> List[int]:
        return [self.module_component(d).dim for d in range(self.top_degree + 1)]


def annihilator(M: InverseSystem, bound: int) -> GradedIdeal:
    """Ann(M) up to `bound`; I_d is a kernel of stacked contraction maps."""
    F = M.field
    comps: List[Subspace] = [Subspace.empty(1, F)]
    for d in range(1, bound + 1):
        blocks = []
        for g in M.generators:
            if g.degree >= d:
                blocks.append(contraction_matrix(d, g))
        if not blocks:
            comps.append(Subspace.full(dim_R(d), F))
            continue
        stacked = blocks[0]
        for b in blocks[1:]:
            stacked = Matrix(
                [row_a + row_b for row_a, row_b in zip(stacked.entries, b.entries)],
                F,
                cols=stacked.cols + b.cols,
            )
        # rows g of R_d with g . (contraction block) = 0: the left null space
        comps.append(Subspace(kernel_basis(stacked.transpose())))
    return GradedIdeal.from_components(comps, F)


def catalecticant_rank(F: DualForm, d: int) -> int:
    _, _, rank = rref(contraction_matrix(d, F))
    return rank


# ---------------------------------------------------------------------------
# ancestor ideal, socle
# ---------------------------------------------------------------------------


def ancestor_ideal(V: Subspace, j: int, bound: int) -> GradedIdeal:
    """V-bar: colon spaces V : R_{j-i} below degree j, (V) at and above."""
    assert V.ambient == dim_R(j)
    F = V.field
    perp = V.perp()
    comps: List[Subspace] = []
    for i in range(min(j, bound + 1)):
        if i == 0:
            comps.append(Subspace.empty(1, F))
            continue
        # h in R_i with m*h in V for every monomial m of degree j-i
        n_i = dim_R(i)
        conds: List[List] = []
        for m in monomials(j - i):
            mp = GradedPoly.monomial(m, F)
            prod_cols = [
                GradedPoly.monomial(mi, F).multiply(mp).coords for mi in monomials(i)
            ]
            for w in perp.basis.entries:
                conds.append([_dotvec(F, prod, w) for prod in prod_cols])
        if not conds:
            comps.append(Subspace.full(n_i, F))
            continue
        comps.append(Subspace(kernel_basis(Matrix(conds, F, cols=n_i))))
    if bound >= j:
        gens = [GradedPoly(j, row, F) for row in V.basis.entries]
        upper = GradedIdeal.from_generators(gens, bound, F)
        comps.extend(upper.components[j : bound + 1])
    return GradedIdeal.from_components(comps[: bound + 1], F)


def _dotvec(F: FieldSpec, u, v):
    acc = F.zero
    for a, b in zip(u, v):
        if a and b:
            acc = F.add(acc, F.mul(a, b))
    return acc


class QuotientBasis:
    """Monomial basis of A_d = R_d / I_d (the non-pivot monomials)."""

    __slots__ = ("degree", "free", "space", "field")

    def __init__(self, I: GradedIdeal, d: int):
        self.degree = d
        self.space = I.component(d)
        piv = set(self.space.pivots)
        self.free = [i for i in range(dim_R(d)) if i not in piv]
        self.field = I.field

    @property
    def dim(self) -> int:
        return len(self.free)

    def reduce(self, coords: Sequence) -> List:
        red = self.space.reduce(coords)
        return [red[i] for i in self.free]


def multiplication_matrix(I: GradedIdeal, d: int, var: int) -> Matrix:
    """x_var : A_d -> A_{d+1} on quotient monomial bases."""
    src = QuotientBasis(I, d)
    dst = QuotientBasis(I, d + 1)
    sh = _var_shift(d)[var]
    F = I.field
    rows = []
    for i in src.free:
        vec = [F.zero] * dim_R(d + 1)
        vec[sh[i]] = F.one
        rows.append(dst.reduce(vec))
    return Matrix(rows, F, cols=dst.dim)


def socle(I: GradedIdeal, socle_degree: int) -> Dict[int, Subspace]:
    """Degreewise socle of A = R/I as subspaces in quotient coordinates."""
    if I.bound <= socle_degree or not I.is_artinian_by(socle_degree):
        raise NotArtinian(
            f"ideal not visibly artinian by degree {socle_degree} (bound {I.bound})"
        )
    out: Dict[int, Subspace] = {}
    for d in range(socle_degree + 1):
        qb = QuotientBasis(I, d)
        if qb.dim == 0:
            out[d] = Subspace.empty(1, I.field)
            continue
        blocks = [multiplication_matrix(I, d, v) for v in range(3)]
        stacked = Matrix(
            [b0 + b1 + b2 for b0, b1, b2 in zip(*(b.entries for b in blocks))],
            I.field,
            cols=sum(b.cols for b in blocks),
        )
        # left null space: rows v of A_d with v . M = 0 for each variable map
        out[d] = Subspace(kernel_basis(stacked.transpose()))
    return out


def socle_dimension(I: GradedIdeal, socle_degree: int) -> int:
    return sum(s.dim for s in socle(I, socle_degree).values())


# ---------------------------------------------------------------------------
# Gotzmann persistence and lex ideals
# ---------------------------------------------------------------------------


def gotzmann_persistence_check(V: Subspace, j: int) -> bool:
    """True iff the growth step R_1 V -> R_2 V is exactly lex-extremal.

    When dim R_2 V equals the lex-segment growth of R_1 V, persistence
    pins every later value of H(R/(V)); the check is the certificate the
    tail detector relies on.
    """
    assert V.ambient == dim_R(j)
    F = V.field
    r1v = Subspace.from_vectors(
        _times_R1(V.basis.entries, j, F), dim_R(j + 1), F
    )
    r2v = Subspace.from_vectors(
        _times_R1(r1v.basis.entries, j + 1, F), dim_R(j + 2), F
    )
    return r2v.dim == macaulay_growth(3, j + 1, r1v.dim)


def lex_ideal(T: Sequence[int], field: FieldSpec, bound: Optional[int] = None) -> GradedIdeal:
    """The lex-segment ideal with Hilbert function T (zeros beyond the list)."""
    if not T or T[0] != 1:
        raise NotOSequence(f"{list(T)} does not start at 1")
    D = bound if bound is not None else len(T) + 1
    sizes = []
    for d in range(D + 1):
        t = T[d] if d < len(T) else 0
        if t < 0 or t > dim_R(d):
            raise NotOSequence(f"value {t} out of range in degree {d}")
        sizes.append(dim_R(d) - t)
    for d in range(D):
        if sizes[d] and macaulay_growth(3, d, sizes[d]) > sizes[d + 1]:
            raise NotOSequence(
                f"{list(T)} violates the Macaulay bound between degrees {d} and {d+1}"
            )
    F = field
    comps = []
    for d in range(D + 1):
        vecs = [
            list(GradedPoly.monomial(m, F).coords) for m in monomials(d)[: sizes[d]]
        ]
        comps.append(Subspace.from_vectors(vecs, dim_R(d), F))
    return GradedIdeal.from_components(comps, F)
