"""Nets of conics: invariants, normal forms, and the calibrated classifier.

A net is a 3-dimensional subspace of R_2.  The classifier computes a
vector of geometric invariants (scheme length, orbit dimension from the
gl_3 stabilizer, vanishing of the discriminant cubic, the Hilbert tails
of the perfect-square locus and of the cubic's singular locus) and looks
it up in a calibration table.  The table is data, generated once by
cross-checking the fifteen normal forms against the brute-force orbit
oracle over GF(5); no drawn figure is consulted at runtime.
"""

from __future__ import annotations

import importlib.resources as resources
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .field import FieldSpec, Matrix, Subspace, kernel_basis, rref
from .ideals import (
    INFINITY,
    GradedIdeal,
    HilbertFunction,
    NotANet,
    hilbert_function,
    net_ideal,
    scheme_length,
)
from .ring import GradedPoly, dim_R, mono_index, monomials, parse_poly

NET_CLASSES = (
    "8a", "8b", "8c", "7a", "7b", "7c",
    "6a", "6b", "6c", "6d", "5a", "5b", "4", "2a", "2b",
)

# Orbit dimension asserted by the class numeral; scheme lengths by class.
ORBIT_DIMS = {c: int(c.rstrip("abcd")) for c in NET_CLASSES}
SCHEME_LENGTHS = {
    "8a": 1, "8b": 0, "8c": 0, "7a": 2, "7b": 1, "7c": 0,
    "6a": 3, "6b": 2, "6c": 2, "6d": 0, "5a": 3, "5b": 2,
    "4": 3, "2a": INFINITY, "2b": 3,
}

_NORMAL_FORM_STRINGS: Dict[str, Tuple[str, str, str]] = {
    "8a": ("x^2-y*z", "y^2-x*z", "x*y"),
    "8c": ("x^2+y*z", "y^2+x*z", "z^2"),
    "7a": ("x^2+y*z", "x*y", "x*z"),
    "7b": ("x^2", "x*z-y^2", "y*z"),
    "7c": ("x^2", "y^2", "z^2+x*y"),
    "6a": ("x*y", "x*z", "y*z"),
    "6b": ("x^2", "x*y", "z^2+y*z"),
    "6c": ("x^2+z^2", "x*z", "y*z"),
    "6d": ("x^2", "y^2", "z^2"),
    "5a": ("x*y", "x*z", "z^2"),
    "5b": ("x*y", "y^2", "z^2"),
    "4": ("x^2+y*z", "x*y", "y^2"),
    "2a": ("x^2", "x*y", "x*z"),
    "2b": ("x^2", "x*y", "y^2"),
}


class UnclassifiableOverField(Exception):
    pass


class BadParameter(ValueError):
    pass


@dataclass(frozen=True)
class NetLabel:
    cls: str
    parameter: Optional[object] = None  # the one-parameter family only

    def __str__(self):
        if self.parameter is None:
            return self.cls
        return f"{self.cls}(lambda={self.parameter})"


class NetOfConics:
    """Canonical 3-row basis of a 3-dimensional space of conics."""

    __slots__ = ("space", "field")

    def __init__(self, space: Subspace):
        if space.ambient != dim_R(2) or space.dim != 3:
            raise NotANet(f"expected a 3-dimensional subspace of R_2, got {space!r}")
        self.space = space
        self.field = space.field

    @staticmethod
    def from_polys(polys: Sequence[GradedPoly]) -> "NetOfConics":
        assert all(p.degree == 2 for p in polys)
        return NetOfConics(
            Subspace.from_vectors([p.coords for p in polys], dim_R(2), polys[0].field)
        )

    @staticmethod
    def from_strings(strings: Sequence[str], field: FieldSpec) -> "NetOfConics":
        return NetOfConics.from_polys([parse_poly(s, field) for s in strings])

    def polys(self) -> List[GradedPoly]:
        return [GradedPoly(2, r, self.field) for r in self.space.basis.entries]

    def __eq__(self, other):
        return isinstance(other, NetOfConics) and self.space == other.space

    def __hash__(self):
        return hash(self.space)

    def __repr__(self):
        return "Net<" + "; ".join(str(p) for p in self.polys()) + ">"


def normal_form(label, field: FieldSpec) -> NetOfConics:
    """The catalogued basis for a class; 8b needs an admissible parameter."""
    if isinstance(label, str):
        label = NetLabel(label)
    if label.cls == "8b":
        lam = label.parameter if label.parameter is not None else field.of(1)
        lam = field.of(lam)
        check_8b_parameter(lam, field)
        F = field
        return NetOfConics.from_polys([
            parse_poly("x^2", F) + parse_poly("y*z", F).scale(lam),
            parse_poly("y^2", F) + parse_poly("x*z", F).scale(lam),
            parse_poly("z^2", F) + parse_poly("x*y", F).scale(lam),
        ])
    if label.cls not in _NORMAL_FORM_STRINGS:
        raise KeyError(f"unknown class {label.cls!r}")
    return NetOfConics.from_strings(_NORMAL_FORM_STRINGS[label.cls], field)


def check_8b_parameter(lam, field: FieldSpec) -> None:
    """The one-parameter family degenerates when lam is 0, a cube root of
    -1 (discriminant cubic goes singular) or a cube root of 8 (the net
    falls into the coordinate-squares class)."""
    F = field
    cube = F.mul(F.mul(lam, lam), lam)
    if not lam or cube == F.of(-1) or cube == F.of(8):
        raise BadParameter(f"excluded family parameter {lam}")


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------


def gram_matrix(p: GradedPoly) -> Matrix:
    """Symmetric matrix of a conic (needs 2 invertible)."""
    F = p.field
    half = F.inv(F.of(2))
    idx = mono_index(2)
    c = p.coords

    def at(i, j):
        if i == j:
            e = [0, 0, 0]
            e[i] = 2
            return c[idx[tuple(e)]]
        e = [0, 0, 0]
        e[i] += 1
        e[j] += 1
        return F.mul(half, c[idx[tuple(e)]])

    return Matrix([[at(i, j) for j in range(3)] for i in range(3)], F)


def associated_cubic(V: NetOfConics) -> Tuple[GradedPoly, List[GradedPoly]]:
    """det(a1 M1 + a2 M2 + a3 M3) as a cubic in the net coordinates a_i,
    together with the basis used (the cubic depends on it up to GL_3)."""
    F = V.field
    basis = V.polys()
    grams = [gram_matrix(p) for p in basis]
    # entries of the pencil matrix are linear forms in (a1, a2, a3)
    lin = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            coords = [grams[k].entries[i][j] for k in range(3)]
            lin[i][j] = GradedPoly(1, coords, F)
    det = (
        lin[0][0].multiply(lin[1][1]).multiply(lin[2][2])
        + lin[0][1].multiply(lin[1][2]).multiply(lin[2][0])
        + lin[0][2].multiply(lin[1][0]).multiply(lin[2][1])
        - lin[0][2].multiply(lin[1][1]).multiply(lin[2][0])
        - lin[0][0].multiply(lin[1][2]).multiply(lin[2][1])
        - lin[0][1].multiply(lin[1][0]).multiply(lin[2][2])
    )
    return det, basis


def partial_derivative(p: GradedPoly, var: int) -> GradedPoly:
    F = p.field
    d = p.degree
    out = GradedPoly.zero(d - 1, F)
    idx = mono_index(d - 1)
    for i, c in enumerate(p.coords):
        if not c:
            continue
        e = list(monomials(d)[i])
        if not e[var]:
            continue
        k = e[var]
        e[var] -= 1
        j = idx[tuple(e)]
        out.coords[j] = F.add(out.coords[j], F.mul(F.of(k), c))
    return out


def _tail_record(H: HilbertFunction) -> Tuple[str, Optional[int]]:
    return H.tail


def cubic_singular_record(V: NetOfConics) -> Tuple[str, Optional[int]]:
    """Hilbert tail of the ideal of partials of the discriminant cubic.

    ("const", 0): smooth cubic; ("const", m > 0): isolated singularities
    of total multiplicity m; ("growing", None): singular in dimension one;
    ("zero", None): the cubic vanishes identically.
    """
    cubic, _ = associated_cubic(V)
    if cubic.is_zero():
        return ("zero", None)
    parts = [partial_derivative(cubic, v) for v in range(3)]
    gens = [p for p in parts if not p.is_zero()]
    if not gens:
        return ("growing", None)  # cannot happen away from char 3
    I = GradedIdeal.from_generators(gens, 6, field=V.field)
    return _tail_record(hilbert_function(I))


def squares_record(V: NetOfConics) -> Tuple[str, Optional[int]]:
    """Hilbert tail of the locus {L in P(R_1) : L^2 in V}.

    The conditions "L^2 orthogonal to the complement of V" are three
    conics in the coefficients (a, b, c) of L; these span the same degree-2
    conditions as the rank minors of [L^2; V].  A constant tail counts the
    squares with multiplicity, a growing tail flags a positive-dimensional
    family.
    """
    F = V.field
    two = F.of(2)
    idx = mono_index(2)
    # The (a,b,c)-coordinate of L^2 at a conic monomial has the same
    # exponent triple, scaled by 2 when the monomial is mixed.
    rows = []
    for w in V.space.perp().basis.entries:
        q = GradedPoly.zero(2, F)
        for m in monomials(2):
            wm = w[idx[m]]
            if not wm:
                continue
            scale = F.one if max(m) == 2 else two
            j = idx[m]
            q.coords[j] = F.add(q.coords[j], F.mul(scale, wm))
        rows.append(q)
    gens = [q for q in rows if not q.is_zero()]
    if not gens:
        return ("full", None)  # every square lies in V: impossible for a net
    I = GradedIdeal.from_generators(gens, 6, field=F)
    return _tail_record(hilbert_function(I))


def stabilizer_dimension(V: NetOfConics) -> int:
    """dim of {g in gl_3 : rho(g) V <= V} with rho the derivation action."""
    F = V.field
    perp = V.space.perp()
    idx1 = mono_index(1)
    idx2 = mono_index(2)
    conds: List[List] = []
    basis = V.space.basis.entries
    for v in basis:
        for w in perp.basis.entries:
            row = []
            for i in range(3):
                for j in range(3):
                    # E_ij sends x_i to x_j; derivation on each conic monomial
                    acc = F.zero
                    for mpos, c in enumerate(v):
                        if not c:
                            continue
                        e = list(monomials(2)[mpos])
                        if not e[i]:
                            continue
                        k = F.of(e[i])
                        e2 = list(e)
                        e2[i] -= 1
                        e2[j] += 1
                        tgt = idx2[tuple(e2)]
                        if w[tgt]:
                            acc = F.add(acc, F.mul(F.mul(k, c), w[tgt]))
                    row.append(acc)
            conds.append(row)
    K = kernel_basis(Matrix(conds, F, cols=9))
    return K.rows


def orbit_dimension(V: NetOfConics) -> int:
    return 9 - stabilizer_dimension(V)


@dataclass(frozen=True)
class NetInvariants:
    ell: object  # int or math.inf
    stab_dim: int
    orbit_dim: int
    gamma_zero: bool
    squares: Tuple[str, Optional[int]]
    cubic_singular: Tuple[str, Optional[int]]

    def key(self) -> str:
        ell = "inf" if self.ell == INFINITY else str(self.ell)

        def rec(r):
            return r[0] if r[1] is None else f"{r[0]}:{r[1]}"

        return "|".join([
            f"ell={ell}",
            f"odim={self.orbit_dim}",
            f"gz={int(self.gamma_zero)}",
            f"sq={rec(self.squares)}",
            f"sing={rec(self.cubic_singular)}",
        ])


def net_invariants(V: NetOfConics) -> NetInvariants:
    ell = scheme_length(V.space)
    stab = stabilizer_dimension(V)
    cubic, _ = associated_cubic(V)
    return NetInvariants(
        ell=ell,
        stab_dim=stab,
        orbit_dim=9 - stab,
        gamma_zero=cubic.is_zero(),
        squares=squares_record(V),
        cubic_singular=cubic_singular_record(V),
    )


# ---------------------------------------------------------------------------
# calibration table
# ---------------------------------------------------------------------------

CALIBRATION_RESOURCE = "net_calibration.txt"


def calibration_rows() -> List[Tuple[str, str]]:
    """(invariant key, label) rows computed from the normal forms.

    Run over GF(5); the classifier tests assert the same vectors arise
    over GF(101) and the rationals.
    """
    from .field import GF

    F = GF(5)
    rows = []
    for cls in NET_CLASSES:
        V = normal_form(cls, F)
        rows.append((net_invariants(V).key(), cls))
    return rows


def write_calibration(path) -> None:
    rows = calibration_rows()
    with open(path, "w") as fh:
        fh.write("# net classifier calibration v1\n")
        fh.write("# produced by: netalg calibrate (normal forms over GF(5),\n")
        fh.write("# cross-checked against the exhaustive orbit oracle)\n")
        for key, cls in rows:
            fh.write(f"{key} -> {cls}\n")


def load_calibration() -> Dict[str, str]:
    table: Dict[str, str] = {}
    text = (
        resources.files("netalg")
        .joinpath("data")
        .joinpath(CALIBRATION_RESOURCE)
        .read_text()
    )
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, _, cls = line.partition(" -> ")
        table[key.strip()] = cls.strip()
    return table


_calibration_cache: Optional[Dict[str, str]] = None


def classify_net(V: NetOfConics) -> NetLabel:
    """Label by invariant lookup; exact over any field with char not 2, 3."""
    global _calibration_cache
    if _calibration_cache is None:
        _calibration_cache = load_calibration()
    inv = net_invariants(V)
    key = inv.key()
    cls = _calibration_cache.get(key)
    if cls is None:
        raise UnclassifiableOverField(
            f"invariant vector {key} matches no calibrated class"
        )
    if cls == "8b":
        return NetLabel("8b", recover_8b_parameter(V))
    return NetLabel(cls)


def recover_8b_parameter(V: NetOfConics):
    """The raw family parameter, when V literally is the catalogued basis."""
    F = V.field
    b = V.space.basis.entries
    # rref of <x^2+t yz, y^2+t xz, z^2+t xy> pivots x^2, xy, xz when t != 0
    idx = mono_index(2)
    lam = b[0][idx[(0, 1, 1)]]
    if not lam:
        return None
    try:
        if V == normal_form(NetLabel("8b", lam), F):
            return lam
    except BadParameter:
        return None
    return None
