"""Brute-force PGL(3, q) equivalence testing over small prime fields.

The group is enumerated once per q (|PGL(3,5)| = 372000) and scanned in
lexicographic matrix order, so any returned witness is the smallest one.
Nets are compared by canonical (RREF) form after transforming; graded
ideals are compared degreewise, filtering the candidate list one degree
at a time so that only the net-level scan touches the whole group.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from . import kernel
from .field import GF, FieldSpec, Subspace
from .ideals import GradedIdeal
from .nets import NetOfConics
from .ring import ProjectiveTransform, dim_R

ORACLE_MAX_Q = 7


class OracleInfeasible(Exception):
    pass


def _require_small_field(field: FieldSpec, max_q: int = ORACLE_MAX_Q) -> int:
    if field.kind != "PrimeField" or field.p > max_q:
        raise OracleInfeasible(
            f"exhaustive search needs a prime field with q <= {max_q}, got {field}"
        )
    return field.p


def _net_rows(V: NetOfConics) -> List[List[int]]:
    return [[int(e) for e in row] for row in V.space.basis.entries]


def _transform_from(mat_flat: Sequence[int], field: FieldSpec) -> ProjectiveTransform:
    rows = [list(mat_flat[0:3]), list(mat_flat[3:6]), list(mat_flat[6:9])]
    return ProjectiveTransform.from_ints(rows, field)


def orbit_oracle(V: NetOfConics, W: NetOfConics) -> Optional[ProjectiveTransform]:
    """Smallest g with g.V = W (canonical forms equal), or None."""
    if V.field != W.field:
        raise OracleInfeasible("nets over different fields")
    p = _require_small_field(V.field)
    mats = kernel.pgl3(p)
    target = kernel.encode_net(_net_rows(W), p)
    idx = kernel.net_orbit_find(_net_rows(V), target, mats, p)
    if idx < 0:
        return None
    return _transform_from(_mat_at(mats, idx), V.field)


def _mat_at(mats, idx):
    row = mats[idx]
    return [int(e) for e in row]


def net_canonical_code(V: NetOfConics) -> Tuple[int, ProjectiveTransform]:
    """Orbit-canonical encoding of V and a transform achieving it."""
    p = _require_small_field(V.field)
    mats = kernel.pgl3(p)
    code, idx = kernel.net_canonical(_net_rows(V), mats, p)
    return code, _transform_from(_mat_at(mats, idx), V.field)


def net_stabilizer_candidates(V: NetOfConics, W: NetOfConics) -> List[int]:
    """Indices of every g with g.V = W; the coset of the net stabilizer."""
    p = _require_small_field(V.field)
    mats = kernel.pgl3(p)
    target = kernel.encode_net(_net_rows(W), p)
    return [int(i) for i in kernel.net_orbit_find_all(_net_rows(V), target, mats, p)]


# ---------------------------------------------------------------------------
# graded-ideal (algebra) equivalence
#
# Stage one scans the whole group at the net level; the survivors (a coset
# of the net stabilizer) are filtered degree by degree.  Transform objects
# and transformed components are cached, so sweeps comparing many algebras
# over a common net pay the group scan and the induced matrices once.
# ---------------------------------------------------------------------------

_candidate_cache: Dict[Tuple[int, int, int], List[int]] = {}
_transform_cache: Dict[Tuple[int, int], ProjectiveTransform] = {}


def _net_pair_candidates(p: int, A2: Subspace, B2: Subspace) -> List[int]:
    key = (p, hash(A2), hash(B2))
    if key not in _candidate_cache:
        mats = kernel.pgl3(p)
        rows_a = [[int(e) for e in r] for r in A2.basis.entries]
        target = kernel.encode_net([[int(e) for e in r] for r in B2.basis.entries], p)
        _candidate_cache[key] = [
            int(i) for i in kernel.net_orbit_find_all(rows_a, target, mats, p)
        ]
    return _candidate_cache[key]


def _cached_transform(p: int, idx: int, field: FieldSpec) -> ProjectiveTransform:
    key = (p, idx)
    if key not in _transform_cache:
        _transform_cache[key] = _transform_from(_mat_at(kernel.pgl3(p), idx), field)
    return _transform_cache[key]


def _monomial_tables(d: int):
    """Parent/variable tables and multiplication shifts for degrees <= d,
    padded to rectangular arrays for the kernel."""
    import numpy as np

    from .ring import mono_index, monomials

    maxm = dim_R(d)
    parents = np.zeros((d + 1, maxm), dtype=np.int64)
    varids = np.zeros((d + 1, maxm), dtype=np.int64)
    for e in range(2, d + 1):
        idx_prev = mono_index(e - 1)
        for i, m in enumerate(monomials(e)):
            v = next(k for k in range(3) if m[k])
            parent = list(m)
            parent[v] -= 1
            parents[e, i] = idx_prev[tuple(parent)]
            varids[e, i] = v
    shifts = np.zeros((d, 3, maxm), dtype=np.int64)
    for e in range(1, d):
        idx_next = mono_index(e + 1)
        for v in range(3):
            for i, m in enumerate(monomials(e)):
                up = list(m)
                up[v] += 1
                shifts[e, v, i] = idx_next[tuple(up)]
    return parents, varids, shifts


def _filter_candidates(p, field, cands, SA: Subspace, SB: Subspace, d: int):
    rows_a = [[int(e) for e in r] for r in SA.basis.entries]
    rows_b = [[int(e) for e in r] for r in SB.basis.entries]
    parents, varids, shifts = _monomial_tables(d)
    return kernel.subspace_filter(
        kernel.pgl3(p), list(cands), rows_a, rows_b, p, d, parents, varids, shifts
    )


def ideal_orbit_transform(
    IA: GradedIdeal, IB: GradedIdeal, top: int
) -> Optional[ProjectiveTransform]:
    """Smallest g with g.(IA)_d = (IB)_d for 2 <= d <= top, or None.

    Both ideals must share a prime field with q <= 5.
    """
    field = IA.field
    p = _require_small_field(field, max_q=5)
    if any(IA.component(d).dim != IB.component(d).dim for d in range(2, top + 1)):
        return None
    cands = _net_pair_candidates(p, IA.component(2), IB.component(2))
    for d in range(3, top + 1):
        if not cands:
            return None
        if IA.component(d).dim in (0, dim_R(d)):
            continue
        cands = _filter_candidates(p, field, cands, IA.component(d),
                                   IB.component(d), d)
    if not cands:
        return None
    return _cached_transform(p, cands[0], field)


def algebra_iso_oracle(A, B) -> Optional[ProjectiveTransform]:
    """Graded-algebra isomorphism as PGL-equivalence of the defining ideals."""
    return ideal_orbit_transform(A.ideal, B.ideal, A.socle_degree)


# ---------------------------------------------------------------------------
# the GF(5) orbit atlas
#
# Geometric classes split into several PGL(3, F_5) orbits (field twists),
# so equivalence testing against the catalogued bases alone cannot decide
# membership for every net.  The atlas lists one representative per orbit
# with its canonical code and orbit size; the sizes sum to the number of
# all 3-dimensional subspaces of R_2 over GF(5), which proves the listing
# complete.
# ---------------------------------------------------------------------------

GF5_NET_COUNT = 2558556  # gaussian binomial [6 choose 3] at q = 5
ATLAS_RESOURCE = "net_orbit_atlas.txt"


def build_gf5_orbit_atlas(seed: int = 20260810, time_budget: float = 900.0):
    """Rediscover every PGL(3,5) net orbit by seeded random sampling.

    Returns rows (canonical code, label, orbit size, representative rows),
    sorted by code; raises if the sampling budget runs out before the
    orbit sizes cover the whole Grassmannian.
    """
    import random
    import time

    import numpy as np

    from .field import random_matrix
    from .nets import classify_net

    F = GF(5)
    mats = kernel.pgl3(5)
    atlas = {}
    covered = 0

    def visit(V: NetOfConics) -> int:
        nonlocal covered
        rows = _net_rows(V)
        codes = kernel.net_orbit_codes(rows, mats, 5)
        uniq = np.unique(codes)
        code = int(uniq[0])
        if code in atlas:
            return 0
        atlas[code] = (str(classify_net(V).cls), len(uniq), rows)
        covered += len(uniq)
        return len(uniq)

    from .nets import NET_CLASSES, NetLabel, normal_form

    for cls in NET_CLASSES:
        if cls == "8b":
            for lam in (1, 3):
                visit(normal_form(NetLabel("8b", lam), F))
        else:
            visit(normal_form(cls, F))
    rng = random.Random(seed)
    t0 = time.time()
    while covered < GF5_NET_COUNT:
        if time.time() - t0 > time_budget:
            raise RuntimeError(
                f"atlas incomplete: {covered} of {GF5_NET_COUNT} after budget"
            )
        S = Subspace(random_matrix(3, 6, F, rng))
        if S.dim == 3:
            visit(NetOfConics(S))
    return sorted(
        (code, label, size, rows) for code, (label, size, rows) in atlas.items()
    )


def write_gf5_orbit_atlas(path, rows=None) -> None:
    if rows is None:
        rows = build_gf5_orbit_atlas()
    total = sum(r[2] for r in rows)
    assert total == GF5_NET_COUNT, f"atlas covers {total} of {GF5_NET_COUNT}"
    with open(path, "w") as fh:
        fh.write("# PGL(3,5) net orbit atlas v1\n")
        fh.write(f"# {len(rows)} orbits, sizes sum to {GF5_NET_COUNT}\n")
        fh.write("# code label size representative(3x6 row-major digits)\n")
        for code, label, size, rep in rows:
            digits = "".join(str(int(e)) for row in rep for e in row)
            fh.write(f"{code} {label} {size} {digits}\n")


def load_gf5_orbit_atlas():
    """Map canonical code -> (label, orbit size, representative rows)."""
    import importlib.resources as resources

    text = (
        resources.files("netalg").joinpath("data").joinpath(ATLAS_RESOURCE).read_text()
    )
    out = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        code_s, label, size_s, digits = line.split()
        rep = [[int(c) for c in digits[r * 6 : r * 6 + 6]] for r in range(3)]
        out[int(code_s)] = (label, int(size_s), rep)
    return out


def atlas_lookup(V: NetOfConics, atlas=None) -> Tuple[str, int]:
    """Orbit-atlas label and orbit size for a GF(5) net, by full scan."""
    p = _require_small_field(V.field, max_q=5)
    if atlas is None:
        atlas = load_gf5_orbit_atlas()
    code, _ = net_canonical_code(V)
    label, size, _ = atlas[code]
    return label, size
