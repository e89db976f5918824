"""Pure-python fallback for the hot GF(p) kernels.

Mirrors the API of the compiled module `netalg._kernel`.  Semantics are
identical; only speed differs.  All matrices here are plain nested lists
of ints in [0, p); the PGL(3) element table is a list of flat 9-tuples.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

COMPILED = False


def rref_mod_p(rows: Sequence[Sequence[int]], ncols: int, p: int) -> Tuple[List[List[int]], List[int]]:
    A = [list(r) for r in rows]
    m = len(A)
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        pr = -1
        for i in range(r, m):
            if A[i][c] % p:
                pr = i
                break
        if pr < 0:
            continue
        A[r], A[pr] = A[pr], A[r]
        inv = pow(A[r][c], p - 2, p)
        A[r] = [(e * inv) % p for e in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                Ar = A[r]
                A[i] = [(e - f * Ar[j]) % p for j, e in enumerate(A[i])]
        pivots.append(c)
        r += 1
    return A, pivots


def _det3(g: Sequence[int], p: int) -> int:
    a, b, c, d, e, f, h, i, j = g
    return (a * (e * j - f * i) - b * (d * j - f * h) + c * (d * i - e * h)) % p


def pgl3_elements(p: int) -> List[Tuple[int, ...]]:
    """All of PGL(3, p) as flat row-major 3x3 tuples, first nonzero entry 1.

    Listed in lexicographic order of the 9 entries, so "first match" scans
    return the lexicographically smallest witness.
    """
    out = []
    for code in range(p**9):
        g = []
        x = code
        for _ in range(9):
            g.append(x % p)
            x //= p
        g.reverse()
        lead = next((e for e in g if e), 0)
        if lead != 1:
            continue
        if _det3(g, p):
            out.append(tuple(g))
    return out


def _lin_prod2(u: Sequence[int], v: Sequence[int], p: int) -> List[int]:
    # coefficients of (u.x)(v.x) on (x^2, xy, xz, y^2, yz, z^2)
    return [
        (u[0] * v[0]) % p,
        (u[0] * v[1] + u[1] * v[0]) % p,
        (u[0] * v[2] + u[2] * v[0]) % p,
        (u[1] * v[1]) % p,
        (u[1] * v[2] + u[2] * v[1]) % p,
        (u[2] * v[2]) % p,
    ]


def induced2(g: Sequence[int], p: int) -> List[List[int]]:
    """Action of g on degree-2 monomials; row m = coordinates of g(m)."""
    u, v, w = g[0:3], g[3:6], g[6:9]
    return [
        _lin_prod2(u, u, p),
        _lin_prod2(u, v, p),
        _lin_prod2(u, w, p),
        _lin_prod2(v, v, p),
        _lin_prod2(v, w, p),
        _lin_prod2(w, w, p),
    ]


def _apply_rref_encode(B: Sequence[Sequence[int]], ind: Sequence[Sequence[int]], p: int) -> int:
    rows = []
    for brow in B:
        rows.append([sum(brow[k] * ind[k][j] for k in range(6)) % p for j in range(6)])
    R, piv = rref_mod_p(rows, 6, p)
    code = 0
    for i in range(3):
        for j in range(6):
            code = code * p + (R[i][j] if i < len(R) else 0)
    return code


def encode_net(B_rref: Sequence[Sequence[int]], p: int) -> int:
    code = 0
    for i in range(3):
        for j in range(6):
            code = code * p + (B_rref[i][j] if i < len(B_rref) else 0)
    return code


def net_canonical(B: Sequence[Sequence[int]], mats: Sequence[Sequence[int]], p: int) -> Tuple[int, int]:
    """Minimal encoding of g.B over all g, with the argmin element index."""
    best = -1
    best_i = -1
    for i, g in enumerate(mats):
        code = _apply_rref_encode(B, induced2(g, p), p)
        if best < 0 or code < best:
            best, best_i = code, i
    return best, best_i

def net_orbit_find(B: Sequence[Sequence[int]], target_code: int,
                   mats: Sequence[Sequence[int]], p: int) -> int:
    """Index of the first g with rref(g.B) encoding target_code, or -1."""
    for i, g in enumerate(mats):
        if _apply_rref_encode(B, induced2(g, p), p) == target_code:
            return i
    return -1


def net_orbit_codes(B: Sequence[Sequence[int]], mats: Sequence[Sequence[int]], p: int) -> List[int]:
    return [_apply_rref_encode(B, induced2(g, p), p) for g in mats]


def subspace_filter(mats, cands, basis, target, p, d, parents, varids, shifts):
    """Indices i in cands with rref(g_i . basis) == target (degree d)."""
    dims = [(e + 2) * (e + 1) // 2 for e in range(d + 1)]
    k = len(basis)
    md = dims[d]
    tgt = [list(r) for r in target]
    out = []
    for gi in cands:
        gi = int(gi)
        g = mats[gi]
        img = [[int(g[3 * i + j]) for j in range(3)] for i in range(3)]
        for e in range(2, d + 1):
            me, mprev = dims[e], dims[e - 1]
            cur = [[0] * me for _ in range(me)]
            for i in range(me):
                pidx, v = int(parents[e][i]), int(varids[e][i])
                row = img[pidx]
                for j in range(mprev):
                    w = row[j]
                    if w:
                        for c in range(3):
                            lc = int(g[3 * v + c])
                            if lc:
                                t = int(shifts[e - 1][c][j])
                                cur[i][t] = (cur[i][t] + w * lc) % p
            img = cur
        rows = []
        for i in range(k):
            row = [0] * md
            for c, bc in enumerate(basis[i]):
                if bc:
                    ic = img[c]
                    for j in range(md):
                        if ic[j]:
                            row[j] = (row[j] + bc * ic[j]) % p
            rows.append(row)
        R, _ = rref_mod_p(rows, md, p)
        if R == tgt:
            out.append(gi)
    return out


def net_orbit_find_all(B: Sequence[Sequence[int]], target_code: int,
                       mats: Sequence[Sequence[int]], p: int,
                       limit: int = 0) -> List[int]:
    out = []
    for i, g in enumerate(mats):
        if _apply_rref_encode(B, induced2(g, p), p) == target_code:
            out.append(i)
            if limit and len(out) >= limit:
                break
    return out
