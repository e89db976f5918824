# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled GF(p) kernels: row reduction and PGL(3, p) orbit scans.

Same API as netalg.kernel_py; selected at import by netalg.kernel.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, uint8_t

cnp.import_array()

COMPILED = True


def rref_mod_p(rows, ncols, p):
    cdef int m = len(rows)
    cdef int n = ncols
    cdef int pp = p
    cdef cnp.ndarray[int64_t, ndim=2] A = np.zeros((m, n), dtype=np.int64)
    cdef int i, j
    for i in range(m):
        row = rows[i]
        for j in range(n):
            A[i, j] = row[j] % pp
    pivots = []
    cdef int r = 0, c, pr, k
    cdef int64_t inv, f
    for c in range(n):
        if r == m:
            break
        pr = -1
        for i in range(r, m):
            if A[i, c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(n):
                f = A[r, j]; A[r, j] = A[pr, j]; A[pr, j] = f
        inv = _inv_mod(A[r, c], pp)
        for j in range(n):
            A[r, j] = (A[r, j] * inv) % pp
        for i in range(m):
            if i != r and A[i, c] != 0:
                f = A[i, c]
                for j in range(n):
                    A[i, j] = (A[i, j] - f * A[r, j]) % pp
                    if A[i, j] < 0:
                        A[i, j] += pp
        pivots.append(c)
        r += 1
    return A.tolist(), pivots


cdef int64_t _inv_mod(int64_t a, int64_t p):
    cdef int64_t r = 1
    cdef int64_t e = p - 2
    cdef int64_t b = a % p
    while e:
        if e & 1:
            r = (r * b) % p
        b = (b * b) % p
        e >>= 1
    return r


def pgl3_elements(p):
    """All of PGL(3, p), flat 3x3 rows, first nonzero entry 1, lex order."""
    cdef int pp = p
    cdef long total = 1
    cdef int k
    for k in range(9):
        total *= pp
    cdef cnp.ndarray[uint8_t, ndim=2] out = np.empty((total, 9), dtype=np.uint8)
    cdef long code, n = 0
    cdef int g[9]
    cdef int i, lead, d
    cdef long x
    for code in range(total):
        x = code
        for i in range(8, -1, -1):
            g[i] = x % pp
            x //= pp
        lead = 0
        for i in range(9):
            if g[i] != 0:
                lead = g[i]
                break
        if lead != 1:
            continue
        d = (g[0] * (g[4] * g[8] - g[5] * g[7])
             - g[1] * (g[3] * g[8] - g[5] * g[6])
             + g[2] * (g[3] * g[7] - g[4] * g[6])) % pp
        if d == 0:
            continue
        for i in range(9):
            out[n, i] = <uint8_t> g[i]
        n += 1
    return out[:n].copy()


cdef void _induced2(const uint8_t* g, int p, int64_t* ind) nogil:
    # rows of ind (6x6): images of x^2, xy, xz, y^2, yz, z^2
    cdef const uint8_t* u
    cdef const uint8_t* v
    cdef int r, a, b
    cdef int pairs[6][2]
    pairs[0][0] = 0; pairs[0][1] = 0
    pairs[1][0] = 0; pairs[1][1] = 1
    pairs[2][0] = 0; pairs[2][1] = 2
    pairs[3][0] = 1; pairs[3][1] = 1
    pairs[4][0] = 1; pairs[4][1] = 2
    pairs[5][0] = 2; pairs[5][1] = 2
    for r in range(6):
        a = pairs[r][0]; b = pairs[r][1]
        u = g + 3 * a
        v = g + 3 * b
        ind[6 * r + 0] = (u[0] * v[0]) % p
        ind[6 * r + 1] = (u[0] * v[1] + u[1] * v[0]) % p
        ind[6 * r + 2] = (u[0] * v[2] + u[2] * v[0]) % p
        ind[6 * r + 3] = (u[1] * v[1]) % p
        ind[6 * r + 4] = (u[1] * v[2] + u[2] * v[1]) % p
        ind[6 * r + 5] = (u[2] * v[2]) % p


cdef long _apply_rref_encode(const int64_t* B, const int64_t* ind, int p,
                             const int64_t* invtab) nogil:
    cdef int64_t W[18]
    cdef int i, j, k, r, c, pr
    cdef int64_t acc, f, inv
    for i in range(3):
        for j in range(6):
            acc = 0
            for k in range(6):
                acc += B[6 * i + k] * ind[6 * k + j]
            W[6 * i + j] = acc % p
    # rref of the 3x6 block
    r = 0
    for c in range(6):
        if r == 3:
            break
        pr = -1
        for i in range(r, 3):
            if W[6 * i + c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(6):
                f = W[6 * r + j]; W[6 * r + j] = W[6 * pr + j]; W[6 * pr + j] = f
        inv = invtab[W[6 * r + c]]
        for j in range(6):
            W[6 * r + j] = (W[6 * r + j] * inv) % p
        for i in range(3):
            if i != r and W[6 * i + c] != 0:
                f = W[6 * i + c]
                for j in range(6):
                    W[6 * i + j] = (W[6 * i + j] - f * W[6 * r + j]) % p
                    if W[6 * i + j] < 0:
                        W[6 * i + j] += p
        r += 1
    cdef long code = 0
    for i in range(3):
        for j in range(6):
            code = code * p + W[6 * i + j]
    return code


def induced2(g, p):
    cdef cnp.ndarray[uint8_t, ndim=1] garr = np.asarray(g, dtype=np.uint8).ravel()
    cdef cnp.ndarray[int64_t, ndim=1] ind = np.zeros(36, dtype=np.int64)
    _induced2(<const uint8_t*> garr.data, p, <int64_t*> ind.data)
    return ind.reshape(6, 6).tolist()


def encode_net(B_rref, p):
    cdef long code = 0
    cdef int i, j
    rows = [list(r) for r in B_rref]
    while len(rows) < 3:
        rows.append([0] * 6)
    for i in range(3):
        for j in range(6):
            code = code * p + rows[i][j]
    return code


cdef void _load_b(B, int64_t* Bf):
    cdef int i, j
    for i in range(3):
        row = B[i]
        for j in range(6):
            Bf[6 * i + j] = row[j]


cdef cnp.ndarray _invtab(int p):
    cdef cnp.ndarray[int64_t, ndim=1] tab = np.zeros(p, dtype=np.int64)
    cdef int a
    for a in range(1, p):
        tab[a] = _inv_mod(a, p)
    return tab


def net_canonical(B, mats, p):
    cdef cnp.ndarray[uint8_t, ndim=2] M = np.ascontiguousarray(mats, dtype=np.uint8)
    cdef long n = M.shape[0]
    cdef int pp = p
    cdef int64_t Bf[18]
    _load_b(B, Bf)
    cdef cnp.ndarray[int64_t, ndim=1] tab = _invtab(pp)
    cdef const int64_t* invtab = <const int64_t*> tab.data
    cdef int64_t ind[36]
    cdef long best = -1, best_i = -1, code, i
    with nogil:
        for i in range(n):
            _induced2(<const uint8_t*> (M.data + i * 9), pp, ind)
            code = _apply_rref_encode(Bf, ind, pp, invtab)
            if best < 0 or code < best:
                best = code
                best_i = i
    return best, best_i


def net_orbit_find(B, target_code, mats, p):
    cdef cnp.ndarray[uint8_t, ndim=2] M = np.ascontiguousarray(mats, dtype=np.uint8)
    cdef long n = M.shape[0]
    cdef int pp = p
    cdef int64_t Bf[18]
    _load_b(B, Bf)
    cdef cnp.ndarray[int64_t, ndim=1] tab = _invtab(pp)
    cdef const int64_t* invtab = <const int64_t*> tab.data
    cdef int64_t ind[36]
    cdef long target = target_code
    cdef long i, found = -1
    with nogil:
        for i in range(n):
            _induced2(<const uint8_t*> (M.data + i * 9), pp, ind)
            if _apply_rref_encode(Bf, ind, pp, invtab) == target:
                found = i
                break
    return found


def subspace_filter(mats, cands, basis, target, p, d, parents, varids, shifts):
    """Indices i in cands with rref(g_i . basis) == target.

    basis and target are (k, m_d) integer matrices (target in RREF);
    parents/varids give, per degree e = 2..d, the degree-(e-1) monomial
    and the variable whose product is monomial j of degree e; shifts[e]
    maps (variable, degree-e monomial) -> index of the product monomial.
    Everything follows the package's lex monomial order.
    """
    cdef cnp.ndarray[uint8_t, ndim=2] M = np.ascontiguousarray(mats, dtype=np.uint8)
    cdef cnp.ndarray[int64_t, ndim=1] C = np.ascontiguousarray(cands, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=2] Bm = np.ascontiguousarray(basis, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=2] T = np.ascontiguousarray(target, dtype=np.int64)
    cdef int pp = p, dd = d
    cdef int k = Bm.shape[0]
    cdef int md = Bm.shape[1]
    cdef long ncand = C.shape[0]
    # flatten the per-degree tables
    cdef cnp.ndarray[int64_t, ndim=2] par = np.ascontiguousarray(parents, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=2] var = np.ascontiguousarray(varids, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=3] sh = np.ascontiguousarray(shifts, dtype=np.int64)
    # par[e], var[e] indexed by degree e (2..d) and monomial; sh[e][v][i]
    cdef int64_t img_prev[28][28]
    cdef int64_t img_cur[28][28]
    cdef int64_t W[28 * 28]
    cdef cnp.ndarray[int64_t, ndim=1] tab = _invtab(pp)
    cdef const int64_t* invtab = <const int64_t*> tab.data
    cdef int dims[9]
    cdef int e, i, j, v, r, c, pr, pidx
    for e in range(dd + 1):
        dims[e] = (e + 2) * (e + 1) // 2
    out = []
    cdef long ci, gi
    cdef const uint8_t* g
    cdef int64_t acc, f, inv
    cdef int me, mprev, ok
    for ci in range(ncand):
        gi = C[ci]
        g = <const uint8_t*> (M.data + gi * 9)
        # degree-1 images are the rows of g
        for i in range(3):
            for j in range(3):
                img_prev[i][j] = g[3 * i + j]
        mprev = 3
        for e in range(2, dd + 1):
            me = dims[e]
            for i in range(me):
                for j in range(me):
                    img_cur[i][j] = 0
            for i in range(me):
                pidx = par[e, i]
                v = var[e, i]
                for j in range(mprev):
                    if img_prev[pidx][j] != 0:
                        for c in range(3):
                            if g[3 * v + c] != 0:
                                img_cur[i][sh[e - 1, c, j]] = (
                                    img_cur[i][sh[e - 1, c, j]]
                                    + img_prev[pidx][j] * g[3 * v + c]
                                ) % pp
            for i in range(me):
                for j in range(me):
                    img_prev[i][j] = img_cur[i][j]
            mprev = me
        # transform the basis rows
        for i in range(k):
            for j in range(md):
                acc = 0
                for c in range(md):
                    if Bm[i, c] != 0:
                        acc += Bm[i, c] * img_prev[c][j]
                W[i * md + j] = acc % pp
        # rref in place
        r = 0
        for c in range(md):
            if r == k:
                break
            pr = -1
            for i in range(r, k):
                if W[i * md + c] != 0:
                    pr = i
                    break
            if pr < 0:
                continue
            if pr != r:
                for j in range(md):
                    f = W[r * md + j]; W[r * md + j] = W[pr * md + j]; W[pr * md + j] = f
            inv = invtab[W[r * md + c]]
            for j in range(md):
                W[r * md + j] = (W[r * md + j] * inv) % pp
            for i in range(k):
                if i != r and W[i * md + c] != 0:
                    f = W[i * md + c]
                    for j in range(md):
                        W[i * md + j] = (W[i * md + j] - f * W[r * md + j]) % pp
                        if W[i * md + j] < 0:
                            W[i * md + j] += pp
            r += 1
        ok = 1
        for i in range(k):
            for j in range(md):
                if W[i * md + j] != T[i, j]:
                    ok = 0
                    break
            if ok == 0:
                break
        if ok:
            out.append(int(gi))
    return out


def net_orbit_codes(B, mats, p):
    """Encoding of rref(g.B) for every g, in enumeration order."""
    cdef cnp.ndarray[uint8_t, ndim=2] M = np.ascontiguousarray(mats, dtype=np.uint8)
    cdef long n = M.shape[0]
    cdef int pp = p
    cdef int64_t Bf[18]
    _load_b(B, Bf)
    cdef cnp.ndarray[int64_t, ndim=1] tab = _invtab(pp)
    cdef const int64_t* invtab = <const int64_t*> tab.data
    cdef cnp.ndarray[int64_t, ndim=1] out = np.empty(n, dtype=np.int64)
    cdef int64_t ind[36]
    cdef long i
    with nogil:
        for i in range(n):
            _induced2(<const uint8_t*> (M.data + i * 9), pp, ind)
            out[i] = _apply_rref_encode(Bf, ind, pp, invtab)
    return out


def net_orbit_find_all(B, target_code, mats, p, limit=0):
    cdef cnp.ndarray[uint8_t, ndim=2] M = np.ascontiguousarray(mats, dtype=np.uint8)
    cdef long n = M.shape[0]
    cdef int pp = p
    cdef int64_t Bf[18]
    _load_b(B, Bf)
    cdef cnp.ndarray[int64_t, ndim=1] tab = _invtab(pp)
    cdef const int64_t* invtab = <const int64_t*> tab.data
    cdef int64_t ind[36]
    cdef long target = target_code
    cdef long i
    cdef int lim = limit
    out = []
    for i in range(n):
        _induced2(<const uint8_t*> (M.data + i * 9), pp, ind)
        if _apply_rref_encode(Bf, ind, pp, invtab) == target:
            out.append(i)
            if lim and len(out) >= lim:
                break
    return out
