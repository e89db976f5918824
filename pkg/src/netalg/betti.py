"""Graded Betti tables via Koszul homology, the named reference tables,
and consecutive-cancellation reachability.

beta_{i,d} is computed as dim H_i of the strand

    A_{d-3} -> A_{d-2}^3 -> A_{d-1}^3 -> A_d

of the Koszul complex on (x, y, z) tensored with A = R/I.  Everything is
finite exact linear algebra because A is Artinian.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from .field import Matrix, Subspace, rref
from .ideals import (
    GradedIdeal,
    NotArtinian,
    QuotientBasis,
    hilbert_function,
    lex_ideal,
    multiplication_matrix,
)
from .ring import dim_R


class BettiTable:
    """Map (i, d) -> beta_{i,d}, i in 0..3; printed in table layout with
    row r holding beta_{i, i+r}."""

    __slots__ = ("entries",)

    def __init__(self, entries: Dict[Tuple[int, int], int]):
        self.entries = {k: v for k, v in entries.items() if v}

    def get(self, i: int, d: int) -> int:
        return self.entries.get((i, d), 0)

    def totals(self) -> List[int]:
        out = [0, 0, 0, 0]
        for (i, _), v in self.entries.items():
            out[i] += v
        return out

    def max_row(self) -> int:
        return max((d - i for (i, d) in self.entries), default=0)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    def __repr__(self):
        return f"BettiTable({self.totals()})"

    def to_grid(self) -> str:
        cols = 4
        rows = self.max_row()
        lines = []
        tot = self.totals()
        lines.append("total  " + "  ".join(f"{t:>3}" for t in tot))
        lines.append("-" * (7 + 5 * cols))
        for r in range(rows + 1):
            cells = []
            for i in range(cols):
                v = self.get(i, i + r)
                cells.append(f"{v:>3}" if v else "  .")
            lines.append(f"{r:>5}  " + "  ".join(cells))
        return "\n".join(lines)

    def to_json_obj(self) -> dict:
        return {
            "beta": sorted([i, d, v] for (i, d), v in self.entries.items()),
            "totals": self.totals(),
        }

    @staticmethod
    def from_json_obj(obj: dict) -> "BettiTable":
        return BettiTable({(i, d): v for i, d, v in obj["beta"]})

    def alternating_sums(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for (i, d), v in self.entries.items():
            out[d] = out.get(d, 0) + (-1) ** i * v
        return {d: v for d, v in out.items() if v}


def _rank(M: Matrix) -> int:
    return rref(M)[2]


def betti_table(I: GradedIdeal, socle_bound: int) -> BettiTable:
    """Betti numbers of A = R/I, computed strand by strand.

    Needs I Artinian by socle_bound and computed out to socle_bound + 3.
    """
    j = socle_bound
    if I.bound < j + 3:
        raise NotArtinian(f"need bound {j + 3}, ideal computed to {I.bound}")
    if not I.is_artinian_by(j):
        raise NotArtinian(f"quotient not artinian by degree {j}")
    F = I.field
    adim = [QuotientBasis(I, d).dim if 0 <= d <= j else 0 for d in range(j + 4)]

    def a(d: int) -> int:
        return adim[d] if 0 <= d <= j else 0

    mult = {}
    for d in range(j + 1):
        for v in range(3):
            mult[(d, v)] = multiplication_matrix(I, d, v)

    def block(d: int, v: int) -> Optional[Matrix]:
        if 0 <= d <= j:
            return mult[(d, v)]
        return None

    out: Dict[Tuple[int, int], int] = {}
    for d in range(j + 4):
        # d1: A_{d-1}^3 -> A_d, (u0,u1,u2) |-> sum x_v u_v
        # d2: A_{d-2}^3 -> A_{d-1}^3 over wedge pairs (01, 02, 12)
        # d3: A_{d-3} -> A_{d-2}^3
        n0, n1, n2, n3 = a(d), a(d - 1), a(d - 2), a(d - 3)
        d1 = _stack_vertical(
            [block(d - 1, v) for v in range(3)], n1 * 3, n0, F
        )
        pairs = [(0, 1), (0, 2), (1, 2)]
        d2_rows: List[List] = []
        for (p, q) in pairs:
            # e_p ^ e_q |-> x_p e_q - x_q e_p
            for r_idx in range(n2):
                row = [F.zero] * (3 * n1)
                if n1:
                    bp = block(d - 2, p)
                    bq = block(d - 2, q)
                    if bp is not None:
                        for c_idx, val in enumerate(bp.entries[r_idx]):
                            row[q * n1 + c_idx] = val
                    if bq is not None:
                        for c_idx, val in enumerate(bq.entries[r_idx]):
                            row[p * n1 + c_idx] = F.sub(row[p * n1 + c_idx], val)
                d2_rows.append(row)
        d2 = Matrix(d2_rows, F, cols=3 * n1)
        d3_rows: List[List] = []
        signs = {(1, 2): 0, (0, 2): 1, (0, 1): 2}
        for r_idx in range(n3):
            row = [F.zero] * (3 * n2)
            # e1^e2^e3 |-> x0 (e2^e3) - x1 (e1^e3) + x2 (e1^e2)
            b0 = block(d - 3, 0)
            b1 = block(d - 3, 1)
            b2 = block(d - 3, 2)
            if n2:
                if b0 is not None:
                    for c_idx, val in enumerate(b0.entries[r_idx]):
                        row[2 * n2 + c_idx] = val  # pair (1,2)
                if b1 is not None:
                    for c_idx, val in enumerate(b1.entries[r_idx]):
                        row[1 * n2 + c_idx] = F.sub(row[1 * n2 + c_idx], val)  # pair (0,2)
                if b2 is not None:
                    for c_idx, val in enumerate(b2.entries[r_idx]):
                        row[0 * n2 + c_idx] = F.add(row[0 * n2 + c_idx], val)  # pair (0,1)
            d3_rows.append(row)
        d3 = Matrix(d3_rows, F, cols=3 * n2)

        r1 = _rank(d1) if n1 and n0 else 0
        r2 = _rank(d2) if n2 and n1 else 0
        r3 = _rank(d3) if n3 and n2 else 0
        h0 = n0 - r1
        h1 = (3 * n1 - r1) - r2 if n1 else 0
        h2 = (3 * n2 - r2) - r3 if n2 else 0
        h3 = n3 - r3 if n3 else 0
        for i, h in enumerate((h0, h1, h2, h3)):
            if h:
                out[(i, d)] = h
    return BettiTable(out)


def _stack_vertical(blocks: Sequence[Optional[Matrix]], rows: int, cols: int, F) -> Matrix:
    ent: List[List] = []
    for b in blocks:
        if b is not None:
            ent.extend(b.entries)
    if not ent:
        return Matrix([], F, cols=cols)
    return Matrix(ent, F, cols=cols)


# ---------------------------------------------------------------------------
# named reference tables
# ---------------------------------------------------------------------------

_BASE_TABLES: Dict[str, Dict[Tuple[int, int], int]] = {
    "CI": {(0, 0): 1, (1, 2): 3, (2, 4): 3, (3, 6): 1},
    "SL1": {(0, 0): 1, (1, 2): 3, (2, 4): 4, (3, 5): 2, (1, 4): 1, (2, 5): 2, (3, 6): 1},
    "A": {(0, 0): 1, (1, 2): 3, (2, 3): 1, (1, 3): 1, (2, 4): 3, (3, 5): 1, (2, 5): 1, (3, 6): 1},
    "B": {(0, 0): 1, (1, 2): 3, (2, 3): 1, (1, 3): 1, (2, 4): 4, (3, 5): 2, (1, 4): 1, (2, 5): 2, (3, 6): 1},
    "C": {(0, 0): 1, (1, 2): 3, (2, 3): 2, (1, 3): 2, (2, 4): 3, (3, 6): 1},
    "D": {(0, 0): 1, (1, 2): 3, (2, 3): 2, (1, 3): 2, (2, 4): 3, (3, 5): 1, (2, 5): 1, (3, 6): 1},
    "E": {(0, 0): 1, (1, 2): 3, (2, 3): 2, (1, 3): 2, (2, 4): 4, (3, 5): 2, (1, 4): 1, (2, 5): 2, (3, 6): 1},
    "G": {(0, 0): 1, (1, 2): 3, (2, 3): 3, (3, 4): 1, (1, 3): 3, (2, 4): 4, (3, 5): 1, (2, 5): 1, (3, 6): 1},
    "H": {(0, 0): 1, (1, 2): 3, (2, 3): 3, (3, 4): 1, (1, 3): 3, (2, 4): 5, (3, 5): 2, (1, 4): 1, (2, 5): 2, (3, 6): 1},
    "J4": {(0, 0): 1, (1, 2): 3, (2, 3): 3, (3, 4): 1, (1, 3): 1, (2, 4): 1,
           (1, 4): 2, (2, 5): 3, (3, 6): 1, (2, 6): 1, (3, 7): 1},
    "K4": {(0, 0): 1, (1, 2): 3, (2, 3): 3, (3, 4): 1, (1, 3): 1, (2, 4): 1,
           (1, 4): 2, (2, 5): 4, (3, 6): 2, (1, 5): 1, (2, 6): 2, (3, 7): 1},
}

# Socle-degree-shifted families: base table, base socle degree, rows that
# slide to {j-1, j} while lower rows stay put.
_SHIFTED = {"C": 3, "D": 3, "E": 3, "J": 4, "K": 4}


def named_table(name: str, j: Optional[int] = None) -> BettiTable:
    """A reference table by name: CI, SL1, A..E, G, H, J4, K4, or a
    shifted C_j / D_j / E_j / J_j / K_j via the j argument."""
    base_name = name
    if name in ("J", "K") and j == 4:
        base_name = name + "4"
    if base_name in _BASE_TABLES and (j is None or base_name not in _SHIFTED):
        return BettiTable(dict(_BASE_TABLES[base_name]))
    fam = name.rstrip("0123456789")
    if fam not in _SHIFTED:
        raise KeyError(f"unknown table {name!r}")
    if j is None:
        j = int(name[len(fam):])
    base_j = _SHIFTED[fam]
    assert j >= base_j, f"socle degree {j} below the base table's {base_j}"
    base = _BASE_TABLES[fam + ("4" if fam in ("J", "K") else "")]
    moved: Dict[Tuple[int, int], int] = {}
    for (i, d), v in base.items():
        r = d - i
        if r >= base_j - 1:
            r = r - base_j + j
        moved[(i, i + r)] = moved.get((i, i + r), 0) + v
    return BettiTable(moved)


# ---------------------------------------------------------------------------
# consecutive cancellation
# ---------------------------------------------------------------------------


class HilbertMismatch(Exception):
    pass


def cancellation_steps(frm: BettiTable, to: BettiTable) -> Optional[List[Tuple[int, int]]]:
    """Steps (i, d) with beta_{i,d} and beta_{i+1,d} each dropping by one,
    taking `frm` to `to`; None when no nonnegative solution exists.

    Per internal degree the drop counts satisfy diff_i = c_i + c_{i-1},
    so the forward recurrence determines the unique candidate.
    """
    if frm.alternating_sums() != to.alternating_sums():
        raise HilbertMismatch("tables encode different Hilbert functions")
    degrees = {d for (_, d) in frm.entries} | {d for (_, d) in to.entries}
    steps: List[Tuple[int, int]] = []
    for d in sorted(degrees):
        c_prev = 0
        for i in range(4):
            diff = frm.get(i, d) - to.get(i, d)
            c = diff - c_prev
            if c < 0:
                return None
            steps.extend([(i, d)] * c)
            c_prev = c
        if c_prev != 0:
            return None
    # validity: every step removes from strictly positive entries
    work = dict(frm.entries)
    for (i, d) in steps:
        if work.get((i, d), 0) < 1 or work.get((i + 1, d), 0) < 1:
            return None
        work[(i, d)] -= 1
        work[(i + 1, d)] -= 1
    return steps


def lex_betti(T: Sequence[int], field) -> BettiTable:
    """Betti table of the lex ideal with Hilbert function T."""
    j = len(T) - 1
    L = lex_ideal(T, field, bound=j + 4)
    return betti_table(L, j)


def hilbert_consistency(table: BettiTable, H: Sequence[int]) -> bool:
    """Alternating sums match the coefficients of H(t) * (1-t)^3."""
    coeffs: Dict[int, int] = {}
    for d, h in enumerate(H):
        for k, b in ((0, 1), (1, -3), (2, 3), (3, -1)):
            coeffs[d + k] = coeffs.get(d + k, 0) + h * b
    coeffs = {d: v for d, v in coeffs.items() if v}
    return coeffs == table.alternating_sums()
