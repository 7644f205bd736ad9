"""Exact ranks of sparse integer matrices and homology dimension reports.

Rank strategy: sparse Gaussian elimination over F_p for two random 31-bit
primes (escalating on disagreement), with a fraction-free Bareiss pass on
small matrices acting as certification and as the oracle in the tests.  No
Smith normal form: the complexes live over Q, so ranks suffice.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

# 31-bit primes (just below 2^31), fixed published list for reproducibility
PRIMES_31 = [
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563,
    2147483549, 2147483543, 2147483497, 2147483489, 2147483477,
    2147483423, 2147483399, 2147483353, 2147483323, 2147483269,
    2147483249, 2147483237, 2147483179, 2147483171, 2147483137,
    2147483123, 2147483077, 2147483069, 2147483059, 2147483053,
    2147483033, 2147483029, 2147482951, 2147482949, 2147482943,
    2147482937, 2147482921, 2147482877, 2147482873, 2147482867,
    2147482859, 2147482819, 2147482817, 2147482811, 2147482801,
]


@dataclass
class SparseIntMatrix:
    """Sparse integer matrix given by deduplicated (row, col, value) entries."""

    rows: int
    cols: int
    entries: list[tuple[int, int, int]] = field(default_factory=list)

    def __post_init__(self):
        seen: dict[tuple[int, int], int] = {}
        for (r, c, v) in self.entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"entry ({r},{c}) out of range")
            seen[(r, c)] = seen.get((r, c), 0) + v
        self.entries = [(r, c, v) for (r, c), v in sorted(seen.items()) if v]

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def transpose(self) -> "SparseIntMatrix":
        return SparseIntMatrix(
            rows=self.cols,
            cols=self.rows,
            entries=[(c, r, v) for (r, c, v) in self.entries],
        )

    def columns(self) -> list[dict[int, int]]:
        cols: list[dict[int, int]] = [dict() for _ in range(self.cols)]
        for (r, c, v) in self.entries:
            cols[c][r] = v
        return cols

    def to_dense(self) -> list[list[int]]:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for (r, c, v) in self.entries:
            dense[r][c] = v
        return dense

    def to_json(self) -> dict:
        return {
            "schema": "gchom-matrix@1",
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[r, c, v] for (r, c, v) in self.entries],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "SparseIntMatrix":
        return cls(
            rows=doc["rows"],
            cols=doc["cols"],
            entries=[tuple(e) for e in doc["entries"]],
        )


def sparse_product_is_zero(a: SparseIntMatrix, b: SparseIntMatrix) -> bool:
    """True iff the integer product a @ b vanishes (exact arithmetic)."""
    if a.cols != b.rows:
        raise ValueError("shape mismatch")
    rows_of_a: dict[int, list[tuple[int, int]]] = {}
    for (r, c, v) in a.entries:
        rows_of_a.setdefault(c, []).append((r, v))
    acc: dict[tuple[int, int], int] = {}
    for (k, c, v) in b.entries:
        for (r, w) in rows_of_a.get(k, ()):  # contribution a[r,k] * b[k,c]
            key = (r, c)
            acc[key] = acc.get(key, 0) + w * v
    return all(val == 0 for val in acc.values())


def rank_modp(matrix: SparseIntMatrix, p: int) -> int:
    """Rank over F_p by sparse elimination, lightest-column-first pivoting."""
    if p <= 2**30:
        raise ValueError("prime must exceed 2^30")
    cols = []
    for col in matrix.columns():
        reduced = {r: v % p for r, v in col.items() if v % p}
        if reduced:
            cols.append(reduced)
    rank = 0
    pivot_of_row: dict[int, dict[int, int]] = {}
    # order columns light-to-heavy to limit fill-in
    cols.sort(key=len)
    for col in cols:
        col = dict(col)
        while True:
            hit = None
            for r in col:
                if r in pivot_of_row:
                    hit = r
                    break
            if hit is None:
                break
            piv = pivot_of_row[hit]
            factor = (col[hit] * pow(piv[hit], -1, p)) % p
            for r, v in piv.items():
                nv = (col.get(r, 0) - factor * v) % p
                if nv:
                    col[r] = nv
                elif r in col:
                    del col[r]
        if col:
            # normalize a pivot row: pick the entry with fewest... pick min row
            r0 = min(col, key=lambda r: (len(col), r))
            pivot_of_row[r0] = col
            rank += 1
    return rank


def rank_dense_modp(dense: np.ndarray, p: int) -> int:
    """Dense mod-p elimination on int64; products stay below 2^62."""
    a = np.array(dense, dtype=np.int64) % p
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        piv = None
        for r in range(rank, rows):
            if a[r, c] % p:
                piv = r
                break
        if piv is None:
            continue
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, c]), -1, p)
        a[rank] = (a[rank] * inv) % p
        col_vals = a[rank + 1 :, c].copy()
        nz = col_vals != 0
        if nz.any():
            a[rank + 1 :][nz] = (a[rank + 1 :][nz] - np.outer(col_vals[nz], a[rank])) % p
        rank += 1
        if rank == rows:
            break
    return rank


def rank_bareiss(matrix: SparseIntMatrix) -> int:
    """Fraction-free Bareiss elimination over Z; exact, small matrices only."""
    a = [row[:] for row in matrix.to_dense()]
    rows, cols = matrix.rows, matrix.cols
    rank = 0
    prev = 1
    for c in range(cols):
        piv = None
        for r in range(rank, rows):
            if a[r][c]:
                piv = r
                break
        if piv is None:
            continue
        if piv != rank:
            a[rank], a[piv] = a[piv], a[rank]
        for r in range(rank + 1, rows):
            for cc in range(cols - 1, c - 1, -1):
                a[r][cc] = (a[r][cc] * a[rank][c] - a[r][c] * a[rank][cc]) // prev
        prev = a[rank][c]
        rank += 1
        if rank == rows:
            break
    return rank


@dataclass(frozen=True)
class RankResult:
    rank: int
    method: str  # FRACTION_FREE | MODULAR_CONSENSUS
    primes_used: tuple[int, ...]
    certified: bool


class RankConsensusError(RuntimeError):
    pass


BAREISS_MAX_NNZ = 2000
BAREISS_MAX_DIM = 400


def rank_exact(matrix: SparseIntMatrix, seed: int = 0) -> RankResult:
    """Rank over Q: two-prime consensus, fraction-free certification when small."""
    if matrix.rows == 0 or matrix.cols == 0 or matrix.nnz == 0:
        return RankResult(rank=0, method="FRACTION_FREE", primes_used=(), certified=True)
    small = matrix.nnz <= BAREISS_MAX_NNZ and min(matrix.rows, matrix.cols) <= BAREISS_MAX_DIM
    rng = random.Random(seed)
    pool = PRIMES_31[:]
    rng.shuffle(pool)
    ranks: dict[int, int] = {}
    for p in pool[:2]:
        ranks[p] = rank_modp(matrix, p)
    attempts = 2
    while len(set(ranks.values())) > 1:
        # a prime divided a pivot minor; escalate until two agree on the max
        best = max(ranks.values())
        agreeing = [p for p, r in ranks.items() if r == best]
        if len(agreeing) >= 2:
            ranks = {p: ranks[p] for p in agreeing}
            break
        if attempts >= len(pool):
            raise RankConsensusError("prime pool exhausted without consensus")
        p = pool[attempts]
        attempts += 1
        ranks[p] = rank_modp(matrix, p)
    modular_rank = max(ranks.values())
    if small:
        # fraction-free certification; the modular value can only undershoot
        ff = rank_bareiss(matrix)
        return RankResult(
            rank=ff, method="FRACTION_FREE",
            primes_used=tuple(sorted(ranks)), certified=True,
        )
    return RankResult(
        rank=modular_rank, method="MODULAR_CONSENSUS",
        primes_used=tuple(sorted(p for p, r in ranks.items() if r == modular_rank)),
        certified=False,
    )


# ---------------------------------------------------------------------------
# Homology dimension reports
# ---------------------------------------------------------------------------


@dataclass
class DimReport:
    """Per-stratum dimensions and homology of one weight-graded complex.

    ``ranks[E]`` is the rank of the differential block C_E -> C_{E-1}; the
    homology dimension at E is dim C_E - rank d_E - rank d_{E+1}.  The GC-side
    (dual Lie algebra) cohomology has the same numbers in dual degrees.
    """

    spec_doc: dict
    dims: dict[int, int]
    ranks: dict[int, int]
    rank_results: dict[int, RankResult] = field(default_factory=dict)

    def homology(self) -> dict[int, int]:
        out = {}
        for E, d in self.dims.items():
            out[E] = d - self.ranks.get(E, 0) - self.ranks.get(E + 1, 0)
        return out

    def euler_dims(self) -> int:
        return sum((-1 if E % 2 else 1) * d for E, d in self.dims.items())

    def euler_homology(self) -> int:
        return sum((-1 if E % 2 else 1) * h for E, h in self.homology().items())

    def check_euler(self) -> bool:
        return self.euler_dims() == self.euler_homology()

    def chain_degrees(self, m: int) -> dict[int, int]:
        """Homology dims keyed by chain-side cohomological degree mW - E."""
        W = self.spec_doc["W"]
        return {m * W - E: h for E, h in self.homology().items() if h}

    def gc_degrees(self, m: int) -> dict[int, int]:
        """Homology dims keyed by dual (Lie-algebra side) degree 1 - mW + E."""
        W = self.spec_doc["W"]
        return {1 - m * W + E: h for E, h in self.homology().items() if h}

    def to_json(self) -> dict:
        return {
            "schema": "gchom-dimreport@1",
            "spec": self.spec_doc,
            "dims": {str(E): d for E, d in sorted(self.dims.items())},
            "ranks": {str(E): r for E, r in sorted(self.ranks.items())},
            "homology": {str(E): h for E, h in sorted(self.homology().items())},
            "primes": {
                str(E): list(rr.primes_used) for E, rr in sorted(self.rank_results.items())
            },
        }
