"""The auxiliary two-colored complex of a labeled core multigraph.

For a core graph with N vertices and k ordered edges, the complex has basis
the edge 2-colorings (solid/dashed) whose solid subgraph connects all N
vertices; the coloring with solid set S sits in degree -|S|, and the
differential turns one solid edge dashed (degree +1), dropping colorings
whose solid subgraph disconnects.  Its cohomology is concentrated in the top
degree 1-N.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .linalg import SparseIntMatrix, rank_exact


@dataclass(frozen=True)
class CoreGraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for (u, v) in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError("edge out of range")


def _solid_connected(core: CoreGraph, solid: frozenset[int]) -> bool:
    if core.n <= 1:
        return True
    parent = list(range(core.n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for t in solid:
        (u, v) = core.edges[t]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return len({find(i) for i in range(core.n)}) == 1


def build_cgamma(core: CoreGraph) -> dict[int, list[frozenset[int]]]:
    """Bases per degree: degree -> list of solid edge-index sets, sorted."""
    out: dict[int, list[frozenset[int]]] = {}
    k = len(core.edges)
    for size in range(k + 1):
        for combo in itertools.combinations(range(k), size):
            solid = frozenset(combo)
            if _solid_connected(core, solid):
                out.setdefault(-size, []).append(solid)
    return {d: sorted(v, key=sorted) for d, v in sorted(out.items())}


def cgamma_matrix(core: CoreGraph, bases: dict[int, list[frozenset[int]]],
                  degree: int) -> SparseIntMatrix:
    """Differential from degree to degree+1 (solid -> dashed on one edge).

    The sign of removing solid edge t from S is (-1)^(number of solid edges
    before t in the edge order): the solid tensor factors are the odd ones.
    """
    src = bases.get(degree, [])
    tgt = bases.get(degree + 1, [])
    index = {s: i for i, s in enumerate(tgt)}
    entries = []
    for col, solid in enumerate(src):
        ordered = sorted(solid)
        for pos, t in enumerate(ordered):
            smaller = frozenset(solid - {t})
            row = index.get(smaller)
            if row is None:
                continue  # solid subgraph disconnected: zero in the quotient
            entries.append((row, col, (-1) ** pos))
    return SparseIntMatrix(rows=len(tgt), cols=len(src), entries=entries)


def cgamma_homology_dims(core: CoreGraph, seed: int = 0) -> dict[int, int]:
    """Cohomology dimensions of the complex, by exact ranks."""
    bases = build_cgamma(core)
    degrees = sorted(bases)
    ranks: dict[int, int] = {}
    for d in degrees:
        mat = cgamma_matrix(core, bases, d)
        ranks[d] = rank_exact(mat, seed=seed).rank
    out = {}
    for d in degrees:
        out[d] = len(bases[d]) - ranks.get(d, 0) - ranks.get(d - 1, 0)
    return out
