"""Expansion of stable two-colored graphs into decorated invariant vectors.

A stable graph at genus g stands for the invariant tensor obtained by
replacing every dashed edge with a copy of the reduced diagonal
Delta_1 = sum g_ij c_i (x) c_j, inserting the two letters at the edge's
endpoints.  `expand_stable` realizes this for M = 0: the result is a formal
sum of canonical decorated CE classes.  The decorated orientation is laid out
as [cross marks in cross order][letter pairs in sorted dashed-edge order]
[omegas]; solid edges keep their order.

The tests use this map to pin the stable differential: expanding must
intertwine `stable_differential` with the decorated CE differential.
"""

from __future__ import annotations

import itertools

from .differential import delta1_terms
from .enumeration import ComplexSpec
from .graphs import CROSS, OMEGA, DecoratedGraph, canonical_form
from .stable import L, TwoColoredGraph, V, X

FormalSum = dict[str, int]


def expand_stable(graph: TwoColoredGraph, g: int, parity: int) -> FormalSum:
    """Formal sum of decorated CE classes represented by a stable graph.

    Only M = 0 graphs are supported (legs would need external tensor factors).
    """
    if graph.legs:
        raise ValueError("expansion implemented for M = 0 only")
    n, c = graph.n, graph.ncross
    terms = delta1_terms(g, parity)

    def vert(end) -> int:
        if end[0] == V:
            return end[1]
        return n + end[1]  # crossed vertices appended after the normal ones

    out: FormalSum = {}
    for assignment in itertools.product(terms, repeat=len(graph.dashed)):
        coeff = 1
        decs: list[tuple[int, int]] = [(n + j, CROSS) for j in range(c)]
        for (pair, (ci, cj, gij)) in zip(graph.dashed, assignment):
            coeff *= gij
            decs.append((vert(pair[0]), ci))
            decs.append((vert(pair[1]), cj))
        for w in graph.omegas:
            decs.append((w, OMEGA))
        dg = DecoratedGraph(
            n=n + c,
            edges=graph.solid,
            decorations=tuple(decs),
            crossed=frozenset(range(n, n + c)),
        )
        cf = canonical_form(dg, parity)
        if cf.sign == 0:
            continue
        enc = cf.encoding
        out[enc] = out.get(enc, 0) + coeff * cf.sign
    return {k: v for k, v in out.items() if v}
