"""Chain-side differentials and sparse matrix assembly.

Every piece lowers the E-number by exactly one and preserves the weight.  The
sign convention (validated by the exhaustive d^2 = 0 suite): the orientation
word of a graph is [ordered edges][ordered decorations] (stable graphs:
[ordered solid edges][ordered cross marks]); a differential term Koszul-moves
the consumed items to the front of the word, applies its local rule with sign
+, and Koszul-moves the produced decoration block from the front past the
remaining edges to the head of the decoration region.  The effective edge
contraction piece is d_c = d_mul' - d_c', which on at-least-trivalent graphs
is minus the plain contraction sum.

The cut piece inserts the diagonal of H(W_g),

    Delta = 1 (x) omega + omega (x) 1 + Delta_1,
    Delta_1 = (-1)^m sum_i (a_i (x) b_i + (-1)^m b_i (x) a_i),

with terms leaving the variant's complex (omega in gc1/gc1tp, vertices of
valence < 3, disconnected graphs on the connected side) dropped per the
quotient rules.
"""

from __future__ import annotations

from .enumeration import ChainBasis, ComplexSpec, StableSpec
from .graphs import (
    CROSS,
    OMEGA,
    DecoratedGraph,
    canonical_form,
    decode,
    grading_of,
    is_admissible,
    koszul_sign_of_reordering,
    letter_parity,
)
from .linalg import SparseIntMatrix
from .stable import (
    L,
    TwoColoredGraph,
    V,
    X,
    canonical_form_stable,
    decode_stable,
    norm_pair,
    stable_admissible,
)

FormalSum = dict[str, int]

# Piece-global signs resolving the paper's "±" placeholders; the unique choice
# (up to simultaneous flips that rescale basis vectors) making d^2 = 0 hold,
# pinned by the exhaustive suite in tests/test_differential.py.
SIGN_MUL = 1
SIGN_CROSS_DETACH = 1   # rule (a)
SIGN_CROSS_OMEGA = -1   # rule (b)
SIGN_CROSS_PAIR = 1     # rule (c)


def pairing(x: int, y: int, g: int, parity: int) -> int:
    """Poincare pairing of two degree-m letters: <a_i, b_j> = delta_ij."""
    if 0 <= x < g and y == x + g:
        return 1
    if 0 <= y < g and x == y + g:
        return -1 if parity else 1
    return 0


def delta1_terms(g: int, parity: int) -> list[tuple[int, int, int]]:
    """Summands (c_i, c_j, g_ij) of the reduced diagonal Delta_1."""
    sign_m = -1 if parity else 1
    out = []
    for k in range(g):
        out.append((k, k + g, sign_m))
        out.append((k + g, k, 1))
    return out


def _front_extraction_sign(parities: list[int], picks: list[int]) -> int:
    """Koszul sign of moving the picked items (in pick order) to the front."""
    target = [0] * len(parities)
    rank_of = {p: i for i, p in enumerate(picks)}
    nxt = len(picks)
    for i in range(len(parities)):
        if i in rank_of:
            target[i] = rank_of[i]
        else:
            target[i] = nxt
            nxt += 1
    return koszul_sign_of_reordering(parities, target)


def _word_parities(graph: DecoratedGraph, parity: int) -> list[int]:
    return [1] * len(graph.edges) + [
        letter_parity(l, parity) for (_v, l) in graph.decorations
    ]


def _reinsertion_sign(block_parity: int, edges_after: int) -> int:
    return -1 if (block_parity & 1) and (edges_after & 1) else 1


def _contract_maps(n: int, u: int, v: int):
    """Vertex relabeling after merging v into u (u < v): returns map function."""

    def vmap(w: int) -> int:
        if w == v:
            return u
        return w - 1 if w > v else w

    return vmap


RawTerm = tuple[DecoratedGraph, int]


def d_contract(graph: DecoratedGraph, parity: int) -> list[RawTerm]:
    """Effective contraction d_c = -sum over non-tadpole edges of Gamma/e."""
    out: list[RawTerm] = []
    parities = _word_parities(graph, parity)
    for t, (u, v) in enumerate(graph.edges):
        if u == v:
            continue
        sign = _front_extraction_sign(parities, [t])
        vmap = _contract_maps(graph.n, u, v)
        edges = tuple(
            tuple(sorted((vmap(a), vmap(b))))
            for s, (a, b) in enumerate(graph.edges)
            if s != t
        )
        decs = tuple((vmap(w), l) for (w, l) in graph.decorations)
        crossed = frozenset(vmap(x) for x in graph.crossed)
        out.append(
            (DecoratedGraph(n=graph.n - 1, edges=edges, decorations=decs, crossed=crossed),
             -sign)
        )
    return out


def d_cut(graph: DecoratedGraph, parity: int, g: int) -> list[RawTerm]:
    """Cut each edge (tadpoles included), inserting the diagonal."""
    out: list[RawTerm] = []
    parities = _word_parities(graph, parity)
    for t, (u, v) in enumerate(graph.edges):
        sign = _front_extraction_sign(parities, [t])
        edges = tuple(e for s, e in enumerate(graph.edges) if s != t)
        rest = graph.decorations
        # Delta_1 terms: even block, no reinsertion sign
        for (ci, cj, gij) in delta1_terms(g, parity):
            decs = ((u, ci), (v, cj)) + rest
            out.append(
                (DecoratedGraph(n=graph.n, edges=edges, decorations=decs,
                                crossed=graph.crossed), gij * sign)
            )
        # omega terms (dropped later by admissibility for gc1/gc1tp)
        for (w, _other) in ((v, u), (u, v)):
            decs = ((w, OMEGA),) + rest
            out.append(
                (DecoratedGraph(n=graph.n, edges=edges, decorations=decs,
                                crossed=graph.crossed), sign)
            )
    return out


def d_mul(graph: DecoratedGraph, parity: int, g: int) -> list[RawTerm]:
    """d_mul'': multiply the two decorations of a univalent vertex to omega."""
    out: list[RawTerm] = []
    parities = _word_parities(graph, parity)
    e = len(graph.edges)
    for v in range(graph.n):
        if v in graph.crossed:
            continue
        if graph.half_edges_at(v) != 1:
            continue
        positions = [s for s, (w, _l) in enumerate(graph.decorations) if w == v]
        if len(positions) != 2:
            continue
        p, q = positions
        x, y = graph.decorations[p][1], graph.decorations[q][1]
        if x < 0 or y < 0:
            continue  # omega * anything of degree >= m vanishes
        coeff = pairing(x, y, g, parity)
        if coeff == 0:
            continue
        t = next(s for s, (a, b) in enumerate(graph.edges) if v in (a, b))
        a, b = graph.edges[t]
        sign = _front_extraction_sign(parities, [t, e + p, e + q])
        u, w = min(a, b), max(a, b)
        vmap = _contract_maps(graph.n, u, w)
        edges = tuple(
            tuple(sorted((vmap(aa), vmap(bb))))
            for s, (aa, bb) in enumerate(graph.edges)
            if s != t
        )
        rest = tuple(
            (vmap(ww), l)
            for s, (ww, l) in enumerate(graph.decorations)
            if s not in (p, q)
        )
        decs = ((vmap(u), OMEGA),) + rest
        crossed = frozenset(vmap(x_) for x_ in graph.crossed)
        out.append(
            (DecoratedGraph(n=graph.n - 1, edges=edges, decorations=decs,
                            crossed=crossed), SIGN_MUL * coeff * sign)
        )
    return out


def d_cross(graph: DecoratedGraph, parity: int, g: int) -> list[RawTerm]:
    """Crossed-vertex terms of the extended variant.

    (a) detach a degree-m decoration to a new crossed vertex; (b) replace an
    omega by sum g_ij (crossed c_i)(c_j at the vertex); (c) on an isolated
    vertex with exactly three letters, the pairing rule producing a single
    crossed vertex.  Outputs that leave the complex are dropped downstream.
    """
    out: list[RawTerm] = []
    parities = _word_parities(graph, parity)
    e = len(graph.edges)
    n = graph.n
    block_ax_parity = 1 + parity  # CROSS + one letter

    for s, (w, x) in enumerate(graph.decorations):
        if w in graph.crossed:
            continue
        if x >= 0:
            # rule (a)
            sign = _front_extraction_sign(parities, [e + s])
            sign *= _reinsertion_sign(block_ax_parity, e)
            rest = tuple(d for i, d in enumerate(graph.decorations) if i != s)
            decs = ((n, CROSS), (n, x)) + rest
            out.append(
                (DecoratedGraph(n=n + 1, edges=graph.edges, decorations=decs,
                                crossed=graph.crossed | {n}),
                 SIGN_CROSS_DETACH * sign)
            )
        elif x == OMEGA:
            # rule (b): block CROSS+c_i+c_j is odd for both parities
            sign = _front_extraction_sign(parities, [e + s])
            sign *= _reinsertion_sign(1, e)
            rest = tuple(d for i, d in enumerate(graph.decorations) if i != s)
            for (ci, cj, gij) in delta1_terms(g, parity):
                decs = ((n, CROSS), (n, ci), (w, cj)) + rest
                out.append(
                    (DecoratedGraph(n=n + 1, edges=graph.edges, decorations=decs,
                                    crossed=graph.crossed | {n}),
                     SIGN_CROSS_OMEGA * gij * sign)
                )

    # rule (c): isolated vertices with exactly three degree-m letters
    for v in range(n):
        if v in graph.crossed or graph.half_edges_at(v) != 0:
            continue
        positions = [s for s, (w, _l) in enumerate(graph.decorations) if w == v]
        if len(positions) != 3:
            continue
        letters = [graph.decorations[s][1] for s in positions]
        if any(l < 0 for l in letters):
            continue
        for (i, j, k) in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
            coeff = pairing(letters[i], letters[j], g, parity)
            if coeff == 0:
                continue
            picks = [e + positions[i], e + positions[j], e + positions[k]]
            sign = _front_extraction_sign(parities, picks)
            sign *= _reinsertion_sign(block_ax_parity, e)
            rest = tuple(
                d for s, d in enumerate(graph.decorations) if s not in positions
            )
            decs = ((v, CROSS), (v, letters[k])) + rest
            out.append(
                (DecoratedGraph(n=n, edges=graph.edges, decorations=decs,
                                crossed=graph.crossed | {v}),
                 SIGN_CROSS_PAIR * coeff * sign)
            )
    return out


def differential_raw(graph: DecoratedGraph, spec: ComplexSpec) -> list[RawTerm]:
    terms = d_contract(graph, spec.parity)
    terms += d_cut(graph, spec.parity, spec.g)
    if spec.variant == "gcex":
        terms += d_mul(graph, spec.parity, spec.g)
        terms += d_cross(graph, spec.parity, spec.g)
    return terms


def differential(graph: DecoratedGraph, spec: ComplexSpec,
                 keep=None) -> FormalSum:
    """Total differential of a graph, expanded over canonical classes.

    ``keep`` overrides the admissibility filter (used for the tadpole-ideal
    complex, whose differential projects back onto tadpole graphs).
    """
    if keep is None:
        keep = lambda h: is_admissible(h, spec.variant, spec.side, spec.g)
    out: FormalSum = {}
    w_in = grading_of(graph).W
    e_in = grading_of(graph).E
    for (h, coeff) in differential_raw(graph, spec):
        if coeff == 0 or not keep(h):
            continue
        gr = grading_of(h)
        assert gr.W == w_in and gr.E == e_in - 1, "differential must be homogeneous"
        cf = canonical_form(h, spec.parity)
        if cf.sign == 0:
            continue
        out[cf.encoding] = out.get(cf.encoding, 0) + coeff * cf.sign
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# Stable (two-colored) differentials
# ---------------------------------------------------------------------------

StableTerm = tuple[TwoColoredGraph, int]


def _stable_front_sign(n_solid: int, t: int) -> int:
    return -1 if t % 2 else 1


def _retag_end(end, vmap):
    if end[0] == V:
        return (V, vmap(end[1]))
    return end


def _shift_cross(end, by: int):
    if end[0] == X:
        return (X, end[1] + by)
    return end


def ds_contract(graph: TwoColoredGraph) -> list[StableTerm]:
    out: list[StableTerm] = []
    for t, (u, v) in enumerate(graph.solid):
        if u == v:
            continue
        sign = _stable_front_sign(len(graph.solid), t)
        vmap = _contract_maps(graph.n, u, v)
        solid = tuple(
            tuple(sorted((vmap(a), vmap(b))))
            for s, (a, b) in enumerate(graph.solid)
            if s != t
        )
        dashed = tuple(
            sorted(norm_pair(_retag_end(a, vmap), _retag_end(b, vmap))
                   for (a, b) in graph.dashed)
        )
        omegas = tuple(sorted(vmap(w) for w in graph.omegas))
        out.append(
            (TwoColoredGraph(n=graph.n - 1, solid=solid, dashed=dashed,
                             legs=graph.legs, ncross=graph.ncross, omegas=omegas),
             -sign)
        )
    return out


def ds_cut(graph: TwoColoredGraph, with_omega: bool) -> list[StableTerm]:
    out: list[StableTerm] = []
    for t, (u, v) in enumerate(graph.solid):
        sign = _stable_front_sign(len(graph.solid), t)
        solid = tuple(e for s, e in enumerate(graph.solid) if s != t)
        dashed = tuple(sorted(graph.dashed + (norm_pair((V, u), (V, v)),)))
        out.append(
            (TwoColoredGraph(n=graph.n, solid=solid, dashed=dashed,
                             legs=graph.legs, ncross=graph.ncross,
                             omegas=graph.omegas), sign)
        )
        if with_omega and u != v:
            for (keep_end, lose_end) in ((u, v), (v, u)):
                omegas = tuple(sorted(graph.omegas + (keep_end,)))
                out.append(
                    (TwoColoredGraph(n=graph.n, solid=solid, dashed=graph.dashed,
                                     legs=graph.legs, ncross=graph.ncross,
                                     omegas=omegas), sign)
                )
    return out


def _dashed_halves_at_vertex(graph: TwoColoredGraph, v: int):
    """(dash index, side) pairs of all dashed half-edges at vertex v."""
    out = []
    for d, (a, b) in enumerate(graph.dashed):
        if a == (V, v):
            out.append((d, 0))
        if b == (V, v):
            out.append((d, 1))
    return out


def ds_mul(graph: TwoColoredGraph, g: int, parity: int) -> list[StableTerm]:
    """K-family d_mul'': fuse the two dashed halves of a (1 solid + 2 dashed)
    trivalent vertex through a solid contraction that creates an omega."""
    out: list[StableTerm] = []
    trace = (-1 if parity else 1) * 2 * g
    for v in range(graph.n):
        if graph.solid_halves_at(v) != 1 or graph.omega_count_at(v):
            continue
        halves = _dashed_halves_at_vertex(graph, v)
        if len(halves) != 2:
            continue
        t = next(s for s, (a, b) in enumerate(graph.solid) if v in (a, b))
        a, b = graph.solid[t]
        if a == b:
            continue
        sign = _stable_front_sign(len(graph.solid), t)
        u, w = min(a, b), max(a, b)
        vmap = _contract_maps(graph.n, u, w)
        solid = tuple(
            tuple(sorted((vmap(aa), vmap(bb))))
            for s, (aa, bb) in enumerate(graph.solid)
            if s != t
        )
        omegas = tuple(sorted([vmap(x) for x in graph.omegas] + [vmap(u)]))
        (d1, s1), (d2, s2) = halves
        if d1 == d2:
            # dashed tadpole at v: remove it, multiply by (-1)^m 2g
            dashed = tuple(
                sorted(
                    norm_pair(_retag_end(aa, vmap), _retag_end(bb, vmap))
                    for s, (aa, bb) in enumerate(graph.dashed)
                    if s != d1
                )
            )
            coeff = trace * sign
        else:
            p1 = graph.dashed[d1][1 - s1]
            p2 = graph.dashed[d2][1 - s2]
            new_dash = norm_pair(_retag_end(p1, vmap), _retag_end(p2, vmap))
            others = [
                norm_pair(_retag_end(aa, vmap), _retag_end(bb, vmap))
                for s, (aa, bb) in enumerate(graph.dashed)
                if s not in (d1, d2)
            ]
            dashed = tuple(sorted(others + [new_dash]))
            coeff = sign
        out.append(
            (TwoColoredGraph(n=graph.n - 1, solid=solid, dashed=dashed,
                             legs=graph.legs, ncross=graph.ncross,
                             omegas=omegas), SIGN_MUL * coeff)
        )
    return out


def ds_cross(graph: TwoColoredGraph, g: int, parity: int) -> list[StableTerm]:
    """K-family d_x: create a crossed vertex (new cross mark prepended)."""
    out: list[StableTerm] = []
    e_s = len(graph.solid)
    cross_sign = -1 if e_s % 2 else 1  # odd mark moved past the solid edges

    def shift_all(dashes):
        return [norm_pair(_shift_cross(a, 1), _shift_cross(b, 1)) for (a, b) in dashes]

    # (b) omega -> dashed edge to a new crossed vertex
    seen_omega_vertices = set()
    for i, v in enumerate(graph.omegas):
        if v in seen_omega_vertices:
            continue  # identical omegas give identical terms; multiplicity below
        seen_omega_vertices.add(v)
        mult = graph.omega_count_at(v)
        omegas = list(graph.omegas)
        omegas.remove(v)
        dashed = shift_all(graph.dashed) + [norm_pair((X, 0), (V, v))]
        out.append(
            (TwoColoredGraph(n=graph.n, solid=graph.solid,
                             dashed=tuple(sorted(dashed)), legs=graph.legs,
                             ncross=graph.ncross + 1, omegas=tuple(sorted(omegas))),
             SIGN_CROSS_OMEGA * mult * cross_sign)
        )

    # (a) detach a dashed half-edge from a normal vertex to a new crossed vertex
    for d, (a, b) in enumerate(graph.dashed):
        for side, end in ((0, a), (1, b)):
            if end[0] != V:
                continue
            other = (a, b)[1 - side]
            if other[0] == X:
                continue  # X-X output vanishes
            rest = [p for s, p in enumerate(graph.dashed) if s != d]
            dashed = shift_all(rest) + [
                norm_pair((X, 0), _shift_cross(other, 1))
            ]
            out.append(
                (TwoColoredGraph(n=graph.n, solid=graph.solid,
                                 dashed=tuple(sorted(dashed)), legs=graph.legs,
                                 ncross=graph.ncross + 1, omegas=graph.omegas),
                 SIGN_CROSS_DETACH * cross_sign)
            )

    # (c) isolated vertices with exactly three dashed half-edges
    trace = (-1 if parity else 1) * 2 * g
    for v in range(graph.n):
        if graph.solid_halves_at(v) != 0 or graph.omega_count_at(v):
            continue
        halves = _dashed_halves_at_vertex(graph, v)
        if len(halves) != 3:
            continue

        def vdel(w: int) -> int:
            return w - 1 if w > v else w

        def retag(end):
            if end[0] == V:
                if end[1] == v:
                    raise AssertionError("unresolved slot at the deleted vertex")
                return (V, vdel(end[1]))
            return _shift_cross(end, 1)

        for ia in range(3):
            for ib in range(ia + 1, 3):
                ic = 3 - ia - ib
                (da, sa), (db, sb) = halves[ia], halves[ib]
                (dc, sc) = halves[ic]
                if da == db:
                    # the paired halves form one dashed tadpole at v
                    coeff = trace
                    rest = [
                        p for s, p in enumerate(graph.dashed) if s not in (da, dc)
                    ]
                    pc = graph.dashed[dc][1 - sc]
                    if pc == (V, v):
                        continue  # cannot happen: dc would equal da
                    new = [norm_pair((X, 0), retag(pc))]
                else:
                    coeff = 1
                    pa = graph.dashed[da][1 - sa]
                    pb = graph.dashed[db][1 - sb]
                    # a slot still at v is the remaining half; it becomes the cross
                    ends = []
                    cross_used = 0
                    for p in (pa, pb):
                        if p == (V, v):
                            ends.append((X, 0))
                            cross_used += 1
                        else:
                            ends.append(retag(p))
                    if cross_used == 0:
                        # third half's dash reattaches to the new cross
                        rest = [
                            p for s, p in enumerate(graph.dashed)
                            if s not in (da, db, dc)
                        ]
                        pc = graph.dashed[dc][1 - sc]
                        new = [
                            norm_pair(ends[0], ends[1]),
                            norm_pair((X, 0), retag(pc)),
                        ]
                    elif cross_used == 1:
                        # one of da/db was a tadpole sharing the remaining half
                        rest = [
                            p for s, p in enumerate(graph.dashed)
                            if s not in (da, db)
                        ]
                        new = [norm_pair(ends[0], ends[1])]
                    else:
                        continue  # X-X output vanishes
                if any(e1[0] == X and e2[0] == X for (e1, e2) in new):
                    continue
                rest_retagged = [
                    norm_pair(retag(a2), retag(b2)) for (a2, b2) in rest
                ]
                dashed = tuple(sorted(rest_retagged + new))
                solid = tuple(
                    tuple(sorted((vdel(a2), vdel(b2)))) for (a2, b2) in graph.solid
                )
                omegas = tuple(sorted(vdel(w) for w in graph.omegas))
                out.append(
                    (TwoColoredGraph(n=graph.n - 1, solid=solid, dashed=dashed,
                                     legs=graph.legs, ncross=graph.ncross + 1,
                                     omegas=omegas),
                     SIGN_CROSS_PAIR * coeff * cross_sign)
                )
    return out


def stable_differential_raw(graph: TwoColoredGraph, sspec: StableSpec,
                            g: int, parity: int) -> list[StableTerm]:
    terms = ds_contract(graph)
    terms += ds_cut(graph, with_omega=(sspec.family == "k"))
    if sspec.family == "k":
        terms += ds_mul(graph, g, parity)
        terms += ds_cross(graph, g, parity)
    return terms


def stable_differential(graph: TwoColoredGraph, sspec: StableSpec,
                        g: int, parity: int) -> FormalSum:
    out: FormalSum = {}
    w_in = graph.weight()
    e_in = graph.e_number()
    for (h, coeff) in stable_differential_raw(graph, sspec, g, parity):
        if coeff == 0 or not stable_admissible(h, sspec.family):
            continue
        assert h.weight() == w_in and h.e_number() == e_in - 1
        cf = canonical_form_stable(h)
        if cf.sign == 0:
            continue
        out[cf.encoding] = out.get(cf.encoding, 0) + coeff * cf.sign
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# Assembly
# ---------------------------------------------------------------------------


def assemble(basis: ChainBasis, E: int, g: int | None = None,
             parity: int | None = None, keep=None) -> SparseIntMatrix:
    """Matrix of the total differential from stratum E to stratum E-1.

    Columns follow the basis order of stratum E; every output class must lie
    in stratum E-1 of the same basis (a missing target signals an enumeration
    bug and raises).
    """
    src = basis.strata.get(E, [])
    tgt = basis.strata.get(E - 1, [])
    index = {enc: i for i, enc in enumerate(tgt)}
    entries: list[tuple[int, int, int]] = []
    spec = basis.spec
    for col, enc in enumerate(src):
        if isinstance(spec, StableSpec):
            fs = stable_differential(decode_stable(enc), spec, g, parity)
        else:
            fs = differential(decode(enc), spec, keep=keep)
        for enc2, coeff in fs.items():
            row = index.get(enc2)
            if row is None:
                raise AssertionError(
                    f"differential output {enc2!r} missing from stratum {E - 1}"
                )
            entries.append((row, col, coeff))
    return SparseIntMatrix(rows=len(tgt), cols=len(src), entries=entries)


def assemble_dynamic(spec: ComplexSpec, src_encodings: list[str],
                     keep=None) -> tuple[SparseIntMatrix, list[str]]:
    """Differential block with rows discovered on the fly.

    Used when the target stratum is too large to enumerate: the rank of the
    block only needs the columns.  Returns the matrix and the discovered
    target encodings (row order).
    """
    index: dict[str, int] = {}
    entries: list[tuple[int, int, int]] = []
    for col, enc in enumerate(src_encodings):
        fs = differential(decode(enc), spec, keep=keep)
        for enc2, coeff in fs.items():
            row = index.setdefault(enc2, len(index))
            entries.append((row, col, coeff))
    rows = [None] * len(index)
    for enc2, i in index.items():
        rows[i] = enc2
    return (
        SparseIntMatrix(rows=len(index), cols=len(src_encodings), entries=entries),
        rows,
    )
