"""Stable two-colored graphs: the large-g invariant complexes.

In the stable range the OSp-invariant Chevalley-Eilenberg complexes become
complexes of graphs with no decorations but two kinds of edges, solid and
dashed, plus M labeled external dashed legs.  A dashed edge stands for an
inserted copy of the reduced diagonal; dashed legs pair a decoration slot with
one tensor factor of V_g^{otimes M}.  The K family (for the extended variant)
additionally allows omega-decorations and crossed vertices, each crossed
vertex holding exactly one dashed half-edge.

Orientation data: the ordering of the solid edges (odd) and of the crossed
vertices (each carries an odd formal mark); dashed edges and omegas are even
and unordered.  Consequently double solid edges vanish, double dashed edges
and dashed tadpoles survive, and a dashed edge joining two crossed vertices
vanishes (swap the two crossed marks).

Weight bookkeeping: W = 2(#solid - #vertices) + D with D counting one for
every dashed half-edge **not** ending on a leg plus two per omega; a dashed
edge joining two legs therefore carries weight 0.  E-number = #solid edges
minus #crossed vertices.

Canonical encoding format::

    s1;<n>;<ncross>;<M>;<solid sorted>;<dashed sorted>;<omegas sorted>

ends rendered ``v3`` (vertex), ``x1`` (crossed), ``L0`` (leg, 0-based).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .graphs import CanonicalClass, ZERO, perm_parity_sign, _positions_to_perm

FAMILIES = ("jtp", "j", "k")

V, X, L = "v", "x", "L"  # end kinds

End = tuple[str, int]


def render_end(end: End) -> str:
    return f"{end[0]}{end[1]}"


def parse_end(txt: str) -> End:
    return (txt[0], int(txt[1:]))


def norm_pair(a: End, b: End) -> tuple[End, End]:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class TwoColoredGraph:
    """A stable graph: solid edges (ordered), dashed edges (multiset), legs.

    ``solid`` entries are (u, v) with u <= v over normal vertices; ``dashed``
    entries are normalized pairs of ends; ``omegas`` is the sorted multiset of
    vertices carrying an omega decoration.  Legs are labeled 0..legs-1 and
    each must occur exactly once among the dashed ends.
    """

    n: int
    solid: tuple[tuple[int, int], ...]
    dashed: tuple[tuple[End, End], ...]
    legs: int = 0
    ncross: int = 0
    omegas: tuple[int, ...] = ()

    def __post_init__(self):
        for (u, v) in self.solid:
            if not (0 <= u <= v < self.n):
                raise ValueError("solid edge out of range")
        for (a, b) in self.dashed:
            for (kind, i) in (a, b):
                if kind == V and not 0 <= i < self.n:
                    raise ValueError("dashed end vertex out of range")
                if kind == X and not 0 <= i < self.ncross:
                    raise ValueError("dashed end cross out of range")
                if kind == L and not 0 <= i < self.legs:
                    raise ValueError("dashed end leg out of range")

    # -- counts ------------------------------------------------------------

    def solid_halves_at(self, v: int) -> int:
        return sum((u == v) + (w == v) for (u, w) in self.solid)

    def dashed_halves_at(self, end: End) -> int:
        return sum((a == end) + (b == end) for (a, b) in self.dashed)

    def omega_count_at(self, v: int) -> int:
        return sum(1 for w in self.omegas if w == v)

    def valence(self, v: int) -> int:
        return (
            self.solid_halves_at(v)
            + self.dashed_halves_at((V, v))
            + self.omega_count_at(v)
        )

    def weight(self) -> int:
        D = 2 * len(self.omegas)
        for (a, b) in self.dashed:
            D += (a[0] != L) + (b[0] != L)
        return 2 * (len(self.solid) - self.n) + D

    def e_number(self) -> int:
        return len(self.solid) - self.ncross

    def has_solid_tadpole(self) -> bool:
        return any(u == v for (u, v) in self.solid)


def stable_admissible(graph: TwoColoredGraph, family: str) -> bool:
    """Admissibility for one stable family (jtp / j / k)."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if family != "k" and (graph.ncross or graph.omegas):
        return False
    if family != "jtp" and graph.has_solid_tadpole():
        return False
    for k in range(graph.legs):
        if graph.dashed_halves_at((L, k)) != 1:
            return False
    for j in range(graph.ncross):
        if graph.dashed_halves_at((X, j)) != 1:
            return False
    for (a, b) in graph.dashed:
        if a[0] == X and b[0] == X:
            return False  # zero by the crossed-mark symmetry
    for v in range(graph.n):
        if graph.valence(v) < 3:
            return False
    return True


# ---------------------------------------------------------------------------
# Canonical forms
# ---------------------------------------------------------------------------


def encode_stable(graph: TwoColoredGraph) -> str:
    solid = ",".join(f"{u}-{v}" for (u, v) in graph.solid)
    dashed = ",".join(f"{render_end(a)}-{render_end(b)}" for (a, b) in graph.dashed)
    omegas = ",".join(str(v) for v in graph.omegas)
    return f"s1;{graph.n};{graph.ncross};{graph.legs};{solid};{dashed};{omegas}"


def decode_stable(encoding: str) -> TwoColoredGraph:
    tag, n, ncross, legs, solid_txt, dashed_txt, omegas_txt = encoding.split(";")
    if tag != "s1":
        raise ValueError(f"unsupported encoding version {tag!r}")
    solid = tuple(
        tuple(int(a) for a in item.split("-")) for item in solid_txt.split(",") if item
    )
    dashed = tuple(
        tuple(parse_end(p) for p in item.split("-")) for item in dashed_txt.split(",") if item
    )
    omegas = tuple(int(v) for v in omegas_txt.split(",") if v)
    return TwoColoredGraph(
        n=int(n), solid=solid, dashed=dashed, legs=int(legs), ncross=int(ncross),
        omegas=omegas,
    )


def _stable_universe(graph: TwoColoredGraph):
    """Map vertices, crossed vertices and legs into one id space."""
    n, c, m = graph.n, graph.ncross, graph.legs

    def uid(end: End) -> int:
        kind, i = end
        if kind == V:
            return i
        if kind == X:
            return n + i
        return n + c + i

    return n + c + m, uid


def _stable_labelings(graph: TwoColoredGraph):
    """Vertex/cross labelings consistent with refinement; legs stay fixed."""
    total, uid = _stable_universe(graph)
    n, c = graph.n, graph.ncross
    mult: dict[tuple[int, int, str], int] = {}
    for (u, v) in graph.solid:
        if u != v:
            key = (min(u, v), max(u, v), "s")
            mult[key] = mult.get(key, 0) + 1
    for (a, b) in graph.dashed:
        ia, ib = uid(a), uid(b)
        if ia != ib:
            key = (min(ia, ib), max(ia, ib), "d")
            mult[key] = mult.get(key, 0) + 1
    adj: dict[int, list[tuple[int, tuple]]] = {i: [] for i in range(total)}
    for (i, j, color), k in mult.items():
        adj[i].append((j, (color, k)))
        adj[j].append((i, (color, k)))

    base: list = []
    for v in range(graph.n):
        base.append(
            (
                0,
                sum(1 for (u, w) in graph.solid if u == w == v),
                sum(1 for (a, b) in graph.dashed if a == b == (V, v)),
                graph.omega_count_at(v),
            )
        )
    for j in range(c):
        base.append((1,))
    for k in range(graph.legs):
        base.append((2, k))

    def refine(keys):
        while True:
            order = sorted(set(keys))
            colors = [order.index(k) for k in keys]
            new_keys = []
            for i in range(total):
                neigh = sorted((colors[j], ec) for (j, ec) in adj[i])
                new_keys.append((colors[i], tuple(neigh)))
            if len(set(new_keys)) == len(set(keys)):
                final = sorted(set(new_keys))
                return [final.index(k) for k in new_keys]
            keys = new_keys

    def search(colors):
        cells: dict[int, list[int]] = {}
        for i, col in enumerate(colors):
            if i < n + c:  # legs are already discrete
                cells.setdefault(col, []).append(i)
        split = None
        for col in sorted(cells):
            if len(cells[col]) > 1:
                split = col
                break
        if split is None:
            ranked = sorted((colors[i], i) for i in range(n))
            sigma_v = [0] * n
            for new, (_cl, i) in enumerate(ranked):
                sigma_v[i] = new
            ranked_x = sorted((colors[n + j], j) for j in range(c))
            sigma_x = [0] * c
            for new, (_cl, j) in enumerate(ranked_x):
                sigma_x[j] = new
            yield tuple(sigma_v), tuple(sigma_x)
            return
        for i in cells[split]:
            refined = refine([(colors[j], 1 if j == i else 0) for j in range(total)])
            yield from search(refined)

    yield from search(refine(base))


def _stable_relabel_sort(graph: TwoColoredGraph, sigma_v, sigma_x):
    """Relabel vertices/crosses, sort the lists, return (graph, sign)."""
    solid = [tuple(sorted((sigma_v[u], sigma_v[v]))) for (u, v) in graph.solid]
    order = sorted(range(len(solid)), key=lambda t: (solid[t], t))
    target = [0] * len(solid)
    for pos, t in enumerate(order):
        target[t] = pos
    sign = perm_parity_sign(_positions_to_perm(target))
    sign *= perm_parity_sign(list(sigma_x))

    def map_end(end: End) -> End:
        kind, i = end
        if kind == V:
            return (V, sigma_v[i])
        if kind == X:
            return (X, sigma_x[i])
        return end

    dashed = tuple(sorted(norm_pair(map_end(a), map_end(b)) for (a, b) in graph.dashed))
    omegas = tuple(sorted(sigma_v[v] for v in graph.omegas))
    out = TwoColoredGraph(
        n=graph.n,
        solid=tuple(solid[t] for t in order),
        dashed=dashed,
        legs=graph.legs,
        ncross=graph.ncross,
        omegas=omegas,
    )
    return out, sign


_STABLE_CACHE: dict[TwoColoredGraph, CanonicalClass] = {}


def canonical_form_stable(graph: TwoColoredGraph) -> CanonicalClass:
    """Canonical encoding + sign for a stable graph (parity-independent)."""
    hit = _STABLE_CACHE.get(graph)
    if hit is not None:
        return hit
    if len(set(graph.solid)) != len(graph.solid):
        result = CanonicalClass(encoding="", sign=ZERO)
        _STABLE_CACHE[graph] = result
        return result
    if any(a[0] == X and b[0] == X for (a, b) in graph.dashed):
        result = CanonicalClass(encoding="", sign=ZERO)
        _STABLE_CACHE[graph] = result
        return result
    best_enc: str | None = None
    best_signs: set[int] = set()
    for sigma_v, sigma_x in _stable_labelings(graph):
        relabeled, sign = _stable_relabel_sort(graph, sigma_v, sigma_x)
        enc = encode_stable(relabeled)
        if best_enc is None or enc < best_enc:
            best_enc, best_signs = enc, {sign}
        elif enc == best_enc:
            best_signs.add(sign)
    assert best_enc is not None
    result = (
        CanonicalClass(encoding=best_enc, sign=ZERO)
        if len(best_signs) > 1
        else CanonicalClass(encoding=best_enc, sign=best_signs.pop())
    )
    _STABLE_CACHE[graph] = result
    return result


def canonical_form_stable_bruteforce(graph: TwoColoredGraph) -> CanonicalClass:
    """Oracle: canonical form over all vertex x cross permutations."""
    if len(set(graph.solid)) != len(graph.solid):
        return CanonicalClass(encoding="", sign=ZERO)
    if any(a[0] == X and b[0] == X for (a, b) in graph.dashed):
        return CanonicalClass(encoding="", sign=ZERO)
    best_enc: str | None = None
    best_signs: set[int] = set()
    for sigma_v in itertools.permutations(range(graph.n)):
        for sigma_x in itertools.permutations(range(graph.ncross)):
            relabeled, sign = _stable_relabel_sort(graph, sigma_v, sigma_x)
            enc = encode_stable(relabeled)
            if best_enc is None or enc < best_enc:
                best_enc, best_signs = enc, {sign}
            elif enc == best_enc:
                best_signs.add(sign)
    assert best_enc is not None
    if len(best_signs) > 1:
        return CanonicalClass(encoding=best_enc, sign=ZERO)
    return CanonicalClass(encoding=best_enc, sign=best_signs.pop())
