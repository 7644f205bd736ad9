"""Enumeration of canonical bases for every graded piece of every complex.

A `ComplexSpec` addresses one finite-dimensional complex: variant (gc1tp /
gc1 / gcex), side (connected / ce), genus g, parity of m and weight W.  Its
basis is stratified by the E-number (edges minus crossed vertices); the
differential lowers E by one.  `StableSpec` addresses the large-g invariant
complexes (families jtp / j / k) with M labeled external legs.

Generation strategy: iterate over (v, e) cells, over edge subsets (edge
multiplicities > 1 are dropped since multiple edges carry odd symmetries),
over decoration assignments, canonicalize and deduplicate.  A second, naive
generator that keeps multiplicities and repeated letters and lets the sign
rules kill them cross-validates the fast one in the tests.

Resource limits are explicit: exceeding a cap raises `ResourceLimitError`
carrying partial statistics, never a silent truncation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .graphs import (
    CROSS,
    OMEGA,
    DecoratedGraph,
    canonical_form,
    decode,
    encode,
    grading_of,
    is_admissible,
)
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

PARITY = {"odd": 1, "even": 0, 1: 1, 0: 0}
PARITY_NAME = {1: "odd", 0: "even"}


class ResourceLimitError(RuntimeError):
    """Raised when enumeration exceeds a configured cap; carries statistics."""

    def __init__(self, message: str, stats: dict):
        super().__init__(f"{message} (partial stats: {stats})")
        self.stats = stats


@dataclass(frozen=True)
class Limits:
    max_stratum: int = 500_000
    max_vertices: int = 16
    max_edges: int = 24


DEFAULT_LIMITS = Limits()


@dataclass(frozen=True)
class ComplexSpec:
    variant: str
    side: str
    g: int
    parity: int
    W: int

    def __post_init__(self):
        object.__setattr__(self, "parity", PARITY[self.parity])
        if self.variant not in ("gc1tp", "gc1", "gcex"):
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.side not in ("connected", "ce"):
            raise ValueError(f"unknown side {self.side!r}")
        if self.g < 0 or self.W < 1:
            raise ValueError("need g >= 0 and W >= 1")

    def as_dict(self) -> dict:
        return {
            "variant": self.variant,
            "side": self.side,
            "g": self.g,
            "parity": PARITY_NAME[self.parity],
            "W": self.W,
        }


@dataclass(frozen=True)
class StableSpec:
    family: str
    M: int
    W: int

    def __post_init__(self):
        if self.family not in ("jtp", "j", "k"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.M < 0 or self.W < 0:
            raise ValueError("need M >= 0 and W >= 0")
        if self.M > 3 * self.W + 2:
            raise ValueError("M exceeds the 3W bound of the stable range")

    def as_dict(self) -> dict:
        return {"family": self.family, "M": self.M, "W": self.W}


@dataclass
class ChainBasis:
    """Ordered canonical bases per E-stratum; entries are canonical encodings."""

    spec: object
    strata: dict[int, list[str]]

    def dim(self, E: int) -> int:
        return len(self.strata.get(E, []))

    def dims(self) -> dict[int, int]:
        return {E: len(v) for E, v in sorted(self.strata.items())}

    def e_range(self) -> list[int]:
        return sorted(self.strata)

    def index(self, E: int) -> dict[str, int]:
        return {enc: i for i, enc in enumerate(self.strata.get(E, []))}

    def total_dim(self) -> int:
        return sum(len(v) for v in self.strata.values())

    def to_json(self) -> dict:
        return {
            "schema": "gchom-basis@1",
            "spec": self.spec.as_dict(),
            "strata": {str(E): list(v) for E, v in sorted(self.strata.items())},
        }

    @classmethod
    def from_json(cls, doc: dict):
        spec_doc = dict(doc["spec"])
        if "family" in spec_doc:
            spec = StableSpec(**spec_doc)
        else:
            spec = ComplexSpec(**spec_doc)
        strata = {int(E): list(v) for E, v in doc["strata"].items()}
        return cls(spec=spec, strata=strata)


def _sorted_strata(found: dict[int, set[str]]) -> dict[int, list[str]]:
    return {E: sorted(v) for E, v in sorted(found.items()) if v}


# ---------------------------------------------------------------------------
# Connected bases
# ---------------------------------------------------------------------------


def _edge_slots(v: int, allow_tadpole: bool) -> list[tuple[int, int]]:
    slots = [(i, j) for i in range(v) for j in range(i + 1, v)]
    if allow_tadpole:
        slots += [(i, i) for i in range(v)]
    return sorted(slots)


def _connected(v: int, edges) -> bool:
    if v == 1:
        return True
    parent = list(range(v))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for (a, b) in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(i) for i in range(v)}) == 1


def _vertex_decoration_options(degree_count: int, half_edges: int, g: int,
                               parity: int, allow_omega: bool):
    """All decoration letter-multisets at one vertex with given degree count.

    Yields sorted letter tuples; enforces valence >= 3 (half-edges plus
    decoration entries, OMEGA counting one entry but two degrees).
    """
    max_omega = degree_count // 2 if allow_omega else 0
    for n_omega in range(max_omega + 1):
        n_letters = degree_count - 2 * n_omega
        if half_edges + n_omega + n_letters < 3:
            continue
        if parity == 1:
            pools = itertools.combinations(range(2 * g), n_letters)
        else:
            pools = itertools.combinations_with_replacement(range(2 * g), n_letters)
        for letters in pools:
            yield (OMEGA,) * n_omega + letters


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_connected(spec: ComplexSpec, limits: Limits = DEFAULT_LIMITS) -> ChainBasis:
    """Basis of the weight-W connected complex, stratified by E-number."""
    g, W, parity = spec.g, spec.W, spec.parity
    allow_tadpole = spec.variant == "gc1tp"
    allow_omega = spec.variant == "gcex"
    found: dict[int, set[str]] = {}
    stats = {"graphs_seen": 0}

    def add(graph: DecoratedGraph, E: int):
        # generation enforces admissibility; only signs/duplicates remain
        cf = canonical_form(graph, parity)
        if cf.sign == 0:
            return
        bucket = found.setdefault(E, set())
        bucket.add(cf.encoding)
        if len(bucket) > limits.max_stratum:
            raise ResourceLimitError("stratum size cap exceeded", dict(stats, E=E))

    if allow_omega:
        # the isolated crossed vertex, weight 1 (the dual of osp^nil)
        if W == 1:
            for letter in range(2 * g):
                add(
                    DecoratedGraph(
                        n=1,
                        edges=(),
                        decorations=((0, CROSS), (0, letter)),
                        crossed=frozenset({0}),
                    ),
                    -1,
                )

    for v in range(1, W + 1):
        if v > limits.max_vertices:
            raise ResourceLimitError("vertex cap exceeded", dict(stats, v=v))
        e_min = v - 1
        e_max = v + W // 2
        for e in range(e_min, e_max + 1):
            if e > limits.max_edges:
                raise ResourceLimitError("edge cap exceeded", dict(stats, e=e))
            D = W - 2 * (e - v)
            if D < 0:
                continue
            slots = _edge_slots(v, allow_tadpole)
            for subset in itertools.combinations(slots, e):
                if not _connected(v, subset):
                    continue
                half = [0] * v
                for (a, b) in subset:
                    half[a] += 1
                    half[b] += 1
                per_vertex_min = [max(0, 3 - half[i]) for i in range(v)]
                if sum(per_vertex_min) > D:
                    continue
                for comp in _compositions(D, v):
                    options = []
                    ok = True
                    for i in range(v):
                        opts = list(
                            _vertex_decoration_options(
                                comp[i], half[i], g, parity, allow_omega
                            )
                        )
                        if not opts:
                            ok = False
                            break
                        options.append(opts)
                    if not ok:
                        continue
                    for choice in itertools.product(*options):
                        decs = tuple(
                            (i, letter)
                            for i in range(v)
                            for letter in choice[i]
                        )
                        stats["graphs_seen"] += 1
                        add(DecoratedGraph(n=v, edges=tuple(subset), decorations=decs), e)
    return ChainBasis(spec=spec, strata=_sorted_strata(found))


def enumerate_connected_naive(spec: ComplexSpec, limits: Limits = DEFAULT_LIMITS) -> ChainBasis:
    """Cross-validation generator: allows multi-edges and repeated letters and
    relies on the sign rules to kill them.  Slow; small specs only."""
    g, W, parity = spec.g, spec.W, spec.parity
    allow_tadpole = spec.variant == "gc1tp"
    allow_omega = spec.variant == "gcex"
    found: dict[int, set[str]] = {}

    def add(graph):
        if not is_admissible(graph, spec.variant, "connected", g):
            return
        cf = canonical_form(graph, parity)
        if cf.sign == 0:
            return
        found.setdefault(grading_of(graph).E, set()).add(cf.encoding)

    if allow_omega and W == 1:
        for letter in range(2 * g):
            add(
                DecoratedGraph(
                    n=1, edges=(), decorations=((0, CROSS), (0, letter)),
                    crossed=frozenset({0}),
                )
            )
    letters_pool = list(range(2 * g)) + ([OMEGA] if allow_omega else [])
    for v in range(1, W + 1):
        for e in range(max(0, v - 1), v + W // 2 + 1):
            D = W - 2 * (e - v)
            if D < 0:
                continue
            slots = _edge_slots(v, allow_tadpole)
            for edges in itertools.combinations_with_replacement(slots, e):
                if not _connected(v, edges):
                    continue
                # all decoration words of total degree D over all vertices
                for decs in _decoration_words(v, D, letters_pool):
                    add(DecoratedGraph(n=v, edges=tuple(edges), decorations=decs))
    return ChainBasis(spec=spec, strata=_sorted_strata(found))


def _decoration_words(v: int, D: int, letters_pool):
    """All sorted (vertex, letter) tuples with total degree count D."""
    items = sorted((i, l) for i in range(v) for l in letters_pool)

    def rec(start: int, remaining: int, acc):
        if remaining == 0:
            yield tuple(acc)
            return
        for idx in range(start, len(items)):
            (i, l) = items[idx]
            c = 2 if l == OMEGA else 1
            if c <= remaining:
                acc.append((i, l))
                # combinations_with_replacement over sorted items
                yield from rec(idx, remaining - c, acc)
                acc.pop()

    yield from rec(0, D, [])


# ---------------------------------------------------------------------------
# Chevalley-Eilenberg (disconnected) bases
# ---------------------------------------------------------------------------


def disjoint_union(graphs: list[DecoratedGraph]) -> DecoratedGraph:
    """Disjoint union; component order is the list order."""
    n = 0
    edges: list[tuple[int, int]] = []
    decs: list[tuple[int, int]] = []
    crossed: set[int] = set()
    for gph in graphs:
        edges.extend((u + n, v + n) for (u, v) in gph.edges)
        decs.extend((v + n, l) for (v, l) in gph.decorations)
        crossed.update(x + n for x in gph.crossed)
        n += gph.n
    return DecoratedGraph(n=n, edges=tuple(edges), decorations=tuple(decs),
                          crossed=frozenset(crossed))


def enumerate_ce(spec: ComplexSpec, limits: Limits = DEFAULT_LIMITS,
                 min_e: int | None = None) -> ChainBasis:
    """Basis of the weight-W CE (possibly disconnected) complex.

    Multisets of connected classes with total weight W; a multiset containing
    two identical components of odd total degree is zero, which the canonical
    form detects through the component-swap automorphism.  ``min_e`` restricts
    to strata with E-number >= min_e (the low strata of large CE complexes are
    huge, and rank computations only need the columns of the higher ones).
    """
    g, W, parity = spec.g, spec.W, spec.parity
    pools: list[list[tuple[DecoratedGraph, int]]] = []
    for w in range(1, W + 1):
        sub = ComplexSpec(spec.variant, "connected", g, parity, w)
        basis = enumerate_connected(sub, limits)
        reps = [
            (decode(enc), E)
            for E, stratum in sorted(basis.strata.items())
            for enc in stratum
        ]
        pools.append(reps)

    found: dict[int, set[str]] = {}
    stats = {"multisets_seen": 0}

    def add_union(components):
        graph = disjoint_union(components)
        cf = canonical_form(graph, parity)
        if cf.sign == 0:
            return
        E = grading_of(graph).E
        bucket = found.setdefault(E, set())
        bucket.add(cf.encoding)
        if len(bucket) > limits.max_stratum:
            raise ResourceLimitError("stratum size cap exceeded", dict(stats, E=E))

    def rec(remaining: int, max_w: int, acc: list, acc_e: int, start_idx: int):
        if remaining == 0:
            if min_e is not None and acc_e < min_e:
                return
            stats["multisets_seen"] += 1
            add_union(acc)
            return
        if min_e is not None and acc_e + (3 * remaining) // 2 < min_e:
            return
        for w in range(min(remaining, max_w), 0, -1):
            pool = pools[w - 1]
            start = start_idx if w == max_w else 0
            for idx in range(start, len(pool)):
                (rep, rep_e) = pool[idx]
                acc.append(rep)
                rec(remaining - w, w, acc, acc_e + rep_e, idx)
                acc.pop()

    rec(W, W, [], 0, 0)
    return ChainBasis(spec=spec, strata=_sorted_strata(found))


def enumerate_basis(spec: ComplexSpec, limits: Limits = DEFAULT_LIMITS) -> ChainBasis:
    """Basis for a ComplexSpec, dispatching on the side."""
    if spec.side == "connected":
        return enumerate_connected(spec, limits)
    return enumerate_ce(spec, limits)


# ---------------------------------------------------------------------------
# Stable two-colored bases
# ---------------------------------------------------------------------------


def enumerate_stable(sspec: StableSpec, limits: Limits = DEFAULT_LIMITS) -> ChainBasis:
    """Basis of the stable invariant complex, stratified by E = solid - crossed.

    Graphs may be disconnected, legs are labeled and not quotiented; the K
    family allows omega decorations, crossed vertices (one dashed half-edge
    each) and islands.  The island normalization factor of the paper's
    homotopy is proof-internal and not implemented; islands are ordinary basis
    elements here.
    """
    family, M, W = sspec.family, sspec.M, sspec.W
    allow_tadpole = family == "jtp"
    is_k = family == "k"
    found: dict[int, set[str]] = {}
    stats = {"graphs_seen": 0}

    def add(graph: TwoColoredGraph):
        if not stable_admissible(graph, family):
            return
        if graph.weight() != W:
            return
        cf = canonical_form_stable(graph)
        if cf.sign == 0:
            return
        E = graph.e_number()
        bucket = found.setdefault(E, set())
        bucket.add(cf.encoding)
        if len(bucket) > limits.max_stratum:
            raise ResourceLimitError("stratum size cap exceeded", dict(stats, E=E))

    for n in range(0, W + 1):
        for e_s in range(0, n + W // 2 + 2):
            base = W - 2 * (e_s - n)
            if base < 0:
                continue
            slots = _edge_slots(n, allow_tadpole)
            if e_s > len(slots):
                continue
            for solid in itertools.combinations(slots, e_s):
                solid_half = [0] * n
                for (a, b) in solid:
                    solid_half[a] += 1
                    solid_half[b] += 1
                max_omega = base // 2 if is_k else 0
                omega_choices = [()]
                if is_k and n:
                    omega_choices = [
                        om
                        for k in range(max_omega + 1)
                        for om in itertools.combinations_with_replacement(range(n), k)
                    ]
                for omegas in omega_choices:
                    budget = base - 2 * len(omegas)
                    omega_at = [0] * n
                    for v in omegas:
                        omega_at[v] += 1
                    min_halves = [
                        max(0, 3 - solid_half[v] - omega_at[v]) for v in range(n)
                    ]
                    max_cross = min(budget, W) if is_k else 0
                    for n_cross in range(max_cross + 1):
                        if budget - n_cross < sum(min_halves):
                            continue
                        for dashed in _dashed_structures(
                            n, n_cross, M, budget, min_halves
                        ):
                            stats["graphs_seen"] += 1
                            add(
                                TwoColoredGraph(
                                    n=n,
                                    solid=tuple(solid),
                                    dashed=dashed,
                                    legs=M,
                                    ncross=n_cross,
                                    omegas=tuple(omegas),
                                )
                            )
    return ChainBasis(spec=sspec, strata=_sorted_strata(found))


def _dashed_structures(n: int, n_cross: int, M: int, budget: int, min_halves=None):
    """Multisets of dashed edges: legs and crosses used exactly once, total
    non-leg end count == budget, at least ``min_halves[v]`` dashed halves per
    vertex.  Crossed vertices are symmetric, so pair types use an anonymous
    cross slot and indices are assigned in generation order.  X-X pairs are
    skipped (zero classes)."""
    if min_halves is None:
        min_halves = [0] * n
    XS = (X, -1)  # anonymous cross slot
    pair_types: list[tuple] = []
    for i in range(n):
        for j in range(i, n):
            pair_types.append(((V, i), (V, j)))
    for i in range(n):
        pair_types.append(((V, i), XS))
        for k in range(M):
            pair_types.append(((V, i), (L, k)))
    for k in range(M):
        pair_types.append(((L, k), XS))
        for l in range(k + 1, M):
            pair_types.append(((L, k), (L, l)))

    def cost(pair):
        return sum(1 for end in pair if end[0] != L)

    results: list[tuple] = []
    halves = [0] * n

    def deficit():
        return sum(max(0, min_halves[v] - halves[v]) for v in range(n))

    def rec(idx: int, rem_budget: int, rem_cross: int, rem_legs: list, acc: list):
        if rem_budget < deficit():
            return
        if idx == len(pair_types):
            if rem_budget == 0 and rem_cross == 0 and not any(rem_legs):
                # assign cross indices in generation order
                out = []
                next_cross = 0
                for (a, b) in acc:
                    ends = []
                    for end in (a, b):
                        if end == XS:
                            ends.append((X, next_cross))
                            next_cross += 1
                        else:
                            ends.append(end)
                    out.append(norm_pair(ends[0], ends[1]))
                results.append(tuple(sorted(out)))
            return
        pair = pair_types[idx]
        c = cost(pair)
        max_mult = rem_budget // c if c else 1
        if any(end[0] == L for end in pair):
            max_mult = min(max_mult, 1)
        n_x = sum(1 for end in pair if end == XS)
        if n_x:
            max_mult = min(max_mult, rem_cross // n_x)
        for mult in range(max_mult + 1):
            ok = True
            if mult:
                for end in pair:
                    if end[0] == L and rem_legs[end[1]] < mult:
                        ok = False
            if not ok:
                break
            for end in pair:
                if end[0] == L:
                    rem_legs[end[1]] -= mult
                elif end[0] == V:
                    halves[end[1]] += mult
            acc.extend([pair] * mult)
            rec(idx + 1, rem_budget - c * mult, rem_cross - n_x * mult, rem_legs, acc)
            for _ in range(mult):
                acc.pop()
            for end in pair:
                if end[0] == L:
                    rem_legs[end[1]] += mult
                elif end[0] == V:
                    halves[end[1]] -= mult

    rec(0, budget, n_cross, [1] * M, [])
    return sorted(set(results))
