"""Decorated multigraphs with orientation data, gradings and canonical forms.

A decorated graph is a finite multigraph whose vertices carry ordered lists of
decorations drawn from a 2g-letter alphabet (letters ``0 .. 2g-1``, where
``i < g`` is the letter a_{i+1} and ``i >= g`` the letter b_{i-g+1}), plus the
top letter ``OMEGA`` and the formal ``CROSS`` mark sitting at crossed vertices.
The orientation of a graph is the ordering of its edge list together with the
ordering of its decoration list; relabelings act on orientations by Koszul
signs.  The sign rules are:

* transposing two edges gives -1 (edges have odd degree 2m-1 for every m);
* flipping the direction of an edge gives +1 (directions are normalized u<=v);
* permuting vertices gives +1 (vertices have even degree -2m);
* transposing two adjacent decorations of degrees p, q gives (-1)^{pq}, where
  letters have degree m, OMEGA degree 2m and CROSS formal degree 1.

Only parities enter, so the single argument ``parity`` (m mod 2) drives all
sign computations.  Isomorphism classes with an orientation-reversing
automorphism are zero; `canonical_form` detects them and otherwise returns a
deterministic encoding plus the sign relating the input orientation to the
canonical one.

Canonical encoding format (stable; used as cache key and in golden files)::

    v1;<n>;<crossed indices sorted>;<edges sorted>;<decorations sorted>

with edges rendered ``u-v`` comma-joined and decorations ``vertex:letter``
comma-joined, letters rendered ``l<code>`` (``l0`` = a_1, ..., ``l<g>`` = b_1,
...), ``w`` for OMEGA and ``x`` for CROSS.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

OMEGA = -1
CROSS = -2

ZERO = 0  # sign marker for classes killed by an odd automorphism

VARIANTS = ("gc1tp", "gc1", "gcex")
SIDES = ("connected", "ce")


def render_letter(letter: int) -> str:
    """Encoding form of a letter code; the a/b split needs no g to render."""
    if letter == OMEGA:
        return "w"
    if letter == CROSS:
        return "x"
    return f"l{letter}"


def parse_letter(txt: str) -> int:
    if txt == "w":
        return OMEGA
    if txt == "x":
        return CROSS
    if txt.startswith("l"):
        return int(txt[1:])
    raise ValueError(f"bad letter {txt!r}")


def letter_parity(letter: int, parity: int) -> int:
    """Degree parity of a decoration: letters have degree m, OMEGA 2m, CROSS 1."""
    if letter == OMEGA:
        return 0
    if letter == CROSS:
        return 1
    return parity & 1


def letter_degree_count(letter: int) -> int:
    """Contribution to the decoration-degree count D (OMEGA counts twice)."""
    if letter == OMEGA:
        return 2
    if letter == CROSS:
        return 0
    return 1


@dataclass(frozen=True)
class DecoratedGraph:
    """A decorated multigraph with orientation data.

    ``edges`` is the ordered edge list with endpoints normalized u <= v
    (tadpoles u == v allowed); ``decorations`` the ordered list of
    (vertex, letter) pairs.  ``crossed`` lists the crossed-vertex indices;
    a crossed vertex carries exactly the decorations [CROSS, letter] and no
    edges.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    decorations: tuple[tuple[int, int], ...]
    crossed: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        for (u, v) in self.edges:
            if not (0 <= u <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
        for (v, _let) in self.decorations:
            if not (0 <= v < self.n):
                raise ValueError(f"decoration at vertex {v} out of range")
        for x in self.crossed:
            if not (0 <= x < self.n):
                raise ValueError(f"crossed vertex {x} out of range")

    # -- basic counts ------------------------------------------------------

    @property
    def n_normal(self) -> int:
        return self.n - len(self.crossed)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def decoration_count_at(self, v: int) -> int:
        return sum(1 for (w, _l) in self.decorations if w == v)

    def letters_at(self, v: int) -> list[int]:
        return [l for (w, l) in self.decorations if w == v]

    def half_edges_at(self, v: int) -> int:
        c = 0
        for (u, w) in self.edges:
            if u == v:
                c += 1
            if w == v:
                c += 1
        return c

    def valence(self, v: int) -> int:
        """Incident half-edges plus number of decoration entries (OMEGA counts one)."""
        return self.half_edges_at(v) + self.decoration_count_at(v)

    def tadpoles_at(self, v: int) -> int:
        return sum(1 for (u, w) in self.edges if u == v == w)

    def has_tadpole(self) -> bool:
        return any(u == v for (u, v) in self.edges)

    def has_omega(self) -> bool:
        return any(l == OMEGA for (_v, l) in self.decorations)

    def degree_count(self) -> int:
        """Total decoration-degree count D (OMEGA twice, CROSS zero)."""
        return sum(letter_degree_count(l) for (_v, l) in self.decorations)

    # -- connectivity ------------------------------------------------------

    def components(self) -> list[set[int]]:
        parent = list(range(self.n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for (u, v) in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        comps: dict[int, set[int]] = {}
        for v in range(self.n):
            comps.setdefault(find(v), set()).add(v)
        return list(comps.values())

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1


@dataclass(frozen=True)
class Grading:
    W: int
    E: int
    e: int
    v: int
    D: int

    def chain_degree(self, m: int) -> int:
        return m * self.W - self.E

    def gc_degree(self, m: int) -> int:
        """Cohomological degree of the dual connected generator."""
        return 1 - m * self.W + self.E


def grading_of(graph: DecoratedGraph) -> Grading:
    """Weight, E-number and raw counts of a decorated graph.

    W = 2(e - v) + D with v counting only non-crossed vertices and D counting
    OMEGA twice; each crossed vertex carries weight 1 through the single
    letter it holds.  E = edges - crossed vertices.
    """
    e = graph.n_edges
    v = graph.n_normal
    D = graph.degree_count()
    W = 2 * (e - v) + D
    E = e - len(graph.crossed)
    return Grading(W=W, E=E, e=e, v=v, D=D)


def is_admissible(graph: DecoratedGraph, variant: str, side: str, g: int) -> bool:
    """Admissibility of a decorated graph for one complex variant.

    Rules: every non-crossed vertex is at least trivalent (half-edges plus
    decoration entries); tadpoles only in gc1tp; OMEGA only in gcex; crossed
    vertices only in gcex, and they carry exactly [CROSS, letter]; connected
    variants require a single connected component.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if side not in SIDES:
        raise ValueError(f"unknown side {side!r}")
    if graph.n == 0:
        return False
    for (v, l) in graph.decorations:
        if l == CROSS:
            if v not in graph.crossed:
                return False
        elif l == OMEGA:
            if variant != "gcex":
                return False
            if v in graph.crossed:
                return False
        else:
            if not (0 <= l < 2 * g):
                return False
    if graph.crossed and variant != "gcex":
        return False
    for x in graph.crossed:
        if graph.half_edges_at(x) != 0:
            return False
        letters = sorted(graph.letters_at(x))
        if len(letters) != 2 or letters[0] != CROSS or not (0 <= letters[1] < 2 * g):
            return False
    if graph.has_tadpole() and variant != "gc1tp":
        return False
    for v in range(graph.n):
        if v in graph.crossed:
            continue
        if graph.valence(v) < 3:
            return False
    if side == "connected" and not graph.is_connected():
        return False
    return True


# ---------------------------------------------------------------------------
# Orientation signs
# ---------------------------------------------------------------------------


def perm_parity_sign(perm: list[int] | tuple[int, ...]) -> int:
    """Sign of a permutation given as the image list."""
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def koszul_sign_of_reordering(parities: list[int], target_positions: list[int]) -> int:
    """Koszul sign of the permutation sending item i to target_positions[i].

    Only items of odd parity contribute; the sign is the parity of the induced
    permutation on the odd items.
    """
    odd = [(target_positions[i]) for i, p in enumerate(parities) if p & 1]
    # parity of the permutation sorting `odd`
    sign = 1
    for i in range(len(odd)):
        for j in range(i + 1, len(odd)):
            if odd[i] > odd[j]:
                sign = -sign
    return sign


def orientation_sign(
    graph: DecoratedGraph,
    vperm: tuple[int, ...],
    edge_perm: tuple[int, ...],
    dec_perm: tuple[int, ...],
    parity: int,
) -> int:
    """Koszul sign of a relabeling of a decorated graph.

    ``vperm[i]`` is the new name of vertex i; ``edge_perm[t]`` the new position
    of edge t; ``dec_perm[s]`` the new position of decoration s.  The relabeled
    graph must coincide with the original as an ordered structure (i.e. the
    data is an automorphism of the underlying decorated graph); otherwise a
    ValueError is raised.
    """
    n, e, d = graph.n, len(graph.edges), len(graph.decorations)
    if sorted(vperm) != list(range(n)) or sorted(edge_perm) != list(range(e)) \
            or sorted(dec_perm) != list(range(d)):
        raise ValueError("relabeling components must be permutations")
    new_edges: list[tuple[int, int] | None] = [None] * e
    for t, (u, v) in enumerate(graph.edges):
        a, b = vperm[u], vperm[v]
        new_edges[edge_perm[t]] = (min(a, b), max(a, b))
    new_decs: list[tuple[int, int] | None] = [None] * d
    for s, (v, l) in enumerate(graph.decorations):
        new_decs[dec_perm[s]] = (vperm[v], l)
    if tuple(new_edges) != graph.edges or tuple(new_decs) != graph.decorations:
        raise ValueError("relabeling is not an automorphism of the graph")
    if frozenset(vperm[x] for x in graph.crossed) != graph.crossed:
        raise ValueError("relabeling does not preserve crossed vertices")
    sign = perm_parity_sign(_positions_to_perm(edge_perm))
    dec_parities = [letter_parity(l, parity) for (_v, l) in graph.decorations]
    sign *= koszul_sign_of_reordering(dec_parities, list(dec_perm))
    return sign


def _positions_to_perm(target_positions) -> list[int]:
    """Convert 'item i goes to position p_i' into an image list of a permutation."""
    out = [0] * len(target_positions)
    for i, p in enumerate(target_positions):
        out[p] = i
    return out


# ---------------------------------------------------------------------------
# Canonical forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CanonicalClass:
    """Canonical encoding of an isomorphism class plus the orientation sign.

    ``sign`` is +1/-1 relating the input orientation to the canonical one, or
    0 (`ZERO`) when the class has an orientation-reversing automorphism.
    """

    encoding: str
    sign: int


def encode(graph: DecoratedGraph) -> str:
    """Encoding of a graph whose edge and decoration lists are already sorted."""
    crossed = ",".join(str(x) for x in sorted(graph.crossed))
    edges = ",".join(f"{u}-{v}" for (u, v) in graph.edges)
    decs = ",".join(f"{v}:{render_letter(l)}" for (v, l) in graph.decorations)
    return f"v1;{graph.n};{crossed};{edges};{decs}"


def decode(encoding: str) -> DecoratedGraph:
    """Inverse of `encode`; accepts any `v1` encoding."""
    tag, n_txt, crossed_txt, edges_txt, decs_txt = encoding.split(";")
    if tag != "v1":
        raise ValueError(f"unsupported encoding version {tag!r}")
    n = int(n_txt)
    crossed = frozenset(int(x) for x in crossed_txt.split(",") if x)
    edges = tuple(
        tuple(int(a) for a in item.split("-")) for item in edges_txt.split(",") if item
    )
    decs = tuple(
        (int(item.split(":")[0]), parse_letter(item.split(":")[1]))
        for item in decs_txt.split(",")
        if item
    )
    return DecoratedGraph(n=n, edges=edges, decorations=decs, crossed=crossed)


def _refine_colors(
    n: int,
    init: list,
    adjacency: dict[int, list[tuple[int, int]]],
) -> list[int]:
    """Iterative color refinement; returns integer colors sorted by color key."""
    keys = list(init)
    while True:
        order = sorted(set(keys))
        colors = [order.index(k) for k in keys]
        new_keys = []
        for v in range(n):
            neigh = sorted((colors[w], mult) for (w, mult) in adjacency.get(v, []))
            new_keys.append((colors[v], tuple(neigh)))
        if len(set(new_keys)) == len(set(keys)):
            final = sorted(set(new_keys))
            return [final.index(k) for k in new_keys]
        keys = new_keys


def _graph_adjacency(graph: DecoratedGraph) -> dict[int, list[tuple[int, int]]]:
    mult: dict[tuple[int, int], int] = {}
    for (u, v) in graph.edges:
        if u != v:
            mult[(u, v)] = mult.get((u, v), 0) + 1
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(graph.n)}
    for (u, v), k in mult.items():
        adj[u].append((v, k))
        adj[v].append((u, k))
    return adj


def _labelings(graph: DecoratedGraph):
    """All vertex labelings consistent with the stable coloring.

    Yields tuples ``sigma`` with ``sigma[old] = new``; generated by
    individualize-and-refine so that every automorphism image of the canonical
    labeling is among the candidates.
    """
    base = _base_colors(graph)
    adj = _graph_adjacency(graph)

    def search(colors: list[int]):
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        split = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                split = c
                break
        if split is None:
            sigma = [0] * graph.n
            for new, (_c, v) in enumerate(sorted((c, v) for v, c in enumerate(colors))):
                sigma[v] = new
            yield tuple(sigma)
            return
        for v in cells[split]:
            refined = _refine_colors(
                graph.n,
                [(colors[w], 1 if w == v else 0) for w in range(graph.n)],
                adj,
            )
            yield from search(refined)

    yield from search(_refine_colors(graph.n, base, adj))


def _relabel_and_sort(graph: DecoratedGraph, sigma: tuple[int, ...], parity: int):
    """Apply a vertex relabeling, sort edge/decoration lists, return graph + sign."""
    edges = [tuple(sorted((sigma[u], sigma[v]))) for (u, v) in graph.edges]
    order = sorted(range(len(edges)), key=lambda t: (edges[t], t))
    target = [0] * len(edges)
    for pos, t in enumerate(order):
        target[t] = pos
    sign = perm_parity_sign(_positions_to_perm(target))
    sorted_edges = tuple(edges[t] for t in order)

    decs = [(sigma[v], l) for (v, l) in graph.decorations]
    dorder = sorted(range(len(decs)), key=lambda s: (decs[s], s))
    dtarget = [0] * len(decs)
    for pos, s in enumerate(dorder):
        dtarget[s] = pos
    parities = [letter_parity(l, parity) for (_v, l) in decs]
    sign *= koszul_sign_of_reordering(parities, dtarget)
    sorted_decs = tuple(decs[s] for s in dorder)
    out = DecoratedGraph(
        n=graph.n,
        edges=sorted_edges,
        decorations=sorted_decs,
        crossed=frozenset(sigma[x] for x in graph.crossed),
    )
    return out, sign


def _has_odd_duplicate(graph: DecoratedGraph, parity: int) -> bool:
    """Duplicate odd items (parallel edges, repeated odd decorations) force Zero."""
    seen_edges = set()
    for e in graph.edges:
        if e in seen_edges:
            return True
        seen_edges.add(e)
    seen_decs = set()
    for (v, l) in graph.decorations:
        if letter_parity(l, parity) & 1:
            if (v, l) in seen_decs:
                return True
            seen_decs.add((v, l))
    return False


_CANON_CACHE: dict[tuple, CanonicalClass] = {}
_CANON_CACHE_CAP = 1_500_000


def _base_colors(graph: DecoratedGraph) -> list[tuple]:
    return [
        (
            v in graph.crossed,
            tuple(sorted(graph.letters_at(v))),
            graph.tadpoles_at(v),
            graph.half_edges_at(v),
        )
        for v in range(graph.n)
    ]


def canonical_form(graph: DecoratedGraph, parity: int) -> CanonicalClass:
    """Canonical representative encoding and orientation sign of a graph.

    Deterministic: ties between labelings are broken by the lexicographically
    least encoding over the refinement-stabilized orderings.  Returns sign 0
    (Zero) iff the class carries an odd automorphism.
    """
    key = (graph.n, graph.edges, graph.decorations, graph.crossed, parity & 1)
    hit = _CANON_CACHE.get(key)
    if hit is not None:
        return hit
    if len(_CANON_CACHE) > _CANON_CACHE_CAP:
        _CANON_CACHE.clear()
    if _has_odd_duplicate(graph, parity):
        result = CanonicalClass(encoding="", sign=ZERO)
        _CANON_CACHE[key] = result
        return result
    base = _base_colors(graph)
    if len(set(base)) == graph.n:
        # all vertices distinguishable: the color order is the one labeling
        # (it agrees with the refined-color order of the general search)
        sigma = [0] * graph.n
        for new, (_c, v) in enumerate(sorted((c, v) for v, c in enumerate(base))):
            sigma[v] = new
        relabeled, sign = _relabel_and_sort(graph, tuple(sigma), parity)
        result = CanonicalClass(encoding=encode(relabeled), sign=sign)
        _CANON_CACHE[key] = result
        return result
    best_enc: str | None = None
    best_signs: set[int] = set()
    for sigma in _labelings(graph):
        relabeled, sign = _relabel_and_sort(graph, sigma, parity)
        enc = encode(relabeled)
        if best_enc is None or enc < best_enc:
            best_enc = enc
            best_signs = {sign}
        elif enc == best_enc:
            best_signs.add(sign)
    assert best_enc is not None
    if len(best_signs) > 1:
        result = CanonicalClass(encoding=best_enc, sign=ZERO)
    else:
        result = CanonicalClass(encoding=best_enc, sign=best_signs.pop())
    _CANON_CACHE[key] = result
    return result


def canonical_form_bruteforce(graph: DecoratedGraph, parity: int) -> CanonicalClass:
    """Oracle: canonical form via all n! vertex permutations. Small n only."""
    if _has_odd_duplicate(graph, parity):
        return CanonicalClass(encoding="", sign=ZERO)
    best_enc: str | None = None
    best_signs: set[int] = set()
    for perm in itertools.permutations(range(graph.n)):
        relabeled, sign = _relabel_and_sort(graph, perm, parity)
        enc = encode(relabeled)
        if best_enc is None or enc < best_enc:
            best_enc = enc
            best_signs = {sign}
        elif enc == best_enc:
            best_signs.add(sign)
    assert best_enc is not None
    if len(best_signs) > 1:
        return CanonicalClass(encoding=best_enc, sign=ZERO)
    return CanonicalClass(encoding=best_enc, sign=best_signs.pop())


def automorphism_signs_bruteforce(graph: DecoratedGraph, parity: int) -> set[int]:
    """Signs of all automorphisms, by brute force over vertex permutations and
    all орientation matchings.  Used by the oracle tests."""
    # For each vertex permutation mapping the unordered structure to itself,
    # the edge/decoration reorderings are forced up to permutations of equal
    # items; equal odd items give both signs (hence Zero).
    signs: set[int] = set()
    base_sorted, base_sign = _relabel_and_sort(graph, tuple(range(graph.n)), parity)
    for perm in itertools.permutations(range(graph.n)):
        relabeled, sign = _relabel_and_sort(graph, perm, parity)
        if encode(relabeled) == encode(base_sorted) and relabeled.crossed == base_sorted.crossed:
            signs.add(sign * base_sign)
            if _has_odd_duplicate(graph, parity):
                signs.add(-sign * base_sign)
    return signs
