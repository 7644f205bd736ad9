"""Canonical forms, orientation signs, gradings, admissibility."""

from __future__ import annotations

import itertools
import random

import pytest

from gchom.graphs import (
    CROSS,
    OMEGA,
    DecoratedGraph,
    automorphism_signs_bruteforce,
    canonical_form,
    canonical_form_bruteforce,
    decode,
    encode,
    grading_of,
    is_admissible,
    orientation_sign,
)


def triangle(decorations=((0, 0), (1, 1), (2, 2))):
    return DecoratedGraph(n=3, edges=((0, 1), (0, 2), (1, 2)), decorations=decorations)


def test_orientation_sign_identity():
    g = triangle()
    assert orientation_sign(g, (0, 1, 2), (0, 1, 2), (0, 1, 2), parity=1) == 1


def test_orientation_sign_edge_swap_is_odd():
    # the vertex transposition 1 <-> 2 swaps the two edges at vertex 0
    g = DecoratedGraph(n=3, edges=((0, 1), (0, 2), (1, 2)), decorations=())
    assert orientation_sign(g, (0, 2, 1), (1, 0, 2), (), parity=1) == -1
    assert orientation_sign(g, (0, 2, 1), (1, 0, 2), (), parity=0) == -1


def test_orientation_sign_decoration_swap_parity_dependent():
    # two equal degree-m decorations at one vertex; swapping them is Koszul
    g = DecoratedGraph(n=1, edges=(), decorations=((0, 5), (0, 5)))
    assert orientation_sign(g, (0,), (), (1, 0), parity=1) == -1
    assert orientation_sign(g, (0,), (), (1, 0), parity=0) == 1


def test_orientation_sign_rejects_non_isomorphism():
    g = triangle()
    with pytest.raises(ValueError):
        orientation_sign(g, (1, 0, 2), (0, 1, 2), (0, 1, 2), parity=1)


def test_double_edge_is_zero():
    g = DecoratedGraph(n=2, edges=((0, 1), (0, 1)), decorations=((0, 0), (1, 1)))
    for parity in (0, 1):
        assert canonical_form(g, parity).sign == 0


def test_dumbbell_is_zero():
    g = DecoratedGraph(n=2, edges=((0, 0), (0, 1), (1, 1)), decorations=())
    for parity in (0, 1):
        assert canonical_form(g, parity).sign == 0


def test_tadpole_generator_survives():
    g = DecoratedGraph(n=1, edges=((0, 0),), decorations=((0, 0),))
    cf = canonical_form(g, 1)
    assert cf.sign in (1, -1)
    assert cf.encoding


def test_gradings():
    one_vertex_three = DecoratedGraph(n=1, edges=(), decorations=((0, 0), (0, 1), (0, 2)))
    gr = grading_of(one_vertex_three)
    assert (gr.W, gr.E) == (1, 0)
    assert gr.gc_degree(m=1) == 0  # degree 1-m for m=1

    crossed = DecoratedGraph(n=1, edges=(), decorations=((0, CROSS), (0, 0)),
                             crossed=frozenset({0}))
    gr = grading_of(crossed)
    assert (gr.W, gr.E) == (1, -1)
    assert gr.chain_degree(m=1) == 2  # m + 1

    four = DecoratedGraph(n=1, edges=(), decorations=tuple((0, i) for i in range(4)))
    gr = grading_of(four)
    assert (gr.W, gr.E) == (2, 0)


def test_admissibility():
    tadpole = DecoratedGraph(n=1, edges=((0, 0),), decorations=((0, 0),))
    assert is_admissible(tadpole, "gc1tp", "connected", g=1)
    assert not is_admissible(tadpole, "gc1", "connected", g=1)

    two_dec = DecoratedGraph(n=1, edges=(), decorations=((0, 0), (0, 1)))
    assert not is_admissible(two_dec, "gc1tp", "connected", g=1)  # valence 2

    two_comp = DecoratedGraph(
        n=2, edges=(), decorations=tuple((v, i) for v in (0, 1) for i in range(3))
    )
    assert not is_admissible(two_comp, "gc1", "connected", g=3)
    assert is_admissible(two_comp, "gc1", "ce", g=3)

    omega = DecoratedGraph(n=1, edges=(), decorations=((0, OMEGA), (0, 0), (0, 1)))
    assert is_admissible(omega, "gcex", "connected", g=1)
    assert not is_admissible(omega, "gc1", "connected", g=1)


def test_encode_decode_roundtrip():
    g = DecoratedGraph(
        n=3,
        edges=((0, 1), (1, 2)),
        decorations=((0, 0), (0, OMEGA), (1, 3), (2, CROSS)),
        crossed=frozenset({2}),
    )
    assert decode(encode(g)) == g


def _random_graph(rng: random.Random, max_letters: int = 4) -> DecoratedGraph:
    n = rng.randint(1, 5)
    slots = [(i, j) for i in range(n) for j in range(i, n)]
    k = rng.randint(0, min(len(slots), 6))
    edges = tuple(sorted(rng.sample(slots, k)))
    decs = tuple(
        sorted((rng.randrange(n), rng.randrange(max_letters)) for _ in range(rng.randint(0, 4)))
    )
    return DecoratedGraph(n=n, edges=edges, decorations=decs)


def _random_relabel(rng: random.Random, g: DecoratedGraph) -> DecoratedGraph:
    sigma = list(range(g.n))
    rng.shuffle(sigma)
    edges = [tuple(sorted((sigma[u], sigma[v]))) for (u, v) in g.edges]
    eperm = list(range(len(edges)))
    rng.shuffle(eperm)
    new_edges = [None] * len(edges)
    for t, pos in enumerate(eperm):
        new_edges[pos] = edges[t]
    decs = [(sigma[v], l) for (v, l) in g.decorations]
    dperm = list(range(len(decs)))
    rng.shuffle(dperm)
    new_decs = [None] * len(decs)
    for s, pos in enumerate(dperm):
        new_decs[pos] = decs[s]
    return DecoratedGraph(n=g.n, edges=tuple(new_edges), decorations=tuple(new_decs),
                          crossed=frozenset(sigma[x] for x in g.crossed))


def test_canonical_form_constant_on_orbits():
    rng = random.Random(7)
    for _ in range(300):
        g = _random_graph(rng)
        parity = rng.randint(0, 1)
        h = _random_relabel(rng, g)
        cf_g = canonical_form(g, parity)
        cf_h = canonical_form(h, parity)
        assert cf_g.encoding == cf_h.encoding or (cf_g.sign == 0 and cf_h.sign == 0)
        assert (cf_g.sign == 0) == (cf_h.sign == 0)


def test_canonical_form_matches_bruteforce():
    # the fast form minimizes over refinement-stabilized orderings; the brute
    # form over all labelings.  They must classify isomorphism identically,
    # agree on Zero, and assign the same relative sign to any relabeling.
    rng = random.Random(11)
    for _ in range(200):
        g = _random_graph(rng)
        parity = rng.randint(0, 1)
        h = _random_relabel(rng, g)
        fg, fh = canonical_form(g, parity), canonical_form(h, parity)
        sg, sh = canonical_form_bruteforce(g, parity), canonical_form_bruteforce(h, parity)
        assert (fg.sign == 0) == (sg.sign == 0)
        if fg.sign == 0:
            continue
        assert fg.encoding == fh.encoding and sg.encoding == sh.encoding
        assert fg.sign * fh.sign == sg.sign * sh.sign


def test_zero_iff_odd_automorphism():
    rng = random.Random(13)
    for _ in range(150):
        g = _random_graph(rng)
        parity = rng.randint(0, 1)
        cf = canonical_form(g, parity)
        signs = automorphism_signs_bruteforce(g, parity)
        assert (cf.sign == 0) == (-1 in signs)


def test_exhaustive_small_shapes():
    # every edge subset on <= 3 vertices, decorations over a 2-letter
    # alphabet: Zero-detection must match the brute automorphism enumeration
    for n in (1, 2, 3):
        slots = [(i, j) for i in range(n) for j in range(i, n)]
        for k in range(0, min(4, len(slots)) + 1):
            for edges in itertools.combinations(slots, k):
                for decs in itertools.combinations_with_replacement(
                    [(v, l) for v in range(n) for l in (0, 1)], 2
                ):
                    g = DecoratedGraph(n=n, edges=edges, decorations=tuple(sorted(decs)))
                    for parity in (0, 1):
                        fast = canonical_form(g, parity)
                        signs = automorphism_signs_bruteforce(g, parity)
                        assert (fast.sign == 0) == (-1 in signs)
