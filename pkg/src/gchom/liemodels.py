"""Graded dimensions of free Lie algebras, their quadratic quotients, the
W_g homotopy Lie models, and the numerical Koszul duality identity.

Free (super) Lie algebras on equi-parity generators are handled inside the
tensor algebra: elements are sparse integer vectors over words, the weight-k
piece is spanned by brackets of generators with a weight-(k-1) basis, and
bases/ranks come from exact integer row echelon.  The ideal generated by a
space R of quadratic relations has weight-k piece [L_{k-2}, R], computed
iteratively as brackets of generators with the previous ideal piece.

The numerical Koszul check: with generators of t in degree alpha = 1-m, the
Euler characteristic of the weight-W bar construction must match the Koszul
dual algebra dimension; equivalently, writing

    E(s) = prod_W (1 - s^W)^{d_W}      if alpha*W is even,
           prod_W (1 - s^W)^{-d_W}     if alpha*W is odd,

one needs E(s) = sum_W (-1)^{m W} a_W s^W through the checked order.  The
classical form h_{U(t)}(s) * h_A(-s) = 1 is recovered via h_U(s) = 1/E(-s).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

Word = tuple[int, ...]
Vector = dict[Word, int]


def bracket(x: Vector, y: Vector, gen_parity: int) -> Vector:
    """Super bracket in the tensor algebra; word parity = length * gen_parity."""
    out: Vector = {}
    for u, cu in x.items():
        for w, cw in y.items():
            sign = -1 if (gen_parity and (len(u) * len(w)) % 2) else 1
            k1 = u + w
            out[k1] = out.get(k1, 0) + cu * cw
            k2 = w + u
            out[k2] = out.get(k2, 0) - sign * cu * cw
    return {k: v for k, v in out.items() if v}


def _echelon(vectors: list[Vector]) -> list[Vector]:
    """Integer row echelon; returns an independent spanning subset (reduced)."""
    pivots: dict[Word, Vector] = {}
    basis: list[Vector] = []
    for vec in vectors:
        v = dict(vec)
        while v:
            lead = min(v)  # deterministic pivot choice: lexicographically least word
            if lead not in pivots:
                pivots[lead] = v
                basis.append(v)
                break
            piv = pivots[lead]
            a, b = piv[lead], v[lead]
            # v := a*v - b*piv  (integer combination killing the pivot)
            new = {}
            for k in set(v) | set(piv):
                val = a * v.get(k, 0) - b * piv.get(k, 0)
                if val:
                    new[k] = val
            v = new
        # zero vector: dependent, dropped
    return basis


def free_lie_weight_bases(dim: int, gen_parity: int, wmax: int) -> list[list[Vector]]:
    """Bases of the weight-1..wmax pieces of the free Lie algebra on ``dim``
    generators of parity ``gen_parity``."""
    gens = [{(i,): 1} for i in range(dim)]
    bases = [gens]
    for k in range(2, wmax + 1):
        candidates = []
        for gvec in gens:
            for u in bases[-1]:
                candidates.append(bracket(gvec, u, gen_parity))
        bases.append(_echelon(candidates))
    return bases


def free_lie_dims(dim: int, gen_parity: int, wmax: int) -> dict[int, int]:
    return {k + 1: len(b) for k, b in enumerate(free_lie_weight_bases(dim, gen_parity, wmax))}


@dataclass
class QuadraticPresentation:
    """FreeLie(V)/<R> with V of dimension ``dim`` and parity ``gen_parity``;
    the relations are weight-2 vectors in the tensor-word coordinates."""

    dim: int
    gen_parity: int
    relations: list[Vector]


def free_lie_quotient_dims(pres: QuadraticPresentation, wmax: int,
                           max_dim: int = 40) -> dict[int, int]:
    """Graded dims of FreeLie(V)/<R> through weight wmax (resource-capped)."""
    if pres.dim > max_dim:
        raise ValueError(f"generator space too large ({pres.dim} > {max_dim})")
    bases = free_lie_weight_bases(pres.dim, pres.gen_parity, wmax)
    gens = bases[0]
    out = {1: pres.dim}
    # check R really lies in the weight-2 Lie piece
    lie2 = _echelon([dict(v) for v in bases[1]]) if wmax >= 2 else []
    ideal_piece = _echelon([dict(r) for r in pres.relations])
    if wmax >= 2:
        combined = _echelon([dict(v) for v in lie2] + [dict(r) for r in ideal_piece])
        if len(combined) != len(lie2):
            raise ValueError("relations do not lie in the weight-2 Lie piece")
        out[2] = len(bases[1]) - len(ideal_piece)
    for k in range(3, wmax + 1):
        nxt = []
        for gvec in gens:
            for u in ideal_piece:
                nxt.append(bracket(gvec, u, pres.gen_parity))
        ideal_piece = _echelon(nxt)
        out[k] = len(bases[k - 1]) - len(ideal_piece)
    return out


# ---------------------------------------------------------------------------
# The W_g models
# ---------------------------------------------------------------------------


def symplectic_relation(g: int, parity: int) -> Vector:
    """sum g_ij [c_i, c_j] in tensor-word coordinates (generators 0..2g-1)."""
    from .differential import delta1_terms

    gen_parity = (1 - (parity & 1)) % 2
    out: Vector = {}
    for (i, j, gij) in delta1_terms(g, parity):
        br = bracket({(i,): 1}, {(j,): 1}, gen_parity)
        for k, v in br.items():
            out[k] = out.get(k, 0) + gij * v
    return {k: v for k, v in out.items() if v}


def w_model_dims(g: int, parity: int, wmax: int) -> dict[int, int]:
    """Graded dims of w_g = FreeLie(c_1..c_2g)/(sum g_ij [c_i,c_j])."""
    gen_parity = (1 - (parity & 1)) % 2
    rel = symplectic_relation(g, parity)
    pres = QuadraticPresentation(dim=2 * g, gen_parity=gen_parity,
                                 relations=[rel] if rel else [])
    return free_lie_quotient_dims(pres, wmax)


def wgfr_dims(g: int, parity: int, wmax: int) -> dict[int, int]:
    """Graded dims of the framed model hat-w_g^fr (central c in weight 2).

    Equal to the w_g quotient dims with one extra class in weight 2: when
    2 + (-1)^m 2g != 0 the relation absorbs c (net zero change in weight 2);
    otherwise (g = 1, m odd) c survives as a genuine central generator.  Both
    cases give quotient-dims + 1 at weight 2.
    """
    if wmax > 6:
        raise ValueError("wgfr_dims capped at weight 6")
    out = w_model_dims(g, parity, wmax)
    if wmax >= 2:
        out[2] = out.get(2, 0) + 1
    return out


# ---------------------------------------------------------------------------
# Truncated integer power series and the Koszul identity
# ---------------------------------------------------------------------------


def series_mul(a: list[int], b: list[int], order: int) -> list[int]:
    out = [0] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if not ai:
            continue
        for j, bj in enumerate(b[: order + 1 - i]):
            out[i + j] += ai * bj
    return out


def series_binomial_factor(W: int, d: int, order: int) -> list[int]:
    """(1 - s^W)^d for d of either sign, exact integer coefficients."""
    out = [0] * (order + 1)
    if d >= 0:
        for k in range(0, min(d, order // W) + 1):
            c = 1
            for t in range(k):
                c = c * (d - t) // (t + 1)
            out[W * k] += (-1) ** k * c
    else:
        e = -d
        for k in range(0, order // W + 1):
            c = 1
            for t in range(k):
                c = c * (e + t) // (t + 1)
            out[W * k] += c
    return out


def bar_euler_series(t_dims: dict[int, int], parity: int, order: int) -> list[int]:
    """E(s): weight-graded Euler characteristics of the bar construction."""
    alpha = 1 - (parity & 1)  # only the parity of alpha = 1-m matters
    out = [0] * (order + 1)
    out[0] = 1
    for W, d in sorted(t_dims.items()):
        if W > order or d == 0:
            continue
        exponent = d if (alpha * W) % 2 == 0 else -d
        out = series_mul(out, series_binomial_factor(W, exponent, order), order)
    return out


def koszul_identity_check(t_dims: dict[int, int], a_dims: dict[int, int],
                          parity: int, wmax: int) -> bool:
    """True iff the bar Euler characteristics match the Koszul dual dims
    through weight wmax (the h_{U(t)}(s) h_A(-s) = 1 identity)."""
    lhs = bar_euler_series(t_dims, parity, wmax)
    rhs = [0] * (wmax + 1)
    rhs[0] = 1
    for W in range(1, wmax + 1):
        a = a_dims.get(W, 0)
        rhs[W] = ((-1) ** W * a) if (parity & 1) else a
    return lhs == rhs


def pbw_hilbert_series(t_dims: dict[int, int], parity: int, order: int) -> list[int]:
    """h_{U(t)}(s) of the universal envelope by graded super PBW.

    h_U = 1/E(s) when the generators sit in even degree (m odd) and 1/E(-s)
    when they sit in odd degree (m even); only odd weights flip under s -> -s
    and those are exactly the odd-generator weights in the latter case.
    """
    e = bar_euler_series(t_dims, parity, order)
    if not (parity & 1):
        e = [(-1) ** i * c for i, c in enumerate(e)]
    # series inverse; e[0] == 1
    inv = [0] * (order + 1)
    inv[0] = 1
    for k in range(1, order + 1):
        acc = 0
        for j in range(1, k + 1):
            acc += e[j] * inv[k - j]
        inv[k] = -acc
    return inv
