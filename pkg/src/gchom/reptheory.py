"""Character arithmetic for Sp(2g) and O(g,g).

Characters are sparse Laurent polynomials in the torus variables x_1..x_g,
stored as dicts mapping integer exponent vectors to integer coefficients.
The group is Sp(2g) for m odd (the middle intersection form of W_g is then
antisymmetric) and O(g,g) for m even; decompositions use the Weyl alternant
extraction

    m_lambda = [x^(lambda+rho)] (chi * A_rho) = sum_w eps(w) chi[lambda+rho-w(rho)],

which needs no polynomial division.  For O(g,g) the torus/Weyl data is that of
SO(g,g) (type D); partitions with fewer than g rows restrict irreducibly from
O(g,g) to SO(g,g), and partitions with g nonzero rows are reported as the
det-conjugate pair (dimension twice the type-D Weyl formula), which is how
they occur inside genuine O(g,g)-characters.

Invariant dimensions of V^{2N} are computed as the rank of the (2N-1)!!
perfect-matching vectors (the classical invariant-theory map is always
surjective); a small-scale oracle solves the fixed-point equations on the
zero-weight subspace directly.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .linalg import PRIMES_31, SparseIntMatrix, rank_dense_modp, rank_modp

Monomial = tuple[int, ...]
Character = dict[Monomial, int]

SP, O = "sp", "o"


def group_for_parity(parity: int) -> str:
    return SP if parity % 2 == 1 else O


# ---------------------------------------------------------------------------
# Laurent polynomial helpers
# ---------------------------------------------------------------------------


def char_zero() -> Character:
    return {}


def char_one(g: int) -> Character:
    return {(0,) * g: 1}


def char_add(a: Character, b: Character) -> Character:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def char_scale(a: Character, c: int) -> Character:
    return {k: c * v for k, v in a.items() if c * v}


def char_sub(a: Character, b: Character) -> Character:
    return char_add(a, char_scale(b, -1))


def char_mul(a: Character, b: Character) -> Character:
    out: Character = {}
    if len(a) > len(b):
        a, b = b, a
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            out[k] = out.get(k, 0) + va * vb
    return {k: v for k, v in out.items() if v}


def char_pow(a: Character, n: int, g: int) -> Character:
    out = char_one(g)
    base = dict(a)
    while n:
        if n & 1:
            out = char_mul(out, base)
        n >>= 1
        if n:
            base = char_mul(base, base)
    return out


def char_substitute_power(a: Character, k: int) -> Character:
    """chi(x^k): substitute each variable by its k-th power."""
    return {tuple(k * e for e in key): v for key, v in a.items()}


def char_dim(a: Character) -> int:
    return sum(a.values())


def char_exterior_square(a: Character) -> Character:
    sq = char_mul(a, a)
    tw = char_substitute_power(a, 2)
    out = char_sub(sq, tw)
    assert all(v % 2 == 0 for v in out.values())
    return {k: v // 2 for k, v in out.items()}


def char_symmetric_square(a: Character) -> Character:
    sq = char_mul(a, a)
    tw = char_substitute_power(a, 2)
    out = char_add(sq, tw)
    assert all(v % 2 == 0 for v in out.values())
    return {k: v // 2 for k, v in out.items()}


def defining_character(g: int) -> Character:
    out: Character = {}
    for i in range(g):
        for s in (1, -1):
            key = tuple(s if j == i else 0 for j in range(g))
            out[key] = 1
    return out


def elementary_character(g: int, k: int) -> Character:
    """e_k of the 2g eigenvalues x_i, x_i^{-1} (the character of Lambda^k V)."""
    out: Character = {}
    vals = [(i, s) for i in range(g) for s in (1, -1)]
    for combo in itertools.combinations(vals, k):
        key = [0] * g
        for (i, s) in combo:
            key[i] += s
        out[tuple(key)] = out.get(tuple(key), 0) + 1
    return {k2: v for k2, v in out.items() if v}


def is_weyl_symmetric(a: Character, g: int, group: str) -> bool:
    """Invariance under coordinate permutations and all sign flips.

    Genuine O(g,g)-characters are invariant under the full hyperoctahedral
    group (conjugation by O-elements), so the same test serves both types.
    Checked via an orbit census: every hyperoctahedral orbit must be fully
    present with one common coefficient.
    """
    import math as _math

    groups: dict[tuple, list[int]] = {}
    for key, v in a.items():
        canon = tuple(sorted((abs(e) for e in key), reverse=True))
        groups.setdefault(canon, []).append(v)
    for canon, coeffs in groups.items():
        if len(set(coeffs)) != 1:
            return False
        size = _math.factorial(g)
        seen: dict[int, int] = {}
        for e in canon:
            seen[e] = seen.get(e, 0) + 1
        for m in seen.values():
            size //= _math.factorial(m)
        size *= 2 ** sum(1 for e in canon if e)
        if len(coeffs) != size:
            return False
    return True


# ---------------------------------------------------------------------------
# Weyl group data and decomposition
# ---------------------------------------------------------------------------


def _rho(g: int, group: str) -> tuple[int, ...]:
    if group == SP:
        return tuple(range(g, 0, -1))
    return tuple(range(g - 1, -1, -1))


@lru_cache(maxsize=None)
def _weyl_orbit_of_rho(g: int, group: str) -> list[tuple[tuple[int, ...], int]]:
    """(w(rho), eps(w)) over the Weyl group: signed permutations, with an even
    number of sign flips for type D."""
    rho = _rho(g, group)
    out = []
    for perm in itertools.permutations(range(g)):
        psign = perm_sign(perm)
        for flips in itertools.product((1, -1), repeat=g):
            nflips = sum(1 for f in flips if f == -1)
            if group == O and nflips % 2 == 1:
                continue
            vec = tuple(flips[i] * rho[perm[i]] for i in range(g))
            eps = psign * ((-1) ** nflips if group == SP else 1)
            out.append((vec, eps))
    return out


def perm_sign(perm) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def weight_to_partition(coeffs: dict[int, int] | list[int], g: int) -> tuple[int, ...]:
    """Fundamental-weight coefficients {k: c_k} -> partition row lengths."""
    if isinstance(coeffs, dict):
        items = coeffs.items()
    else:
        items = [(i + 1, c) for i, c in enumerate(coeffs)]
    rows = [0] * g
    for k, c in items:
        if not (1 <= k <= g):
            raise ValueError(f"fundamental weight index {k} exceeds rank {g}")
        for i in range(k):
            rows[i] += c
    return tuple(rows)


def weyl_dim(partition, g: int, group: str) -> int:
    """Dimension of the irreducible with the given highest weight (partition).

    Type C (Sp(2g)) or type D; for O(g,g) with fewer than g rows this is the
    O-irreducible dimension, and with g nonzero rows the dimension of the
    det-conjugate pair is twice this value.
    """
    lam = tuple(partition) + (0,) * (g - len(partition))
    if len(lam) > g or any(lam[i] < lam[i + 1] for i in range(g - 1)) or lam[-1] < 0:
        raise ValueError(f"invalid highest weight {partition} for rank {g}")
    rho = _rho(g, group)
    lr = [lam[i] + rho[i] for i in range(g)]
    num, den = 1, 1
    for i in range(g):
        for j in range(i + 1, g):
            num *= (lr[i] - lr[j]) * (lr[i] + lr[j])
            den *= (rho[i] - rho[j]) * (rho[i] + rho[j])
    if group == SP:
        for i in range(g):
            num *= lr[i]
            den *= rho[i]
    assert num % den == 0
    return num // den


def decompose(chi: Character, g: int, group: str) -> dict[tuple[int, ...], int]:
    """Expansion of a Weyl-symmetric virtual character in irreducibles.

    Returns partition -> multiplicity (possibly negative).  Verified
    internally: the multiplicities must reproduce the dimension chi(1,..,1).
    """
    if not chi:
        return {}
    if not is_weyl_symmetric(chi, g, group):
        raise ValueError("character is not Weyl-symmetric")
    maxsum = max(sum(abs(e) for e in key) for key in chi)
    rho = _rho(g, group)
    orbit = _weyl_orbit_of_rho(g, group)
    out: dict[tuple[int, ...], int] = {}
    for lam in _partitions_up_to(maxsum, g):
        target = tuple(lam[i] + rho[i] for i in range(g))
        m = 0
        for (wrho, eps) in orbit:
            key = tuple(target[i] - wrho[i] for i in range(g))
            c = chi.get(key)
            if c:
                m += eps * c
        if m:
            out[_trim(lam)] = m
    # dimension audit; det-conjugate pairs (type D, g nonzero rows) count twice
    total = 0
    for lam, mult in out.items():
        d = weyl_dim(lam, g, group)
        if group == O and len(lam) == g and lam[-1] > 0:
            d *= 2
        total += mult * d
    if total != char_dim(chi):
        raise AssertionError(
            f"decomposition dimension mismatch: {total} != {char_dim(chi)}"
        )
    return out


def _trim(lam) -> tuple[int, ...]:
    lam = list(lam)
    while lam and lam[-1] == 0:
        lam.pop()
    return tuple(lam)


def _partitions_up_to(n: int, maxparts: int):
    """All partitions with at most maxparts parts and total <= n."""

    def rec(remaining, maxpart, acc):
        yield tuple(acc) + (0,) * (maxparts - len(acc))
        if len(acc) == maxparts:
            return
        for p in range(min(remaining, maxpart), 0, -1):
            acc.append(p)
            yield from rec(remaining - p, p, acc)
            acc.pop()

    seen = set()
    for lam in rec(n, n, []):
        if lam not in seen:
            seen.add(lam)
            yield lam


@lru_cache(maxsize=None)
def irreducible_character(lam: tuple[int, ...], g: int, group: str) -> tuple:
    """Character of the irreducible with highest weight lam (as sorted items).

    Built recursively: a suitable product of fundamental characters has lam as
    its highest weight with multiplicity one; lower terms are subtracted.
    """
    lam = _trim(lam)
    if not lam:
        return tuple(char_one(g).items())
    if sum(lam) > 0 and len(lam) > g:
        raise ValueError("weight exceeds rank")
    # column multiplicities: lam has columns of heights lam'_1 >= lam'_2 ...
    conj = []
    for c in range(1, (lam[0] if lam else 0) + 1):
        conj.append(sum(1 for r in lam if r >= c))
    prod = char_one(g)
    for height in conj:
        prod = char_mul(prod, _fundamental_character(height, g, group))
    rest = decompose(prod, g, group)
    chi = dict(prod)
    for mu, mult in rest.items():
        if _trim(mu) == lam:
            assert mult == 1, f"leading multiplicity {mult} for {lam}"
            continue
        chi = char_sub(chi, char_scale(dict(irreducible_character(_trim(mu), g, group)), mult))
    return tuple(sorted(chi.items()))


@lru_cache(maxsize=None)
def _fundamental_character(k: int, g: int, group: str) -> Character:
    """Character with highest weight (1^k): e_k - e_{k-2} for Sp, e_k for O."""
    if group == SP:
        out = elementary_character(g, k)
        if k >= 2:
            out = char_sub(out, elementary_character(g, k - 2))
        return out
    return elementary_character(g, k)


# ---------------------------------------------------------------------------
# Chain characters
# ---------------------------------------------------------------------------


def monomial_of_encoding(encoding: str, g: int) -> Monomial:
    """Torus weight of a decorated class: A(i) -> +e_i, B(i) -> -e_i, w/x -> 0."""
    from .graphs import decode

    graph = decode(encoding)
    key = [0] * g
    for (_v, letter) in graph.decorations:
        if letter >= 0:
            if letter < g:
                key[letter] += 1
            else:
                key[letter - g] -= 1
    return tuple(key)


def chain_character(encodings, g: int) -> Character:
    """Sum of the torus monomials of the listed canonical classes."""
    out: Character = {}
    for enc in encodings:
        key = monomial_of_encoding(enc, g)
        out[key] = out.get(key, 0) + 1
    return {k: v for k, v in out.items() if v}


def equivariant_euler(basis, g: int) -> Character:
    """Alternating sum over E-strata of the stratum characters."""
    out: Character = {}
    for E, encs in basis.strata.items():
        sign = -1 if E % 2 else 1
        out = char_add(out, char_scale(chain_character(encs, g), sign))
    return out


# ---------------------------------------------------------------------------
# Invariant theory
# ---------------------------------------------------------------------------


def matching_count(N: int) -> int:
    out = 1
    for k in range(2 * N - 1, 0, -2):
        out *= k
    return out


def _gram_matrix_entries(g: int, parity: int):
    sign_m = -1 if parity else 1
    entries = {}
    for k in range(g):
        entries[(k, k + g)] = sign_m
        entries[(k + g, k)] = 1
    return entries


def _perfect_matchings(slots: int):
    if slots % 2:
        return
    items = list(range(slots))

    def rec(rest):
        if not rest:
            yield []
            return
        a = rest[0]
        for i in range(1, len(rest)):
            b = rest[i]
            for m in rec(rest[1:i] + rest[i + 1 :]):
                yield [(a, b)] + m

    yield from rec(items)


def invariant_dim(g: int, N: int, group: str, prime: int | None = None) -> int:
    """dim (V_g^{2N})^{OSp_g} as the rank of the perfect-matching vectors.

    The classical map from matchings onto the invariants is surjective for all
    g, N, so the rank of the (2N-1)!! matching vectors is the dimension.
    Large tensor spaces use a random-projection certificate: a projection can
    only lower the rank, so full projected rank is a proof; otherwise the
    exact sparse rank is computed.
    """
    import numpy as np

    p = prime or PRIMES_31[0]
    parity = 1 if group == SP else 0
    gram = _gram_matrix_entries(g, parity)
    gi = np.array([i for (i, _j) in gram], dtype=np.int64)
    gj = np.array([j for (_i, j) in gram], dtype=np.int64)
    gv = np.array([v for v in gram.values()], dtype=np.int64)
    B = 2 * g
    matchings = list(_perfect_matchings(2 * N))
    all_rows, all_cols, all_vals = [], [], []
    for c, matching in enumerate(matchings):
        idx = np.zeros(1, dtype=np.int64)
        val = np.ones(1, dtype=np.int64)
        for (a, b) in matching:
            contrib = gi * (B ** a) + gj * (B ** b)
            idx = (idx[:, None] + contrib[None, :]).ravel()
            val = (val[:, None] * gv[None, :]).ravel()
        all_rows.append(idx)
        all_cols.append(np.full(idx.shape, c, dtype=np.int64))
        all_vals.append(val)
    rows = np.concatenate(all_rows)
    cols = np.concatenate(all_cols)
    vals = np.concatenate(all_vals) % p
    uniq, rids = np.unique(rows, return_inverse=True)
    n_rows, n_cols = len(uniq), len(matchings)
    if n_rows <= 30000:
        dense = np.zeros((n_rows, n_cols), dtype=np.int64)
        np.add.at(dense, (rids, cols), vals)
        return rank_dense_modp(dense % p, p)
    # random-projection certificate (rank can only drop under projection)
    rng = np.random.default_rng(12345)
    best = 0
    for _attempt in range(3):
        k = n_cols + 16
        proj = np.zeros((k, n_cols), dtype=np.int64)
        for row_block in range(k):
            weights = rng.integers(0, p, size=n_rows, dtype=np.int64)
            contrib = (weights[rids] * vals) % p
            np.add.at(proj[row_block], cols, contrib)
        r = rank_dense_modp(proj % p, p)
        best = max(best, r)
        if best == n_cols:
            return best
    # fall back to the exact sparse rank
    entries = [(int(r), int(c), int(v)) for r, c, v in zip(rids, cols, vals) if v]
    mat = SparseIntMatrix(rows=n_rows, cols=n_cols, entries=entries)
    return rank_modp(mat, p)


def invariant_dim_bruteforce(g: int, N: int, group: str,
                             prime: int | None = None,
                             max_zero_weight: int = 8000) -> int:
    """Oracle: invariants as the zero-weight vectors killed by the raising
    operators (plus, for O(g,g), fixed by one orientation-reversing swap)."""
    p = prime or PRIMES_31[1]
    dim = 2 * g
    slots = 2 * N
    # zero-weight tensor basis
    def weight(letter: int) -> int:
        return letter if letter < g else -(letter - g)

    basis: list[tuple[int, ...]] = []
    for word in itertools.product(range(dim), repeat=slots):
        tot = [0] * g
        for letter in word:
            if letter < g:
                tot[letter] += 1
            else:
                tot[letter - g] -= 1
        if all(t == 0 for t in tot):
            basis.append(word)
    if len(basis) > max_zero_weight:
        raise ResourceWarning(f"zero-weight space too large: {len(basis)}")
    index = {w: i for i, w in enumerate(basis)}

    ops = _raising_operators(g, group)
    if group == O:
        # adjoin the reflection swapping a_g <-> b_g as (reflection - identity)
        pass
    rows: list[dict[int, int]] = []
    for op in ops:
        images: dict[tuple, dict[int, int]] = {}
        for w, i in index.items():
            for s in range(slots):
                for (to_letter, coeff) in op.get(w[s], ()):  # op acts on one slot
                    w2 = w[:s] + (to_letter,) + w[s + 1 :]
                    images.setdefault(w2, {})[i] = images.setdefault(w2, {}).get(i, 0) + coeff
        for w2, row in images.items():
            rows.append(row)
    if group == O:
        for w, i in index.items():
            w2 = tuple(
                (g - 1 + g) if l == g - 1 else (g - 1) if l == g - 1 + g else l
                for l in w
            )
            if w2 in index:
                j = index[w2]
                row = {i: 1}
                row[j] = row.get(j, 0) - 1
                if any(row.values()):
                    rows.append(row)
    entries = []
    for r, row in enumerate(rows):
        for c, v in row.items():
            if v:
                entries.append((r, c, v))
    mat = SparseIntMatrix(rows=len(rows), cols=len(basis), entries=entries)
    return len(basis) - rank_modp(mat, p) if entries else len(basis)


def _raising_operators(g: int, group: str):
    """Chevalley raising generators acting on the defining basis
    a_0..a_{g-1}, b_0..b_{g-1}; each maps letter -> ((letter', coeff), ...)."""
    ops = []
    # simple roots e_i - e_{i+1}: a_{i+1} -> a_i, b_i -> -b_{i+1}
    for i in range(g - 1):
        op = {
            i + 1: ((i, 1),),
            g + i: ((g + i + 1, -1),),
        }
        ops.append(op)
    if group == SP:
        if g >= 1:
            ops.append({2 * g - 1: ((g - 1, 1),)})  # 2e_g: b_g -> a_g
    else:
        if g >= 2:
            # e_{g-1} + e_g: b_{g-1} -> a_g, b_g -> -a_{g-1}
            ops.append({
                g + g - 2: ((g - 1, 1),),
                g + g - 1: ((g - 2, -1),),
            })
    return ops
