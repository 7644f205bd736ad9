"""Characters, Weyl dimensions, decompositions, invariant theory."""

from __future__ import annotations

import math
import random

import pytest

from gchom.enumeration import ComplexSpec, StableSpec, enumerate_basis, enumerate_stable
from gchom.reptheory import (
    O,
    SP,
    chain_character,
    char_dim,
    char_exterior_square,
    char_mul,
    char_scale,
    char_sub,
    decompose,
    defining_character,
    elementary_character,
    equivariant_euler,
    invariant_dim,
    invariant_dim_bruteforce,
    irreducible_character,
    matching_count,
    monomial_of_encoding,
    weyl_dim,
)


def test_weyl_dims():
    assert weyl_dim((), 3, SP) == 1
    assert weyl_dim((1,), 3, SP) == 6  # defining representation
    assert weyl_dim((1, 1, 1), 3, SP) == 14  # C(6,3) - 6
    assert weyl_dim((1, 1), 3, SP) == 14  # C(6,2) - 1
    # O(g,g): Lambda^k is irreducible; (3) = ker(S^3 -> V)
    assert weyl_dim((1, 1), 4, O) == math.comb(8, 2)
    assert weyl_dim((3,), 2, O) == math.comb(6, 3) - 4


def test_weyl_dim_rejects_bad_weights():
    with pytest.raises(ValueError):
        weyl_dim((1, 2), 3, SP)  # not a partition
    with pytest.raises(ValueError):
        weyl_dim((1, 1, 1, 1), 3, SP)  # exceeds rank


def test_decompose_tensor_square():
    g = 3
    V = defining_character(g)
    assert decompose(char_mul(V, V), g, SP) == {(): 1, (2,): 1, (1, 1): 1}


def test_decompose_wedge2_lambda3():
    g = 6
    chi3 = char_sub(elementary_character(g, 3), elementary_character(g, 1))
    dec = decompose(char_exterior_square(chi3), g, SP)
    assert dec == {
        (): 1, (1, 1): 1, (1, 1, 1, 1): 1, (1, 1, 1, 1, 1, 1): 1,
        (2, 2): 1, (2, 2, 1, 1): 1,
    }


def test_decompose_zero_and_errors():
    assert decompose({}, 3, SP) == {}
    with pytest.raises(ValueError):
        decompose({(1, 0, 0): 1}, 3, SP)  # not Weyl symmetric


def test_irreducible_character_roundtrip():
    for g in (2, 3):
        for lam in ((), (1,), (2,), (1, 1), (2, 1), (2, 2)):
            if len(lam) > g:
                continue
            chi = dict(irreducible_character(lam, g, SP))
            assert decompose(chi, g, SP) == {lam: 1} if lam else {(): 1}
            assert char_dim(chi) == weyl_dim(lam, g, SP)


def test_virtual_character_dimension_reconstruction():
    rng = random.Random(3)
    g = 2
    for _ in range(10):
        chi = {}
        for lam in ((), (1,), (1, 1), (2,)):
            m = rng.randint(-2, 2)
            if m:
                chi = dict(chi)
                for k, v in irreducible_character(lam, g, SP):
                    chi[k] = chi.get(k, 0) + m * v
        chi = {k: v for k, v in chi.items() if v}
        dec = decompose(chi, g, SP)
        assert sum(m * weyl_dim(l, g, SP) for l, m in dec.items()) == char_dim(chi)


def test_chain_characters():
    # the tadpole stratum carries the defining character
    basis = enumerate_basis(ComplexSpec("gc1tp", "connected", 3, "odd", 1))
    chi = chain_character(basis.strata[1], 3)
    assert chi == defining_character(3)
    # evaluated at x = 1 the character is the stratum dimension
    chi0 = chain_character(basis.strata[0], 3)
    assert char_dim(chi0) == 20
    # kappa_1 carries the trivial character
    kb = enumerate_stable(StableSpec("k", 0, 2))
    assert monomial_of_encoding("v1;1;;;0:w", 2) == (0, 0)


def test_equivariant_euler_weight1():
    g = 3
    basis = enumerate_basis(ComplexSpec("gc1tp", "connected", g, "odd", 1))
    euler = equivariant_euler(basis, g)
    assert decompose(euler, g, SP) == {(1, 1, 1): 1}


def test_equivariant_euler_weight2():
    g = 3
    basis = enumerate_basis(ComplexSpec("gc1tp", "connected", g, "odd", 2))
    euler = equivariant_euler(basis, g)
    dec = decompose(char_scale(euler, -1), g, SP)
    assert dec == {(): 1, (1, 1): 1, (2, 2): 1}
    total = sum(m * weyl_dim(l, g, SP) for l, m in dec.items())
    assert total == 105
    gx = enumerate_basis(ComplexSpec("gcex", "connected", g, "odd", 2))
    assert decompose(char_scale(equivariant_euler(gx, g), -1), g, SP) == {(2, 2): 1}


def test_matching_count():
    assert [matching_count(n) for n in (1, 2, 3, 4)] == [1, 3, 15, 105]


def test_invariant_dims_boundary():
    for group in (SP, O):
        for N in (1, 2, 3):
            for g in range(N, N + 2):
                assert invariant_dim(g, N, group) == matching_count(N)
    assert invariant_dim(1, 2, SP) == 2  # strictly below 3
    assert invariant_dim(1, 3, SP) < 15
    assert invariant_dim(2, 4, SP) < 105


def test_invariant_oracle_agreement():
    for group in (SP, O):
        for (g, N) in ((1, 1), (1, 2), (2, 1), (2, 2), (1, 3)):
            assert invariant_dim(g, N, group) == invariant_dim_bruteforce(g, N, group)
