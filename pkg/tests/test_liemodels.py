"""Free Lie algebras, the W_g models, PBW series, Koszul identity."""

from __future__ import annotations

import random

import pytest

from gchom.liemodels import (
    QuadraticPresentation,
    bar_euler_series,
    bracket,
    free_lie_dims,
    free_lie_quotient_dims,
    koszul_identity_check,
    pbw_hilbert_series,
    symplectic_relation,
    w_model_dims,
    wgfr_dims,
)


def test_free_lie_witt_numbers():
    # even generators: classical Witt dimensions
    assert free_lie_dims(2, 0, 5) == {1: 2, 2: 1, 3: 2, 4: 3, 5: 6}
    assert free_lie_dims(3, 0, 4) == {1: 3, 2: 3, 3: 8, 4: 18}


def test_free_super_lie_on_odd_generators():
    # one odd generator: [x,x] != 0 in weight 2, [x,[x,x]] = 0 in weight 3
    assert free_lie_dims(1, 1, 3) == {1: 1, 2: 1, 3: 0}
    assert free_lie_dims(2, 1, 4) == {1: 2, 2: 3, 3: 2, 4: 3}


def test_super_bracket_signs():
    x = {(0,): 1}
    assert bracket(x, x, 1) == {(0, 0): 2}  # odd: [x,x] = 2 x.x
    assert bracket(x, x, 0) == {}           # even: [x,x] = 0


def test_wgfr_examples():
    assert wgfr_dims(3, 1, 2) == {1: 6, 2: 15}
    assert wgfr_dims(1, 1, 3) == {1: 2, 2: 1, 3: 0}
    assert wgfr_dims(1, 0, 3) == {1: 2, 2: 3, 3: 0}


def test_quotient_free_case_and_caps():
    pres = QuadraticPresentation(dim=3, gen_parity=0, relations=[])
    assert free_lie_quotient_dims(pres, 3) == {1: 3, 2: 3, 3: 8}
    with pytest.raises(ValueError):
        free_lie_quotient_dims(
            QuadraticPresentation(dim=41, gen_parity=0, relations=[]), 2
        )
    # relations must live in the weight-2 Lie piece
    with pytest.raises(ValueError):
        free_lie_quotient_dims(
            QuadraticPresentation(dim=2, gen_parity=0,
                                  relations=[{(0, 1): 1}]), 2
        )


def test_quotient_matches_w_model():
    for (g, parity) in ((1, 1), (2, 1), (1, 0), (2, 0)):
        rel = symplectic_relation(g, parity)
        pres = QuadraticPresentation(dim=2 * g, gen_parity=(1 - parity) % 2,
                                     relations=[rel])
        assert free_lie_quotient_dims(pres, 3) == w_model_dims(g, parity, 3)


def test_quotient_monotone_under_larger_R():
    rng = random.Random(9)
    gens = 3
    basis2 = None
    for _ in range(6):
        from gchom.liemodels import free_lie_weight_bases

        bases = free_lie_weight_bases(gens, 0, 3)
        lie2 = bases[1]
        r1 = _random_combo(rng, lie2)
        r2 = _random_combo(rng, lie2)
        small = free_lie_quotient_dims(
            QuadraticPresentation(gens, 0, [r1]), 3)
        large = free_lie_quotient_dims(
            QuadraticPresentation(gens, 0, [r1, r2]), 3)
        assert all(large[w] <= small[w] for w in small)


def _random_combo(rng, basis):
    out = {}
    for vec in basis:
        c = rng.randint(-2, 2)
        for k, v in vec.items():
            out[k] = out.get(k, 0) + c * v
    return {k: v for k, v in out.items() if v}


def test_pbw_series_is_koszul_dual_of_cohomology():
    # PBW Hilbert series of w_g equals the expansion of 1/(1 - 2gs + s^2)
    for (g, parity) in ((1, 1), (2, 1), (3, 1), (1, 0), (2, 0)):
        dims = w_model_dims(g, parity, 4)
        h = pbw_hilbert_series(dims, parity, 4)
        target = [1, 2 * g]
        for k in range(2, 5):
            target.append(2 * g * target[k - 1] - target[k - 2])
        assert h == target, (g, parity)


def test_koszul_identity_free_and_controls():
    t = free_lie_dims(3, 0, 4)
    assert koszul_identity_check(t, {1: 3}, parity=1, wmax=4)
    assert not koszul_identity_check(t, {1: 3, 2: 1}, parity=1, wmax=4)
    # w_g against the cohomology algebra of W_g (dims 2g and 1)
    for (g, parity) in ((2, 1), (2, 0)):
        dims = w_model_dims(g, parity, 4)
        a = {1: 2 * g, 2: 1}
        assert koszul_identity_check(dims, a, parity, 4)


def test_bar_euler_series_free_lie_cyclotomic():
    # prod (1 - s^W)^{d_W} = 1 - n s for the free Lie algebra on n generators
    for n in (2, 3):
        dims = free_lie_dims(n, 0, 6)
        series = bar_euler_series(dims, parity=1, order=6)
        assert series == [1, -n] + [0] * 5
