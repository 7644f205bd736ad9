"""Exact rank machinery: modular, fraction-free, consensus, reports."""

from __future__ import annotations

import random

import pytest

from gchom.linalg import (
    DimReport,
    PRIMES_31,
    RankConsensusError,
    SparseIntMatrix,
    rank_bareiss,
    rank_dense_modp,
    rank_exact,
    rank_modp,
    sparse_product_is_zero,
)


def _matrix(rows, cols, entries):
    return SparseIntMatrix(rows=rows, cols=cols, entries=entries)


def test_rank_trivial_cases():
    assert rank_modp(_matrix(3, 3, []), PRIMES_31[0]) == 0
    eye = _matrix(4, 4, [(i, i, 1) for i in range(4)])
    assert rank_modp(eye, PRIMES_31[0]) == 4
    diag = _matrix(3, 3, [(0, 0, 2), (1, 1, 4), (2, 2, 6)])
    assert rank_modp(diag, PRIMES_31[0]) == 3
    assert rank_bareiss(diag) == 3


def test_prime_must_be_large():
    with pytest.raises(ValueError):
        rank_modp(_matrix(1, 1, [(0, 0, 1)]), 97)


def test_modular_vs_fraction_free_random():
    rng = random.Random(5)
    for _ in range(60):
        rows, cols = rng.randint(1, 8), rng.randint(1, 8)
        entries = [
            (r, c, rng.randint(-9, 9))
            for r in range(rows)
            for c in range(cols)
            if rng.random() < 0.5
        ]
        mat = _matrix(rows, cols, entries)
        ff = rank_bareiss(mat)
        for p in PRIMES_31[:2]:
            assert rank_modp(mat, p) == ff  # small entries: no bad primes here
        import numpy as np

        assert rank_dense_modp(np.array(mat.to_dense()), PRIMES_31[0]) == ff


def test_bad_prime_is_excluded():
    # entries divisible by a chosen pool prime: that prime undershoots, the
    # consensus keeps the correct rank
    p0 = PRIMES_31[0]
    mat = _matrix(2, 2, [(0, 0, p0), (1, 1, 1)])
    assert rank_modp(mat, p0) == 1
    result = rank_exact(mat, seed=3)
    assert result.rank == 2
    assert result.certified  # small matrix: fraction-free certification


def test_rank_exact_methods():
    mat = _matrix(3, 2, [(0, 0, 1), (1, 1, 2), (2, 1, 4)])
    res = rank_exact(mat)
    assert res.rank == 2
    assert res.method == "FRACTION_FREE"
    big_entries = [(i, j, 1 + i * j) for i in range(60) for j in range(50)]
    big = _matrix(60, 50, big_entries)  # > 2000 nonzeros: modular consensus
    res = rank_exact(big, seed=1)
    assert res.method == "MODULAR_CONSENSUS"
    assert res.rank == 2  # rank of (1 + i*j) matrix
    assert len(res.primes_used) >= 2


def test_sparse_product_is_zero():
    a = _matrix(2, 2, [(0, 0, 1), (1, 1, 1)])
    b = _matrix(2, 2, [(0, 1, 3)])
    assert not sparse_product_is_zero(a, b)
    nilpotent = _matrix(2, 2, [(0, 1, 5)])
    assert sparse_product_is_zero(nilpotent, nilpotent)


def test_matrix_normalization_and_roundtrip():
    mat = _matrix(2, 2, [(0, 0, 1), (0, 0, 2), (1, 1, 3), (1, 0, 0)])
    assert mat.entries == [(0, 0, 3), (1, 1, 3)]
    doc = mat.to_json()
    again = SparseIntMatrix.from_json(doc)
    assert again.entries == mat.entries
    assert (again.rows, again.cols) == (mat.rows, mat.cols)
    assert mat.transpose().entries == [(0, 0, 3), (1, 1, 3)]


def test_dimreport_accounting():
    report = DimReport(
        spec_doc={"W": 1},
        dims={0: 20, 1: 6},
        ranks={1: 6},
    )
    assert report.homology() == {0: 14, 1: 0}
    assert report.check_euler()
    assert report.gc_degrees(m=1) == {0: 14}
    assert report.gc_degrees(m=3) == {-2: 14}
    assert report.chain_degrees(m=1) == {1: 14}
