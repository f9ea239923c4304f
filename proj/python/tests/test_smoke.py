import math

import pytest

import dtwmean


X1 = [1.0, 4.0, 2.0, 3.0]
X2 = [4.0, 2.0, 4.0, 5.0]


def test_dtw_and_path():
    d, path = dtwmean.dtw_sq(X1, X2)
    assert d == pytest.approx(14.0, abs=1e-9)
    assert path == [(1, 1), (2, 1), (3, 2), (4, 3), (4, 4)]
    assert dtwmean.validate_path(path, 4, 4)
    assert dtwmean.path_cost(path, X1, X2) == pytest.approx(14.0, abs=1e-9)


def test_exact_mean():
    r = dtwmean.edp_mean([X1, X2])
    assert r["frechet"] == pytest.approx(6.5, abs=1e-9)
    assert len(r["paths"]) == 2
    brute = dtwmean.mean_brute([X1, X2], 8)
    assert brute["frechet"] == pytest.approx(r["frechet"], abs=1e-9)


def test_constrained_and_sweep():
    sweep = dtwmean.constrained_sweep([X1, X2], 6)
    assert min(sweep) == pytest.approx(6.5, abs=1e-9)
    r5 = dtwmean.edp_mean_constrained([X1, X2], 5)
    assert len(r5["mean"]) == 5
    assert r5["frechet"] == pytest.approx(6.5, abs=1e-9)


def test_mal_and_heuristics():
    mal = dtwmean.mal_mean(X1, X2)
    assert mal["mean"] == pytest.approx([2.5, 4.0, 2.0, 3.5, 4.0])
    assert mal["frechet"] == pytest.approx(7.0, abs=1e-9)
    arith = [(a + b) / 2 for a, b in zip(X1, X2)]
    f_init = dtwmean.frechet_value(arith, [X1, X2])
    for algo in (dtwmean.dba, dtwmean.ssg, dtwmean.bsg):
        r = algo([X1, X2], seed=3)
        assert 6.5 - 1e-9 <= r["frechet"] <= f_init + 1e-9
    # identical seeds give identical results
    a = dtwmean.ssg([X1, X2], init="normal", seed=11)
    b = dtwmean.ssg([X1, X2], init="normal", seed=11)
    assert a["mean"] == b["mean"]


def test_binary():
    assert dtwmean.binary_condensed_dtw_sq([1, 0], [0, 1]) == 2
    assert dtwmean.binary_dtw_sq([0, 1, 0], [0, 0, 1]) == 1
    r = dtwmean.binary_mean([[0, 1], [1, 0]])
    assert r["frechet"] == pytest.approx(2.0)


def test_weights():
    f = dtwmean.frechet_value([1.0], [[0.0], [3.0]], weights=[2.0, 1.0])
    assert f == pytest.approx(6.0, abs=1e-9)


def test_random_walk_determinism():
    a = dtwmean.random_walk(10, seed=42)
    b = dtwmean.random_walk(10, seed=42)
    assert a == b
    assert len(a) == 10
    assert all(math.isfinite(v) for v in a)


def test_errors():
    with pytest.raises(ValueError):
        dtwmean.edp_mean([])
    with pytest.raises(ValueError):
        dtwmean.error_percentage(1.0, 0.0)
    with pytest.raises(RuntimeError):
        dtwmean.edp_mean([[0.0] * 200] * 3)
