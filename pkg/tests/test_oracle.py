import random

import numpy as np
import pytest
import sympy

from fmcert.oracle import (
    ChannelDims,
    as_matrix,
    basis_violations,
    matmul,
    null_space,
    rank_exact,
    row_space,
    run_trials,
    sample_dims,
    sample_instance,
    verify_facts,
    verify_pipeline,
)

ALL_ONES = ChannelDims(1, 1, 1, 1, 1, 1, 1, 1)


def test_rank_of_simple_matrices():
    assert rank_exact([[1, 2], [2, 4]]) == 1
    assert rank_exact(np.eye(3, dtype=int)) == 3
    assert rank_exact(as_matrix([], (0, 4))) == 0
    assert rank_exact(as_matrix([], (3, 0))) == 0


def test_rank_agrees_with_sympy():
    rng = random.Random(5)
    for _ in range(100):
        n, m, r = rng.randint(1, 6), rng.randint(1, 6), rng.randint(0, 4)
        A = [[rng.randint(-3, 3) for _ in range(r)] for _ in range(n)]
        B = [[rng.randint(-3, 3) for _ in range(m)] for _ in range(r)]
        M = [[sum(A[i][k] * B[k][j] for k in range(r)) for j in range(m)] for i in range(n)]
        assert rank_exact(M) == sympy.Matrix(M).rank()


def test_null_and_row_space_shapes():
    M = as_matrix([[1, 2, 3], [2, 4, 6]])
    N = null_space(M)
    assert N.shape == (3, 2)
    assert all(v == 0 for v in matmul(M, N).flat)
    assert row_space(M).shape == (3, 1)
    assert rank_exact(np.hstack([row_space(M), N])) == 3


def test_all_ones_dimensions_at_max_dim_one():
    assert sample_dims(0, 1, min_rank=1) == ALL_ONES
    with pytest.raises(ValueError):
        sample_dims(0, 0)


def test_sampled_dims_valid_and_reproducible():
    for seed in range(100):
        d = sample_dims(seed, 5)
        assert d.valid, d.violations()
        assert d == sample_dims(seed, 5)
        assert all(1 <= v <= 5 for v in d.astuple()[:4])


def test_invalid_dims_reported():
    d = ChannelDims(2, 1, 1, 1, 1, 0, 1, 1)
    assert not d.valid
    assert "r11 + r12 >= n1" in d.violations()
    with pytest.raises(ValueError):
        sample_instance(d, 0)


def test_all_ones_instance():
    inst = sample_instance(ALL_ONES, 0)
    assert basis_violations(inst) == []
    a = inst.assignment
    assert inst.V20.shape == (1, 0) and inst.U10.shape == (1, 0)
    assert a["k_U1_H11_V21"] == 1 and a["k_H11_V21"] == 1
    assert a["k_U10_H11"] == 0 and a["k_U10_H11_V20"] == 0


def test_instances_are_reproducible():
    d = sample_dims(3, 4)
    a, b = sample_instance(d, 3), sample_instance(d, 3)
    assert a.assignment == b.assignment
    assert (a.H11 == b.H11).all()


def test_receive_null_space_rank(paper):
    # the receive-side zero-forcer keeps exactly n1 - r12 directions of H11
    for seed in range(20):
        inst = sample_instance(sample_dims(seed, 5), seed)
        d = inst.dims
        assert inst.assignment["k_U10_H11"] == d.n1 - d.r12


def test_random_instances_satisfy_every_fact(paper):
    for seed in range(50):
        inst = sample_instance(sample_dims(seed, 5), seed)
        assert basis_violations(inst) == []
        report = verify_facts(inst, paper.facts)
        assert report.ok, [c.label for c in report.failures]


def test_fact_slacks_all_ones(paper):
    inst = sample_instance(ALL_ONES, 0)
    report = verify_facts(inst, paper.facts)
    assert report.slack("fact:5") == 0
    assert report.slack("fact:9") == 1


def test_fact_slack_general(paper):
    inst = sample_instance(sample_dims(8, 5), 8)
    a = inst.assignment
    report = verify_facts(inst, paper.facts)
    assert report.slack("fact:5") == a["k_H11_V21"] - (a["r11"] + a["r21"] - a["m1"])


def test_corrupted_rank_breaks_fact(paper):
    inst = sample_instance(sample_dims(2, 5), 2)
    inst.assignment["k_U10_H11"] += 1
    report = verify_facts(inst, paper.facts)
    assert not report.ok
    assert [c.label for c in report.failures] == ["fact:1[le]"]


def test_missing_symbol_raises(paper):
    inst = sample_instance(ALL_ONES, 0)
    del inst.assignment["k_U10_H11"]
    with pytest.raises(KeyError):
        verify_facts(inst, paper.facts)


def test_pipeline_all_ones(paper):
    report = verify_pipeline(sample_instance(ALL_ONES, 0), paper)
    assert report.ok and report.describe() == ""


def test_pipeline_reports_violated_fact_first(paper):
    inst = sample_instance(sample_dims(4, 5), 4)
    inst.assignment["k_U10_H11"] -= 1
    report = verify_pipeline(inst, paper)
    assert not report.ok
    assert report.describe().splitlines()[0].startswith("violated fact fact:1[ge]")


def test_trials_pass(paper):
    results = run_trials(0, 30, 5, paper)
    assert len(results) == 30
    assert all(r.ok for r in results), [r.line() for r in results if not r.ok]
    assert results[0].line().startswith("PASS seed=0 ")


def test_nonnegative_variant_runs(paper):
    results = run_trials(0, 5, 4, paper, nonnegative=True)
    assert len(results) == 5
    assert all(r.basis_ok and r.facts_ok for r in results)
