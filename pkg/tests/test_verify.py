"""Tests for conjecture checks, the counterexample, and sweeps."""

import json

import pytest

from lrhive.partitions import Partition
from lrhive.verify import (
    FAIL,
    PASS,
    SKIP,
    SweepConfig,
    Verdict,
    check_conjecture1,
    check_conjecture2,
    cz_sum_check,
    lambda_dagger,
    reproduce_gl5_counterexample,
    stability_check,
    sweep,
    sweep_cases,
)


def test_lambda_dagger():
    assert lambda_dagger(Partition((5, 3, 0))) == Partition((5, 2, 0))
    assert lambda_dagger(Partition((4, 2, 2, 1))) == Partition((3, 2, 2, 0))


def test_verdict_requires_witness_on_fail():
    with pytest.raises(ValueError):
        Verdict(FAIL, "conj1", Partition((1, 0)), Partition((1, 0)))


def test_conjecture1_worked_example():
    v = check_conjecture1(Partition((5, 3, 0)), Partition((6, 3, 0)))
    assert v.status == PASS
    assert v.left.as_dict() == {1: 11, 2: 7, 3: 3} == v.right.as_dict()


def test_conjecture1_trivial_and_rank4():
    v = check_conjecture1(Partition((0, 0, 0)), Partition((4, 2, 0)))
    assert v.status == PASS and v.left.as_dict() == {1: 1}
    assert check_conjecture1(Partition((4, 2, 2, 0)), Partition((3, 1, 0, 0))).status == PASS


def test_conjecture1_skips_non_near_rectangular():
    v = check_conjecture1(Partition((3, 3, 2, 0, 0)), Partition((1, 0, 0, 0, 0)))
    assert v.status == SKIP and "near-rectangular" in v.witness


def test_conjecture2():
    assert check_conjecture2(Partition((4, 2, 2, 0)), Partition((2, 1, 1, 0))).status == PASS
    v = check_conjecture2(Partition((5, 3, 3, 0)), Partition((2, 1, 1, 0)))
    assert v.status == PASS and v.left == v.right
    assert check_conjecture2(Partition((0,) * 5), Partition((1, 0, 0, 0, 0))).left == 1


def test_cz_sum():
    v = cz_sum_check(Partition((5, 3, 0)), Partition((6, 3, 0)))
    assert v.status == PASS and v.left == 34
    # holds with no near-rectangular hypothesis
    assert cz_sum_check(Partition((3, 3, 2, 0, 0)), Partition((4, 4, 1, 0, 0))).status == PASS
    assert cz_sum_check(Partition((0, 0)), Partition((0, 0))).left == 1


def test_gl5_counterexample():
    v = reproduce_gl5_counterexample()
    assert v.status == PASS
    assert (v.left, v.right) == (34, 33)
    # conjecture 2 itself fails on the pair when forced to run
    forced = check_conjecture2(Partition((3, 3, 2, 0, 0)), Partition((4, 4, 1, 0, 0)),
                               require_near_rectangular=False)
    assert forced.status == FAIL


def test_stability_check():
    assert stability_check(2, 1, 2, 1, (4, 2, 2, 0), (4, 5, 6)).status == PASS
    assert stability_check(1, 0, 0, 0, (1, 0, 0, 0), (4, 5)).status == PASS
    with pytest.raises(ValueError):
        stability_check(1, 2, 1, 0, (2, 1, 1, 0), (4,))  # lam1 < lam2
    with pytest.raises(ValueError):
        stability_check(2, 1, 2, 1, (4, 2, 2, 0), (3, 4))  # rank below 4


def test_sweep_config_validation():
    with pytest.raises(ValueError):
        SweepConfig(n=4, max_nr=2, max_mu_size=4, check="bogus")
    with pytest.raises(ValueError):
        SweepConfig(n=4, max_nr=-1, max_mu_size=4, check="conj1")
    cfg = SweepConfig(n=4, max_nr=1, max_mu_size=2, check="conj1")
    assert SweepConfig.from_json(cfg.as_json()) == cfg


def test_sweep_cases_deterministic():
    cfg = SweepConfig(n=4, max_nr=1, max_mu_size=2, check="conj1")
    assert sweep_cases(cfg) == sweep_cases(cfg)
    for lam, mu in sweep_cases(cfg):
        assert lam.n == mu.n == 4


def test_sweep_all_pass_small():
    report = sweep(SweepConfig(n=4, max_nr=2, max_mu_size=4, check="conj1"))
    assert report.fails == 0 and report.passes == len(report.verdicts)
    assert report.elapsed_micros == 0  # deterministic output by default
    assert all(v.micros == 0 for v in report.verdicts)


def test_sweep_reports_are_byte_identical():
    cfg = SweepConfig(n=4, max_nr=1, max_mu_size=3, check="cz_sum")
    a = sweep(cfg, version="x").to_json_text()
    b = sweep(cfg, version="x").to_json_text()
    assert a == b
    parsed = json.loads(a)
    assert parsed["summary"]["cases"] == len(parsed["cases"])


def test_sweep_injected_counterexample():
    cfg = SweepConfig(
        n=5, max_nr=1, max_mu_size=2, check="conj2",
        extra_cases=(((3, 3, 2, 0, 0), (4, 4, 1, 0, 0)),),
        expected_fail_lambdas=((3, 3, 2, 0, 0),),
    )
    report = sweep(cfg)
    assert report.fails == 1
    failing = [v for v in report.verdicts if v.status == FAIL]
    assert (failing[0].left, failing[0].right) == (34, 33)
    assert report.unexpected_fails == 0


def test_sweep_parallel_matches_serial(tmp_path):
    base = dict(n=4, max_nr=1, max_mu_size=3, check="conj1")
    serial = sweep(SweepConfig(**base))
    parallel = sweep(SweepConfig(**base, jobs=2))
    assert [v.as_json() for v in serial.verdicts] == [v.as_json() for v in parallel.verdicts]


def test_sweep_output_files(tmp_path):
    for fmt in ("json", "csv"):
        path = tmp_path / f"report.{fmt}"
        sweep(SweepConfig(n=4, max_nr=1, max_mu_size=2, check="conj1",
                          output_path=str(path), output_format=fmt))
        text = path.read_text()
        if fmt == "json":
            data = json.loads(text)
            assert data["summary"]["fails"] == 0
        else:
            assert text.splitlines()[0].startswith("lambda,mu,n,check,status")
