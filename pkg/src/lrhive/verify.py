"""Conjecture checking, counterexample reproduction, and batch sweeps.

The two conjectures compare the tensor product decompositions of
V(lam) (x) V(mu) and V(lam-dagger) (x) V(mu), where lam-dagger is
dual_star(bar_reduce(lam)): conjecture 1 asserts equal multiplicity
multisets, conjecture 2 only equal component counts, both for
near-rectangular lam.  The sum of multiplicities always agrees,
with no hypothesis on lam.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from time import perf_counter

from .formulas import nr_coefficient
from .hive import count_hives
from .partitions import Partition, bar_reduce, dual_star, is_near_rectangular, partitions_of
from .piecewise import multiplicity_multiset

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"


@dataclass(frozen=True)
class Verdict:
    status: str  # PASS | FAIL | SKIP
    check: str
    lam: Partition
    mu: Partition
    left: object = None
    right: object = None
    witness: str | None = None
    micros: int = 0

    def __post_init__(self):
        if self.status == FAIL and self.witness is None:
            raise ValueError("FAIL verdicts must carry a witness")

    def as_json(self) -> dict:
        return {
            "lambda": list(self.lam.parts),
            "mu": list(self.mu.parts),
            "n": self.lam.n,
            "check": self.check,
            "status": self.status,
            "left": _summary_json(self.left),
            "right": _summary_json(self.right),
            "witness": self.witness,
            "micros": self.micros,
        }


def _summary_json(value):
    if value is None or isinstance(value, int):
        return value
    if hasattr(value, "as_dict"):  # MultiplicityMultiset
        return {str(k): v for k, v in sorted(value.as_dict().items())}
    return str(value)


def lambda_dagger(lam: Partition) -> Partition:
    """The comparison partner dual_star(bar_reduce(lam))."""
    return dual_star(bar_reduce(lam))


def check_conjecture1(lam: Partition, mu: Partition, *, require_near_rectangular: bool = True) -> Verdict:
    """Multiset equality of positive coefficient histograms for lam vs lam-dagger."""
    if lam.n != mu.n:
        raise ValueError("rank mismatch")
    if require_near_rectangular and not is_near_rectangular(lam):
        return Verdict(SKIP, "conj1", lam, mu, witness="lambda is not near-rectangular")
    left = multiplicity_multiset(lam, mu)
    right = multiplicity_multiset(lambda_dagger(lam), mu)
    if left == right:
        return Verdict(PASS, "conj1", lam, mu, left, right)
    diff = sorted(set(left.as_dict().items()) ^ set(right.as_dict().items()))
    return Verdict(FAIL, "conj1", lam, mu, left, right,
                   witness=f"first differing histogram entry {diff[0]}")


def check_conjecture2(lam: Partition, mu: Partition, *, require_near_rectangular: bool = True) -> Verdict:
    """Equality of the number of distinct isotypic components only."""
    if lam.n != mu.n:
        raise ValueError("rank mismatch")
    if require_near_rectangular and not is_near_rectangular(lam):
        return Verdict(SKIP, "conj2", lam, mu, witness="lambda is not near-rectangular")
    left = multiplicity_multiset(lam, mu).components
    right = multiplicity_multiset(lambda_dagger(lam), mu).components
    if left == right:
        return Verdict(PASS, "conj2", lam, mu, left, right)
    return Verdict(FAIL, "conj2", lam, mu, left, right,
                   witness=f"component counts {left} != {right}")


def cz_sum_check(lam: Partition, mu: Partition) -> Verdict:
    """Sum-of-multiplicities identity; holds with no hypothesis on lam."""
    if lam.n != mu.n:
        raise ValueError("rank mismatch")
    left = multiplicity_multiset(lam, mu).mult_sum
    right = multiplicity_multiset(lambda_dagger(lam), mu).mult_sum
    if left == right:
        return Verdict(PASS, "cz_sum", lam, mu, left, right)
    return Verdict(FAIL, "cz_sum", lam, mu, left, right,
                   witness=f"multiplicity sums {left} != {right}")


def reproduce_gl5_counterexample() -> Verdict:
    """Rank 5, lam=(3,3,2,0,0), mu=(4,4,1,0,0): component counts 34 vs 33.

    PASSES by reproducing the known failure of dropping the near-rectangular
    hypothesis from conjecture 2; the sum identity still holds on the pair.
    """
    lam = Partition((3, 3, 2, 0, 0))
    mu = Partition((4, 4, 1, 0, 0))
    left = multiplicity_multiset(lam, mu).components
    right = multiplicity_multiset(lambda_dagger(lam), mu).components
    if (left, right) == (34, 33):
        return Verdict(PASS, "repro-gl5", lam, mu, left, right)
    return Verdict(FAIL, "repro-gl5", lam, mu, left, right,
                   witness=f"expected counts (34, 33), got ({left}, {right})")


def stability_check(lam1: int, lam2: int, mu1: int, mu2: int,
                    nu4: tuple[int, int, int, int], n_range=(4, 5, 6)) -> Verdict:
    """Rank independence of the coefficient for near-rectangular factors.

    For each n, lam = (lam1, lam2^{n-2}, 0), mu = (mu1, mu2^{n-2}, 0) and
    nu = (nu1, nu2, (lam2+mu2)^{n-4}, nu3, nu4); all hive counts must agree
    with each other and with the closed-form value.
    """
    if not (lam1 >= lam2 >= 0 and mu1 >= mu2 >= 0):
        raise ValueError("lam1 >= lam2 >= 0 and mu1 >= mu2 >= 0 required")
    n_range = tuple(n_range)
    if not n_range or any(n < 4 or n > 8 for n in n_range):
        raise ValueError("n_range must lie within [4, 8]")
    mid = lam2 + mu2
    n1, n2, n3, n4 = nu4
    values = {}
    formula = None
    for n in n_range:
        lam = Partition((lam1,) + (lam2,) * (n - 2) + (0,))
        mu = Partition((mu1,) + (mu2,) * (n - 2) + (0,))
        nu = Partition((n1, n2) + (mid,) * (n - 4) + (n3, n4))  # raises if malformed
        values[n] = count_hives(lam, mu, nu)
        formula = nr_coefficient(lam, mu, nu)
    lam0 = Partition((lam1,) + (lam2,) * (n_range[0] - 2) + (0,))
    mu0 = Partition((mu1,) + (mu2,) * (n_range[0] - 2) + (0,))
    distinct = set(values.values())
    if len(distinct) == 1 and distinct == {formula}:
        return Verdict(PASS, "stability", lam0, mu0, formula, formula)
    return Verdict(FAIL, "stability", lam0, mu0, values, formula,
                   witness=f"hive counts by rank {values}, closed form {formula}")


# ---------------------------------------------------------------------------
# sweeps


@dataclass(frozen=True)
class SweepConfig:
    n: int
    max_nr: int  # bound on max(lam1 - lam2, lam2)
    max_mu_size: int
    check: str  # conj1 | conj2 | cz_sum
    jobs: int = 1
    output_path: str | None = None
    output_format: str = "json"  # json | csv
    extra_cases: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...] = ()
    expected_fail_lambdas: tuple[tuple[int, ...], ...] = ()
    include_timing: bool = False

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("rank must be >= 2")
        if self.max_nr < 0 or self.max_mu_size < 0:
            raise ValueError("bounds must be nonnegative")
        if self.check not in ("conj1", "conj2", "cz_sum"):
            raise ValueError(f"unknown check {self.check!r}")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if self.output_format not in ("json", "csv"):
            raise ValueError(f"unknown output format {self.output_format!r}")

    def as_json(self) -> dict:
        return {
            "n": self.n,
            "max_nr": self.max_nr,
            "max_mu_size": self.max_mu_size,
            "check": self.check,
            "jobs": self.jobs,
            "output_format": self.output_format,
            "extra_cases": [[list(l), list(m)] for l, m in self.extra_cases],
            "expected_fail_lambdas": [list(l) for l in self.expected_fail_lambdas],
        }

    @classmethod
    def from_json(cls, d: dict) -> "SweepConfig":
        return cls(
            n=d["n"],
            max_nr=d["max_nr"],
            max_mu_size=d["max_mu_size"],
            check=d["check"],
            jobs=d.get("jobs", 1),
            output_path=d.get("output_path"),
            output_format=d.get("output_format", "json"),
            extra_cases=tuple(
                (tuple(l), tuple(m)) for l, m in d.get("extra_cases", [])
            ),
            expected_fail_lambdas=tuple(tuple(l) for l in d.get("expected_fail_lambdas", [])),
        )


@dataclass(frozen=True)
class VerificationReport:
    config: SweepConfig
    verdicts: tuple[Verdict, ...]
    version: str
    elapsed_micros: int = 0

    @property
    def passes(self) -> int:
        return sum(1 for v in self.verdicts if v.status == PASS)

    @property
    def fails(self) -> int:
        return sum(1 for v in self.verdicts if v.status == FAIL)

    @property
    def unexpected_fails(self) -> int:
        expected = set(self.config.expected_fail_lambdas)
        return sum(
            1 for v in self.verdicts if v.status == FAIL and v.lam.parts not in expected
        )

    def as_json(self) -> dict:
        return {
            "config": self.config.as_json(),
            "cases": [v.as_json() for v in self.verdicts],
            "summary": {
                "cases": len(self.verdicts),
                "passes": self.passes,
                "fails": self.fails,
                "elapsed_micros": self.elapsed_micros,
            },
            "version": self.version,
        }

    def to_json_text(self) -> str:
        return json.dumps(self.as_json(), indent=2, sort_keys=True) + "\n"

    def to_csv_text(self) -> str:
        buf = io.StringIO()
        fields = ["lambda", "mu", "n", "check", "status", "left", "right", "witness", "micros"]
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for v in self.verdicts:
            row = v.as_json()
            row["lambda"] = ",".join(map(str, row["lambda"]))
            row["mu"] = ",".join(map(str, row["mu"]))
            for k in ("left", "right"):
                if isinstance(row[k], dict):
                    row[k] = ";".join(f"{a}:{b}" for a, b in sorted(row[k].items()))
            writer.writerow(row)
        return buf.getvalue()

    def write(self):
        if self.config.output_path is None:
            return
        text = self.to_csv_text() if self.config.output_format == "csv" else self.to_json_text()
        with open(self.config.output_path, "w") as fh:
            fh.write(text)


def sweep_cases(config: SweepConfig) -> list[tuple[Partition, Partition]]:
    """Deterministic case list: near-rectangular lam over the (lam1-lam2, lam2)
    grid crossed with all mu of size up to the bound, then the injected extras."""
    n = config.n
    cases = []
    for a in range(config.max_nr + 1):
        for b in range(config.max_nr + 1):
            lam = Partition((a + b,) + (b,) * (n - 2) + (0,)) if n > 2 else Partition((a + b, 0))
            for mu_size in range(config.max_mu_size + 1):
                for shape in partitions_of(mu_size, n):
                    mu = Partition(shape + (0,) * (n - len(shape)))
                    cases.append((lam, mu))
    for lam_parts, mu_parts in config.extra_cases:
        cases.append((Partition(lam_parts), Partition(mu_parts)))
    return cases


def _run_case(args) -> Verdict:
    check, lam_parts, mu_parts, timing = args
    lam, mu = Partition(lam_parts), Partition(mu_parts)
    start = perf_counter()
    if check == "conj1":
        v = check_conjecture1(lam, mu, require_near_rectangular=False)
    elif check == "conj2":
        v = check_conjecture2(lam, mu, require_near_rectangular=False)
    else:
        v = cz_sum_check(lam, mu)
    if timing:
        v = replace(v, micros=int((perf_counter() - start) * 1e6))
    return v


def sweep(config: SweepConfig, version: str = "0") -> VerificationReport:
    """Run the configured check over the whole grid.

    Case order is canonical and the report is byte-identical across runs
    unless ``include_timing`` is set (timings default to 0 for determinism).
    """
    start = perf_counter()
    work = [
        (config.check, lam.parts, mu.parts, config.include_timing)
        for lam, mu in sweep_cases(config)
    ]
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            verdicts = tuple(pool.map(_run_case, work, chunksize=8))
    else:
        verdicts = tuple(_run_case(w) for w in work)
    elapsed = int((perf_counter() - start) * 1e6) if config.include_timing else 0
    report = VerificationReport(config, verdicts, version, elapsed)
    report.write()
    return report
