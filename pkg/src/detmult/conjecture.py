"""Multiplicity bounds prod(m_i)/c! <= e <= prod(M_i)/c! and randomized campaigns."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .degmat import (
    DegreeMatrix,
    delete_first_col,
    delete_first_col_row,
    delete_last_col,
    delete_last_col_row,
    translate,
)
from .multiplicity import (
    InvariantViolation,
    multiplicity,
    multiplicity_en,
    multiplicity_linkage,
    multiplicity_linkage_dual,
)
from .resolution import (
    EnumerationCapExceeded,
    betti_table,
    betti_table_enumerated,
    default_enum_cap,
    enumeration_size,
    k_polynomial,
    power_sums,
)
from .shifts import ShiftVector, max_shifts, min_shifts


@dataclass(frozen=True)
class MultiplicityReport:
    e: int
    lower: Fraction
    upper: Fraction
    m: ShiftVector
    M: ShiftVector

    @property
    def lower_holds(self) -> bool:
        return self.lower <= self.e

    @property
    def upper_holds(self) -> bool:
        return self.e <= self.upper

    @property
    def slack_lower(self) -> Fraction:
        return self.e - self.lower

    @property
    def slack_upper(self) -> Fraction:
        return self.upper - self.e

    def to_json(self) -> dict:
        return {
            "e": str(self.e),
            "lower": fraction_str(self.lower),
            "upper": fraction_str(self.upper),
            "lowerHolds": self.lower_holds,
            "upperHolds": self.upper_holds,
            "m": list(self.m),
            "M": list(self.M),
            "slackLower": fraction_str(self.slack_lower),
            "slackUpper": fraction_str(self.slack_upper),
        }


def fraction_str(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def check_bounds(dm: DegreeMatrix) -> MultiplicityReport:
    m, big_m = min_shifts(dm), max_shifts(dm)
    fact = math.factorial(dm.c)
    return MultiplicityReport(
        e=multiplicity(dm, "auto"),
        lower=Fraction(m.product(), fact),
        upper=Fraction(big_m.product(), fact),
        m=m,
        M=big_m,
    )


@dataclass(frozen=True)
class FuzzConfig:
    seed: int = 0
    trials: int = 100
    max_t: int = 4
    max_c: int = 4
    max_b: int = 3
    max_gap: int = 2
    enum_cap: int = field(default_factory=default_enum_cap)

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        for name in ("max_t", "max_c"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        for name in ("max_b", "max_gap"):
            # zero is the degenerate single-instance configuration
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")


def trial_rng(seed: int, index: int, stream: int = 0) -> np.random.Generator:
    """Independent generator for one trial, reproducible from ``(seed, index)``."""
    return np.random.default_rng(np.random.SeedSequence([seed, index, stream]))


def random_degree_matrix(rng: np.random.Generator, cfg: FuzzConfig) -> DegreeMatrix:
    def draw(lo, hi):
        return int(rng.integers(lo, hi, endpoint=True))

    t = draw(1, cfg.max_t)
    c = draw(1, cfg.max_c)
    rows = sorted((draw(0, cfg.max_b) for _ in range(t)), reverse=True)
    cols = [rows[0] + 1 + draw(0, cfg.max_gap)]
    for _ in range(t + c - 2):
        cols.append(cols[-1] + draw(0, cfg.max_gap))
    return DegreeMatrix(tuple(cols), tuple(rows))


CHECKS = (
    "bounds",
    "multiplicityMethods",
    "lemmaLastColRow",
    "lemmaFirstColRow",
    "lemmaLastCol",
    "lemmaFirstCol",
    "proofStepLower",
    "proofStepUpper",
    "shiftsMatchTable",
    "powerSums",
    "kPolynomialDivision",
    "bettiEnumeration",
    "translation",
)


def _kpoly_order_at_one(dm: DegreeMatrix, bt) -> tuple[int, int]:
    """Divide by ``(1 - z)`` until a nonzero remainder; return (passes, value)."""
    n = k_polynomial(bt)
    passes = 0
    while True:
        q, rem = n.divide_one_minus_z()
        if rem != 0:
            return passes, rem
        n, passes = q, passes + 1


def _signature(dm: DegreeMatrix):
    # computed on dm as given; canonicalizing first would make the check vacuous
    return (min_shifts(dm), max_shifts(dm), betti_table(dm), multiplicity(dm, "auto"),
            check_bounds(dm))


def run_checks(dm: DegreeMatrix, enum_cap: int | None = None,
               shift: int = 0) -> tuple[dict, MultiplicityReport | None]:
    """Evaluate every invariant on ``dm``.

    Returns a mapping check name -> True/False, or None when the check does
    not apply (e.g. the first/last column deletions need ``c >= 2``), and the
    bound report.
    """
    if enum_cap is None:
        enum_cap = default_enum_cap()
    t, c = dm.t, dm.c
    out: dict[str, bool | None] = dict.fromkeys(CHECKS)
    m, big_m = min_shifts(dm), max_shifts(dm)
    bt = betti_table(dm)

    try:
        report = check_bounds(dm)
        out["bounds"] = report.lower_holds and report.upper_holds
        e_dual = multiplicity_linkage_dual(dm)
        out["multiplicityMethods"] = (
            report.e == multiplicity_en(dm) == multiplicity_linkage(dm) == e_dual)
    except InvariantViolation:
        out["bounds"] = out["multiplicityMethods"] = False
        report = None

    if t >= 2:
        prev = min_shifts(delete_last_col_row(dm))
        nxt = max_shifts(delete_first_col_row(dm))
        out["lemmaLastColRow"] = all(
            m[i] == prev[i] + dm.entry(t + i - 1, t) for i in range(1, c + 1))
        out["lemmaFirstColRow"] = all(
            big_m[i] == nxt[i] + dm.entry(c - i + 1, 1) for i in range(1, c + 1))
        if c >= 2:
            out["proofStepLower"] = all(m[i] >= prev[i + 1] for i in range(1, c))
            out["proofStepUpper"] = all(big_m[i] <= nxt[i + 1] for i in range(1, c))
    if c >= 2:
        mj = min_shifts(delete_last_col(dm))
        mk = max_shifts(delete_first_col(dm))
        out["lemmaLastCol"] = all(mj[i] == m[i] for i in range(1, c))
        out["lemmaFirstCol"] = all(mk[i] == big_m[i] for i in range(1, c))

    out["shiftsMatchTable"] = all(
        bt.min_shift(s) == m[s] and bt.max_shift(s) == big_m[s] for s in range(1, c + 1))
    out["powerSums"] = all(power_sums(bt, k) == 0 for k in range(c))
    passes, value = _kpoly_order_at_one(dm, bt)
    out["kPolynomialDivision"] = passes == c and value > 0 and (
        report is None or value == report.e)

    if enumeration_size(dm) <= enum_cap:
        try:
            out["bettiEnumeration"] = betti_table_enumerated(dm, enum_cap) == bt
        except EnumerationCapExceeded:
            out["bettiEnumeration"] = None

    try:
        out["translation"] = _signature(translate(dm, shift)) == _signature(dm)
    except InvariantViolation:
        out["translation"] = False
    return out, report


def _run_trial(args):
    cfg, index = args
    dm = random_degree_matrix(trial_rng(cfg.seed, index), cfg)
    shift = int(trial_rng(cfg.seed, index, 1).integers(-5, 5, endpoint=True))
    results, report = run_checks(dm, cfg.enum_cap, shift)
    slack = None
    if report is not None:
        slack = (report.upper - report.lower) / report.e
    return index, dm, shift, results, slack


@dataclass
class CampaignSummary:
    config: FuzzConfig
    trials: int = 0
    passed: int = 0
    applicable: dict = field(default_factory=lambda: dict.fromkeys(CHECKS, 0))
    check_passed: dict = field(default_factory=lambda: dict.fromkeys(CHECKS, 0))
    violations: list = field(default_factory=list)
    min_slack: tuple | None = None

    def add(self, index, dm, shift, results, slack):
        self.trials += 1
        failed = []
        for name, ok in results.items():
            if ok is None:
                continue
            self.applicable[name] += 1
            if ok:
                self.check_passed[name] += 1
            else:
                failed.append(name)
        if failed:
            self.violations.append({
                "seed": self.config.seed, "trial": index, "t": dm.t, "c": dm.c,
                "cols": list(dm.cols), "rows": list(dm.rows), "translation": shift,
                "failed": failed,
            })
        else:
            self.passed += 1
        if slack is not None:
            key = (slack, dm.sort_key(), index)
            if self.min_slack is None or key < self.min_slack[0]:
                self.min_slack = (key, index, dm)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        min_slack = None
        if self.min_slack is not None:
            (slack, _, _), index, dm = self.min_slack
            min_slack = {
                "instance": {"trial": index, "t": dm.t, "c": dm.c,
                             "cols": list(dm.cols), "rows": list(dm.rows)},
                "slack": fraction_str(slack),
            }
        return {
            "trials": self.trials,
            "passed": self.passed,
            "checks": {name: {"applicable": self.applicable[name],
                              "passed": self.check_passed[name]} for name in CHECKS},
            "violations": sorted(self.violations, key=lambda v: v["trial"]),
            "minSlack": min_slack,
            "config": {"seed": self.config.seed, "trials": self.config.trials,
                       "maxT": self.config.max_t, "maxC": self.config.max_c,
                       "maxB": self.config.max_b, "maxGap": self.config.max_gap,
                       "enumCap": self.config.enum_cap},
        }


def fuzz_campaign(cfg: FuzzConfig, workers: int = 1) -> CampaignSummary:
    """Run ``cfg.trials`` independent random trials through :func:`run_checks`.

    Trial ``k`` depends only on ``(cfg.seed, k)``, so the summary does not
    depend on ``workers``.
    """
    summary = CampaignSummary(cfg)
    jobs = ((cfg, k) for k in range(cfg.trials))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            for res in pool.map(_run_trial, jobs, chunksize=64):
                summary.add(*res)
    else:
        for res in map(_run_trial, jobs):
            summary.add(*res)
    return summary
