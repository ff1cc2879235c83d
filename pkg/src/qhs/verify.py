"""Grid verification suites and their reports.

A suite expands a :class:`Grid` into a deterministic list of cases. Each case
is a plain tuple ``(suite, check, params)`` so it can be shipped to worker
processes; :func:`evaluate_case` turns it into a record with exact ``lhs`` and
``rhs`` and a verdict. Records are ordered by their case key, so the report
body does not depend on the number of workers.
"""

from __future__ import annotations

import csv
import io
import json
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from . import __version__
from . import closed_forms as cf
from .catalog import SUSPECTED_TYPO, get_entry, literal_display_catalog
from .cyclotomic import CycElem, cyc_conjugate, cyc_to_complex, rational_part
from .exact import format_rational
from .harmonic import (
    cyclic_sum_ones,
    cyclic_sum_twos,
    pattern_sum_ones,
    recurrence_check_22,
    recurrence_check_eap,
    zq_dp,
)

__all__ = [
    "SEED",
    "SUITES",
    "Grid",
    "VerificationReport",
    "build_cases",
    "evaluate_case",
    "run_suite",
]

SEED = 20240611
CONJUGATION_CASES = 200
CONJUGATION_MAX_ENTRY = 4
FLOAT_TOLERANCE = 1e-9

SUITES = (
    "table",
    "determinant",
    "degber",
    "degberpoly",
    "genfunc",
    "theorem1",
    "theorem2",
    "theorem4",
    "recurrences",
    "conjugation",
    "bik",
    "catalog",
)


@dataclass(frozen=True)
class Grid:
    """Inclusive parameter bounds; n always starts at 2, m and A at 1."""

    max_n: int = 12
    max_m: int = 4
    max_A: int = 6
    max_s: int = 8

    def ns(self) -> range:
        return range(2, self.max_n + 1)

    def ms(self) -> range:
        return range(1, self.max_m + 1)

    def to_json(self) -> dict:
        return {"max_n": self.max_n, "max_m": self.max_m, "max_A": self.max_A, "max_s": self.max_s}


Case = tuple  # (suite, check, ((name, value), ...))


def _case(suite: str, check: str, **params) -> Case:
    return (suite, check, tuple(params.items()))


def _single_cases(suite: str, grid: Grid, s_values: Iterable[int]) -> list[Case]:
    s_values = list(s_values)
    return [_case(suite, suite, n=n, s=s) for n in grid.ns() for s in s_values]


def conjugation_vectors(grid: Grid, count: int = CONJUGATION_CASES) -> list[tuple[int, tuple[int, ...]]]:
    """Seeded (n, index vector) pairs; the same grid always yields the same list."""
    rng = random.Random(SEED)
    out = []
    for _ in range(count):
        n = rng.randint(2, max(2, grid.max_n))
        m = rng.randint(1, max(1, grid.max_m))
        out.append((n, tuple(rng.randint(1, CONJUGATION_MAX_ENTRY) for _ in range(m))))
    return out


def _catalog_cases(grid: Grid) -> list[Case]:
    ranges = {
        "n": grid.ns(),
        "m": grid.ms(),
        "A": range(1, grid.max_A + 1),
        "s": range(1, grid.max_s + 1),
    }
    cases = []
    for entry in literal_display_catalog():
        names = entry.params
        combos: list[dict] = [{}]
        for name in names:
            if name == "j":
                combos = [dict(c, j=j) for c in combos for j in range(1, c["m"] + 1)]
            else:
                combos = [dict(c, **{name: v}) for c in combos for v in ranges[name]]
        for params in combos:
            if entry.in_domain(**params):
                cases.append(("catalog", entry.id, tuple((k, params[k]) for k in names)))
    return cases


def build_cases(suite: str, grid: Grid) -> list[Case]:
    if suite == "table":
        return _single_cases(suite, grid, range(1, min(grid.max_s, 9) + 1))
    if suite in ("determinant", "degber", "degberpoly"):
        return _single_cases(suite, grid, range(1, grid.max_s + 1))
    if suite == "genfunc":
        return _single_cases(suite, grid, range(0, grid.max_s + 1))
    if suite in ("theorem1", "theorem2", "theorem4"):
        A_values = {
            "theorem1": range(2, min(grid.max_A, 5) + 1),
            "theorem2": range(2, grid.max_A + 1),
            "theorem4": range(1, grid.max_A + 1),
        }[suite]
        return [_case(suite, suite, n=n, A=A, m=m) for n in grid.ns() for A in A_values for m in grid.ms()]
    if suite == "recurrences":
        return [
            _case(suite, check, n=n, A=A, m=m)
            for check in ("eap", "twos")
            for n in grid.ns()
            for A in range(2, grid.max_A + 1)
            for m in grid.ms()
        ]
    if suite == "conjugation":
        return [_case(suite, "reverse", n=n, s=list(s)) for n, s in conjugation_vectors(grid)]
    if suite == "bik":
        return [_case(suite, suite, n=n, m=m, j=j) for n in grid.ns() for m in grid.ms() for j in range(1, m + 1)]
    if suite == "catalog":
        return _catalog_cases(grid)
    raise KeyError(suite)


def _serialize(v) -> object:
    if isinstance(v, CycElem):
        if v.is_rational():
            return format_rational(rational_part(v))
        return v.to_json()
    return format_rational(v)


def _direct_complex(n: int, s: tuple[int, ...]) -> complex:
    # the same nested sum with u_r = 1/2 + (i/2) cot(r pi / n) in floating point
    u = [0j] + [complex(0.5, 0.5 / math.tan(r * math.pi / n)) for r in range(1, n)]
    T = [1 + 0j] + [0j] * len(s)
    for i in range(1, n):
        for k in range(min(len(s), i), 0, -1):
            T[k] += T[k - 1] * u[i] ** s[k - 1]
    return T[len(s)]


def _rel_err(a: complex, b: complex) -> float:
    scale = max(abs(a), abs(b), 1.0)
    return abs(a - b) / scale


def _compute(suite: str, check: str, p: dict):
    """Return (lhs, rhs, advisory-or-None) for one case."""
    if suite == "table":
        return cf.zeta_single_table(p["n"], p["s"]), zq_dp(p["n"], (p["s"],)), None
    if suite == "determinant":
        return cf.zeta_single_determinant(p["n"], p["s"]), zq_dp(p["n"], (p["s"],)), None
    if suite == "degber":
        return cf.zeta_single_degber(p["n"], p["s"]), zq_dp(p["n"], (p["s"],)), None
    if suite == "degberpoly":
        return cf.zeta_single_degberpoly(p["n"], p["s"]), zq_dp(p["n"], (p["s"],)), None
    if suite == "genfunc":
        lhs = cf.genfunc_coeffs(p["n"], p["s"])[p["s"]]
        rhs = Fraction(p["n"] - 1) if p["s"] == 0 else zq_dp(p["n"], (p["s"],))
        return lhs, rhs, None
    if suite == "theorem1":
        return cf.theorem1_formula(p["n"], p["A"], p["m"]), cyclic_sum_ones(p["n"], p["A"], p["m"]), None
    if suite == "theorem2":
        return cf.theorem2_formula(p["n"], p["A"], p["m"]), cyclic_sum_ones(p["n"], p["A"], p["m"]), None
    if suite == "theorem4":
        return cf.theorem4_formula(p["n"], p["A"], p["m"]), cyclic_sum_twos(p["n"], p["A"], p["m"]), None
    if suite == "recurrences":
        check_fn = recurrence_check_eap if check == "eap" else recurrence_check_22
        res = check_fn(p["n"], p["A"], p["m"])
        return res.lhs, res.rhs, None
    if suite == "conjugation":
        s = tuple(p["s"])
        z = zq_dp(p["n"], s)
        err = _rel_err(cyc_to_complex(z), _direct_complex(p["n"], s))
        return cyc_conjugate(z), zq_dp(p["n"], s[::-1]), {"float_rel_err": err}
    if suite == "bik":
        P = pattern_sum_ones(p["n"], 2, p["m"], p["j"])
        return P + cyc_conjugate(P), 2 * cf.bik_pair_formula(p["n"], p["m"]), None
    if suite == "catalog":
        entry = get_entry(check)
        return entry.evaluator(**p), entry.truth(**p), None
    raise KeyError(suite)


def evaluate_case(case: Case) -> dict:
    suite, check, items = case
    p = dict(items)
    record: dict = {"suite": suite, "check": check, "params": p}
    try:
        lhs, rhs, advisory = _compute(suite, check, p)
    except Exception as exc:  # a crashing formula is a failed case, not a crashed run
        record.update(lhs=None, rhs=None, verdict="fail", error=f"{type(exc).__name__}: {exc}")
        return record
    equal = lhs == rhs
    if equal:
        verdict = "pass"
    elif suite == "catalog" and get_entry(check).expected_status == SUSPECTED_TYPO:
        verdict = "expected-mismatch"
    else:
        verdict = "fail"
    record.update(lhs=_serialize(lhs), rhs=_serialize(rhs), verdict=verdict)
    if advisory is not None:
        record["advisory"] = advisory
    return record


def _sort_key(record: dict) -> tuple:
    suite_rank = SUITES.index(record["suite"])
    params = tuple(
        (k, tuple(v) if isinstance(v, list) else v) for k, v in record["params"].items()
    )
    return (suite_rank, record["check"], params)


@dataclass
class VerificationReport:
    suite: str
    grid: dict
    cases: list[dict]
    duration_ms: int = 0
    version: str = __version__
    unreproduced_typos: list[dict] = field(default_factory=list)

    @property
    def summary(self) -> dict:
        counts = {"pass": 0, "fail": 0, "expected_mismatch": 0}
        for c in self.cases:
            counts[c["verdict"].replace("-", "_")] += 1
        return counts

    @property
    def advisory_max_float_err(self) -> float | None:
        errs = [c["advisory"]["float_rel_err"] for c in self.cases if "advisory" in c]
        return max(errs) if errs else None

    @property
    def ok(self) -> bool:
        return self.summary["fail"] == 0 and not self.unreproduced_typos

    def failures(self) -> list[dict]:
        return [c for c in self.cases if c["verdict"] == "fail"]

    def to_dict(self) -> dict:
        out = {
            "suite": self.suite,
            "grid": self.grid,
            "cases": self.cases,
            "summary": self.summary,
            "duration_ms": self.duration_ms,
            "version": self.version,
        }
        if self.unreproduced_typos:
            out["unreproduced_typos"] = self.unreproduced_typos
        return out

    def body(self) -> dict:
        """Report without the timing field; identical across worker counts."""
        d = self.to_dict()
        d.pop("duration_ms")
        return d

    def to_json(self) -> str:
        return dumps(self.to_dict())

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "check", "params", "lhs", "rhs", "verdict"])
        for c in self.cases:
            w.writerow([
                c["suite"], c["check"], json.dumps(c["params"], sort_keys=True),
                _cell(c["lhs"]), _cell(c["rhs"]), c["verdict"],
            ])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = []
        for c in self.cases:
            params = ", ".join(f"{k}={v}" for k, v in c["params"].items())
            line = f"{c['verdict']:<18} {c['suite']}/{c['check']} ({params})"
            if c["verdict"] != "pass":
                line += f"  lhs={_cell(c['lhs'])} rhs={_cell(c['rhs'])}"
                if "error" in c:
                    line += f"  error={c['error']}"
            lines.append(line)
        s = self.summary
        lines.append(
            f"suite={self.suite} pass={s['pass']} fail={s['fail']} "
            f"expected_mismatch={s['expected_mismatch']} duration_ms={self.duration_ms}"
        )
        err = self.advisory_max_float_err
        if err is not None:
            lines.append(f"advisory: max float-embedding relative error {err:.3e}")
        for t in self.unreproduced_typos:
            lines.append(f"UNREPRODUCED suspected typo {t['check']} at {t['params']}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        return self.to_text()


def _cell(v) -> str:
    if v is None or isinstance(v, str):
        return "" if v is None else v
    return json.dumps(v, sort_keys=True)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _unreproduced(cases: list[dict]) -> list[dict]:
    """Documented typo witnesses inside the grid that no longer disagree."""
    by_key = {(c["check"], tuple(sorted(c["params"].items()))): c for c in cases if c["suite"] == "catalog"}
    out = []
    for entry in literal_display_catalog():
        if entry.expected_status != SUSPECTED_TYPO:
            continue
        for w in entry.witnesses:
            rec = by_key.get((entry.id, tuple(sorted(w.items()))))
            if rec is not None and rec["verdict"] == "pass":
                out.append({"check": entry.id, "params": dict(w)})
    return out


def run_suite(suite: str, grid: Grid | None = None, jobs: int = 1) -> VerificationReport:
    """Run one suite, or every suite for ``suite == "all"``."""
    grid = grid or Grid()
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        if name not in SUITES:
            raise KeyError(name)
    start = time.perf_counter()
    cases: list[Case] = []
    for name in names:
        cases.extend(build_cases(name, grid))
    if jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(evaluate_case, cases, chunksize=max(1, len(cases) // (4 * jobs))))
    else:
        records = [evaluate_case(c) for c in cases]
    records.sort(key=_sort_key)
    duration_ms = int((time.perf_counter() - start) * 1000)
    return VerificationReport(
        suite=suite,
        grid=grid.to_json(),
        cases=records,
        duration_ms=duration_ms,
        unreproduced_typos=_unreproduced(records),
    )


def float_embedding_ok(report: VerificationReport, tol: float = FLOAT_TOLERANCE) -> bool:
    err = report.advisory_max_float_err
    return err is None or err < tol
