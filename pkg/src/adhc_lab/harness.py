"""Batch experiments: sharpness verification, solver/oracle cross-checks and
small-n sweeps, with JSON Lines / CSV reports.

Every report starts with a header record holding the schema version, the
full config and the RNG algorithm, followed by one record per instance in
config order and a summary record. Wall-clock data goes into a trailing
``meta`` record so that the rest of the report is byte-stable for a fixed
config.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import logging
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Iterable, Sequence

from .generators import (
    ExtremalSpec,
    RandomModel,
    almost_regular_tournament,
    generate_extremal,
    labeled_oriented_graphs,
    random_oriented,
)
from .graph import OrientedGraph, degree_profile
from .rng import RNG_ALGORITHM, derive_seed, stream
from .solver import ORACLE_MAX_N, BudgetExceeded, adhc_oracle, find_adhc
from .structure.conditions import semidegree_implication

__all__ = [
    "SCHEMA_VERSION",
    "Kind",
    "Status",
    "ExperimentConfig",
    "Report",
    "ore_threshold",
    "pool_size",
    "run_sharpness",
    "run_crosscheck",
    "run_sweep",
    "DEFAULT_GAMMAS",
]

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
THREADS_ENV = "ADHC_LAB_THREADS"
DEFAULT_GAMMAS = tuple(Fraction(k, 100) for k in range(5, 31, 5))


class Kind(str, enum.Enum):
    SHARPNESS = "SHARPNESS"
    SWEEP = "SWEEP"
    CROSSCHECK = "CROSSCHECK"
    ANALYZE = "ANALYZE"


class Status(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"
    INFO = "INFO"


def jsonable(x: Any) -> Any:
    """Recursively turn Fractions, enums, infinities and tuples into JSON values."""
    if isinstance(x, enum.Enum):
        return x.value
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        return "inf" if math.isinf(x) else x
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    raise TypeError(f"cannot serialise {type(x).__name__}")


def _dumps(obj: dict) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, separators=(",", ":"))


@dataclass(frozen=True)
class ExperimentConfig:
    kind: Kind
    parameters: dict = field(default_factory=dict)
    output_path: str | None = None

    def to_json(self) -> dict:
        return {"kind": self.kind, "parameters": self.parameters, "output_path": self.output_path}


@dataclass
class Report:
    config: ExperimentConfig
    rows: list[dict]
    summary: dict = field(default_factory=dict)
    meta: dict = field(default_factory=dict)

    def counts(self) -> dict[str, int]:
        out = {s.value: 0 for s in Status}
        for r in self.rows:
            out[Status(r["status"]).value] += 1
        return out

    @property
    def exit_code(self) -> int:
        """0 all pass, 1 any failure, 2 inconclusive rows but no failure."""
        c = self.counts()
        if c["FAIL"]:
            return 1
        if c["INCONCLUSIVE"]:
            return 2
        return 0

    def header(self) -> dict:
        return {
            "record": "header",
            "schema_version": SCHEMA_VERSION,
            "rng": RNG_ALGORITHM,
            "config": self.config.to_json(),
        }

    def deterministic_lines(self) -> list[str]:
        """Every record except ``meta``."""
        lines = [_dumps(self.header())]
        lines += [_dumps({"record": "row", **r}) for r in self.rows]
        lines.append(_dumps({"record": "summary", "counts": self.counts(), "exit_code": self.exit_code, **self.summary}))
        return lines

    def to_jsonl(self) -> str:
        lines = self.deterministic_lines() + [_dumps({"record": "meta", **self.meta})]
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        """Rows only, after one ``#`` line carrying the header record."""
        columns: list[str] = []
        for r in self.rows:
            for k in r:
                if k not in columns:
                    columns.append(k)
        buf = io.StringIO()
        buf.write("# " + _dumps(self.header()) + "\n")
        w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        w.writeheader()
        for r in self.rows:
            flat = {}
            for k, v in jsonable(r).items():
                flat[k] = " ".join(map(str, v)) if isinstance(v, list) else ("" if v is None else v)
            w.writerow(flat)
        return buf.getvalue()

    def render(self, fmt: str = "json") -> str:
        if fmt == "json":
            return self.to_jsonl()
        if fmt == "csv":
            return self.to_csv()
        raise ValueError(f"unknown format {fmt!r}")

    def write(self, path=None, fmt: str = "json") -> str:
        text = self.render(fmt)
        target = path or self.config.output_path
        if target:
            Path(target).write_text(text, encoding="utf-8")
        return text


def ore_threshold(n: int) -> int:
    """ceil((3n + 2) / 4) - 1, the largest sigma+- value that does not force an ADHC."""
    return -(-(3 * n + 2) // 4) - 1


def pool_size(default: int | None = None) -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw:
        try:
            k = int(raw)
        except ValueError:
            raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
        if k < 1:
            raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
        return k
    if default is not None:
        return default
    return min(8, os.cpu_count() or 1)


def _pooled(fn: Callable, items: Sequence, threads: int | None) -> list:
    """Map in a worker pool; results come back in input order."""
    k = pool_size(threads)
    if k == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=k) as ex:
        return list(ex.map(fn, items))


def _meta(t0: float, threads: int | None) -> dict:
    return {
        "finished_utc": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "elapsed_s": round(time.perf_counter() - t0, 3),
        "threads": pool_size(threads),
    }


# -- sharpness ----------------------------------------------------------------


def _sharpness_row(spec: ExtremalSpec, budget_states, time_limit, seed) -> dict:
    inst = generate_extremal(spec, seed=seed)
    n = spec.n
    actual = degree_profile(inst.graph).sigma_pm
    expected = spec.expected_sigma
    threshold = ore_threshold(n)
    row = {
        "family": spec.family,
        "s": spec.s,
        "n": n,
        "sigma_pm_expected": expected,
        "sigma_pm_actual": actual,
        "threshold": threshold,
        "degenerate": spec.degenerate,
    }
    try:
        res = find_adhc(inst.graph, budget_states=budget_states, time_limit=time_limit)
        row["adhc_verdict"] = res.verdict.value
        row["states"] = res.states
        row["witness"] = list(res.witness.vertices) if res.witness else None
    except BudgetExceeded as e:
        row["adhc_verdict"] = Status.INCONCLUSIVE.value
        row["states"] = e.states
        row["witness"] = None
    sigma_ok = actual == expected == threshold
    if not sigma_ok or row["adhc_verdict"] == "FOUND":
        row["status"] = Status.FAIL.value
    elif row["adhc_verdict"] == Status.INCONCLUSIVE.value:
        row["status"] = Status.INCONCLUSIVE.value
    else:
        row["status"] = Status.PASS.value
    return row


def run_sharpness(
    families: Iterable[str] | dict,
    s_range: Iterable[int] | None = None,
    budget: int | None = None,
    *,
    time_limit: float | None = None,
    seed: int | None = None,
    threads: int | None = None,
    output_path: str | None = None,
) -> Report:
    """Generate each family instance, measure sigma+-, and run the exact solver.

    ``families`` is either a list of family tags sharing ``s_range`` or a
    mapping from tag to its own s values. A row passes iff the measured value
    equals both the family formula and the threshold and the solver proves
    there is no ADHC; a budget overrun gives an INCONCLUSIVE row.
    """
    if isinstance(families, dict):
        plan = {f.upper(): [int(s) for s in ss] for f, ss in families.items()}
    else:
        if s_range is None:
            raise ValueError("s_range is required when families is a list")
        ss = [int(s) for s in s_range]
        plan = {f.upper(): ss for f in families}
    specs = [ExtremalSpec(f, s) for f, ss in plan.items() for s in ss]
    config = ExperimentConfig(
        Kind.SHARPNESS,
        {"families": plan, "budget_states": budget, "time_limit": time_limit, "seed": seed},
        output_path,
    )
    t0 = time.perf_counter()
    rows = _pooled(lambda sp: _sharpness_row(sp, budget, time_limit, seed), specs, threads)
    return Report(config, rows, {}, _meta(t0, threads))


# -- solver vs oracle ---------------------------------------------------------


def _crosscheck_row(item) -> dict:
    index, p, seed, g = item
    fast = find_adhc(g)
    slow = adhc_oracle(g)
    match = fast.verdict is slow.verdict
    row = {"n": g.n, "index": index, "p": p, "seed": seed, "arcs": g.arc_count,
           "solver": fast.verdict.value, "oracle": slow.verdict.value, "match": match}
    row["status"] = (Status.PASS if match else Status.FAIL).value
    return row


def _crosscheck_corpus(n: int, count: int | None, p_grid: Sequence, seed: int):
    if count is None:
        for i, g in enumerate(labeled_oriented_graphs(n)):
            yield i, None, None, g
        return
    for i in range(count):
        p = float(p_grid[i % len(p_grid)])
        s = derive_seed(seed, n, i)
        yield i, p, s, random_oriented(RandomModel(n, p, s))


def run_crosscheck(
    n: int,
    count: int | None = None,
    p_grid: Sequence = (0.2, 0.5, 0.8),
    seed: int = 0,
    *,
    threads: int | None = None,
    output_path: str | None = None,
) -> Report:
    """Compare :func:`find_adhc` with the permutation oracle.

    ``count=None`` enumerates every labeled oriented graph on ``n`` vertices
    (n <= 5); otherwise ``count`` random graphs cycle through ``p_grid``.
    """
    if n > ORACLE_MAX_N:
        raise ValueError(f"oracle cap is n <= {ORACLE_MAX_N}")
    config = ExperimentConfig(
        Kind.CROSSCHECK,
        {"n": n, "count": count, "exhaustive": count is None, "p_grid": list(p_grid), "seed": seed},
        output_path,
    )
    t0 = time.perf_counter()
    items = list(_crosscheck_corpus(n, count, p_grid, seed))
    rows = _pooled(_crosscheck_row, items, threads)
    mismatches = [r["index"] for r in rows if not r["match"]]
    return Report(config, rows, {"instances": len(rows), "mismatches": mismatches}, _meta(t0, threads))


# -- sweep --------------------------------------------------------------------


def _sweep_row(item, gammas, solve_max_n, budget_states) -> dict:
    source, tag, g = item
    prof = degree_profile(g)
    n = g.n
    rows = semidegree_implication(g, gammas)
    violations = [gm for gm, hyp, con in rows if hyp and not con]
    row = {"source": source, **tag, "n": n, "sigma_pm": prof.sigma_pm, "delta0": prof.delta0,
           "implication_violations": violations}
    if n % 2:
        row["hypothesis"] = None
    else:
        row["hypothesis"] = bool(4 * prof.sigma_pm >= 3 * n + 2)
    verdict = None
    states = None
    if row["hypothesis"] and n <= solve_max_n:
        try:
            res = find_adhc(g, budget_states=budget_states)
            verdict, states = res.verdict.value, res.states
        except BudgetExceeded as e:
            verdict, states = Status.INCONCLUSIVE.value, e.states
    row["adhc_verdict"] = verdict
    row["states"] = states
    # a small graph meeting the hypothesis without an ADHC is data, not a failure
    row["flagged"] = verdict == "NONE"
    row["status"] = (Status.FAIL if violations else Status.PASS).value
    return row


def _near_regular(n: int, drop: int, s: int) -> OrientedGraph:
    """Rotational tournament on ``n`` vertices, randomly relabeled, minus ``drop`` random arcs."""
    rng = stream(s)
    g = almost_regular_tournament(n).relabel(rng.permutation(n).tolist())
    arcs = list(g.arcs())
    keep = set(range(len(arcs))) - set(rng.choice(len(arcs), size=min(drop, len(arcs)), replace=False).tolist())
    return OrientedGraph.from_arcs(n, [arcs[i] for i in sorted(keep)])


def _sweep_corpus(n_range, p_grid, seeds: int, seed: int, extremal, near_regular: bool):
    for n in n_range:
        for j, p in enumerate(p_grid):
            for k in range(seeds):
                s = derive_seed(seed, n, j, k)
                yield "random", {"p": float(p), "seed": s}, random_oriented(RandomModel(n, float(p), s))
        if near_regular and n >= 2:
            for k in range(seeds):
                s = derive_seed(seed, n, len(p_grid), k)
                drop = k % 4
                yield "near_regular", {"drop": drop, "seed": s}, _near_regular(n, drop, s)
    for fam, s in extremal:
        spec = ExtremalSpec(fam, s)
        yield "extremal", {"family": spec.family, "s": spec.s}, generate_extremal(spec).graph


def run_sweep(
    n_range: Iterable[int],
    p_grid: Sequence,
    seeds: int,
    gamma_grid: Sequence = DEFAULT_GAMMAS,
    *,
    seed: int = 0,
    extremal: Sequence[tuple[str, int]] = (),
    near_regular: bool = True,
    solve_max_n: int = 20,
    budget_states: int | None = None,
    threads: int | None = None,
    output_path: str | None = None,
) -> Report:
    """Record sigma+-, semidegree and the Ore-to-semidegree implication per
    instance; for even n meeting sigma+- >= (3n+2)/4 (and n <= ``solve_max_n``)
    also the solver verdict. ``seeds`` graphs are drawn per (n, p) cell; with
    ``near_regular`` each n also gets ``seeds`` rotational tournaments with up
    to three arcs removed, which is where the degree hypothesis actually bites.
    """
    n_range = [int(n) for n in n_range]
    gammas = [Fraction(g) if isinstance(g, (int, Fraction)) else Fraction(repr(float(g))) for g in gamma_grid]
    config = ExperimentConfig(
        Kind.SWEEP,
        {
            "n_range": n_range,
            "p_grid": [float(p) for p in p_grid],
            "seeds": seeds,
            "seed": seed,
            "gamma_grid": gammas,
            "extremal": [[f.upper(), s] for f, s in extremal],
            "near_regular": near_regular,
            "solve_max_n": solve_max_n,
            "budget_states": budget_states,
        },
        output_path,
    )
    t0 = time.perf_counter()
    items = list(_sweep_corpus(n_range, p_grid, seeds, seed, extremal, near_regular))
    rows = _pooled(lambda it: _sweep_row(it, gammas, solve_max_n, budget_states), items, threads)
    summary = {
        "instances": len(rows),
        "implication_violations": sum(bool(r["implication_violations"]) for r in rows),
        "hypothesis_rows": sum(bool(r["hypothesis"]) for r in rows),
        "flagged": sum(r["flagged"] for r in rows),
    }
    return Report(config, rows, summary, _meta(t0, threads))
