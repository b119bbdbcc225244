"""Monte-Carlo sweeps over G(n, p) with CSV output.

Sample ``i`` at size ``n`` is generated from ``derive_seed(master, n, i)``,
so every row can be reproduced on its own.  Rows come out sorted by
``(n, sample)`` whatever the number of worker processes.
"""
from __future__ import annotations

import csv
import io
import math
import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, field, fields
from typing import Iterable, List, Optional, Sequence, TextIO, Tuple

from . import structure
from .bounds import (
    lower_bound_min_symdiff,
    paley_sequence,
    theorem1_bound,
    theorem1_sequence,
    theorem2_bound,
    theorem2_sequence,
)
from .exact import decide_at_most
from .generators import DEFAULT_SEED, derive_seed, gnp, paley
from .trigraph import Trigraph

KINDS = ("theorem3", "regimes", "bound-scan", "paley-table")
CSV_COLUMNS = ("kind", "n", "p", "sample", "seed", "statistic", "label", "formula_value", "pass")
REGIME_WIDTH = {"tww0": 0, "tww1": 1, "tww2": 2, "other": -1}


# -- statistics -------------------------------------------------------------------


def theorem3_statistic(G: Trigraph) -> int:
    """Minimum over vertex pairs of ``|(N(i) ^ N(j)) - {i, j}|``."""
    return lower_bound_min_symdiff(G)


def theorem3_formula(n: int, p: float, epsilon: float = 0.1) -> float:
    """``2p(1-p)n - (2 sqrt 2 + eps) sqrt(p(1-p) n ln n)``."""
    v = p * (1 - p)
    return 2 * v * n - (2 * math.sqrt(2) + epsilon) * math.sqrt(v * n * math.log(n))


def _unicyclic_width_at_most_one(G: Trigraph, comp: List[int], budget: int) -> bool:
    _, H = structure.twin_reduction(G.subgraph(comp))
    if structure.is_forest(H):
        return structure.is_tree(H) and structure.is_caterpillar(H)
    core = structure.find_cycle(H, H.vertices)
    if len(core) >= 5:  # induced long cycle
        return False
    if structure.has_induced_star_subdivision(H):
        return False
    decision = decide_at_most(H, 1, budget)
    return decision.feasible is True


def regime_classify(G: Trigraph, budget: int = 200_000) -> str:
    """Twin-width label for graphs whose components have at most one cycle.

    ``tww0`` for cographs; ``other`` when a component has two or more
    independent cycles; otherwise the maximum over components, where a tree
    is width 1 iff it is a caterpillar and a unicyclic component is decided
    after twin reduction (long induced cycle or induced subdivided claw
    forces 2, small leftovers go to the exact search).
    """
    if structure.is_cograph(G):
        return "tww0"
    if structure.max_cycles_per_component(G) > 1:
        return "other"
    worst = 0
    for comp in structure.components(G):
        if len(comp) < 4:
            continue
        sub = G.subgraph(comp)
        if structure.is_cograph(sub):
            continue
        if structure.is_tree(sub):
            width = 1 if structure.is_caterpillar(sub) else 2
        else:
            width = 1 if _unicyclic_width_at_most_one(G, comp, budget) else 2
        worst = max(worst, width)
        if worst == 2:
            break
    return f"tww{worst}"


# -- configuration -------------------------------------------------------------------

_POWER = re.compile(r"^n\^\(?(-?[0-9.]+(?:/[0-9.]+)?)\)?$")
_INVERSE = re.compile(r"^([0-9.]+)/n$")


@dataclass
class ExperimentConfig:
    kind: str
    n_values: Sequence[int]
    p_rule: str = "0.5"
    epsilon: float = 0.1
    samples: int = 1
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown experiment kind {self.kind!r}")
        if not self.n_values:
            raise ValueError("n range is empty")
        if self.samples < 1:
            raise ValueError("need at least one sample")
        self.n_values = [int(n) for n in self.n_values]
        if self.kind != "paley-table":
            for n in self.n_values:
                self.p(n)

    def parsed_rule(self) -> Tuple[str, float]:
        rule = self.p_rule.replace(" ", "")
        m = _POWER.match(rule)
        if m:
            expo = m.group(1)
            if "/" in expo:
                a, b = expo.split("/")
                return "power", float(a) / float(b)
            return "power", float(expo)
        m = _INVERSE.match(rule)
        if m:
            return "inverse", float(m.group(1))
        try:
            return "fixed", float(rule)
        except ValueError:
            raise ValueError(f"cannot parse p rule {self.p_rule!r}") from None

    def p(self, n: int) -> float:
        kind, x = self.parsed_rule()
        if kind == "power":
            p = float(n) ** x
        elif kind == "inverse":
            p = x / n
        else:
            p = x
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"p rule {self.p_rule!r} gives p = {p} at n = {n}")
        return p


def expected_regime(config: ExperimentConfig, n: int) -> Optional[str]:
    """Predicted label for sparse rules; ``None`` at the boundaries or for dense p."""
    kind, x = config.parsed_rule()
    if kind == "inverse":
        return "tww2" if 0 < x < 1 else None
    if kind == "power":
        g = x
    else:
        p = config.p(n)
        if p <= 0:
            return "tww0"
        g = math.log(p) / math.log(n)
    if g < -4 / 3:
        return "tww0"
    if -4 / 3 < g < -7 / 6:
        return "tww1"
    if -7 / 6 < g < -1:
        return "tww2"
    return None


@dataclass
class ExperimentRecord:
    kind: str
    n: int
    p: Optional[float]
    sample: int
    seed: int
    statistic: int
    label: str
    formula_value: Optional[float]
    passed: bool

    def row(self) -> List[str]:
        return [
            self.kind,
            str(self.n),
            "" if self.p is None else repr(self.p),
            str(self.sample),
            str(self.seed),
            str(self.statistic),
            self.label,
            "" if self.formula_value is None else repr(self.formula_value),
            "true" if self.passed else "false",
        ]

    @classmethod
    def from_row(cls, row: Sequence[str]) -> "ExperimentRecord":
        if len(row) != len(CSV_COLUMNS):
            raise ValueError(f"expected {len(CSV_COLUMNS)} columns, got {len(row)}")
        kind, n, p, sample, seed, stat, label, formula, passed = row
        if passed not in ("true", "false"):
            raise ValueError(f"bad pass flag {passed!r}")
        return cls(
            kind,
            int(n),
            None if p == "" else float(p),
            int(sample),
            int(seed),
            int(stat),
            label,
            None if formula == "" else float(formula),
            passed == "true",
        )

    @property
    def is_summary(self) -> bool:
        return self.sample == -1


# -- per-sample work ------------------------------------------------------------------


def _run_sample(task) -> List[ExperimentRecord]:
    kind, n, p, sample, seed, eps, expected = task
    if kind == "theorem3":
        G = gnp(n, p, seed)
        stat = theorem3_statistic(G)
        f = theorem3_formula(n, p, eps)
        return [ExperimentRecord(kind, n, p, sample, seed, stat, "", f, stat > f)]
    if kind == "regimes":
        G = gnp(n, p, seed)
        label = regime_classify(G)
        f = None if expected is None else float(REGIME_WIDTH[expected])
        return [ExperimentRecord(kind, n, p, sample, seed, REGIME_WIDTH[label], label, f, label == expected)]
    if kind == "bound-scan":
        G = gnp(n, p, seed)
        t1 = theorem1_sequence(G, seed)
        out = [ExperimentRecord(kind, n, p, sample, seed, t1.width, "theorem1",
                                theorem1_bound(n) if n >= 3 else 0.0, t1.bound_met)]
        m = G.num_edges()
        if m >= 1:
            t2 = theorem2_sequence(G, seed)
            out.append(ExperimentRecord(kind, n, p, sample, seed, t2.width, "theorem2",
                                        theorem2_bound(m), t2.bound_met))
        return out
    if kind == "paley-table":
        b = paley_sequence(n)
        lower = lower_bound_min_symdiff(paley(n))
        half = (n - 1) / 2
        ok = b.width == lower == half
        return [ExperimentRecord(kind, n, None, sample, seed, b.width, "paley", half, ok)]
    raise ValueError(f"unknown experiment kind {kind!r}")


def _tasks(config: ExperimentConfig):
    for n in config.n_values:
        if config.kind == "paley-table":
            if n % 4 != 1:
                continue
            yield (config.kind, n, None, 0, 0, config.epsilon, None)
            continue
        p = config.p(n)
        expected = expected_regime(config, n) if config.kind == "regimes" else None
        for i in range(config.samples):
            yield (config.kind, n, p, i, derive_seed(config.seed, n, i), config.epsilon, expected)


def worker_count() -> int:
    cap = os.environ.get("TWW_THREADS")
    cpus = os.cpu_count() or 1
    if cap:
        return max(1, min(cpus, int(cap)))
    return cpus


def _summaries(config: ExperimentConfig, records: List[ExperimentRecord]) -> List[ExperimentRecord]:
    out = []
    groups: dict = {}
    for r in records:
        groups.setdefault((r.n, r.label if config.kind == "bound-scan" else ""), []).append(r)
    for (n, label), rs in sorted(groups.items()):
        passes = sum(r.passed for r in rs)
        tag = f"summary:{label}" if label else "summary"
        out.append(ExperimentRecord(config.kind, n, rs[0].p, -1, config.seed, passes, tag,
                                    passes / len(rs), passes == len(rs)))
    return out


def run_experiment(config: ExperimentConfig, out: Optional[TextIO] = None,
                   workers: Optional[int] = None) -> List[ExperimentRecord]:
    """Run every sample, append per-``n`` summary rows, optionally write CSV to ``out``."""
    tasks = list(_tasks(config))
    workers = worker_count() if workers is None else max(1, workers)
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_run_sample, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        chunks = [_run_sample(t) for t in tasks]
    records = [r for chunk in chunks for r in chunk]
    records.sort(key=lambda r: (r.n, r.sample, r.label))
    records += _summaries(config, records)
    if out is not None:
        write_csv(records, out)
    return records


def write_csv(records: Iterable[ExperimentRecord], out: TextIO) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        w.writerow(r.row())


def read_csv(src: TextIO) -> List[ExperimentRecord]:
    reader = csv.reader(src)
    header = next(reader, None)
    if header is None or tuple(header) != CSV_COLUMNS:
        raise ValueError(f"unexpected CSV header {header!r}")
    return [ExperimentRecord.from_row(row) for row in reader if row]


def records_to_csv(records: Iterable[ExperimentRecord]) -> str:
    buf = io.StringIO()
    write_csv(records, buf)
    return buf.getvalue()


def pass_rate(records: Iterable[ExperimentRecord], n: Optional[int] = None, label: Optional[str] = None) -> float:
    rs = [r for r in records if not r.is_summary and (n is None or r.n == n)
          and (label is None or r.label == label)]
    return sum(r.passed for r in rs) / len(rs) if rs else float("nan")


def label_fraction(records: Iterable[ExperimentRecord], labels: Iterable[str], n: Optional[int] = None) -> float:
    labels = set(labels)
    rs = [r for r in records if not r.is_summary and (n is None or r.n == n)]
    return sum(r.label in labels for r in rs) / len(rs) if rs else float("nan")
