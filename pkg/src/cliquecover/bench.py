"""Search-tree size comparison of the edge clique cover engines on G(n, p).

A config is a flat ``key = value`` file::

    # comment
    n = 16            # one size or a comma list
    p = 0.5           # one density or a comma list
    seeds = 10        # seeds seed .. seed+seeds-1 per (n, p)
    seed = 0
    engines = eccg, f1, f2
    k = min           # min, min-1, min+1 or a fixed integer
    timeout = 60      # seconds per (instance, engine) run
    timeout.f2 = 10   # optional per-engine override
    reduce = true     # kernelize first (false: raw search trees)
    workers = 1

Each (instance, engine) pair is an isolated run; with ``workers > 1`` the
runs go to a process pool and the report is assembled in a fixed order, so
everything except wall times is deterministic.
"""

from __future__ import annotations

import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .drivers import ECC_ENGINES, min_ecc, solve_ecc
from .fixtures import gnp
from .problems import SearchTimeout


class BenchConfigError(ValueError):
    pass


@dataclass
class BenchConfig:
    n: list = field(default_factory=lambda: [16])
    p: list = field(default_factory=lambda: [0.5])
    seeds: int = 10
    seed: int = 0
    engines: list = field(default_factory=lambda: ["eccg", "f1", "f2"])
    k: str = "min"
    timeout: float = 60.0
    engine_timeout: dict = field(default_factory=dict)
    reduce: bool = True
    workers: int = 1

    def __post_init__(self):
        if not self.engines:
            raise BenchConfigError("engine list is empty")
        bad = [e for e in self.engines if e not in ECC_ENGINES]
        if bad:
            raise BenchConfigError(f"unknown engines {bad}; choose from {sorted(ECC_ENGINES)}")
        if self.seeds < 1 or self.workers < 1:
            raise BenchConfigError("seeds and workers must be positive")
        if not (self.k in ("min", "min-1", "min+1") or self.k.lstrip("-").isdigit()):
            raise BenchConfigError(f"bad k {self.k!r}")


def _bool(s: str) -> bool:
    s = s.lower()
    if s in ("1", "true", "yes", "on"):
        return True
    if s in ("0", "false", "no", "off"):
        return False
    raise BenchConfigError(f"expected a boolean, got {s!r}")


def _list(s: str) -> list:
    return [t.strip() for t in s.split(",") if t.strip()]


_CASTS = {
    "n": lambda s: [int(t) for t in _list(s)],
    "p": lambda s: [float(t) for t in _list(s)],
    "seeds": int,
    "seed": int,
    "engines": _list,
    "k": str.strip,
    "timeout": float,
    "reduce": _bool,
    "workers": int,
}


def parse_config_text(text: str) -> BenchConfig:
    vals = {}
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise BenchConfigError(f"line {no}: expected 'key = value'")
        key, val = (t.strip() for t in line.split("=", 1))
        if key.startswith("timeout."):
            try:
                vals.setdefault("engine_timeout", {})[key[8:]] = float(val)
            except ValueError as exc:
                raise BenchConfigError(f"line {no}: {exc}") from None
            continue
        if key not in _CASTS:
            raise BenchConfigError(f"line {no}: unknown key {key!r}")
        try:
            vals[key] = _CASTS[key](val)
        except ValueError as exc:
            raise BenchConfigError(f"line {no}: {exc}") from None
    return BenchConfig(**vals)


def load_config(path) -> BenchConfig:
    return parse_config_text(Path(path).read_text())


@dataclass
class BenchRow:
    instance: str
    n: int
    p: float
    seed: int
    m: int
    d: int
    k: int
    engine: str
    answer: bool | None  # None: timed out
    nodes: int  # on a timeout, the nodes visited before giving up
    depth: int
    time_ms: float


@dataclass
class BenchReport:
    config: dict
    rows: list
    ratios: dict  # "eccg/f1" -> median node ratio
    consistent: bool  # finished engines agreed on every instance
    compared: dict  # "eccg/f1" -> instances entering that median
    timeouts: dict  # engine -> runs that hit the time limit

    @property
    def complete(self) -> bool:
        return not any(self.timeouts.values())

    def to_json(self) -> dict:
        return {
            "config": self.config,
            "rows": [asdict(r) for r in self.rows],
            "ratios": self.ratios,
            "consistent": self.consistent,
            "compared": self.compared,
            "timeouts": self.timeouts,
        }

    def to_csv(self) -> str:
        cols = list(BenchRow.__dataclass_fields__)
        out = [",".join(cols)]
        for r in self.rows:
            out.append(",".join("" if getattr(r, c) is None else str(getattr(r, c)) for c in cols))
        return "\n".join(out) + "\n"


def _target_k(g, mode: str) -> int:
    if mode.lstrip("-").isdigit():
        return int(mode)
    k = min_ecc(g, "f1", reduce=False)[0]
    return {"min": k, "min-1": k - 1, "min+1": k + 1}[mode]


def _run_one(job):
    n, p, seed, k, engine, timeout, reduce = job
    g = gnp(n, p, seed)
    try:
        out = solve_ecc(g, k, engine, reduce=reduce, time_limit=timeout)
    except SearchTimeout as exc:
        s = exc.stats
        return None, s.nodes, s.max_depth, round(s.wall_time * 1000, 3)
    s = out.stats
    return out.answer, s.nodes, s.max_depth, round(s.wall_time * 1000, 3)


def bench_run(config: BenchConfig) -> BenchReport:
    instances = []
    for n in config.n:
        for p in config.p:
            for seed in range(config.seed, config.seed + config.seeds):
                g = gnp(n, p, seed)
                instances.append((f"gnp-{n}-{p}-{seed}", n, p, seed, g, _target_k(g, config.k)))
    jobs = [(n, p, seed, k, e, config.engine_timeout.get(e, config.timeout), config.reduce)
            for _, n, p, seed, _, k in instances for e in config.engines]
    if config.workers > 1:
        with ProcessPoolExecutor(config.workers) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(j) for j in jobs]

    rows = []
    it = iter(results)
    for name, n, p, seed, g, k in instances:
        for e in config.engines:
            ans, nodes, depth, ms = next(it)
            rows.append(BenchRow(name, n, p, seed, g.m, g.degeneracy.d, k, e, ans, nodes, depth, ms))

    consistent = True
    per: dict = {}
    for r in rows:
        per.setdefault(r.instance, {})[r.engine] = r
    for by_engine in per.values():
        if len({r.answer for r in by_engine.values() if r.answer is not None}) > 1:
            consistent = False
    timeouts = {e: sum(1 for b in per.values() if b[e].answer is None) for e in config.engines}

    # medians over the instances where both engines of a pair finished
    ratios, compared = {}, {}
    if "eccg" in config.engines:
        for e in config.engines:
            if e == "eccg":
                continue
            both = [b for b in per.values() if b["eccg"].answer is not None and b[e].answer is not None]
            vals = [b["eccg"].nodes / b[e].nodes for b in both]
            ratios[f"eccg/{e}"] = statistics.median(vals) if vals else None
            compared[f"eccg/{e}"] = len(vals)
    cfg = asdict(config)
    return BenchReport(cfg, rows, ratios, consistent, compared, timeouts)


def format_report(rep: BenchReport) -> str:
    lines = [f"{'instance':<20} {'m':>4} {'d':>3} {'k':>3} {'engine':<5} {'answer':<7} {'nodes':>10} {'depth':>6} {'ms':>10}"]
    for r in rep.rows:
        ans = "timeout" if r.answer is None else ("YES" if r.answer else "NO")
        lines.append(f"{r.instance:<20} {r.m:>4} {r.d:>3} {r.k:>3} {r.engine:<5} {ans:<7} "
                     f"{r.nodes:>10} {r.depth:>6} {r.time_ms:>10.1f}")
    for key, val in rep.ratios.items():
        shown = "n/a" if val is None else f"{val:.2f}"
        lines.append(f"median node ratio {key}: {shown} over {rep.compared[key]} instances")
    lines.append(f"timeouts: {rep.timeouts}; answers consistent: {rep.consistent}")
    return "\n".join(lines)
