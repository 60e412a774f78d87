"""Desk-scale check that large odd-girth forces small circular chromatic number.

For a fixed tree-width bound and target ratio p/q > 2, the experiment runs
over partial k-trees (all connected ones up to a vertex cap, or a seeded
random sample), keeps those with odd-girth at least a floor, and records
whether each one is (p,q)-colorable. The empirical threshold ``g_hat`` is
one more than the largest odd-girth of a non-colorable graph, so no recorded
failure has odd-girth ``g_hat`` or more.
"""

from __future__ import annotations

import hashlib
import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .circular import PQParams, is_pq_colorable, odd_cycle_map
from .enumeration import grow_connected
from .graph import INF, Graph, odd_girth
from .treewidth import random_partial_k_tree

SCHEMA = "circtw.experiment/1"


@dataclass(frozen=True)
class ExperimentConfig:
    k: int
    p: int
    q: int
    girth_floor: int = 3
    exhaustive_vertex_cap: Optional[int] = None
    sample_count: Optional[int] = None
    seed: int = 0
    sample_max_vertices: int = 16
    edge_keep_prob: float = 0.7
    output: Optional[str] = None

    def __post_init__(self):
        PQParams(self.p, self.q).require_above_two()
        if (self.exhaustive_vertex_cap is None) == (self.sample_count is None):
            raise ValueError("set exactly one of exhaustive_vertex_cap and sample_count")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must fit in 64 bits")

    @property
    def mode(self) -> str:
        return "exhaustive" if self.exhaustive_vertex_cap is not None else "sampled"

    def echo(self) -> dict:
        out = {"k": self.k, "p": self.p, "q": self.q, "girth_floor": self.girth_floor, "mode": self.mode}
        if self.mode == "exhaustive":
            out["exhaustive_vertex_cap"] = self.exhaustive_vertex_cap
        else:
            out.update(sample_count=self.sample_count, seed=self.seed,
                       sample_max_vertices=self.sample_max_vertices, edge_keep_prob=self.edge_keep_prob)
        return out


@dataclass(frozen=True)
class ExperimentRecord:
    id: int
    n: int
    m: int
    odd_girth: object
    colorable: bool
    witness_hash: str
    code: int = 0  # edge code of the graph, kept for failures only

    def graph(self) -> Graph:
        return Graph.from_code(self.n, self.code)


@dataclass(frozen=True)
class ExperimentReport:
    config: ExperimentConfig
    records: tuple
    g_hat: int
    method: str
    runtime: float = field(default=0.0, compare=False)

    @property
    def failures(self) -> list:
        return [r for r in self.records if not r.colorable]


def _odd_cycle_t(pq: PQParams) -> Optional[int]:
    # p/q = (2t+1)/t exactly when the reduced fraction has numerator 2*denominator + 1
    r = Fraction(pq.p, pq.q)
    if r.numerator == 2 * r.denominator + 1:
        return r.denominator
    return None


def _witness_hash(g: Graph, coloring) -> str:
    text = f"{g.n};" + ",".join(f"{u}-{v}" for u, v in g.sorted_edges()) + ";"
    text += "-" if coloring is None else ",".join(map(str, coloring))
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _graphs(cfg: ExperimentConfig):
    if cfg.mode == "exhaustive":
        yield from enumerate(grow_connected(cfg.k, cfg.exhaustive_vertex_cap))
        return
    for gid in range(cfg.sample_count):
        # one sub-generator per graph id keeps each draw independent of the others
        rng = random.Random(f"{cfg.seed}:{gid}")
        n = rng.randint(cfg.k + 1, cfg.sample_max_vertices)
        t = random_partial_k_tree(cfg.k, n, cfg.edge_keep_prob, seed=rng.getrandbits(64))
        yield gid, t.graph


def colorability(g: Graph, pq: PQParams):
    """``(colorable, witness)`` using the odd-cycle route when p/q = (2t+1)/t."""
    t = _odd_cycle_t(pq)
    if t is not None:
        image = odd_cycle_map(g, t)
        if image is None:
            return False, None
        # stepping once around the cycle moves the color by q, which is always allowed
        return True, [(x * pq.q) % pq.p for x in image]
    col = is_pq_colorable(g, pq)
    return (col is not None), (None if col is None else [col[v] for v in range(g.n)])


def run_verify_theorem(cfg: ExperimentConfig) -> ExperimentReport:
    start = time.monotonic()
    pq = PQParams(cfg.p, cfg.q)
    method = "odd-cycle" if _odd_cycle_t(pq) is not None else "pq-solver"
    records = []
    for gid, g in _graphs(cfg):
        og = odd_girth(g)
        if og < cfg.girth_floor:
            continue
        if og == INF:
            ok, witness = True, None
        else:
            ok, witness = colorability(g, pq)
        code = 0 if ok else g.code()
        records.append(ExperimentRecord(gid, g.n, g.m, og, ok, _witness_hash(g, witness), code))
    fails = [r.odd_girth for r in records if not r.colorable]
    g_hat = max(fails) + 1 if fails else cfg.girth_floor
    report = ExperimentReport(cfg, tuple(records), g_hat, method, time.monotonic() - start)
    if cfg.output:
        with open(cfg.output, "wb") as fh:
            fh.write(emit_report(report, "json"))
    return report


def _girth_json(x):
    return None if x == INF else x


def report_to_json(r: ExperimentReport, include_runtime: bool = False) -> dict:
    fails = r.failures
    out = {
        "schema": SCHEMA,
        "config": r.config.echo(),
        "method": r.method,
        "summary": {
            "graphs": len(r.records),
            "bipartite": sum(1 for x in r.records if x.odd_girth == INF),
            "failures": len(fails),
            "failure_odd_girths": sorted({x.odd_girth for x in fails}),
            "g_hat": r.g_hat,
        },
        "records": [
            {"id": x.id, "n": x.n, "m": x.m, "odd_girth": _girth_json(x.odd_girth),
             "colorable": x.colorable, "witness_hash": x.witness_hash}
            for x in r.records
        ],
    }
    if include_runtime:
        out["runtime_seconds"] = round(r.runtime, 3)
    return out


def emit_report(r: ExperimentReport, format: str = "json", include_runtime: bool = False) -> bytes:
    """Serialize a report. Without ``include_runtime`` the bytes depend only on the config."""
    data = report_to_json(r, include_runtime)
    if format == "json":
        return (json.dumps(data, indent=None, separators=(",", ":")) + "\n").encode()
    if format == "text":
        s = data["summary"]
        lines = [f"# {SCHEMA}"]
        lines += [f"# {key} = {value}" for key, value in data["config"].items()]
        lines.append(f"# method = {data['method']}")
        lines += [f"# {key} = {value}" for key, value in s.items()]
        if include_runtime:
            lines.append(f"# runtime_seconds = {data['runtime_seconds']}")
        lines.append("id\tn\tm\todd_girth\tcolorable\twitness_hash")
        for x in data["records"]:
            og = "inf" if x["odd_girth"] is None else x["odd_girth"]
            lines.append(f"{x['id']}\t{x['n']}\t{x['m']}\t{og}\t{int(x['colorable'])}\t{x['witness_hash']}")
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown format {format!r}")


def parse_report(data: bytes) -> dict:
    """Inverse of the json form of :func:`emit_report` (as plain data)."""
    return json.loads(data)


def report_digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


__all__ = [
    "ExperimentConfig", "ExperimentRecord", "ExperimentReport", "run_verify_theorem", "emit_report",
    "report_to_json", "parse_report", "report_digest", "colorability",
]
