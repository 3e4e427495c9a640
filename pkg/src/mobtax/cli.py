"""Command-line entry point: ``mobtax <command> ...``.

Commands
--------
ingest      canonicalize an edge list and write it back out
equality    Gini trajectories for one or more edge lists
taxonomy    taxonomy trajectories for one or more edge lists
pca         fit the landscape on an existing taxonomy.csv
generate    write a synthetic edge list (ba, fortunato, uniform)
run         full corpus analysis driven by a JSON manifest
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from . import __version__
from .edgestream import EdgeListFormat, canonicalize, format_edge_list, load_manifest, read_edge_list
from .equality import EqualityPoint, equality_trajectory
from .generators import GrowthConfig, generate_ba, generate_fortunato, generate_uniform
from .pca import FeatureMatrix, pca_project
from .results import (
    EQUALITY_HEADER,
    TAXONOMY_HEADER,
    WarningLog,
    emit_plot_data,
    equality_rows,
    read_taxonomy_csv,
    taxonomy_rows,
    write_csv,
    write_pca,
)
from .snapshot import NORMALIZED_TIME
from .taxonomy import DEFAULT_T1_FRACTIONS, TaxonomyPoint, taxonomy_trajectory

log = logging.getLogger("mobtax")

COMMANDS = ("ingest", "equality", "taxonomy", "pca", "generate", "run")
GENERATORS = {"ba": generate_ba, "fortunato": generate_fortunato, "uniform": generate_uniform}

EXIT_OK = 0
EXIT_ALL_FAILED = 1
EXIT_BAD_CONFIG = 2


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    manifest: str | None = None
    fmt: EdgeListFormat = field(default_factory=EdgeListFormat)
    max_edges: int | None = None
    n_points: int = 100
    t1_fractions: tuple[float, ...] = DEFAULT_T1_FRACTIONS
    output_dir: str = "."
    seed: int | None = None
    equality_mode: str = NORMALIZED_TIME
    standardize: bool = True
    workers: int = 1
    # generate / ingest
    output: str | None = None
    model: str = "ba"
    n_nodes: int = 1000
    m: int = 2
    alpha: float = 1.0

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        fr = tuple(float(f) for f in self.t1_fractions)
        if not fr or any(not 0 < f < 1 for f in fr) or any(b <= a for a, b in zip(fr, fr[1:])):
            raise ValueError("t1_fractions must be strictly increasing within (0, 1)")
        self.t1_fractions = fr
        if self.n_points < 1:
            raise ValueError("n_points must be >= 1")
        if self.max_edges is not None and self.max_edges < 1:
            raise ValueError("max_edges must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


@dataclass
class DatasetResult:
    dataset_id: str
    ok: bool = False
    node_count: int = 0
    edge_count: int = 0
    equality: list[EqualityPoint] = field(default_factory=list)
    taxonomy: list[TaxonomyPoint] = field(default_factory=list)
    warnings: list[tuple[str, str]] = field(default_factory=list)
    seconds: float = 0.0


def analyse_dataset(dataset_id: str, path: str, config: RunConfig) -> DatasetResult:
    """Equality and taxonomy trajectories for one file; never raises."""
    res = DatasetResult(dataset_id)
    start = time.perf_counter()
    stage = "ingest"
    try:
        stream = canonicalize(read_edge_list(path, config.fmt), max_edges=config.max_edges)
        res.node_count, res.edge_count = stream.node_count, stream.edge_count
        stage = "equality"
        issues: list[str] = []
        res.equality = equality_trajectory(stream, config.n_points, config.equality_mode, issues)
        res.warnings += [(stage, m) for m in issues]
        stage = "taxonomy"
        issues = []
        res.taxonomy = taxonomy_trajectory(stream, config.t1_fractions, issues)
        res.warnings += [(stage, m) for m in issues]
        res.ok = True
    except (OSError, ValueError) as exc:
        res.warnings.append((stage, f"{type(exc).__name__}: {exc}"))
    res.seconds = time.perf_counter() - start
    return res


def _analyse_all(jobs: Sequence[tuple[str, str]], config: RunConfig) -> list[DatasetResult]:
    ids = [j[0] for j in jobs]
    paths = [j[1] for j in jobs]
    cfgs = [config] * len(jobs)
    if config.workers == 1 or len(jobs) < 2:
        return list(map(analyse_dataset, ids, paths, cfgs))
    with ProcessPoolExecutor(max_workers=config.workers) as pool:
        # map preserves submission order, so output bytes do not depend on scheduling
        return list(pool.map(analyse_dataset, ids, paths, cfgs))


def _collect_warnings(results: Sequence[DatasetResult], wlog: WarningLog) -> None:
    for r in results:
        for stage, msg in r.warnings:
            wlog.add(r.dataset_id, stage, msg)


def _fit_pca(results, config: RunConfig, out: Path, wlog: WarningLog):
    pooled = [(r.dataset_id, p) for r in results for p in r.taxonomy]
    issues: list[str] = []
    try:
        matrix = FeatureMatrix.from_points(pooled, issues)
        result = pca_project(matrix, standardize_features=config.standardize)
    except ValueError as exc:
        wlog.extend("*", "pca", issues)
        wlog.add("*", "pca", f"PCA skipped: {exc}")
        return None
    wlog.extend("*", "pca", issues)
    write_pca(result, out)
    return result


def run_pipeline(config: RunConfig) -> int:
    """Execute one command; returns the process exit status."""
    out = Path(config.output_dir)
    cmd = config.command

    if cmd == "generate":
        cfg = GrowthConfig(config.n_nodes, config.m, config.alpha, config.seed)
        text = format_edge_list(GENERATORS[config.model](cfg))
        _write_text(config.output, text)
        return EXIT_OK

    if cmd == "ingest":
        if len(config.inputs) != 1:
            raise ValueError("ingest takes exactly one --input")
        raw = read_edge_list(config.inputs[0], config.fmt)
        stream = canonicalize(raw, max_edges=config.max_edges)
        _write_text(config.output, format_edge_list(stream))
        summary = {
            "input": config.inputs[0],
            "data_lines": len(raw),
            "skipped_lines": raw.skipped_lines,
            "node_count": stream.node_count,
            "edge_count": stream.edge_count,
            "t_min": stream.t_min,
            "t_max": stream.t_max,
        }
        print(json.dumps(summary, indent=2), file=sys.stderr if config.output is None else sys.stdout)
        return EXIT_OK

    out.mkdir(parents=True, exist_ok=True)
    wlog = WarningLog()

    if cmd == "pca":
        if len(config.inputs) != 1:
            raise ValueError("pca takes exactly one --input taxonomy.csv")
        pooled = read_taxonomy_csv(config.inputs[0])
        issues: list[str] = []
        result = pca_project(FeatureMatrix.from_points(pooled, issues), config.standardize)
        wlog.extend("*", "pca", issues)
        write_pca(result, out)
        wlog.write(out / "warnings.jsonl")
        return EXIT_OK

    if cmd == "run":
        if not config.manifest:
            raise ValueError("run requires --manifest")
        entries = load_manifest(config.manifest)
        jobs = [(e.id, e.path) for e in entries]
    else:
        if not config.inputs:
            raise ValueError(f"{cmd} requires at least one --input")
        entries = []
        jobs = [(Path(p).stem, p) for p in config.inputs]
        if len({j[0] for j in jobs}) != len(jobs):
            raise ValueError("input file names must have distinct stems")

    start = time.perf_counter()
    results = _analyse_all(jobs, config)
    _collect_warnings(results, wlog)
    good = [r for r in results if r.ok]

    if cmd in ("equality", "run"):
        write_csv(out / "equality.csv", EQUALITY_HEADER, equality_rows((r.dataset_id, r.equality) for r in good))
    if cmd in ("taxonomy", "run"):
        write_csv(out / "taxonomy.csv", TAXONOMY_HEADER, taxonomy_rows((r.dataset_id, r.taxonomy) for r in good))
    if cmd == "run":
        pca = _fit_pca(good, config, out, wlog)
        issues = []
        emit_plot_data([(r.dataset_id, r.equality) for r in good], "equality", entries, out, issues)
        emit_plot_data([(r.dataset_id, r.taxonomy) for r in good], "taxonomy", entries, out, issues)
        if pca is not None:
            emit_plot_data(pca, "pca", entries, out, issues)
        wlog.extend("*", "plot_data", issues)
        summary = {
            "datasets": len(results),
            "succeeded": len(good),
            "failed": len(results) - len(good),
            "pca_rows": 0 if pca is None else len(pca.keys),
            "seconds": round(time.perf_counter() - start, 3),
            "per_dataset": [
                {
                    "dataset_id": r.dataset_id,
                    "ok": r.ok,
                    "node_count": r.node_count,
                    "edge_count": r.edge_count,
                    "equality_points": len(r.equality),
                    "taxonomy_points": len(r.taxonomy),
                    "seconds": round(r.seconds, 3),
                }
                for r in results
            ],
        }
        with open(out / "run_summary.json", "w", encoding="utf-8") as fh:
            json.dump(summary, fh, indent=2)
            fh.write("\n")
    wlog.write(out / "warnings.jsonl")

    for r in results:
        if not r.ok:
            log.warning("dataset %s failed: %s", r.dataset_id, r.warnings[-1][1])
    return EXIT_OK if good else EXIT_ALL_FAILED


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _fractions(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mobtax", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--delimiter", choices=("whitespace", "comma", "tab"), default="whitespace")
    fmt.add_argument("--source-col", type=int, default=0)
    fmt.add_argument("--target-col", type=int, default=1)
    fmt.add_argument("--time-col", type=int, default=2)
    fmt.add_argument("--max-edges", type=int, default=None,
                     help="keep only the first N distinct edges (e.g. 1000000)")

    analysis = argparse.ArgumentParser(add_help=False)
    analysis.add_argument("--output-dir", "-o", default=".")
    analysis.add_argument("--n-points", type=int, default=100)
    analysis.add_argument("--equality-mode", choices=("normalized_time", "edge_fraction"),
                          default=NORMALIZED_TIME)
    analysis.add_argument("--t1-fractions", type=_fractions, default=DEFAULT_T1_FRACTIONS,
                          help="comma-separated, default 0.1,...,0.9")
    analysis.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("ingest", parents=[fmt], help="canonicalize an edge list")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--output", default=None, help="canonical edge list (default: stdout)")

    for name in ("equality", "taxonomy"):
        p = sub.add_parser(name, parents=[fmt, analysis], help=f"{name} trajectories")
        p.add_argument("--input", "-i", action="append", required=True)

    p = sub.add_parser("pca", help="fit the landscape on a taxonomy.csv")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--output-dir", "-o", default=".")
    p.add_argument("--raw", action="store_true", help="centre only, no standardization")

    p = sub.add_parser("generate", help="synthetic growth model")
    p.add_argument("--model", choices=sorted(GENERATORS), default="ba")
    p.add_argument("--n", type=int, required=True, dest="n_nodes")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--output", default=None, help="edge list path (default: stdout)")

    p = sub.add_parser("run", parents=[fmt, analysis], help="full corpus run")
    p.add_argument("--manifest", required=True)
    p.add_argument("--raw", action="store_true", help="PCA on raw covariance")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    kw = dict(command=ns.command)
    if hasattr(ns, "delimiter"):
        kw["fmt"] = EdgeListFormat(ns.delimiter, ns.source_col, ns.target_col, ns.time_col)
        kw["max_edges"] = ns.max_edges
    if hasattr(ns, "input"):
        kw["inputs"] = ns.input if isinstance(ns.input, list) else [ns.input]
    for name in ("manifest", "output_dir", "n_points", "equality_mode", "t1_fractions",
                 "workers", "output", "model", "n_nodes", "m", "alpha", "seed"):
        if hasattr(ns, name):
            kw[name] = getattr(ns, name)
    if hasattr(ns, "raw"):
        kw["standardize"] = not ns.raw
    return RunConfig(**kw)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        config = config_from_args(ns)
        return run_pipeline(config)
    except (ValueError, OSError) as exc:
        print(f"mobtax {ns.command}: error: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG


if __name__ == "__main__":
    sys.exit(main())
