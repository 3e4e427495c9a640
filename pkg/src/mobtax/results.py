"""CSV/JSON output schemas and plot-ready tables.

All numbers are written with 12 significant digits and ``.`` as decimal
separator; an empty CSV field means an undefined correlation.
"""

from __future__ import annotations

import csv
import json
import os
from pathlib import Path
from typing import Iterable, Sequence

from .edgestream import CorpusEntry
from ._util import report
from .equality import EqualityPoint
from .pca import PcaResult
from .taxonomy import ASPECTS, FEATURE_NAMES, TaxonomyPoint

EQUALITY_HEADER = ("dataset_id", "tau", "gini", "node_count")
TAXONOMY_HEADER = ("dataset_id", "t1_fraction") + FEATURE_NAMES + ("included_nodes",)
PROJECTIONS_HEADER = ("dataset_id", "t1_fraction", "pc1", "pc2")
COMPONENTS_HEADER = ("feature", "pc1_loading", "pc2_loading")
EIGENVALUES_HEADER = ("rank", "eigenvalue", "explained_variance_ratio")
TAG_COLUMNS = ("dataset_id", "data_type", "structure")


def fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, (int, str)) and not isinstance(x, bool):
        return str(x)
    return format(float(x), ".12g")


def _parse_optional(field: str) -> float | None:
    return None if field == "" else float(field)


def write_csv(path: str | os.PathLike, header: Sequence[str], rows: Iterable[Sequence]) -> Path:
    path = Path(path)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([fmt(v) for v in row])
    return path


def equality_rows(results: Iterable[tuple[str, Sequence[EqualityPoint]]]):
    for dataset_id, points in results:
        for p in points:
            yield (dataset_id, p.tau, p.gini, p.node_count)


def taxonomy_rows(results: Iterable[tuple[str, Sequence[TaxonomyPoint]]]):
    for dataset_id, points in results:
        for p in points:
            yield (dataset_id, p.t1_fraction, *p.features(), p.included_nodes)


def read_taxonomy_csv(path: str | os.PathLike) -> list[tuple[str, TaxonomyPoint]]:
    """Inverse of the taxonomy writer: ``(dataset_id, TaxonomyPoint)`` per row."""
    out = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        missing = set(TAXONOMY_HEADER) - set(reader.fieldnames or ())
        if missing:
            raise ValueError(f"{path}: missing columns {sorted(missing)}")
        for row in reader:
            point = TaxonomyPoint(
                t1_fraction=float(row["t1_fraction"]),
                gini_t1=float(row["gini_t1"]),
                included_nodes=int(row["included_nodes"]),
                **{a: _parse_optional(row[a]) for a in ASPECTS},
            )
            out.append((row["dataset_id"], point))
    return out


def write_pca(result: PcaResult, output_dir: str | os.PathLike) -> list[Path]:
    """Write ``pca_projections.csv``, ``pca_components.csv`` and ``pca_eigenvalues.csv``."""
    d = Path(output_dir)
    proj = write_csv(
        d / "pca_projections.csv",
        PROJECTIONS_HEADER,
        ((k[0], k[1], x, y) for k, (x, y) in zip(result.keys, result.projections.tolist())),
    )
    comps = result.components
    load = write_csv(
        d / "pca_components.csv",
        COMPONENTS_HEADER,
        ((name, comps[0, i], comps[1, i]) for i, name in enumerate(result.feature_names)),
    )
    ratio = result.explained_variance_ratio
    eig = write_csv(
        d / "pca_eigenvalues.csv",
        EIGENVALUES_HEADER,
        ((k + 1, w, r) for k, (w, r) in enumerate(zip(result.eigenvalues, ratio))),
    )
    return [proj, load, eig]


class WarningLog:
    """Collects ``{dataset_id, stage, message}`` records for ``warnings.jsonl``."""

    def __init__(self):
        self.records: list[dict] = []

    def add(self, dataset_id: str, stage: str, message: str) -> None:
        self.records.append({"dataset_id": dataset_id, "stage": stage, "message": message})

    def extend(self, dataset_id: str, stage: str, messages: Iterable[str]) -> None:
        for m in messages:
            self.add(dataset_id, stage, m)

    def write(self, path: str | os.PathLike) -> Path:
        path = Path(path)
        with open(path, "w", encoding="utf-8") as fh:
            for rec in self.records:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
        return path


def emit_plot_data(
    results,
    kind: str,
    entries: Sequence[CorpusEntry],
    output_dir: str | os.PathLike,
    issues: list | None = None,
) -> Path:
    """Write a long-format table joined with manifest type tags.

    ``kind="equality"`` and ``kind="taxonomy"`` take ``(dataset_id, points)``
    pairs; ``kind="pca"`` takes a :class:`PcaResult`. Taxonomy aspects are
    unpivoted to ``(aspect, value)`` rows and PCA rows are sorted by
    ``(dataset_id, t1_fraction)`` so each network's trail reads in order.
    Dataset ids missing from ``entries`` keep empty tag columns and are
    reported once each.
    """
    tags = {e.id: (e.data_type, e.structure) for e in entries}
    unknown: set[str] = set()

    def tag(dataset_id: str) -> tuple[str, str, str]:
        if dataset_id not in tags and dataset_id not in unknown:
            unknown.add(dataset_id)
            report(issues, f"dataset {dataset_id!r} not in manifest; type tags left empty")
        return (dataset_id, *tags.get(dataset_id, ("", "")))

    d = Path(output_dir)
    if kind == "equality":
        rows = ((*tag(r[0]), *r[1:]) for r in equality_rows(results))
        return write_csv(d / "equality_plot.csv", TAG_COLUMNS + EQUALITY_HEADER[1:], list(rows))
    if kind == "taxonomy":
        rows = [
            (*tag(dataset_id), p.t1_fraction, aspect, getattr(p, aspect))
            for dataset_id, points in results
            for p in points
            for aspect in ASPECTS
        ]
        return write_csv(
            d / "taxonomy_plot.csv", TAG_COLUMNS + ("t1_fraction", "aspect", "value"), rows
        )
    if kind == "pca":
        rows = sorted(
            ((k[0], k[1], x, y) for k, (x, y) in zip(results.keys, results.projections.tolist())),
            key=lambda r: (r[0], r[1]),
        )
        return write_csv(
            d / "pca_trails.csv",
            TAG_COLUMNS + ("t1_fraction", "pc1", "pc2"),
            [(*tag(r[0]), *r[1:]) for r in rows],
        )
    raise ValueError(f"unknown plot data kind {kind!r}")
