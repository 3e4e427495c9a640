"""Timestamped edge lists: parsing, canonicalization and corpus manifests.

Every analysis in this package consumes an :class:`EdgeStream`, a
time-ordered sequence of distinct undirected edges. Raw files go through
:func:`parse_edge_list` and then :func:`canonicalize`.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "DATA_TYPES",
    "STRUCTURES",
    "CorpusEntry",
    "EdgeListFormat",
    "EdgeStream",
    "ParseError",
    "RawEdges",
    "TemporalEdge",
    "canonicalize",
    "format_edge_list",
    "load_manifest",
    "parse_edge_list",
    "read_edge_list",
    "stream_from_pairs",
]

DATA_TYPES = frozenset(
    {"Social", "Citation", "Economic", "Co-occurrence", "Computer", "Contact", "Transport"}
)
STRUCTURES = frozenset({"Star", "Bipartite", "Individual", "Clique", "Spatial"})

_DELIMITERS = {"comma": ",", "tab": "\t", "whitespace": None}
_COMMENT_PREFIXES = ("#", "%")


class ParseError(ValueError):
    """Raised for malformed edge-list input. ``lineno`` is 1-based."""

    def __init__(self, message: str, lineno: int | None = None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


@dataclass(frozen=True)
class TemporalEdge:
    source: str
    target: str
    timestamp: float

    def canonical_pair(self) -> tuple[str, str]:
        return (self.source, self.target) if self.source <= self.target else (self.target, self.source)


@dataclass(frozen=True)
class EdgeListFormat:
    """Column layout of a delimited edge list.

    ``delimiter`` is one of ``"comma"``, ``"tab"`` or ``"whitespace"``; the
    column indices are zero-based. Extra columns (weights, labels) are
    ignored.
    """

    delimiter: str = "whitespace"
    source_col: int = 0
    target_col: int = 1
    time_col: int = 2

    def __post_init__(self):
        if self.delimiter not in _DELIMITERS:
            raise ValueError(
                f"unknown delimiter {self.delimiter!r}; expected one of {sorted(_DELIMITERS)}"
            )
        cols = (self.source_col, self.target_col, self.time_col)
        if min(cols) < 0 or len(set(cols)) != 3:
            raise ValueError(f"column indices must be distinct and non-negative, got {cols}")

    @property
    def n_fields(self) -> int:
        return max(self.source_col, self.target_col, self.time_col) + 1


@dataclass(frozen=True)
class RawEdges:
    """Parser output: every data line in file order, before canonicalization."""

    edges: tuple[TemporalEdge, ...]
    skipped_lines: int = 0

    def __iter__(self) -> Iterator[TemporalEdge]:
        return iter(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def node_count(self) -> int:
        return len({e.source for e in self.edges} | {e.target for e in self.edges})


@dataclass(frozen=True, eq=False)
class EdgeStream:
    """Canonical growth-ordered simple graph.

    Nodes are dense integer indices ``0..node_count-1`` assigned in order of
    first appearance; ``labels[i]`` is the original identifier of node ``i``.
    Each edge ``k`` joins ``sources[k]`` and ``targets[k]`` at
    ``timestamps[k]``; timestamps are non-decreasing and no unordered pair
    repeats. Arrays are read-only.
    """

    sources: np.ndarray
    targets: np.ndarray
    timestamps: np.ndarray
    labels: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for name in ("sources", "targets", "timestamps"):
            arr = np.array(getattr(self, name), copy=True)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(self.labels)})

    @property
    def edge_count(self) -> int:
        return len(self.timestamps)

    @property
    def node_count(self) -> int:
        return len(self.labels)

    @property
    def t_min(self) -> float:
        return float(self.timestamps[0])

    @property
    def t_max(self) -> float:
        return float(self.timestamps[-1])

    @property
    def edges(self) -> list[TemporalEdge]:
        return list(self)

    def __iter__(self) -> Iterator[TemporalEdge]:
        labels = self.labels
        for s, t, ts in zip(self.sources.tolist(), self.targets.tolist(), self.timestamps.tolist()):
            yield TemporalEdge(labels[s], labels[t], ts)

    def __len__(self) -> int:
        return self.edge_count

    def __eq__(self, other):
        if not isinstance(other, EdgeStream):
            return NotImplemented
        return (
            self.labels == other.labels
            and np.array_equal(self.sources, other.sources)
            and np.array_equal(self.targets, other.targets)
            and np.array_equal(self.timestamps, other.timestamps)
        )

    __hash__ = None

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown node {label!r}") from None

    def node_mapping(self) -> dict[str, int]:
        """Original identifier -> dense index."""
        return dict(self._index)


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    name: str
    path: str
    data_type: str
    structure: str

    def __post_init__(self):
        if len(self.id) != 1:
            raise ValueError(f"corpus id must be a single character, got {self.id!r}")
        if self.data_type not in DATA_TYPES:
            raise ValueError(f"entry {self.id}: unknown data_type {self.data_type!r}")
        if self.structure not in STRUCTURES:
            raise ValueError(f"entry {self.id}: unknown structure {self.structure!r}")


def _split(line: str, sep: str | None) -> list[str]:
    if sep is None:
        return line.split()
    return [f.strip() for f in line.split(sep)]


def parse_edge_list(text: str | Iterable[str], fmt: EdgeListFormat | None = None) -> RawEdges:
    """Read a delimited edge list.

    Parameters
    ----------
    text : str or iterable of str
        Whole file contents, or an open text file / iterable of lines.
    fmt : EdgeListFormat, optional
        Delimiter and column layout. Defaults to whitespace-separated
        ``source target timestamp``.

    Returns
    -------
    RawEdges
        Edges in file order plus the number of blank and comment lines
        skipped. No deduplication or sorting happens here.

    Raises
    ------
    ParseError
        On a line with too few fields or a non-numeric timestamp, or when the
        input holds no data lines at all.
    """
    fmt = fmt or EdgeListFormat()
    sep = _DELIMITERS[fmt.delimiter]
    lines = text.splitlines() if isinstance(text, str) else text
    edges = []
    skipped = 0
    for lineno, line in enumerate(lines, start=1):
        line = line.rstrip("\r\n")
        stripped = line.strip()
        if not stripped or stripped.startswith(_COMMENT_PREFIXES):
            skipped += 1
            continue
        fields = _split(stripped, sep)
        if len(fields) < fmt.n_fields:
            raise ParseError(
                f"expected at least {fmt.n_fields} fields, found {len(fields)}", lineno
            )
        try:
            ts = float(fields[fmt.time_col])
        except ValueError:
            raise ParseError(f"unparseable timestamp {fields[fmt.time_col]!r}", lineno) from None
        if not np.isfinite(ts):
            raise ParseError(f"non-finite timestamp {fields[fmt.time_col]!r}", lineno)
        src, dst = fields[fmt.source_col], fields[fmt.target_col]
        if not src or not dst:
            raise ParseError("empty node identifier", lineno)
        edges.append(TemporalEdge(src, dst, ts))
    if not edges:
        raise ParseError("no data lines in input")
    return RawEdges(tuple(edges), skipped)


def read_edge_list(path: str | os.PathLike, fmt: EdgeListFormat | None = None) -> RawEdges:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh, fmt)


def canonicalize(raw: Iterable[TemporalEdge], max_edges: int | None = None) -> EdgeStream:
    """Turn raw timestamped edges into a growth-ordered simple graph.

    Self-loops are dropped, each pair is stored with its endpoints in sorted
    label order, edges are stable-sorted by timestamp (ties keep input order),
    and a repeated pair keeps only its earliest occurrence. With
    ``max_edges`` only the first ``max_edges`` distinct edges survive.

    Applying this to an existing :class:`EdgeStream` returns an equal stream.
    """
    if max_edges is not None and max_edges < 1:
        raise ValueError(f"max_edges must be >= 1, got {max_edges}")
    pairs = []
    for e in raw:
        if e.source == e.target:
            continue
        a, b = e.canonical_pair()
        pairs.append((float(e.timestamp), a, b))
    pairs.sort(key=lambda p: p[0])

    seen = set()
    kept = []
    for ts, a, b in pairs:
        if (a, b) in seen:
            continue
        seen.add((a, b))
        kept.append((ts, a, b))
        if max_edges is not None and len(kept) == max_edges:
            break
    if not kept:
        raise ValueError("no edges left after dropping self-loops")

    index: dict[str, int] = {}
    src = np.empty(len(kept), dtype=np.int64)
    dst = np.empty(len(kept), dtype=np.int64)
    times = np.empty(len(kept), dtype=np.float64)
    for k, (ts, a, b) in enumerate(kept):
        src[k] = index.setdefault(a, len(index))
        dst[k] = index.setdefault(b, len(index))
        times[k] = ts
    return EdgeStream(src, dst, times, tuple(index))


def _format_number(x: float) -> str:
    return format(x, ".12g")


def format_edge_list(edges: Iterable[TemporalEdge], delimiter: str = "whitespace") -> str:
    """Serialize edges as ``source target timestamp`` lines.

    Timestamps use 12 significant digits, so the output parses back to the
    same stream.
    """
    sep = {"whitespace": " ", "comma": ",", "tab": "\t"}[delimiter]
    return "".join(
        f"{e.source}{sep}{e.target}{sep}{_format_number(e.timestamp)}\n" for e in edges
    )


def load_manifest(path: str | os.PathLike) -> list[CorpusEntry]:
    """Read a JSON corpus manifest.

    The document is an array of objects with keys ``id``, ``name``, ``path``,
    ``data_type`` and ``structure``. Relative paths are resolved against the
    manifest's directory. Duplicate ids are rejected.
    """
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, list):
        raise ValueError("manifest must be a JSON array")
    base = os.path.dirname(os.path.abspath(path))
    entries = []
    keys = ("id", "name", "path", "data_type", "structure")
    for i, obj in enumerate(doc):
        if not isinstance(obj, dict):
            raise ValueError(f"manifest item {i} is not an object")
        missing = [k for k in keys if k not in obj]
        if missing:
            raise ValueError(f"manifest item {i} lacks {', '.join(missing)}")
        p = obj["path"]
        if not os.path.isabs(p):
            p = os.path.join(base, p)
        entries.append(CorpusEntry(str(obj["id"]), obj["name"], p, obj["data_type"], obj["structure"]))
    ids = [e.id for e in entries]
    if len(set(ids)) != len(ids):
        raise ValueError("manifest ids must be unique")
    return entries


def stream_from_pairs(pairs: Sequence[tuple], max_edges: int | None = None) -> EdgeStream:
    """Convenience: canonicalize ``(source, target, timestamp)`` tuples."""
    return canonicalize(
        (TemporalEdge(str(s), str(t), float(ts)) for s, t, ts in pairs), max_edges=max_edges
    )
