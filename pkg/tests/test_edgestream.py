import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mobtax import (
    CorpusEntry,
    EdgeListFormat,
    ParseError,
    TemporalEdge,
    canonicalize,
    format_edge_list,
    load_manifest,
    parse_edge_list,
    stream_from_pairs,
)


def test_parse_whitespace():
    raw = parse_edge_list("a b 1\nb c 2")
    assert len(raw) == 2
    assert raw.node_count == 3
    assert raw.edges[0] == TemporalEdge("a", "b", 1.0)


def test_parse_comma_skips_comment():
    raw = parse_edge_list("a,b,5\n# note\nc,d,6", EdgeListFormat("comma"))
    assert len(raw) == 2
    assert raw.skipped_lines == 1


def test_parse_percent_comment_and_blank():
    raw = parse_edge_list("% header\n\na b 1\n")
    assert len(raw) == 1
    assert raw.skipped_lines == 2


def test_parse_missing_timestamp():
    with pytest.raises(ParseError) as err:
        parse_edge_list("a b")
    assert err.value.lineno == 1
    assert "line 1" in str(err.value)


def test_parse_bad_timestamp_names_line():
    with pytest.raises(ParseError) as err:
        parse_edge_list("a b 1\nc d later\n")
    assert err.value.lineno == 2


def test_parse_empty_input():
    with pytest.raises(ParseError):
        parse_edge_list("# only a comment\n\n")


def test_parse_custom_columns():
    raw = parse_edge_list("7\tx\ty\n8\ty\tz", EdgeListFormat("tab", source_col=1, target_col=2, time_col=0))
    assert [(e.source, e.target, e.timestamp) for e in raw] == [("x", "y", 7.0), ("y", "z", 8.0)]


def test_format_rejects_bad_options():
    with pytest.raises(ValueError):
        EdgeListFormat("semicolon")
    with pytest.raises(ValueError):
        EdgeListFormat(source_col=0, target_col=0)


def test_canonicalize_dedupe_and_loops():
    s = stream_from_pairs([("a", "b", 1), ("b", "a", 2), ("a", "a", 3)])
    assert s.edges == [TemporalEdge("a", "b", 1.0)]
    assert s.edge_count == 1 and s.node_count == 2


def test_canonicalize_sorts_by_time():
    s = stream_from_pairs([("a", "b", 2), ("c", "d", 1)])
    assert [(e.source, e.target) for e in s] == [("c", "d"), ("a", "b")]


def test_canonicalize_stable_on_ties():
    s = stream_from_pairs([("x", "y", 5), ("a", "b", 5), ("m", "n", 5)])
    assert [e.source for e in s] == ["x", "a", "m"]


def test_canonicalize_truncation():
    pairs = [(f"u{i}", f"v{i}", i) for i in range(10, 0, -1)]
    s = stream_from_pairs(pairs, max_edges=6)
    assert s.edge_count == 6
    assert list(s.timestamps) == [1, 2, 3, 4, 5, 6]


def test_truncation_counts_distinct_edges():
    s = stream_from_pairs([("a", "b", 1), ("b", "a", 2), ("b", "c", 3), ("c", "d", 4)], max_edges=2)
    assert [(e.source, e.target) for e in s] == [("a", "b"), ("b", "c")]


def test_canonicalize_all_loops_fails():
    with pytest.raises(ValueError):
        stream_from_pairs([("a", "a", 1)])


def test_node_mapping_dense_in_arrival_order(worked_stream):
    assert worked_stream.node_mapping() == {"a": 0, "b": 1, "c": 2, "d": 3, "e": 4}
    assert worked_stream.labels[worked_stream.index_of("d")] == "d"
    with pytest.raises(KeyError):
        worked_stream.index_of("zz")


def test_stream_arrays_are_read_only(worked_stream):
    with pytest.raises(ValueError):
        worked_stream.sources[0] = 3


def test_round_trip_text(worked_stream):
    text = format_edge_list(worked_stream)
    again = canonicalize(parse_edge_list(text))
    assert again == worked_stream
    assert format_edge_list(again) == text


raw_edges = st.lists(
    st.tuples(
        st.integers(0, 8).map(str),
        st.integers(0, 8).map(str),
        st.integers(0, 20) | st.floats(0, 20, allow_nan=False).map(lambda x: round(x, 3)),
    ),
    min_size=1,
    max_size=40,
).filter(lambda es: any(a != b for a, b, _ in es))


@given(raw_edges)
@settings(max_examples=200, deadline=None)
def test_canonicalize_invariants(pairs):
    s = stream_from_pairs(pairs)
    assert np.all(np.diff(s.timestamps) >= 0)
    keys = {frozenset((e.source, e.target)) for e in s}
    assert len(keys) == s.edge_count <= len(pairs)
    assert all(e.source != e.target for e in s)
    assert s.node_count >= 2
    assert canonicalize(s) == s


@given(raw_edges)
@settings(max_examples=100, deadline=None)
def test_delimiter_invariance(pairs):
    rows = [(a, b, format(float(t), ".12g")) for a, b, t in pairs]
    streams = [
        canonicalize(parse_edge_list("\n".join(sep.join(r) for r in rows), EdgeListFormat(name)))
        for name, sep in (("comma", ","), ("tab", "\t"), ("whitespace", "  "))
    ]
    assert streams[0] == streams[1] == streams[2]


def test_manifest(tmp_path):
    doc = [
        {"id": "k", "name": "Lord of the Rings", "path": "lotr.txt", "data_type": "Co-occurrence", "structure": "Individual"},
        {"id": "t", "name": "Hospital", "path": "/abs/h.txt", "data_type": "Contact", "structure": "Spatial"},
    ]
    p = tmp_path / "corpus.json"
    p.write_text(json.dumps(doc))
    entries = load_manifest(p)
    assert entries[0].path == str(tmp_path / "lotr.txt")
    assert entries[1].path == "/abs/h.txt"
    assert entries[1].structure == "Spatial"


@pytest.mark.parametrize(
    "bad",
    [
        {"id": "kk", "data_type": "Social", "structure": "Star"},
        {"id": "k", "data_type": "Gossip", "structure": "Star"},
        {"id": "k", "data_type": "Social", "structure": "Ring"},
    ],
)
def test_corpus_entry_validation(bad):
    with pytest.raises(ValueError):
        CorpusEntry(name="x", path="x", **bad)


def test_manifest_rejects_duplicates(tmp_path):
    item = {"id": "a", "name": "x", "path": "x", "data_type": "Social", "structure": "Star"}
    p = tmp_path / "m.json"
    p.write_text(json.dumps([item, item]))
    with pytest.raises(ValueError, match="unique"):
        load_manifest(p)
