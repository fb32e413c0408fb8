"""Tests for the graph and vertex-function text formats."""
from pathlib import Path

import pytest

from src.errors import DuplicateEdge, InputParseError, LengthMismatch, OutputWriteError
from src.graph_core import VertexFn, build_graph
from src.graph_io import (
    format_graph,
    parse_graph_text,
    parse_vertex_fn_text,
    read_graph,
    read_vertex_fn,
    write_graph,
    write_vertex_fn,
)


def test_parse_graph_with_comments():
    """Comments and blank lines are skipped."""
    text = "# a path\n3 2\n\n0 1\n  1 2  \n# done\n"
    g = parse_graph_text(text)
    assert g == build_graph(3, [(0, 1), (1, 2)])


@pytest.mark.parametrize("text, fragment", [
    ("", "empty"),
    ("3\n", "Line 1"),
    ("3 x\n", "Line 1"),
    ("3 2\n0 1\n1\n", "Line 3"),
    ("3 2\n0 1\n1 two\n", "Line 3"),
    ("3 2\n0 1\n", "declares 2 edges"),
    ("-1 0\n", "non-negative"),
])
def test_parse_graph_errors(text, fragment):
    """Malformed graph text raises InputParseError naming the problem."""
    with pytest.raises(InputParseError) as excinfo:
        parse_graph_text(text)
    assert fragment in str(excinfo.value)


def test_parse_graph_validation_errors_pass_through():
    with pytest.raises(DuplicateEdge):
        parse_graph_text("2 2\n0 1\n1 0\n")


def test_parse_vertex_fn_lines_any_order():
    fn = parse_vertex_fn_text("2 5\n0 -1\n1 0\n", 3)
    assert fn.values == (-1, 0, 5)


def test_parse_vertex_fn_const():
    assert parse_vertex_fn_text("const 2\n", 4) == VertexFn.constant(4, 2)


@pytest.mark.parametrize("text, n, error", [
    ("0 1\n0 2\n", 2, InputParseError),      # repeated vertex
    ("0 1\n", 2, InputParseError),           # missing vertex
    ("0 1\n5 1\n", 2, LengthMismatch),       # vertex out of range
    ("const\n", 2, InputParseError),
    ("const 1\n0 1\n", 2, InputParseError),
    ("0 a\n", 1, InputParseError),
    ("", 1, InputParseError),
])
def test_parse_vertex_fn_errors(text, n, error):
    with pytest.raises(error):
        parse_vertex_fn_text(text, n)


def test_format_graph_is_sorted():
    g = build_graph(3, [(2, 1), (1, 0)])
    assert format_graph(g) == "3 2\n0 1\n1 2\n"


def test_files_round_trip(tmp_path):
    """Written graph and vertex-function files read back unchanged."""
    g = build_graph(4, [(0, 1), (1, 2), (1, 3)])
    fn = VertexFn.of([0, 3, -1, 2])
    graph_path = write_graph(g, tmp_path / 'sub' / 'g.txt')
    fn_path = write_vertex_fn(fn, tmp_path / 'sub' / 'f.txt')
    assert read_graph(graph_path) == g
    assert read_vertex_fn(fn_path, 4) == fn


def test_missing_file_is_parse_error(tmp_path):
    with pytest.raises(InputParseError):
        read_graph(Path(tmp_path) / 'nope.txt')


def test_read_non_utf8_is_parse_error(tmp_path):
    path = tmp_path / 'g.txt'
    path.write_bytes(b'2 1\n0 \xff1\n')
    with pytest.raises(InputParseError, match='UTF-8'):
        read_graph(path)


def test_write_into_file_path_fails(tmp_path):
    blocker = tmp_path / 'blocker'
    blocker.write_text('x', encoding='utf-8')
    with pytest.raises(OutputWriteError):
        write_graph(build_graph(2, [(0, 1)]), blocker / 'g.txt')
    with pytest.raises(OutputWriteError):
        write_vertex_fn(VertexFn.of([1]), blocker / 'f.txt')
