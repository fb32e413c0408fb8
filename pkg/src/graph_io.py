# src/graph_io.py
"""Text formats read and written by the CLI.

Graph file: header line `n m`, then m lines `u v` (0-indexed, whitespace
separated). Vertex-function file: n lines `vertex value`, or the single
token line `const c`. Blank lines and lines starting with `#` are ignored.
"""

# Standard library imports
import logging
from pathlib import Path
from typing import List, Optional, Tuple, Union

# Local imports
from .errors import InputParseError, LengthMismatch, OutputWriteError
from .graph_core import Graph, VertexFn, build_graph

logger = logging.getLogger(__name__)


def _content_lines(text: str) -> List[Tuple[int, str]]:
    """(line number, stripped line) pairs, skipping blanks and comments."""
    lines = []
    for line_num, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        lines.append((line_num, line))
    return lines


def _parse_int(token: str, line_num: int, line: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputParseError(f"Line {line_num}: expected an integer, got {token!r} in '{line}'.")


def parse_graph_text(text: str) -> Graph:
    """Parse the `n m` + edge-lines format into a validated Graph.

    Raises:
        InputParseError: malformed header or edge line, or edge count != m.
        ValidationError subclasses from build_graph for self-loops,
        duplicates and out-of-range endpoints.
    """
    lines = _content_lines(text)
    if not lines:
        raise InputParseError("Graph text is empty; expected header 'n m'.")

    header_num, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise InputParseError(f"Line {header_num}: invalid header '{header}'. Expected 'n m'.")
    n = _parse_int(parts[0], header_num, header)
    m = _parse_int(parts[1], header_num, header)
    if n < 0 or m < 0:
        raise InputParseError(f"Line {header_num}: n and m must be non-negative, got '{header}'.")

    edges: List[Tuple[int, int]] = []
    for line_num, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise InputParseError(
                f"Line {line_num}: invalid edge '{line}'. Expected two vertices per line."
            )
        edges.append((_parse_int(parts[0], line_num, line), _parse_int(parts[1], line_num, line)))

    if len(edges) != m:
        raise InputParseError(f"Header declares {m} edges but {len(edges)} edge lines were found.")
    return build_graph(n, edges)


def parse_vertex_fn_text(text: str, n: int) -> VertexFn:
    """Parse `vertex value` lines (each vertex exactly once) or `const c`.

    Raises:
        InputParseError: malformed line, repeated or missing vertex.
        LengthMismatch: a vertex index outside 0..n-1.
    """
    lines = _content_lines(text)
    if not lines:
        raise InputParseError("Vertex-function text is empty.")

    first_num, first = lines[0]
    parts = first.split()
    if parts[0] == 'const':
        if len(parts) != 2 or len(lines) != 1:
            raise InputParseError(f"Line {first_num}: 'const' form must be the single line 'const c'.")
        return VertexFn.constant(n, _parse_int(parts[1], first_num, first))

    values: List[Optional[int]] = [None] * n
    for line_num, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise InputParseError(f"Line {line_num}: invalid entry '{line}'. Expected 'vertex value'.")
        u = _parse_int(parts[0], line_num, line)
        value = _parse_int(parts[1], line_num, line)
        if not 0 <= u < n:
            raise LengthMismatch(f"Line {line_num}: vertex {u} is outside 0..{n - 1}.")
        if values[u] is not None:
            raise InputParseError(f"Line {line_num}: vertex {u} assigned twice.")
        values[u] = value

    missing = [u for u, v in enumerate(values) if v is None]
    if missing:
        raise InputParseError(f"Vertex function has no value for vertices {missing}.")
    return VertexFn.of(values)


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return '\n'.join(lines) + '\n'


def format_vertex_fn(fn: VertexFn) -> str:
    return ''.join(f"{u} {value}\n" for u, value in enumerate(fn))


def _read_text(path: Union[str, Path]) -> str:
    path = Path(path)
    try:
        return path.read_text(encoding='utf-8')
    except UnicodeDecodeError as e:
        raise InputParseError(f"{path} is not UTF-8 text: {e}")
    except OSError as e:
        raise InputParseError(f"Cannot read {path}: {e}")


def _write_text(path: Union[str, Path], text: str) -> Path:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding='utf-8')
    except OSError as e:
        raise OutputWriteError(f"Cannot write {path}: {e}")
    return path


def read_graph(path: Union[str, Path]) -> Graph:
    g = parse_graph_text(_read_text(path))
    logger.info(f"Read graph from {path}: n={g.n}, m={g.m}")
    return g


def read_vertex_fn(path: Union[str, Path], n: int) -> VertexFn:
    fn = parse_vertex_fn_text(_read_text(path), n)
    logger.debug(f"Read vertex function from {path}")
    return fn


def write_vertex_fn(fn: VertexFn, path: Union[str, Path]) -> Path:
    path = _write_text(path, format_vertex_fn(fn))
    logger.info(f"Wrote vertex function with {len(fn)} entries to {path}")
    return path


def write_graph(g: Graph, path: Union[str, Path]) -> Path:
    path = _write_text(path, format_graph(g))
    logger.info(f"Wrote graph (n={g.n}, m={g.m}) to {path}")
    return path
