"""
📄 TEXT FORMATS
Edge-list ("n m" then "u v" lines), colored edge-list ("u v c" lines) and graph6.
"""

import sys
from pathlib import Path
from typing import List, Tuple

import networkx as nx

from .coloring import EdgeColoring
from .errors import FormatError
from .graph import Graph, from_edge_list

GRAPH6_HEADER = ">>graph6<<"


def _content_lines(text: str) -> List[Tuple[int, List[str]]]:
    rows = []
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((number, body.split()))
    return rows


def _ints(fields: List[str], count: int, line: int) -> List[int]:
    if len(fields) != count:
        raise FormatError(f"expected {count} integers, found {len(fields)}", line)
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise FormatError(f"not an integer in {' '.join(fields)!r}", line) from None


def _parse_rows(text: str, width: int) -> Tuple[int, List[List[int]]]:
    rows = _content_lines(text)
    if not rows:
        raise FormatError("empty input")
    line, header = rows[0]
    n, m = _ints(header, 2, line)
    if n < 0 or m < 0:
        raise FormatError("negative vertex or edge count", line)
    body = rows[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} edges, found {len(body)}")
    return n, [_ints(fields, width, number) for number, fields in body]


def parse_edge_list(text: str) -> Graph:
    n, rows = _parse_rows(text, 2)
    return from_edge_list(n, rows)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_colored_edge_list(text: str) -> EdgeColoring:
    n, rows = _parse_rows(text, 3)
    g = from_edge_list(n, [(u, v) for u, v, _ in rows])
    return EdgeColoring.from_mapping(g, {(u, v): c for u, v, c in rows})


def format_colored_edge_list(c: EdgeColoring) -> str:
    g = c.graph
    lines = [f"{g.n} {g.m}"] + [f"{u} {v} {col}" for (u, v), col in zip(g.edges, c.colors)]
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> Graph:
    body = text.strip()
    if body.startswith(GRAPH6_HEADER):
        body = body[len(GRAPH6_HEADER):].strip()
    if not body or len(body.split()) != 1:
        raise FormatError("expected exactly one graph6 record")
    try:
        nx_graph = nx.from_graph6_bytes(body.encode("ascii"))
    except (ValueError, nx.NetworkXError, UnicodeEncodeError) as exc:
        raise FormatError(f"bad graph6 record: {exc}") from None
    return from_edge_list(nx_graph.number_of_nodes(), nx_graph.edges())


def to_networkx(g: Graph) -> nx.Graph:
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(g.n))
    nx_graph.add_edges_from(g.edges)
    return nx_graph


def format_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").strip() + "\n"


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    """Parse a graph in ``el``, ``g6`` or sniffed (``auto``) format."""
    if fmt == "auto":
        rows = _content_lines(text)
        fmt = "el" if rows and len(rows[0][1]) == 2 else "g6"
    if fmt == "el":
        return parse_edge_list(text)
    if fmt == "g6":
        return parse_graph6(text)
    raise FormatError(f"unknown graph format {fmt!r}")


def format_graph(g: Graph, fmt: str = "el") -> str:
    if fmt == "g6":
        return format_graph6(g)
    return format_edge_list(g)


def read_text(location: str) -> str:
    """Contents of a file, or standard input for ``-``."""
    if location == "-":
        return sys.stdin.read()
    return Path(location).read_text(encoding="utf-8")


def write_text(location: str, text: str) -> None:
    if location == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    Path(location).write_text(text, encoding="utf-8")
