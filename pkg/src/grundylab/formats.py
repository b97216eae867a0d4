"""graph6 lines and plain edge-list files."""

import sys

from .graph import GraphError, from_edges

GRAPH6_MAX_N = 62
_HEADER = ">>graph6<<"


class FormatError(GraphError):
    pass


def _upper_triangle(n):
    # graph6 order: column by column, x(0,1), x(0,2), x(1,2), x(0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def to_graph6(g):
    if g.n > GRAPH6_MAX_N:
        raise FormatError(f"graph6 short form holds at most {GRAPH6_MAX_N} vertices, got {g.n}")
    bits = [g.adj[i] >> j & 1 for i, j in _upper_triangle(g.n)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        out.append(chr(63 + value))
    return "".join(out)


def parse_graph6(text):
    line = text.strip()
    if line.startswith(_HEADER):
        line = line[len(_HEADER):]
    if not line:
        raise FormatError("malformed graph6: empty line")
    for ch in line:
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"malformed graph6: character {ch!r} outside 63..126")
    if line[0] == "~":
        raise FormatError("malformed graph6: extended order headers are not supported")
    n = ord(line[0]) - 63
    pairs = n * (n - 1) // 2
    need = -(-pairs // 6)
    body = line[1:]
    if len(body) < need:
        raise FormatError(f"malformed graph6: truncated bit vector ({len(body)} of {need} bytes)")
    if len(body) > need:
        raise FormatError(f"malformed graph6: {len(body) - need} trailing bytes")
    bits = []
    for ch in body:
        value = ord(ch) - 63
        bits.extend((value >> s) & 1 for s in range(5, -1, -1))
    if any(bits[pairs:]):
        raise FormatError("malformed graph6: nonzero padding bits")
    edges = [(i, j) for (i, j), b in zip(_upper_triangle(n), bits) if b]
    return from_edges(n, edges)


def to_edge_list(g):
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def _content_lines(text):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def parse_edge_list(text):
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("edge list: empty input")
    try:
        n, m = (int(x) for x in lines[0].split())
        edges = [tuple(int(x) for x in line.split()) for line in lines[1:]]
    except ValueError as exc:
        raise FormatError(f"edge list: {exc}") from None
    if len(edges) != m or any(len(e) != 2 for e in edges):
        raise FormatError(f"edge list: header promises {m} edges, found {len(edges)} lines")
    return from_edges(n, edges)


def _looks_like_edge_list(line):
    parts = line.split()
    return len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts)


def parse_graphs(text):
    """Graphs from text holding either one edge list or graph6 lines."""
    lines = list(_content_lines(text))
    if not lines:
        return []
    if _looks_like_edge_list(lines[0]):
        return [parse_edge_list(text)]
    return [parse_graph6(line) for line in lines]


def read_graphs(path):
    if path == "-":
        return parse_graphs(sys.stdin.read())
    with open(path, encoding="ascii") as fh:
        return parse_graphs(fh.read())


def write_graph6(path, graphs):
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")

