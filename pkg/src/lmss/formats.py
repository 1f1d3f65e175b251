"""Edge-list and graph6 readers and writers."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from pathlib import Path

from .errors import GraphError, ParseError
from .graph import Graph, build_graph, from_edges

HEADER = ">>graph6<<"


def parse_edgelist(text: str) -> Graph:
    """Parse the whitespace edge-list format.

    ``#`` starts a comment, blank lines are skipped, ``vertex NAME`` declares
    a (possibly isolated) vertex and any other line is ``U V``.  Vertices are
    indexed in sorted name order, so tie-breaks do not depend on line order.
    """
    order: dict[str, None] = {}
    pairs: list[tuple[str, str]] = []
    lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected two tokens, got {len(tokens)}", lineno)
        if tokens[0] == "vertex":
            order.setdefault(tokens[1])
            continue
        a, b = tokens
        order.setdefault(a)
        order.setdefault(b)
        pairs.append((a, b))
        lines.append(lineno)
    # build edge by edge so errors can name the offending line
    seen: set[frozenset[str]] = set()
    for (a, b), lineno in zip(pairs, lines):
        if a == b:
            raise ParseError(f"line {lineno}: self-loop at {a!r}", lineno)
        key = frozenset((a, b))
        if key in seen:
            raise ParseError(f"line {lineno}: duplicate edge {a}-{b}", lineno)
        seen.add(key)
    return build_graph(sorted(order), pairs)


def format_edgelist(G: Graph) -> str:
    lines = []
    covered = set()
    for u, v in G.edges:
        lines.append(f"{G.names[u]} {G.names[v]}")
        covered.update((u, v))
    isolated = [f"vertex {G.names[v]}" for v in range(G.n) if v not in covered]
    return "\n".join(isolated + lines) + "\n"


def read_edgelist(path: str | Path) -> Graph:
    return parse_edgelist(Path(path).read_text(encoding="utf-8"))


def write_edgelist(G: Graph, path: str | Path) -> None:
    Path(path).write_text(format_edgelist(G), encoding="utf-8")


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError(f"n={n} too large for graph6")


def to_graph6(G: Graph, header: bool = False) -> str:
    """graph6 string of G in its current vertex order."""
    n = G.n
    bits = []
    for j in range(1, n):
        row = G.nbr[j]
        for i in range(j):
            bits.append((row >> i) & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[k : k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return (HEADER if header else "") + _encode_n(n) + body


def from_graph6(record: str) -> Graph:
    """Decode one graph6 record; vertex names are ``"0".."n-1"``."""
    s = record.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
    if not s:
        raise ParseError("empty graph6 record")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= x <= 63 for x in data):
        raise ParseError("graph6 character outside the printable range 63..126")
    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) > 1 and data[1] == 63:
        if len(data) < 8:
            raise ParseError("truncated graph6 size field")
        n, pos = 0, 8
        for x in data[2:8]:
            n = (n << 6) | x
    else:
        if len(data) < 4:
            raise ParseError("truncated graph6 size field")
        n, pos = 0, 4
        for x in data[1:4]:
            n = (n << 6) | x
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    for k in range(nbits, 6 * need):
        if (body[k // 6] >> (5 - k % 6)) & 1:
            raise ParseError("non-zero graph6 padding bits")
    return from_edges(n, edges)


def iter_graph6(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(record_index, graph)`` for each non-blank line.

    Errors are re-raised with ``position`` set to the record index.
    """
    index = 0
    for line in lines:
        if not line.strip():
            continue
        try:
            G = from_graph6(line)
        except ParseError as exc:
            raise ParseError(f"graph6 record {index}: {exc}", index) from None
        yield index, G
        index += 1


def read_graph(path: str | Path, fmt: str = "edgelist") -> Graph:
    """Read a single graph in ``edgelist`` or ``graph6`` format."""
    if fmt == "edgelist":
        return read_edgelist(path)
    if fmt == "graph6":
        text = Path(path).read_text(encoding="ascii")
        records = list(iter_graph6(text.splitlines()))
        if len(records) != 1:
            raise ParseError(f"expected exactly one graph6 record, found {len(records)}")
        return records[0][1]
    raise GraphError(f"unknown format {fmt!r}")
