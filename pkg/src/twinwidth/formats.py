"""Text formats: graph6, edge lists, contraction sequences and DOT frames."""

from __future__ import annotations

import re

from .graph import ContractionSequence, Graph, Trigraph, iter_bits, label_name
from .solver import verify_sequence

MAX_G6_ORDER = 62


class FormatError(ValueError):
    pass


# -- graph6 ------------------------------------------------------------------


def emit_graph6(g: Graph) -> str:
    if g.n > MAX_G6_ORDER:
        raise FormatError(f"graph6 short form holds at most {MAX_G6_ORDER} vertices, got {g.n}")
    bits = [g.adj[j] >> i & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def parse_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise FormatError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"character {ch!r} outside the graph6 range 63..126")
    if s[0] == "~":
        raise FormatError(f"long-form graph6 header not supported (orders above {MAX_G6_ORDER})")
    n = ord(s[0]) - 63
    if n < 1:
        raise FormatError("graph6 order must be at least 1")
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    payload = s[1:]
    if len(payload) < nchars:
        raise FormatError(f"truncated graph6 payload: need {nchars} characters, got {len(payload)}")
    if len(payload) > nchars:
        raise FormatError(f"trailing data after graph6 payload: {payload[nchars:]!r}")
    bits = []
    for ch in payload:
        value = ord(ch) - 63
        bits.extend(value >> (5 - k) & 1 for k in range(6))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


# -- edge lists --------------------------------------------------------------


def emit_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """``n`` on the first line, then one ``u v`` pair per line (0-based).

    Blank lines and ``#`` comments are ignored.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise FormatError("edge list is empty")
    try:
        n = int(lines[0])
    except ValueError:
        raise FormatError(f"first line must be the vertex count, got {lines[0]!r}") from None
    if n < 1:
        raise FormatError("vertex count must be at least 1")
    seen = set()
    edges = []
    for lineno, ln in enumerate(lines[1:], 2):
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected two vertex indices, got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex in {ln!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {lineno}: vertex index out of range 0..{n - 1}")
        if u == v:
            raise FormatError(f"line {lineno}: self-loop at {u}")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise FormatError(f"line {lineno}: duplicate edge {e[0]} {e[1]}")
        seen.add(e)
        edges.append(e)
    return Graph.from_edges(n, edges)


def read_graph(text: str, fmt: str) -> Graph:
    if fmt == "g6":
        return parse_graph6(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise FormatError(f"unknown graph format {fmt!r}")


# -- vertex names and sequence files -----------------------------------------

_LETTERS = re.compile(r"[a-z]+")


def parse_vertex(token: str, n: int | None = None) -> int:
    """A single vertex: decimal index or one lowercase letter (``a`` is 0)."""
    if token.isdigit():
        v = int(token)
    elif len(token) == 1 and "a" <= token <= "z":
        v = ord(token) - ord("a")
    else:
        raise FormatError(f"bad vertex name {token!r}")
    if n is not None and v >= n:
        raise FormatError(f"vertex {token!r} out of range for {n} vertices")
    return v


def parse_label(token: str, n: int | None = None) -> frozenset[int]:
    """A merged vertex: ``bef`` (letters) or ``1+4+5`` (indices)."""
    token = token.strip()
    if _LETTERS.fullmatch(token):
        parts = list(token)
    else:
        parts = token.split("+")
    verts = [parse_vertex(p, n) for p in parts]
    if len(set(verts)) != len(verts):
        raise FormatError(f"repeated vertex in label {token!r}")
    return frozenset(verts)


def emit_sequence(s: ContractionSequence, n: int) -> str:
    return "".join(f"{label_name(a, n)},{label_name(b, n)}\n" for a, b in s.steps)


def parse_sequence(text: str, n: int | None = None) -> ContractionSequence:
    """One merge per line as two comma-separated labels, e.g. ``ef,b``.

    The width is not known until the sequence is replayed, so it is -1 here.
    """
    steps = []
    for lineno, ln in enumerate(text.splitlines(), 1):
        ln = ln.split("#", 1)[0].strip()
        if not ln:
            continue
        parts = ln.split(",")
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'label,label', got {ln!r}")
        steps.append((parse_label(parts[0], n), parse_label(parts[1], n)))
    return ContractionSequence(tuple(steps), -1)


# -- DOT frames --------------------------------------------------------------


def trigraph_dot(t: Trigraph, name: str = "frame") -> str:
    lines = [f"graph {name} {{"]
    for v in t.vertices():
        lines.append(f'  {v} [label="{label_name(iter_bits(t.labels[v]), t.n)}"];')
    for u, v in t.black_edges():
        lines.append(f"  {u} -- {v};")
    for u, v in t.red_edges():
        lines.append(f"  {u} -- {v} [color=red];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_sequence_dot(g: Graph, s: ContractionSequence) -> list[str]:
    """One DOT document per trigraph of the sequence, the input graph first."""
    verify_sequence(g, s)
    width = len(str(g.n))
    return [trigraph_dot(t, f"frame_{i:0{width}d}") for i, t in enumerate(s.trigraphs(g), 1)]
