"""Graph families and graph operations.

Product graphs put vertex ``(i, j)`` at index ``i * h.n + j``.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, complement

__all__ = [
    "caterpillar",
    "cartesian_product",
    "complement",
    "complete",
    "complete_bipartite",
    "cycle",
    "disjoint_union",
    "is_prime",
    "king",
    "line_graph",
    "paley",
    "path",
    "rook",
    "strong_product",
]


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def complete_bipartite(a: int, b: int) -> Graph:
    """Sides ``0..a-1`` and ``a..a+b-1``."""
    if a < 1 or b < 1:
        raise ValueError("both sides need at least one vertex")
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def caterpillar(leaves: Sequence[int]) -> Graph:
    """Spine path ``0..k-1``; leaf ``i`` of spine vertex ``s`` follows in order.

    ``leaves[s]`` is the number of pendant leaves hanging off spine vertex ``s``.
    """
    if not leaves:
        raise ValueError("caterpillar needs a nonempty spine")
    if any(c < 0 for c in leaves):
        raise ValueError("leaf counts must be non-negative")
    k = len(leaves)
    edges = [(i, i + 1) for i in range(k - 1)]
    nxt = k
    for s, count in enumerate(leaves):
        for _ in range(count):
            edges.append((s, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    i = 2
    while i * i <= q:
        if q % i == 0:
            return False
        i += 1
    return True


def paley(q: int) -> Graph:
    """Paley graph on ``Z_q`` for a prime ``q = 1 (mod 4)``."""
    if not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    if q % 4 != 1:
        raise ValueError(f"q must be 1 mod 4, got {q}")
    residues = {x * x % q for x in range(1, q)}
    return Graph.from_edges(q, ((i, j) for i in range(q) for j in range(i + 1, q) if (j - i) % q in residues))


def strong_product(g: Graph, h: Graph) -> Graph:
    m = h.n
    edges = []
    for a in range(g.n * m):
        u, u2 = divmod(a, m)
        for b in range(a + 1, g.n * m):
            v, v2 = divmod(b, m)
            eq1, adj1 = u == v, g.has_edge(u, v)
            eq2, adj2 = u2 == v2, h.has_edge(u2, v2)
            if (eq1 or adj1) and (eq2 or adj2):
                edges.append((a, b))
    return Graph.from_edges(g.n * m, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    m = h.n
    edges = []
    for a in range(g.n * m):
        u, u2 = divmod(a, m)
        for b in range(a + 1, g.n * m):
            v, v2 = divmod(b, m)
            if (u == v and h.has_edge(u2, v2)) or (u2 == v2 and g.has_edge(u, v)):
                edges.append((a, b))
    return Graph.from_edges(g.n * m, edges)


def king(n: int, m: int) -> Graph:
    """King moves on an ``n x m`` board."""
    return strong_product(path(n), path(m))


def rook(n: int, m: int) -> Graph:
    """Rook moves on an ``n x m`` board."""
    return cartesian_product(complete(n), complete(m))


def line_graph(g: Graph, *, with_map: bool = False):
    """Line graph; vertex ``i`` is the ``i``-th edge of ``g.edges()``.

    With ``with_map=True`` also returns ``{(u, v): index}`` for ``u < v``.
    """
    edges = g.edges()
    if not edges:
        raise ValueError("line graph of an edgeless graph has no vertices")
    by_vertex: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        by_vertex[u].append(i)
        by_vertex[v].append(i)
    pairs = set()
    for incident in by_vertex:
        for x in range(len(incident)):
            for y in range(x + 1, len(incident)):
                pairs.add((incident[x], incident[y]))
    lg = Graph.from_edges(len(edges), sorted(pairs))
    if with_map:
        return lg, {e: i for i, e in enumerate(edges)}
    return lg


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, tuple(rows))

