"""Graphs, trigraphs, partitions and the contraction operation.

Vertex sets are dense integer ranges and adjacency rows are Python ints used
as bitsets.  A trigraph keeps the original vertex capacity: every live vertex
is identified by the smallest original vertex merged into it, so ids stay
stable across contractions and coincide with the partition view.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def vertex_name(v: int, n: int) -> str:
    """Letters for small graphs (a, b, c, ...), decimal indices otherwise."""
    if n <= 26:
        return chr(ord("a") + v)
    return str(v)


def label_name(label: Iterable[int], n: int) -> str:
    """Render a merged vertex the way the drawings do: ``ef``, ``bef``, ``3+7``."""
    names = [vertex_name(v, n) for v in sorted(label)]
    return "".join(names) if n <= 26 else "+".join(names)


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph where old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for v in range(self.n):
            rows[perm[v]] = bits_of(perm[u] for u in iter_bits(self.adj[v]))
        return Graph(self.n, tuple(rows))

    def induced_subgraph(self, vertices: Sequence[int]) -> Graph:
        """Subgraph on ``vertices``, renumbered in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(bits_of(index[u] for u in iter_bits(self.adj[v]) if u in index))
        return Graph(len(vertices), tuple(rows))


@dataclass(frozen=True)
class Trigraph:
    """Graph with disjoint black and red edge sets.

    ``black``, ``red`` and ``labels`` are indexed by original vertex id and
    have length ``n``; rows of dead vertices are zero.  ``live`` is a bitmask
    of the surviving ids.  The id of a live vertex is always the smallest
    original vertex in its label.
    """

    n: int
    live: int
    black: tuple[int, ...]
    red: tuple[int, ...]
    labels: tuple[int, ...]

    @classmethod
    def from_graph(cls, g: Graph) -> Trigraph:
        return cls(g.n, (1 << g.n) - 1, g.adj, (0,) * g.n, tuple(1 << v for v in range(g.n)))

    @property
    def order(self) -> int:
        return self.live.bit_count()

    def vertices(self) -> list[int]:
        return list(iter_bits(self.live))

    def label(self, v: int) -> frozenset[int]:
        self._check_live(v)
        return frozenset(iter_bits(self.labels[v]))

    def find(self, label: Iterable[int]) -> int:
        """Live vertex whose label set is exactly ``label``."""
        mask = bits_of(label)
        if mask:
            v = (mask & -mask).bit_length() - 1
            if v < self.n and self.live >> v & 1 and self.labels[v] == mask:
                return v
        raise KeyError(f"no live vertex with label {sorted(iter_bits(mask))}")

    def red_degree(self, v: int) -> int:
        return self.red[v].bit_count()

    def black_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in self.vertices() for v in iter_bits(self.black[u]) if u < v]

    def red_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in self.vertices() for v in iter_bits(self.red[u]) if u < v]

    def _check_live(self, v: int) -> None:
        if not (0 <= v < self.n and self.live >> v & 1):
            raise ValueError(f"vertex {v} is not live")


def max_red_degree(t: Trigraph) -> int:
    return max((t.red[v].bit_count() for v in iter_bits(t.live)), default=0)


def contract(t: Trigraph, u: int, v: int) -> Trigraph:
    """Merge live vertices ``u`` and ``v``; the input is left untouched.

    Neighbours in the symmetric difference get a red edge to the merged
    vertex; common neighbours keep a black edge only if both sides were black.
    """
    t._check_live(u)
    t._check_live(v)
    if u == v:
        raise ValueError("cannot contract a vertex with itself")
    black, red, labels = contract_rows(t.black, t.red, t.labels, u, v)
    return Trigraph(t.n, t.live & ~(1 << max(u, v)), black, red, labels)


def contract_rows(
    black: Sequence[int], red: Sequence[int], labels: Sequence[int], u: int, v: int
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Row-level contraction shared by :func:`contract` and the solver."""
    pair = (1 << u) | (1 << v)
    w = min(u, v)
    dead = max(u, v)
    bw = black[u] & black[v] & ~pair
    rw = ((black[u] | red[u] | black[v] | red[v]) & ~pair) & ~bw
    black = list(black)
    red = list(red)
    labels = list(labels)
    for x in iter_bits((black[u] | red[u] | black[v] | red[v]) & ~pair):
        black[x] &= ~pair
        red[x] &= ~pair
        if bw >> x & 1:
            black[x] |= 1 << w
        else:
            red[x] |= 1 << w
    black[w], red[w] = bw, rw
    black[dead] = red[dead] = 0
    labels[w] = labels[u] | labels[v]
    labels[dead] = 0
    return tuple(black), tuple(red), tuple(labels)


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty blocks covering ``0..n-1``, stored as bitmasks."""

    n: int
    blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        seen = 0
        for b in self.blocks:
            if not b:
                raise ValueError("empty block")
            if seen & b:
                raise ValueError("blocks overlap")
            seen |= b
        if seen != (1 << self.n) - 1:
            raise ValueError(f"blocks do not cover 0..{self.n - 1}")
        object.__setattr__(self, "blocks", tuple(sorted(self.blocks, key=_lowest)))

    @classmethod
    def from_sets(cls, n: int, blocks: Iterable[Iterable[int]]) -> Partition:
        return cls(n, tuple(bits_of(b) for b in blocks))

    @classmethod
    def singletons(cls, n: int) -> Partition:
        return cls(n, tuple(1 << v for v in range(n)))

    def sets(self) -> list[frozenset[int]]:
        return [frozenset(iter_bits(b)) for b in self.blocks]

    def key(self) -> tuple[int, ...]:
        """Canonical encoding: block bitmasks ordered by smallest element."""
        return self.blocks


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length()


def partition_of(t: Trigraph) -> Partition:
    return Partition(t.n, tuple(t.labels[v] for v in iter_bits(t.live)))


def quotient(g: Graph, p: Partition) -> Trigraph:
    """Trigraph with one vertex per block.

    Blocks A and B are joined black when every pair is adjacent in ``g``,
    red when some but not all pairs are, and not at all otherwise.
    """
    if p.n != g.n:
        raise ValueError(f"partition is over {p.n} vertices, graph has {g.n}")
    black = [0] * g.n
    red = [0] * g.n
    labels = [0] * g.n
    live = 0
    reps = []
    for b in p.blocks:
        rep = _lowest(b) - 1
        reps.append(rep)
        labels[rep] = b
        live |= 1 << rep
    for i, a in enumerate(p.blocks):
        touch = 0
        common = (1 << g.n) - 1
        for x in iter_bits(a):
            touch |= g.adj[x]
            common &= g.adj[x]
        for j, b in enumerate(p.blocks):
            if i == j or not touch & b:
                continue
            if b & common == b:
                black[reps[i]] |= 1 << reps[j]
            else:
                red[reps[i]] |= 1 << reps[j]
    return Trigraph(g.n, live, tuple(black), tuple(red), tuple(labels))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def component_vertex_sets(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the connected components, ordered by smallest vertex."""
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for x in iter_bits(frontier):
                nxt |= g.adj[x]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(tuple(iter_bits(comp)))
    return out


def components(g: Graph) -> list[Graph]:
    """Connected components as induced subgraphs (see :func:`component_vertex_sets`)."""
    return [g.induced_subgraph(vs) for vs in component_vertex_sets(g)]


def is_connected(g: Graph) -> bool:
    return len(component_vertex_sets(g)) == 1


class InvalidSequence(ValueError):
    """A contraction sequence that does not replay on the given graph."""


@dataclass(frozen=True)
class ContractionSequence:
    """Ordered merges, each naming the two live vertices by their label sets."""

    steps: tuple[tuple[frozenset[int], frozenset[int]], ...]
    width: int

    def __len__(self) -> int:
        return len(self.steps)

    def trigraphs(self, g: Graph) -> Iterator[Trigraph]:
        """Replay the merges on ``g``, yielding every intermediate trigraph."""
        t = Trigraph.from_graph(g)
        yield t
        for a, b in self.steps:
            t = contract(t, t.find(a), t.find(b))
            yield t
