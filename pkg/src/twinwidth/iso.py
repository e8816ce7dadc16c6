"""Canonical forms, isomorphism classes of small graphs, and the width survey.

The canonical form of a graph is the smallest upper-triangle bit string (in
graph6 column order) over the vertex orderings produced by an
individualise-and-refine search.  The search tree depends only on the
graph's structure, never on its labels, so isomorphic graphs reach the same
set of codes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable

from .graph import Graph, bits_of


class CanonicalBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class CanonicalForm:
    n: int
    bits: tuple[int, ...]

    def graph(self) -> Graph:
        """Graph whose adjacency is exactly this encoding."""
        edges = []
        k = 0
        for j in range(1, self.n):
            for i in range(j):
                if self.bits[k]:
                    edges.append((i, j))
                k += 1
        return Graph.from_edges(self.n, edges)


def refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Split cells until each vertex sees the same count in every cell.

    Sub-cells are ordered by their neighbour-count signature, which does not
    depend on vertex labels, so the result is an isomorphism-invariant
    ordered partition.
    """
    while True:
        masks = [bits_of(c) for c in cells]
        new = []
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            sig = {v: tuple((g.adj[v] & m).bit_count() for m in masks) for v in c}
            for key in sorted(set(sig.values())):
                new.append([v for v in c if sig[v] == key])
        if len(new) == len(cells):
            return new
        cells = new


def _code(g: Graph, order: list[int]) -> tuple[int, ...]:
    return tuple((g.adj[order[j]] >> order[i]) & 1 for j in range(1, len(order)) for i in range(j))


def canonical_form(g: Graph, budget: int = 2_000_000) -> CanonicalForm:
    """Smallest leaf code of an individualise-and-refine search tree.

    Starting from the equitable refinement of the unit partition, the first
    smallest non-singleton cell is split by individualising each of its
    vertices in turn; every discrete partition reached is an ordering, and
    the minimum of their codes is the form.
    """
    nodes = 0
    best: tuple[int, ...] | None = None

    def search(cells: list[list[int]]) -> None:
        nonlocal nodes, best
        nodes += 1
        if nodes > budget:
            raise CanonicalBudgetExceeded(f"canonical form search exceeded {budget} nodes")
        cells = refine(g, cells)
        if len(cells) == g.n:
            code = _code(g, [c[0] for c in cells])
            if best is None or code < best:
                best = code
            return
        size = min(len(c) for c in cells if len(c) > 1)
        i = next(k for k, c in enumerate(cells) if len(c) == size)
        for v in cells[i]:
            rest = [u for u in cells[i] if u != v]
            search(cells[:i] + [[v], rest] + cells[i + 1:])

    search([list(range(g.n))])
    return CanonicalForm(g.n, best)


def canonical_graph(g: Graph) -> Graph:
    return canonical_form(g).graph()


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def enumerate_nonisomorphic(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices.

    Classes on ``n`` vertices are grown from those on ``n - 1`` by adding a
    vertex with every possible neighbourhood; sorted by canonical form.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    forms = {canonical_form(Graph.empty(1))}
    for k in range(2, n + 1):
        grown = set()
        for form in forms:
            base = form.graph()
            for nbrs in range(1 << (k - 1)):
                rows = [row | ((nbrs >> v & 1) << (k - 1)) for v, row in enumerate(base.adj)]
                rows.append(nbrs)
                grown.add(canonical_form(Graph(k, tuple(rows))))
        forms = grown
    return [f.graph() for f in sorted(forms)]


@dataclass
class SurveyRow:
    graph: Graph
    twinwidth: int


@dataclass
class Survey:
    n: int
    rows: list[SurveyRow]

    @property
    def histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(r.twinwidth for r in self.rows).items()))

    @property
    def maximum(self) -> int:
        return max(r.twinwidth for r in self.rows)


def survey_max_twinwidth(n: int, solve: Callable[[Graph], int] | None = None) -> Survey:
    """Exact twin-width of every isomorphism class on ``n`` vertices."""
    if solve is None:
        from .solver import twinwidth_exact

        def solve(g: Graph) -> int:
            return twinwidth_exact(g).twinwidth

    return Survey(n, [SurveyRow(g, solve(g)) for g in enumerate_nonisomorphic(n)])


def bucket_by_form(graphs: Iterable[Graph]) -> dict[CanonicalForm, list[Graph]]:
    out: dict[CanonicalForm, list[Graph]] = {}
    for g in graphs:
        out.setdefault(canonical_form(g), []).append(g)
    return out
