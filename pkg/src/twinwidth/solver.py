"""Exact and heuristic twin-width computation.

The exact solver answers "is there a d-sequence?" by depth-first search over
partitions of the vertex set (each partially contracted graph is the quotient
of the input by a partition, whatever order the merges happened in), with a
table of partitions already known to fail at the current ``d``.  Iterative
deepening over ``d`` then yields the exact width.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .graph import (
    ContractionSequence,
    Graph,
    InvalidSequence,
    Trigraph,
    component_vertex_sets,
    contract,
    contract_rows,
    iter_bits,
    max_red_degree,
)

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 50_000_000

Step = tuple[int, int]


class BudgetExhausted(RuntimeError):
    """The search visited more states than allowed; no answer was reached.

    ``lower_bound`` is the smallest width not yet refuted.
    """

    def __init__(self, lower_bound: int, stats: SolveStats):
        super().__init__(f"state budget exhausted (twin-width >= {lower_bound})")
        self.lower_bound = lower_bound
        self.stats = stats


@dataclass
class SolveStats:
    visited: int = 0
    memo_hits: int = 0
    elapsed: float = 0.0

    def add(self, other: SolveStats) -> None:
        self.visited += other.visited
        self.memo_hits += other.memo_hits
        self.elapsed += other.elapsed

    def as_dict(self) -> dict:
        return {"visited": self.visited, "memo_hits": self.memo_hits, "elapsed": round(self.elapsed, 6)}


@dataclass
class SolveReport:
    twinwidth: int
    exact: bool
    certificate: ContractionSequence
    stats: SolveStats = field(default_factory=SolveStats)


class _Search:
    """One decision run for a fixed ``d``; ``failed`` holds refuted partitions."""

    def __init__(self, d: int, budget: int):
        self.d = d
        self.budget = budget
        self.failed: set[tuple[int, ...]] = set()
        self.stats = SolveStats()

    def run(self, black, red, labels, live) -> Optional[list[Step]]:
        if live & (live - 1) == 0:
            return []
        key = labels
        if key in self.failed:
            self.stats.memo_hits += 1
            return None
        self.stats.visited += 1
        if self.stats.visited > self.budget:
            raise _OutOfBudget
        for u, v in candidate_merges(black, red, live, self.d):
            b2, r2, l2 = contract_rows(black, red, labels, u, v)
            rest = self.run(b2, r2, l2, live & ~(1 << v))
            if rest is not None:
                rest.insert(0, (u, v))
                return rest
        self.failed.add(key)
        return None


class _OutOfBudget(Exception):
    pass


def candidate_merges(black, red, live, d: int) -> list[Step]:
    """Merges ``(u, v)``, ``u < v``, that keep the red degree at most ``d``.

    A twin pair, if present, is returned alone: merging it yields an induced
    sub-trigraph, so it never hurts.  Otherwise pairs within distance two come
    first, then by the red degree of the merged vertex.
    """
    verts = list(iter_bits(live))
    scored = []
    for i, u in enumerate(verts):
        bu, ru = black[u], red[u]
        nu = bu | ru
        for v in verts[i + 1:]:
            pair = (1 << u) | (1 << v)
            bv, rv = black[v], red[v]
            if not ((bu ^ bv) | (ru ^ rv)) & ~pair:
                return [(u, v)]
            nv = bv | rv
            bw = bu & bv & ~pair
            rw = (nu | nv) & ~pair & ~bw
            rc = rw.bit_count()
            if rc > d:
                continue
            ok = True
            for x in iter_bits(rw & ~(ru | rv)):
                if red[x].bit_count() >= d:
                    ok = False
                    break
            if not ok:
                continue
            far = not (nu >> v & 1 or nu & nv)
            scored.append((far, rc, u, v))
    scored.sort()
    return [(u, v) for _, _, u, v in scored]


def _to_sequence(g_n: int, steps: list[Step], width: int, labels=None) -> ContractionSequence:
    labels = list(labels) if labels is not None else [1 << v for v in range(g_n)]
    out = []
    for u, v in steps:
        out.append((frozenset(iter_bits(labels[u])), frozenset(iter_bits(labels[v]))))
        labels[min(u, v)] = labels[u] | labels[v]
        labels[max(u, v)] = 0
    return ContractionSequence(tuple(out), width)


def _branch_worker(args):
    d, budget, state = args
    search = _Search(d, budget)
    start = time.perf_counter()
    try:
        res = search.run(*state)
        exhausted = False
    except _OutOfBudget:
        res, exhausted = None, True
    search.stats.elapsed = time.perf_counter() - start
    return res, exhausted, search.stats


def _decide(g: Graph, d: int, budget: int, threads: int, stats: SolveStats) -> Optional[list[Step]]:
    t = Trigraph.from_graph(g)
    state = (t.black, t.red, t.labels, t.live)
    if threads <= 1 or g.n <= 2:
        search = _Search(d, budget)
        start = time.perf_counter()
        try:
            return search.run(*state)
        except _OutOfBudget:
            raise BudgetExhausted(d, search.stats) from None
        finally:
            search.stats.elapsed = time.perf_counter() - start
            stats.add(search.stats)

    # Fan out the first merge; results are read back in branch order so the
    # certificate does not depend on scheduling.
    black, red, labels, live = state
    first = candidate_merges(black, red, live, d)
    jobs = []
    for u, v in first:
        b2, r2, l2 = contract_rows(black, red, labels, u, v)
        jobs.append((d, budget, (b2, r2, l2, live & ~(1 << v))))
    exhausted = False
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_branch_worker, job) for job in jobs]
        try:
            for (u, v), fut in zip(first, futures):
                res, ex, st = fut.result()
                stats.add(st)
                if res is not None:
                    return [(u, v)] + res
                exhausted = exhausted or ex
        finally:
            for fut in futures:
                fut.cancel()
    if exhausted:
        raise BudgetExhausted(d, stats)
    return None


def twinwidth_at_most(
    g: Graph, d: int, *, budget: int = DEFAULT_BUDGET, threads: int = 1, stats: SolveStats | None = None
) -> Optional[ContractionSequence]:
    """Return a contraction sequence of width at most ``d``, or None if none exists."""
    if d < 0:
        raise ValueError("d must be non-negative")
    stats = stats if stats is not None else SolveStats()
    steps = _decide(g, d, budget, threads, stats)
    if steps is None:
        return None
    seq = _to_sequence(g.n, steps, 0)
    return ContractionSequence(seq.steps, verify_sequence(g, seq))


def first_merge_lower_bound(g: Graph) -> int:
    """Smallest red degree any first contraction can produce."""
    if g.n <= 1:
        return 0
    return min(
        ((g.adj[u] ^ g.adj[v]) & ~((1 << u) | (1 << v))).bit_count()
        for u in range(g.n)
        for v in range(u + 1, g.n)
    )


def _exact_connected(g: Graph, budget: int, threads: int, stats: SolveStats) -> ContractionSequence:
    d = first_merge_lower_bound(g)
    while True:
        remaining = budget - stats.visited
        try:
            seq = twinwidth_at_most(g, d, budget=remaining, threads=threads, stats=stats)
        except BudgetExhausted:
            raise BudgetExhausted(d, stats) from None
        if seq is not None:
            return seq
        log.debug("no %d-sequence (%d states so far)", d, stats.visited)
        d += 1


def twinwidth_exact(
    g: Graph, *, budget: int = DEFAULT_BUDGET, threads: int = 1, split_components: bool = True
) -> SolveReport:
    """Exact twin-width by iterative deepening.

    With ``split_components`` each component is solved on its own and the
    answer is the maximum; the component representatives are merged last.
    Raises :class:`BudgetExhausted` rather than returning a guess.
    """
    stats = SolveStats()
    start = time.perf_counter()
    if not split_components:
        seq = _exact_connected(g, budget, threads, stats)
        stats.elapsed = time.perf_counter() - start
        return SolveReport(seq.width, True, seq, stats)

    steps: list[tuple[frozenset[int], frozenset[int]]] = []
    width = 0
    merged: frozenset[int] | None = None
    for vs in component_vertex_sets(g):
        sub = g.induced_subgraph(vs)
        seq = _exact_connected(sub, budget, threads, stats)
        width = max(width, seq.width)
        for a, b in seq.steps:
            steps.append((frozenset(vs[i] for i in a), frozenset(vs[i] for i in b)))
        comp = frozenset(vs)
        if merged is not None:
            steps.append((merged, comp))
            merged = merged | comp
        else:
            merged = comp
    stats.elapsed = time.perf_counter() - start
    return SolveReport(width, True, ContractionSequence(tuple(steps), width), stats)


def twinwidth_heuristic(g: Graph) -> SolveReport:
    """Greedy upper bound.

    Each round merges the pair giving the smallest maximum red degree over
    the whole trigraph, ties broken by the lexicographically smallest pair of
    label sets.
    """
    start = time.perf_counter()
    t = Trigraph.from_graph(g)
    steps = []
    width = 0
    evaluated = 0
    while t.order > 1:
        verts = t.vertices()
        deg = {x: t.red[x].bit_count() for x in verts}
        best = None
        for i, u in enumerate(verts):
            for v in verts[i + 1:]:
                evaluated += 1
                score = _merged_max_red(t, deg, u, v)
                key = (score, sorted(iter_bits(t.labels[u])), sorted(iter_bits(t.labels[v])))
                if best is None or key < best[0]:
                    best = (key, u, v)
        _, u, v = best
        steps.append((t.label(u), t.label(v)))
        t = contract(t, u, v)
        width = max(width, max_red_degree(t))
    stats = SolveStats(visited=evaluated, elapsed=time.perf_counter() - start)
    return SolveReport(width, False, ContractionSequence(tuple(steps), width), stats)


def _merged_max_red(t: Trigraph, deg: dict[int, int], u: int, v: int) -> int:
    pair = (1 << u) | (1 << v)
    bw = t.black[u] & t.black[v] & ~pair
    rw = (t.black[u] | t.red[u] | t.black[v] | t.red[v]) & ~pair & ~bw
    best = rw.bit_count()
    for x, dx in deg.items():
        if x == u or x == v:
            continue
        was = (t.red[x] & pair).bit_count()
        now = dx - was + (rw >> x & 1)
        if now > best:
            best = now
    return best


def verify_sequence(g: Graph, s: ContractionSequence) -> int:
    """Replay ``s`` on ``g`` and return the largest red degree encountered."""
    if len(s.steps) != g.n - 1:
        raise InvalidSequence(f"expected {g.n - 1} contractions for {g.n} vertices, got {len(s.steps)}")
    t = Trigraph.from_graph(g)
    width = 0
    for i, (a, b) in enumerate(s.steps, 1):
        try:
            u, v = t.find(a), t.find(b)
        except KeyError as exc:
            raise InvalidSequence(f"step {i}: {exc.args[0]}") from None
        if u == v:
            raise InvalidSequence(f"step {i}: both sides name the same vertex")
        t = contract(t, u, v)
        width = max(width, max_red_degree(t))
    return width
