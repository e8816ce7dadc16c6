"""Upper bounds on the twin-width of strong and Cartesian products."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .graph import Graph


@dataclass(frozen=True)
class BoundResult:
    value: int
    provenance: str


def max_degree(g: Graph) -> int:
    return max(g.degrees(), default=0)


def _check(*values: int) -> None:
    if any(x < 0 for x in values):
        raise ValueError("bound inputs must be non-negative")


def strong_product_bound(tww_g: int, delta_h: int, tww_h: int) -> int:
    """max{tww(G)(Δ(H) + 1) + 2Δ(H), tww(H) + Δ(H)} for G ⊠ H."""
    _check(tww_g, delta_h, tww_h)
    return max(tww_g * (delta_h + 1) + 2 * delta_h, tww_h + delta_h)


def cartesian_product_bound(tww_g: int, tww_h: int, delta_h: int) -> int:
    """max{tww(G) + Δ(H), tww(H)} + Δ(H) for G □ H."""
    _check(tww_g, tww_h, delta_h)
    return max(tww_g + delta_h, tww_h) + delta_h


def _exact_width(g: Graph) -> int:
    from .solver import twinwidth_exact

    return twinwidth_exact(g).twinwidth


def product_bound(
    kind: str, g: Graph, h: Graph, width: Callable[[Graph], int] = _exact_width
) -> BoundResult:
    """Evaluate a product bound from two graphs, trying both factor orders.

    The formulas are not symmetric in their factors; the smaller value wins
    and the provenance names the orientation used.  ``width`` may be any
    upper bound on twin-width (exact by default).
    """
    tg, th = width(g), width(h)
    dg, dh = max_degree(g), max_degree(h)
    if kind == "strong":
        options = [
            (strong_product_bound(tg, dh, th), f"strong(tww(G)={tg}, Δ(H)={dh}, tww(H)={th})"),
            (strong_product_bound(th, dg, tg), f"strong(tww(H)={th}, Δ(G)={dg}, tww(G)={tg}) [factors swapped]"),
        ]
    elif kind == "cartesian":
        options = [
            (cartesian_product_bound(tg, th, dh), f"cartesian(tww(G)={tg}, tww(H)={th}, Δ(H)={dh})"),
            (cartesian_product_bound(th, tg, dg), f"cartesian(tww(H)={th}, tww(G)={tg}, Δ(G)={dg}) [factors swapped]"),
        ]
    else:
        raise ValueError(f"unknown product kind {kind!r}")
    value, provenance = min(options, key=lambda o: o[0])
    return BoundResult(value, provenance)
