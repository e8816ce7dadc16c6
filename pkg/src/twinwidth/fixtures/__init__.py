"""Example inputs shipped with the package."""

from __future__ import annotations

from importlib import resources

from ..formats import parse_edge_list, parse_sequence
from ..graph import ContractionSequence, Graph


def fixture_text(name: str) -> str:
    return resources.files(__name__).joinpath(name).read_text()


def fixture_path(name: str):
    return resources.files(__name__).joinpath(name)


def load_graph(name: str) -> Graph:
    return parse_edge_list(fixture_text(name))


def load_sequence(name: str, n: int | None = None) -> ContractionSequence:
    return parse_sequence(fixture_text(name), n)
