"""Twin-width of small graphs: exact search, heuristics, generators and bounds."""

from .graph import (
    ContractionSequence,
    Graph,
    InvalidSequence,
    Partition,
    Trigraph,
    complement,
    components,
    contract,
    max_red_degree,
    quotient,
)
from .solver import (
    BudgetExhausted,
    SolveReport,
    twinwidth_at_most,
    twinwidth_exact,
    twinwidth_heuristic,
    verify_sequence,
)

__all__ = [
    "BudgetExhausted",
    "ContractionSequence",
    "Graph",
    "InvalidSequence",
    "Partition",
    "SolveReport",
    "Trigraph",
    "complement",
    "components",
    "contract",
    "max_red_degree",
    "quotient",
    "twinwidth_at_most",
    "twinwidth_exact",
    "twinwidth_heuristic",
    "verify_sequence",
]
