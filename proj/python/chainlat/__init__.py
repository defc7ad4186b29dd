"""Chain algebras of finite distributive lattices."""

from chainlat._chainlat import (
    BudgetError,
    Lattice,
    NonPlanarError,
    ParseError,
    Poset,
    WidthError,
    birkhoff,
    corpus_report,
    cycle_witness_report,
    graded_dimensions,
    hibi_sort_report,
    hilbert_report,
    krull_dimension,
    lattice_report,
    maximal_chains,
    sortable_report,
    toric_report,
    verify_hibi_sorting,
)

__all__ = [
    "BudgetError",
    "Lattice",
    "NonPlanarError",
    "ParseError",
    "Poset",
    "WidthError",
    "birkhoff",
    "corpus_report",
    "cycle_witness_report",
    "graded_dimensions",
    "hibi_sort_report",
    "hilbert_report",
    "krull_dimension",
    "lattice_report",
    "maximal_chains",
    "sortable_report",
    "toric_report",
    "verify_hibi_sorting",
]


def parse_poset(text: str) -> Poset:
    """Parse the poset file format (``elements``/``cover`` lines)."""
    return Poset.parse(text)
