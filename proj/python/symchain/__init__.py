"""Symmetric chain decompositions, cycle factors and middle-level Hamilton cycles."""

from ._core import (
    BudgetExceeded,
    edge_disjoint,
    factor_census,
    factor_cycles,
    hamilton_middle4,
    lex_down,
    lex_up,
    middle4_cycle_count,
    necklace_search,
    rho_orbit_count,
    scd,
    trivalent_tree_count,
    verify_middle4_cycle,
    verify_scd,
)

__all__ = [
    "BudgetExceeded",
    "edge_disjoint",
    "factor_census",
    "factor_cycles",
    "hamilton_middle4",
    "lex_down",
    "lex_up",
    "middle4_cycle_count",
    "necklace_search",
    "rho_orbit_count",
    "scd",
    "trivalent_tree_count",
    "verify_middle4_cycle",
    "verify_scd",
]
