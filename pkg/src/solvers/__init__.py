"""
Solveurs d'équations diophantiennes quadratiques.

Ce module contient :
- les équations de Pell-Fermat x² - d·y² = 1 et x² - d·y² = m (pell)
- l'équation a·x² - b·y² = ±1 (ab)
"""

from src.solvers.ab import (
    AbProblem,
    AbVerdict,
    NoSolution,
    NoSolutionReason,
    Orientation,
    PellCase,
    PellSide,
    Solvable,
    check_odd_midpoint_criterion,
    enumerate_ab,
    iter_ab,
    solve_ab,
    solve_ab_negative,
)
from src.solvers.pell import (
    QUADRATIC_RESIDUE_OBSTRUCTION,
    Branch,
    SolutionFamily,
    enumerate_family,
    has_solutions,
    iter_family,
    iter_primitive,
    residue_sets,
    solve_pell,
    solve_pell_general,
)
from src.solvers.solution import Solution

__all__ = [
    "QUADRATIC_RESIDUE_OBSTRUCTION",
    "AbProblem",
    "AbVerdict",
    "Branch",
    "NoSolution",
    "NoSolutionReason",
    "Orientation",
    "PellCase",
    "PellSide",
    "Solution",
    "SolutionFamily",
    "Solvable",
    "check_odd_midpoint_criterion",
    "enumerate_ab",
    "enumerate_family",
    "has_solutions",
    "iter_ab",
    "iter_family",
    "iter_primitive",
    "residue_sets",
    "solve_ab",
    "solve_ab_negative",
    "solve_pell",
    "solve_pell_general",
]
