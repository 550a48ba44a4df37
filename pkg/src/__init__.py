"""
pellab - Fractions continuées de √d et équations de Pell-Fermat.

Ce package contient tous les modules nécessaires pour :
- Développer √d en fraction continuée périodique
- Manipuler les irrationnels quadratiques réduits
- Résoudre x² - d·y² = 1, x² - d·y² = m et a·x² - b·y² = ±1
- Vérifier ces résultats par recherche exhaustive bornée
"""

__version__ = "1.0.0"

from src.continued_fractions import QuadraticSurd, expand_sqrt
from src.oracle import BruteForceOracle
from src.solvers import (
    enumerate_ab,
    enumerate_family,
    solve_ab,
    solve_pell,
    solve_pell_general,
)

__all__ = [
    "BruteForceOracle",
    "QuadraticSurd",
    "enumerate_ab",
    "enumerate_family",
    "expand_sqrt",
    "solve_ab",
    "solve_pell",
    "solve_pell_general",
]
