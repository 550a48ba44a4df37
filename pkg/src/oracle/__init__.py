"""
Oracles de vérification par recherche exhaustive bornée.

Ce module contient :
- le rapport de recherche (report)
- les recherches par force brute, parallélisées avec joblib (brute_force)
"""

from src.oracle.brute_force import (
    BruteForceOracle,
    is_sqrt_convergent,
    oracle_ab,
    oracle_legendre,
    oracle_pell_general,
    oracle_thue,
)
from src.oracle.report import SearchReport

__all__ = [
    "BruteForceOracle",
    "SearchReport",
    "is_sqrt_convergent",
    "oracle_ab",
    "oracle_legendre",
    "oracle_pell_general",
    "oracle_thue",
]
