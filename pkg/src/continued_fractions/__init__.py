"""
Fractions continuées des irrationnels quadratiques.

Ce module contient :
- le développement périodique de √d et ses réduites (expansion)
- les irrationnels quadratiques (u + √d)/v : conjugaison, réduction,
  développement purement périodique et renversement de période (quadratics)
"""

from src.continued_fractions.expansion import (
    Convergent,
    SurdExpansion,
    convergent_at,
    convergents,
    expand_sqrt,
    partial_quotient,
    pell_value,
    uv_at,
)
from src.continued_fractions.quadratics import (
    QuadraticSurd,
    conjugate,
    expand_reduced,
    is_reduced,
    reversed_surd,
)

__all__ = [
    "Convergent",
    "QuadraticSurd",
    "SurdExpansion",
    "conjugate",
    "convergent_at",
    "convergents",
    "expand_reduced",
    "expand_sqrt",
    "is_reduced",
    "partial_quotient",
    "pell_value",
    "reversed_surd",
    "uv_at",
]
