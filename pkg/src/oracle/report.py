"""Rapport d'une recherche exhaustive bornée."""

from dataclasses import dataclass, field
from typing import Dict, Tuple

import pandas as pd

from src.arithmetic import gcd
from src.solvers.solution import Solution


@dataclass(frozen=True)
class SearchReport:
    """
    Résultat d'une recherche par force brute.

    Attributes:
        kind: Type d'équation ("pell_general", "ab", "thue", "legendre")
        parameters: Paramètres de l'équation
        bound: Borne de recherche utilisée
        solutions: Solutions vérifiées, triées par y puis x
        iterations: Nombre de candidats examinés
        rejected: Candidats écartés par une vérification secondaire (Legendre)

    Un rapport vide ne certifie l'absence de solution qu'à l'intérieur de la borne.
    """

    kind: str
    parameters: Dict[str, int]
    bound: int
    solutions: Tuple[Solution, ...]
    iterations: int
    rejected: Tuple[Solution, ...] = field(default=())

    @property
    def primitive(self) -> Tuple[Solution, ...]:
        """Solutions non triviales à coordonnées premières entre elles."""
        return tuple(s for s in self.solutions if s.y != 0 and gcd(s.x, s.y) == 1)

    @property
    def trivial(self) -> Tuple[Solution, ...]:
        return tuple(s for s in self.solutions if s.y == 0)

    @property
    def nonaxis(self) -> Tuple[Solution, ...]:
        return tuple(s for s in self.solutions if s.x != 0 and s.y != 0)

    @property
    def positive(self) -> Tuple[Solution, ...]:
        return tuple(s for s in self.solutions if s.x > 0 and s.y > 0)

    def to_frame(self) -> pd.DataFrame:
        """Table (x, y, pgcd) des solutions, entiers écrits en décimal."""
        return pd.DataFrame(
            {
                "x": [str(s.x) for s in self.solutions],
                "y": [str(s.y) for s in self.solutions],
                "pgcd": [str(gcd(s.x, s.y)) for s in self.solutions],
            },
            columns=["x", "y", "pgcd"],
        )

    def __str__(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.parameters.items())
        count = len(self.solutions)
        return f"{self.kind}({params}) ≤ {self.bound} : {count} solution(s)"
