"""Solutions entières vérifiées par substitution exacte."""

from dataclasses import dataclass
from typing import Dict, Iterator, Tuple

from src.exceptions import InvariantViolation


@dataclass(frozen=True)
class Solution:
    """
    Couple d'entiers (x, y).

    Les énumérations sont triées par ``sort_key`` : y croissant, puis x.
    Les constructeurs ``for_pell`` et ``for_ab`` vérifient l'appartenance à
    l'équation et refusent un couple faux.
    """

    x: int
    y: int

    @property
    def sort_key(self) -> Tuple[int, int]:
        return self.y, self.x

    @classmethod
    def for_pell(cls, d: int, m: int, x: int, y: int) -> "Solution":
        """Solution de x² - d·y² = m, vérifiée."""
        if x * x - d * y * y != m:
            raise InvariantViolation(
                f"({x}, {y}) n'est pas solution de x² - {d}y² = {m}"
            )
        return cls(x, y)

    @classmethod
    def for_ab(cls, a: int, b: int, x: int, y: int) -> "Solution":
        """Solution de a·x² - b·y² = 1, vérifiée."""
        if a * x * x - b * y * y != 1:
            raise InvariantViolation(
                f"({x}, {y}) n'est pas solution de {a}x² - {b}y² = 1"
            )
        return cls(x, y)

    def scaled(self, factor: int) -> "Solution":
        return Solution(self.x * factor, self.y * factor)

    def swapped(self) -> "Solution":
        return Solution(self.y, self.x)

    def to_payload(self) -> Dict[str, str]:
        return {"x": str(self.x), "y": str(self.y)}

    def __iter__(self) -> Iterator[int]:
        yield self.x
        yield self.y

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"
