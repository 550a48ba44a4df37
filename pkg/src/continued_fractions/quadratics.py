"""
Irrationnels quadratiques (u + √d)/v sous forme canonique entière.

Un triplet (d, u, v) est canonique lorsque v ≠ 0 et v divise d - u². Pour d
fixé, la représentation est unique (1 et √d sont linéairement indépendants
sur Q), ce qui rend l'égalité des dataclasses exacte.

Comparaison exacte de s = (u + √d)/v à un entier k, sans flottant :

    signe(s - k) = signe(v) · signe(√d - (k·v - u))

et signe(√d - c) vaut +1 si c < 0, sinon signe(d - c²) (jamais nul, d
n'étant pas un carré). Table de vérité :

    v > 0, c < 0        →  s > k
    v > 0, c ≥ 0        →  s > k  ssi  d > c²
    v < 0, c < 0        →  s < k
    v < 0, c ≥ 0        →  s < k  ssi  d > c²

La partie entière se calcule de même : pour v > 0, ⌊s⌋ = ⌊(u + ⌊√d⌋)/v⌋ ;
pour v < 0, ⌊s⌋ = ⌊(-u - ⌊√d⌋ - 1)/|v|⌋.

Le développement de Matthews sur √(b/a) n'est pas traité ici.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional

from src.arithmetic import compare_sqrt, is_perfect_square, isqrt
from src.exceptions import (
    InternalPeriodOverflow,
    NormalizationRequired,
    NotReduced,
    PerfectSquare,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuadraticSurd:
    """Nombre (u + √d)/v avec v | d - u²."""

    d: int
    u: int
    v: int

    def __post_init__(self) -> None:
        if self.d < 2 or is_perfect_square(self.d):
            raise PerfectSquare(self.d)
        if self.v == 0 or (self.d - self.u * self.u) % self.v:
            raise NormalizationRequired(self.d, self.u, self.v)

    @classmethod
    def scaled(cls, d: int, u: int, v: int) -> "QuadraticSurd":
        """
        Représentation canonique de (u + √d)/v, quitte à changer le radicande.

        Renvoie ((u·|v|) + √(d·v²))/(v·|v|), qui représente le même réel.
        """
        if v == 0:
            raise NormalizationRequired(d, u, v)
        if (d - u * u) % v == 0:
            return cls(d, u, v)
        return cls(d * v * v, u * abs(v), v * abs(v))

    def conjugate(self) -> "QuadraticSurd":
        """Conjugué (u - √d)/v, écrit (-u + √d)/(-v)."""
        return QuadraticSurd(self.d, -self.u, -self.v)

    def reciprocal(self) -> "QuadraticSurd":
        """Inverse 1/s = (-u + √d)/((d - u²)/v)."""
        return QuadraticSurd(self.d, -self.u, (self.d - self.u * self.u) // self.v)

    def __add__(self, other: int) -> "QuadraticSurd":
        if not isinstance(other, int):
            return NotImplemented
        return QuadraticSurd(self.d, self.u + other * self.v, self.v)

    __radd__ = __add__

    def compare_int(self, k: int) -> int:
        """Signe de s - k (-1 ou 1 : s est irrationnel)."""
        sign_v = 1 if self.v > 0 else -1
        return sign_v * compare_sqrt(self.d, k * self.v - self.u)

    def floor(self) -> int:
        """Partie entière exacte."""
        root = isqrt(self.d)
        if self.v > 0:
            return (self.u + root) // self.v
        return (-self.u - root - 1) // -self.v

    def is_reduced(self) -> bool:
        """Vrai si s > 1 et -1 < s* < 0."""
        return is_reduced(self)

    def next_quotient(self) -> "QuadraticSurd":
        """
        Quotient complet suivant 1/(s - ⌊s⌋).

        Avec a = ⌊s⌋ et u' = a·v - u, on obtient (u' + √d)/((d - u'²)/v),
        et v divise bien d - u'² = d - u² - v·(a²·v - 2a·u).
        """
        a = self.floor()
        u_next = a * self.v - self.u
        return QuadraticSurd(self.d, u_next, (self.d - u_next * u_next) // self.v)

    def complete_quotients(self) -> Iterator["QuadraticSurd"]:
        """Flux infini x_0 = s, x_1, x_2, … des quotients complets."""
        current = self
        while True:
            yield current
            current = current.next_quotient()

    def __str__(self) -> str:
        if self.v > 0:
            return f"({self.u} + √{self.d})/{self.v}"
        return f"({-self.u} - √{self.d})/{-self.v}"


def conjugate(s: QuadraticSurd) -> QuadraticSurd:
    """Conjugué algébrique de s (involution)."""
    return s.conjugate()


def is_reduced(s: QuadraticSurd) -> bool:
    """
    Test de réduction par comparaisons entières exactes.

    s est réduit si s > 1 et si son conjugué est dans ]-1, 0[.
    """
    conj = s.conjugate()
    return s.compare_int(1) > 0 and conj.compare_int(-1) > 0 and conj.compare_int(0) < 0


def _period_cap(s: QuadraticSurd) -> int:
    # Pour un réduit, 0 < u < √d et 0 < v < 2√d : le nombre d'états est borné par 2d
    return 2 * s.d + 2


def expand_reduced(s: QuadraticSurd, max_iterations: Optional[int] = None) -> List[int]:
    """
    Période minimale du développement purement périodique d'un réduit.

    Args:
        s: Irrationnel quadratique réduit
        max_iterations: Plafond de sécurité (par défaut 2d + 2)

    Returns:
        Liste (a_0, …, a_{T-1}) telle que s = [a_0, …, a_{T-1}, s]

    Raises:
        NotReduced: s n'est pas réduit
        InternalPeriodOverflow: Aucun retour à s dans le plafond (bogue)
    """
    if not is_reduced(s):
        raise NotReduced(s)

    cap = max_iterations if max_iterations is not None else _period_cap(s)
    quotients = []
    current = s
    while True:
        quotients.append(current.floor())
        current = current.next_quotient()
        if current == s:
            break
        if len(quotients) >= cap:
            raise InternalPeriodOverflow(s.d, cap)

    terms = ", ".join(map(str, quotients))
    logger.debug(f"{s} = [{terms}, …] (T = {len(quotients)})")
    return quotients


def reversed_surd(s: QuadraticSurd) -> QuadraticSurd:
    """
    Nombre -1/s*, réduit, dont la période est celle de s renversée.

    -1/s* = v/(√d - u) = (u + √d)/((d - u²)/v).

    Raises:
        NotReduced: s n'est pas réduit
    """
    if not is_reduced(s):
        raise NotReduced(s)
    return QuadraticSurd(s.d, s.u, (s.d - s.u * s.u) // s.v)
