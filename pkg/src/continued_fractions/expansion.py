"""
Développement périodique de √d en fraction continuée.

Le développement est calculé par la récurrence sur les quotients complets
x_n = (u_n + √d)/v_n :

    u_1 = a0,  v_1 = d - a0²,
    a_n = ⌊(u_n + a0)/v_n⌋,
    u_{n+1} = a_n·v_n - u_n,  v_{n+1} = (d - u_{n+1}²)/v_n,

et s'arrête au premier indice k ≥ 1 tel que a_k = 2·a0, qui est la période
minimale T. Les indices 0 (u_0 = a0, v_0 = 1) restent implicites.

Les réduites p_n/q_n suivent p_n = a_n·p_{n-1} + p_{n-2} à partir de
(p_{-2}, q_{-2}) = (0, 1) et (p_{-1}, q_{-1}) = (1, 0).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Tuple

import pandas as pd

from src.arithmetic import is_perfect_square, isqrt
from src.config import get_settings
from src.continued_fractions.quadratics import QuadraticSurd
from src.exceptions import InternalPeriodOverflow, InvariantViolation, PerfectSquare

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Convergent:
    """Réduite p/q d'indice ``index`` (forme irréductible pour index ≥ 0)."""

    index: int
    p: int
    q: int

    def as_fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __str__(self) -> str:
        return f"p_{self.index}/q_{self.index} = {self.p}/{self.q}"


@dataclass(frozen=True)
class SurdExpansion:
    """
    Données complètes du développement de √d sur une période minimale.

    ``period``, ``u_seq`` et ``v_seq`` sont indexés à partir de 1 :
    period[0] est a_1, u_seq[0] est u_1, etc.
    """

    d: int
    a0: int
    period: Tuple[int, ...]
    u_seq: Tuple[int, ...]
    v_seq: Tuple[int, ...]

    @property
    def T(self) -> int:
        return len(self.period)

    def complete_quotient(self, n: int) -> QuadraticSurd:
        """Quotient complet x_n = (u_n + √d)/v_n de ⌊√d⌋ + √d (n ≥ 0)."""
        u, v = uv_at(self, n)
        return QuadraticSurd(self.d, u, v)

    def to_frame(self) -> pd.DataFrame:
        """Table (n, a_n, u_n, v_n) pour n = 1..T."""
        return pd.DataFrame(
            {
                "n": range(1, self.T + 1),
                "a_n": [str(a) for a in self.period],
                "u_n": [str(u) for u in self.u_seq],
                "v_n": [str(v) for v in self.v_seq],
            }
        )

    def verify(self) -> None:
        """
        Vérifie tous les invariants du développement.

        Raises:
            InvariantViolation: Un invariant n'est pas respecté
        """
        d, a0, T = self.d, self.a0, self.T

        def fail(message: str) -> None:
            raise InvariantViolation(f"√{d} : {message}", {"d": d})

        if T < 1 or not (len(self.u_seq) == len(self.v_seq) == T):
            fail("longueurs de période incohérentes")
        if self.period[-1] != 2 * a0 or 2 * a0 in self.period[:-1]:
            fail("le dernier quotient partiel doit être le premier égal à 2·a0")

        body = self.period[:-1]
        if body != body[::-1]:
            fail(f"(a_1, …, a_{T - 1}) n'est pas un palindrome")

        for n, (u, v) in enumerate(zip(self.u_seq, self.v_seq), start=1):
            if not (1 <= u <= a0 and v >= 1):
                fail(f"(u_{n}, v_{n}) = ({u}, {v}) hors bornes")
            if (d - u * u) % v:
                fail(f"v_{n} = {v} ne divise pas d - u_{n}²")
            if v == 1 and n != T:
                fail(f"v_{n} = 1 avant la fin de la période")
            if n < T and u % v == 0 and T != 2 * n:
                fail(f"v_{n} divise u_{n} mais T = {T} ≠ {2 * n}")

        if self.v_seq[-1] != 1:
            fail("v_T doit valoir 1")

    def __str__(self) -> str:
        quotients = ", ".join(str(a) for a in self.period)
        return f"√{self.d} = [{self.a0}; ({quotients})]"


def expand_sqrt(d: int, max_iterations: Optional[int] = None) -> SurdExpansion:
    """
    Développe √d en fraction continuée sur une période minimale.

    Args:
        d: Radicande (entier ≥ 2 qui n'est pas un carré parfait)
        max_iterations: Plafond de sécurité (par défaut celui de la configuration)

    Returns:
        Développement vérifié

    Raises:
        PerfectSquare: d < 2 ou d carré parfait
        InternalPeriodOverflow: Plafond atteint (bogue, la période existe toujours)
    """
    if d < 2 or is_perfect_square(d):
        raise PerfectSquare(d)

    cap = max_iterations if max_iterations is not None else get_settings().period_cap(d)

    a0 = isqrt(d)
    u, v = a0, d - a0 * a0
    period, u_seq, v_seq = [], [], []

    while True:
        if len(period) >= cap:
            logger.error(f"Plafond de {cap} itérations atteint pour √{d}")
            raise InternalPeriodOverflow(d, cap)

        a = (u + a0) // v
        period.append(a)
        u_seq.append(u)
        v_seq.append(v)
        if a == 2 * a0:
            break

        u = a * v - u
        v = (d - u * u) // v

    expansion = SurdExpansion(d, a0, tuple(period), tuple(u_seq), tuple(v_seq))
    expansion.verify()

    logger.debug(f"Développement de √{d} : période T = {expansion.T}")
    return expansion


def uv_at(exp: SurdExpansion, n: int) -> Tuple[int, int]:
    """
    Couple (u_n, v_n) prolongé par T-périodicité.

    n = 0 donne (u_T, v_T) = (a0, 1), cohérent avec u_0 = a0 et v_0 = 1.
    """
    if n < 0:
        raise ValueError(f"indice négatif : {n}")
    r = (n - 1) % exp.T
    return exp.u_seq[r], exp.v_seq[r]


def partial_quotient(exp: SurdExpansion, n: int) -> int:
    """Quotient partiel a_n de √d (a_{n+T} = a_n pour n ≥ 1)."""
    if n < 0:
        raise ValueError(f"indice négatif : {n}")
    if n == 0:
        return exp.a0
    return exp.period[(n - 1) % exp.T]


def convergents(exp: SurdExpansion) -> Iterator[Convergent]:
    """
    Flux infini des réduites p_0/q_0, p_1/q_1, …

    Chaque appel crée un curseur indépendant.
    """
    p_prev, q_prev = 1, 0
    p, q = exp.a0, 1
    yield Convergent(0, p, q)

    n = 1
    while True:
        a = exp.period[(n - 1) % exp.T]
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        yield Convergent(n, p, q)
        n += 1


def convergent_at(exp: SurdExpansion, n: int) -> Convergent:
    """Réduite d'indice n ≥ -2 (les indices -2 et -1 sont les valeurs initiales)."""
    if n < -2:
        raise ValueError(f"indice de réduite invalide : {n}")
    if n == -2:
        return Convergent(-2, 0, 1)
    if n == -1:
        return Convergent(-1, 1, 0)

    for convergent in convergents(exp):
        if convergent.index == n:
            return convergent
    raise AssertionError("unreachable")


def pell_value(exp: SurdExpansion, n: int) -> int:
    """
    Valeur p_{n-1}² - d·q_{n-1}², calculée directement à partir des réduites.

    Elle vaut (-1)^n · v_n (avec v_0 = 1).
    """
    if n < 0:
        raise ValueError(f"indice négatif : {n}")
    convergent = convergent_at(exp, n - 1)
    return convergent.p * convergent.p - exp.d * convergent.q * convergent.q
