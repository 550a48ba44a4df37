"""
Équation a·x² - b·y² = 1 avec a, b ≥ 1 premiers entre eux.

Avec d = a·b, T la période de √d et N = T/2, l'équation a des solutions
naturelles si et seulement si :

- a < b : T ≡ 0 (mod 4), v_N = a et v_N | u_N ; solutions (p_{N-1+kT}/a, q_{N-1+kT}) ;
- b < a : T ≡ 2 (mod 4), v_N = b et v_N | u_N ; solutions (q_{N-1+kT}, p_{N-1+kT}/b).

Les cas a = 1 et b = 1 se ramènent aux équations de Pell x² - b·y² = 1 et
X² - a·Y² = -1.

Le critère de Matthews, portant sur le développement de √(b/a), n'est pas
implémenté.
"""

import logging
from dataclasses import dataclass, replace
from enum import Enum
from itertools import islice
from typing import Iterator, List, Optional, Union

from src.arithmetic import gcd, is_perfect_square
from src.continued_fractions.expansion import (
    SurdExpansion,
    convergents,
    expand_sqrt,
    uv_at,
)
from src.exceptions import InternalDivisibility, InvariantViolation, NotCoprime
from src.solvers.pell import (
    Branch,
    SolutionFamily,
    iter_primitive,
    solve_pell,
    solve_pell_general,
)
from src.solvers.solution import Solution

logger = logging.getLogger(__name__)


class Orientation(str, Enum):
    """Coordonnée obtenue par division exacte de p_n."""

    DIVIDE_X = "divide_x"
    DIVIDE_Y = "divide_y"


class NoSolutionReason(str, Enum):
    PERFECT_SQUARE_AB = "PerfectSquareAB"
    ODD_PERIOD = "OddPeriod"
    PERIOD_PARITY_MISMATCH = "PeriodParityMismatch"
    MIDPOINT_VALUE_MISMATCH = "MidpointValueMismatch"
    MIDPOINT_DIVISIBILITY_FAILS = "MidpointDivisibilityFails"


class PellSide(str, Enum):
    A_IS_ONE = "a=1"
    B_IS_ONE = "b=1"


@dataclass(frozen=True)
class AbProblem:
    """Équation a·x² - b·y² = 1."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 1 or self.b < 1:
            raise ValueError(f"a et b doivent être ≥ 1 : a = {self.a}, b = {self.b}")
        g = gcd(self.a, self.b)
        if g != 1:
            raise NotCoprime(self.a, self.b, g)

    @property
    def d(self) -> int:
        return self.a * self.b

    def __str__(self) -> str:
        return f"{self.a}x² - {self.b}y² = 1"


@dataclass(frozen=True)
class Solvable:
    """
    Équation résoluble : solutions indexées par la branche (N, T).

    ``negated`` indique que l'on résout en fait a·x² - b·y² = -1 via
    l'équation (b, a) : les coordonnées sont alors échangées à l'énumération.
    """

    problem: AbProblem
    expansion: SurdExpansion
    branch: Branch
    divisor: int
    orientation: Orientation
    negated: bool = False

    @property
    def solvable(self) -> bool:
        return True

    @property
    def midpoint(self) -> int:
        return self.branch.start


@dataclass(frozen=True)
class NoSolution:
    problem: AbProblem
    reason: NoSolutionReason
    period_length: Optional[int] = None
    midpoint: Optional[int] = None
    u_midpoint: Optional[int] = None
    v_midpoint: Optional[int] = None
    negated: bool = False

    @property
    def solvable(self) -> bool:
        return False


@dataclass(frozen=True)
class PellCase:
    """
    Cas a = 1 ou b = 1, délégué au solveur de Pell.

    Pour b = 1, ``family`` décrit X² - a·Y² = -1 et la solution est (x, y) = (Y, X).
    ``trivial`` vaut (1, 0) quand a = 1.
    """

    problem: AbProblem
    which: PellSide
    family: Optional[SolutionFamily] = None
    trivial: Optional[Solution] = None
    negated: bool = False

    @property
    def solvable(self) -> bool:
        if self.trivial is not None:
            return True
        return self.family is not None and not self.family.is_empty


AbVerdict = Union[Solvable, NoSolution, PellCase]


def _solve_pell_case(problem: AbProblem) -> AbVerdict:
    a, b = problem.a, problem.b

    if a == 1:
        trivial = Solution.for_ab(1, b, 1, 0)
        if is_perfect_square(b):
            return PellCase(problem, PellSide.A_IS_ONE, trivial=trivial)
        _, family = solve_pell(b)
        return PellCase(problem, PellSide.A_IS_ONE, family=family, trivial=trivial)

    # b = 1 : a·x² - y² = 1 s'écrit y² - a·x² = -1
    if is_perfect_square(a):
        return NoSolution(problem, NoSolutionReason.PERFECT_SQUARE_AB)
    family = solve_pell_general(a, -1)
    return PellCase(problem, PellSide.B_IS_ONE, family=family)


def solve_ab(a: int, b: int) -> AbVerdict:
    """
    Décide la résolubilité de a·x² - b·y² = 1 en entiers naturels.

    Les conditions sont testées dans un ordre fixe (période modulo 4, valeur
    de v_N, divisibilité de u_N) : la première qui échoue donne la raison.

    Args:
        a: Coefficient ≥ 1
        b: Coefficient ≥ 1, premier avec a

    Returns:
        Solvable, NoSolution ou PellCase

    Raises:
        NotCoprime: PGCD(a, b) ≠ 1
    """
    problem = AbProblem(a, b)

    if a == 1 or b == 1:
        verdict = _solve_pell_case(problem)
        logger.info(f"{problem} : cas de Pell ({type(verdict).__name__})")
        return verdict

    if is_perfect_square(problem.d):
        logger.info(
            f"{problem} : ab = {problem.d} est un carré parfait, aucune solution"
        )
        return NoSolution(problem, NoSolutionReason.PERFECT_SQUARE_AB)

    exp = expand_sqrt(problem.d)
    T = exp.T
    if T % 2:
        logger.info(f"{problem} : période T = {T} impaire, aucune solution")
        return NoSolution(problem, NoSolutionReason.ODD_PERIOD, period_length=T)

    N = T // 2
    u_mid, v_mid = uv_at(exp, N)
    if a < b:
        residue, divisor, orientation = 0, a, Orientation.DIVIDE_X
    else:
        residue, divisor, orientation = 2, b, Orientation.DIVIDE_Y

    def no_solution(reason: NoSolutionReason) -> NoSolution:
        logger.info(
            f"{problem} : T = {T}, (u_{N}, v_{N}) = ({u_mid}, {v_mid}), "
            f"{reason.value}"
        )
        return NoSolution(problem, reason, T, N, u_mid, v_mid)

    if T % 4 != residue:
        return no_solution(NoSolutionReason.PERIOD_PARITY_MISMATCH)
    if v_mid != divisor:
        return no_solution(NoSolutionReason.MIDPOINT_VALUE_MISMATCH)
    if u_mid % v_mid:
        return no_solution(NoSolutionReason.MIDPOINT_DIVISIBILITY_FAILS)

    logger.info(f"{problem} : résoluble, T = {T}, N = {N}, v_N = {v_mid}")
    return Solvable(problem, exp, Branch(N, T), divisor, orientation)


def solve_ab_negative(a: int, b: int) -> AbVerdict:
    """
    Décide a·x² - b·y² = -1, qui équivaut à b·y² - a·x² = 1.

    Le verdict est celui de (b, a), marqué ``negated`` : l'énumération
    renvoie alors les couples (x, y) de l'équation en -1.
    """
    return replace(solve_ab(b, a), negated=True)


def _solvable_solutions(verdict: Solvable) -> Iterator[Solution]:
    a, b = verdict.problem.a, verdict.problem.b
    first = verdict.branch.start - 1
    stride = verdict.branch.stride

    for convergent in convergents(verdict.expansion):
        offset = convergent.index - first
        if offset < 0 or offset % stride:
            continue
        if convergent.p % verdict.divisor:
            logger.error(
                f"{verdict.problem} : division inexacte "
                f"à l'indice {convergent.index}"
            )
            raise InternalDivisibility(convergent.p, verdict.divisor, convergent.index)

        quotient = convergent.p // verdict.divisor
        if verdict.orientation is Orientation.DIVIDE_X:
            yield Solution.for_ab(a, b, quotient, convergent.q)
        else:
            yield Solution.for_ab(a, b, convergent.q, quotient)


def _pell_case_solutions(verdict: PellCase) -> Iterator[Solution]:
    a, b = verdict.problem.a, verdict.problem.b
    if verdict.trivial is not None:
        yield verdict.trivial
    if verdict.family is None:
        return
    for s in iter_primitive(verdict.family):
        if verdict.which is PellSide.A_IS_ONE:
            yield Solution.for_ab(a, b, s.x, s.y)
        else:
            yield Solution.for_ab(a, b, s.y, s.x)


def iter_ab(verdict: AbVerdict) -> Iterator[Solution]:
    """
    Flux des solutions par y croissant (vide pour NoSolution).

    Raises:
        InternalDivisibility: p_n non divisible par a (ou b) : bogue
    """
    if isinstance(verdict, Solvable):
        stream = _solvable_solutions(verdict)
    elif isinstance(verdict, PellCase):
        stream = _pell_case_solutions(verdict)
    else:
        return

    for solution in stream:
        if gcd(solution.x, solution.y) != 1:
            raise InvariantViolation(
                f"{verdict.problem} : solution {solution} non primitive"
            )
        yield solution.swapped() if verdict.negated else solution


def enumerate_ab(verdict: AbVerdict, count: int) -> List[Solution]:
    """Les ``count`` premières solutions du verdict (k = 0..count-1 pour Solvable)."""
    if count < 0:
        raise ValueError(f"nombre de solutions négatif : {count}")
    return list(islice(iter_ab(verdict), count))


def check_odd_midpoint_criterion(a: int, b: int) -> Optional[bool]:
    """
    Critère rapide v_N = a, valable quand a est impair.

    S'applique si 2 ≤ a < b, a impair et T ≡ 0 (mod 4), ou symétriquement si
    2 ≤ b < a, b impair et T ≡ 2 (mod 4). Renvoie None hors de ces hypothèses.
    La valeur renvoyée doit coïncider avec ``solve_ab(a, b).solvable``.
    """
    if a < 2 or b < 2 or gcd(a, b) != 1 or is_perfect_square(a * b):
        return None

    if a < b and a % 2:
        divisor, residue = a, 0
    elif b < a and b % 2:
        divisor, residue = b, 2
    else:
        return None

    exp = expand_sqrt(a * b)
    T = exp.T
    if T % 4 != residue:
        return None

    _, v_mid = uv_at(exp, T // 2)
    return v_mid == divisor
