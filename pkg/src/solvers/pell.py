"""
Équations de Pell-Fermat x² - d·y² = 1 et x² - d·y² = m avec 1 ≤ |m| < √d.

Les solutions non triviales premières entre elles sont exactement certaines
réduites p_{j-1}/q_{j-1} de √d : celles dont l'indice j vérifie
(-1)^j · v_j = m. On note indices(c) = {j ∈ [1, T] | (-1)^j v_j = c} :

- si T est pair, les indices sont N + k·T pour N ∈ indices(m) ;
- si T est impair, ce sont N + 2k·T pour N ∈ indices(m) et M + (2k+1)·T pour M ∈ indices(-m).

Le solveur n'exige pas PGCD(d, m) = 1.
"""

import heapq
import logging
from dataclasses import dataclass, replace
from itertools import count as count_from
from itertools import islice
from typing import FrozenSet, Iterator, List, NamedTuple, Optional, Tuple

from src.arithmetic import gcd, is_perfect_square, is_square_mod, isqrt
from src.config import get_settings
from src.continued_fractions.expansion import (
    SurdExpansion,
    convergent_at,
    convergents,
    expand_sqrt,
)
from src.exceptions import InvariantViolation, MagnitudeOutOfRange
from src.solvers.solution import Solution

logger = logging.getLogger(__name__)

QUADRATIC_RESIDUE_OBSTRUCTION = "quadratic_residue"


class Branch(NamedTuple):
    """Progression d'indices j = start + k·stride ; la réduite associée est p_{j-1}/q_{j-1}."""

    start: int
    stride: int

    def convergent_indices(self) -> Iterator[int]:
        return count_from(self.start - 1, self.stride)


@dataclass(frozen=True)
class SolutionFamily:
    """
    Description finie de l'ensemble (infini) des solutions primitives non triviales.

    ``obstruction`` est renseigné lorsque la famille est vide pour une raison
    locale (m n'est pas un carré modulo d) alors que m² ≥ d.
    """

    d: int
    m: int
    expansion: SurdExpansion
    residues_m: FrozenSet[int]
    residues_neg_m: FrozenSet[int]
    branches: Tuple[Branch, ...]
    trivial: Optional[Solution] = None
    obstruction: Optional[str] = None

    @property
    def is_empty(self) -> bool:
        return not self.branches


def _signed_indices(exp: SurdExpansion, value: int) -> FrozenSet[int]:
    """{j ∈ [1, T] | (-1)^j v_j = value}."""
    return frozenset(
        j
        for j, v in enumerate(exp.v_seq, start=1)
        if (v if j % 2 == 0 else -v) == value
    )


def _check_magnitude(d: int, m: int) -> None:
    if m == 0 or m * m >= d:
        raise MagnitudeOutOfRange(d, m)


def residue_sets(exp: SurdExpansion, m: int) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """
    Ensembles indices(m) et indices(-m) associés à √d.

    Raises:
        MagnitudeOutOfRange: m = 0 ou m² ≥ d
    """
    _check_magnitude(exp.d, m)
    return _signed_indices(exp, m), _signed_indices(exp, -m)


def _trivial_solution(d: int, m: int) -> Optional[Solution]:
    if m > 0 and is_perfect_square(m):
        return Solution.for_pell(d, m, isqrt(m), 0)
    return None


def solve_pell_general(d: int, m: int) -> SolutionFamily:
    """
    Résout x² - d·y² = m en entiers naturels premiers entre eux.

    Args:
        d: Entier ≥ 2 qui n'est pas un carré parfait
        m: Second membre, 1 ≤ |m| < √d

    Returns:
        Famille des solutions primitives non triviales (éventuellement vide)

    Raises:
        PerfectSquare: d est un carré parfait
        MagnitudeOutOfRange: m = 0, ou m² ≥ d sans obstruction modulo d
    """
    exp = expand_sqrt(d)

    if m != 0 and m * m >= d:
        if d <= get_settings().residue_scan_limit and not is_square_mod(m, d):
            logger.info(
                f"x² - {d}y² = {m} : {m} n'est pas un carré modulo {d}, "
                "aucune solution"
            )
            return SolutionFamily(
                d=d,
                m=m,
                expansion=exp,
                residues_m=_signed_indices(exp, m),
                residues_neg_m=_signed_indices(exp, -m),
                branches=(),
                obstruction=QUADRATIC_RESIDUE_OBSTRUCTION,
            )
        logger.error(f"Second membre hors domaine pour √{d}: m = {m}")
        raise MagnitudeOutOfRange(d, m)

    residues_m, residues_neg_m = residue_sets(exp, m)
    T = exp.T

    if T % 2 == 0:
        branches = [Branch(n, T) for n in residues_m]
    else:
        branches = [Branch(n, 2 * T) for n in residues_m]
        branches += [Branch(n + T, 2 * T) for n in residues_neg_m]

    family = SolutionFamily(
        d=d,
        m=m,
        expansion=exp,
        residues_m=residues_m,
        residues_neg_m=residues_neg_m,
        branches=tuple(sorted(branches)),
        trivial=_trivial_solution(d, m),
    )
    logger.info(
        f"x² - {d}y² = {m} : T = {T}, indices(m) = {sorted(residues_m)}, "
        f"indices(-m) = {sorted(residues_neg_m)}, {len(family.branches)} branche(s)"
    )
    return family


def _branch_solutions(family: SolutionFamily, branch: Branch) -> Iterator[Solution]:
    first = branch.start - 1
    for convergent in convergents(family.expansion):
        offset = convergent.index - first
        if offset < 0 or offset % branch.stride:
            continue
        solution = Solution.for_pell(family.d, family.m, convergent.p, convergent.q)
        if gcd(solution.x, solution.y) != 1:
            raise InvariantViolation(
                f"Solution {solution} non primitive pour √{family.d}"
            )
        yield solution


def iter_primitive(family: SolutionFamily) -> Iterator[Solution]:
    """Solutions primitives non triviales, par y croissant (fusion des branches)."""
    streams = [_branch_solutions(family, branch) for branch in family.branches]
    return heapq.merge(*streams, key=lambda s: s.sort_key)


def _scaled_stream(family: SolutionFamily, delta: int) -> Iterator[Solution]:
    sub_family = solve_pell_general(family.d, family.m // (delta * delta))
    for s in iter_primitive(sub_family):
        yield Solution.for_pell(family.d, family.m, *s.scaled(delta))


def _imprimitive_streams(family: SolutionFamily) -> List[Iterator[Solution]]:
    """Solutions de PGCD δ ≥ 2 : δ·(solutions primitives de x² - d·y² = m/δ²)."""
    return [
        _scaled_stream(family, delta)
        for delta in range(2, isqrt(abs(family.m)) + 1)
        if family.m % (delta * delta) == 0
    ]


def iter_family(
    family: SolutionFamily,
    include_trivial: bool = False,
    include_imprimitive: bool = False,
) -> Iterator[Solution]:
    """
    Flux (infini ou vide) des solutions de la famille, par y croissant.

    Args:
        family: Famille issue de ``solve_pell_general`` ou ``solve_pell``
        include_trivial: Émettre d'abord (√m, 0) quand m est un carré parfait
        include_imprimitive: Fusionner les solutions de PGCD δ ≥ 2 (δ² | m)
    """
    trivial = _trivial_solution(family.d, family.m)
    if include_trivial and trivial is not None:
        yield trivial

    streams = [iter_primitive(family)]
    if include_imprimitive:
        streams += _imprimitive_streams(family)
    yield from heapq.merge(*streams, key=lambda s: s.sort_key)


def enumerate_family(
    family: SolutionFamily,
    count: int,
    include_trivial: bool = False,
    include_imprimitive: bool = False,
) -> List[Solution]:
    """Les ``count`` premières solutions de la famille, par y croissant."""
    if count < 0:
        raise ValueError(f"nombre de solutions négatif : {count}")
    stream = iter_family(family, include_trivial, include_imprimitive)
    return list(islice(stream, count))


def has_solutions(
    family: SolutionFamily,
    include_trivial: bool = False,
    include_imprimitive: bool = False,
) -> bool:
    """Vrai si ``iter_family`` avec ces options émet au moins une solution."""
    if family.branches:
        return True
    if include_trivial and _trivial_solution(family.d, family.m) is not None:
        return True
    if include_imprimitive:
        streams = _imprimitive_streams(family)
        return any(next(stream, None) is not None for stream in streams)
    return False


def solve_pell(d: int) -> Tuple[Solution, SolutionFamily]:
    """
    Solution fondamentale et famille des solutions non triviales de x² - d·y² = 1.

    La solution fondamentale est la réduite d'indice T - 1 si T est pair, 2T - 1 sinon.

    Raises:
        PerfectSquare: d est un carré parfait
    """
    family = replace(solve_pell_general(d, 1), trivial=None)
    T = family.expansion.T

    index = T - 1 if T % 2 == 0 else 2 * T - 1
    convergent = convergent_at(family.expansion, index)
    fundamental = Solution.for_pell(d, 1, convergent.p, convergent.q)

    first = next(iter_primitive(family))
    if first != fundamental:
        raise InvariantViolation(
            f"√{d} : solution fondamentale {fundamental} "
            f"différente de la première solution {first}"
        )

    logger.info(f"x² - {d}y² = 1 : solution fondamentale {fundamental}")
    return fundamental, family
