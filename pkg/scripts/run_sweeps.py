#!/usr/bin/env python3
"""
Balayages de vérification de pellab.

Ce script confronte les solveurs aux oracles par force brute et vérifie les
invariants du développement de √d sur des plages entières :
- invariants des fractions continuées pour d ≤ 1000 ;
- équivalence Pell généralisée / oracle pour d ≤ 150 et m² < d ;
- équivalence a·x² - b·y² = 1 / oracle pour 2 ≤ a, b ≤ 40 ;
- recensement de a·x³ - b·y³ = 1 pour 1 ≤ a, b ≤ 20 (vérification bornée).

Usage :
    python scripts/run_sweeps.py --all
    python scripts/run_sweeps.py --invariants --d-max 200
"""

import argparse
import logging
import sys
from itertools import takewhile
from typing import List, Optional

from tqdm import tqdm

from src.arithmetic import gcd, is_perfect_square, isqrt
from src.config import get_settings
from src.continued_fractions.expansion import convergents, expand_sqrt, uv_at
from src.oracle.brute_force import BruteForceOracle
from src.solvers.ab import check_odd_midpoint_criterion, iter_ab, solve_ab
from src.solvers.pell import iter_primitive, solve_pell_general

logger = logging.getLogger(__name__)


def _nonsquares(d_max: int) -> List[int]:
    return [d for d in range(2, d_max + 1) if not is_perfect_square(d)]


def sweep_invariants(d_max: int = 1000, show_progress: bool = False) -> List[str]:
    """
    Vérifie les invariants du développement de √d pour tout d ≤ d_max non carré.

    Au-delà de ``SurdExpansion.verify`` (palindrome, dernier quotient 2·a0,
    critère du milieu), on contrôle sur n ≤ 4T :
    - p_n·q_{n-1} - p_{n-1}·q_n = (-1)^(n-1) ;
    - p_{n-1}² - d·q_{n-1}² = (-1)^n·v_n ;
    - v_n = 1 si et seulement si T divise n.

    Returns:
        Liste des anomalies (vide si tout est correct)
    """
    failures = []
    for d in tqdm(_nonsquares(d_max), desc="Invariants", disable=not show_progress):
        exp = expand_sqrt(d)
        horizon = 4 * exp.T

        previous = None
        for convergent in convergents(exp):
            n = convergent.index
            if n > horizon:
                break
            if previous is not None:
                det = convergent.p * previous.q - previous.p * convergent.q
                if det != (-1) ** (n - 1):
                    failures.append(f"d={d} : déterminant {det} à l'indice {n}")
            previous = convergent

            m = n + 1
            _, v = uv_at(exp, m)
            if convergent.p**2 - d * convergent.q**2 != (-1) ** m * v:
                failures.append(f"d={d} : p²-dq² ≠ (-1)^n·v_n pour n = {m}")
            if (v == 1) != (m % exp.T == 0):
                failures.append(f"d={d} : v_{m} = {v} incohérent avec T = {exp.T}")

    return failures


def sweep_pell_oracle(
    d_max: int = 150,
    y_bound: int = 10_000,
    oracle: Optional[BruteForceOracle] = None,
    show_progress: bool = False,
) -> List[str]:
    """Compare solve_pell_general à l'oracle pour tout d ≤ d_max et 1 ≤ |m| < √d."""
    oracle = oracle or BruteForceOracle()
    failures = []

    for d in tqdm(_nonsquares(d_max), desc="Pell / oracle", disable=not show_progress):
        for m in range(-isqrt(d), isqrt(d) + 1):
            if m == 0 or m * m >= d:
                continue
            family = solve_pell_general(d, m)
            expected = list(
                takewhile(lambda s: s.y <= y_bound, iter_primitive(family))
            )
            found = list(oracle.pell_general(d, m, y_bound).primitive)
            if expected != found:
                failures.append(
                    f"x² - {d}y² = {m} : solveur {expected} ≠ oracle {found}"
                )

    return failures


def sweep_ab_oracle(
    max_coefficient: int = 40,
    x_bound: int = 100_000,
    oracle: Optional[BruteForceOracle] = None,
    show_progress: bool = False,
) -> List[str]:
    """Compare solve_ab à l'oracle pour tout couple premier 2 ≤ a, b ≤ max_coefficient."""
    oracle = oracle or BruteForceOracle()
    failures = []

    pairs = [
        (a, b)
        for a in range(2, max_coefficient + 1)
        for b in range(2, max_coefficient + 1)
        if gcd(a, b) == 1 and not is_perfect_square(a * b)
    ]
    for a, b in tqdm(pairs, desc="ab / oracle", disable=not show_progress):
        verdict = solve_ab(a, b)
        expected = list(takewhile(lambda s: s.x <= x_bound, iter_ab(verdict)))
        found = list(oracle.ab(a, b, x_bound).solutions)

        if expected != found:
            failures.append(
                f"{a}x² - {b}y² = 1 : solveur {expected} ≠ oracle {found}"
            )
        if found and not verdict.solvable:
            failures.append(
                f"{a}x² - {b}y² = 1 : verdict {verdict} contredit l'oracle"
            )

        fast = check_odd_midpoint_criterion(a, b)
        if fast is not None and fast != verdict.solvable:
            failures.append(
                f"{a}x² - {b}y² = 1 : critère rapide {fast} ≠ {verdict.solvable}"
            )

    return failures


def thue_census(
    max_coefficient: int = 20,
    bound: int = 1000,
    exponent: int = 3,
    oracle: Optional[BruteForceOracle] = None,
    show_progress: bool = False,
) -> List[str]:
    """
    Recense les solutions de a·xⁿ - b·yⁿ = 1 avec x·y ≠ 0 et |x|, |y| ≤ bound.

    Signale tout couple (a, b) premier admettant plus d'une telle solution.
    Il s'agit d'une vérification bornée, pas d'une preuve de finitude.
    """
    oracle = oracle or BruteForceOracle()
    failures = []

    pairs = [
        (a, b)
        for a in range(1, max_coefficient + 1)
        for b in range(1, max_coefficient + 1)
        if gcd(a, b) == 1
    ]
    for a, b in tqdm(pairs, desc="Thue", disable=not show_progress):
        report = oracle.thue(a, b, exponent, bound)
        if len(report.nonaxis) > 1:
            equation = f"{a}x^{exponent} - {b}y^{exponent} = 1"
            failures.append(f"{equation} : {list(report.nonaxis)}")

    return failures


def _report(name: str, failures: List[str]) -> bool:
    if failures:
        logger.error(f"❌ {name} : {len(failures)} anomalie(s)")
        for failure in failures[:20]:
            logger.error(f"   {failure}")
        return False
    logger.info(f"✅ {name} : aucune anomalie")
    return True


def main(argv: Optional[List[str]] = None) -> int:
    """Fonction principale."""
    parser = argparse.ArgumentParser(description="Balayages de vérification de pellab")
    parser.add_argument("--all", action="store_true", help="Lance tous les balayages")
    parser.add_argument("--invariants", action="store_true", help="Invariants de √d")
    parser.add_argument("--pell", action="store_true", help="Pell généralisée / oracle")
    parser.add_argument("--ab", action="store_true", help="a·x² - b·y² = 1 / oracle")
    parser.add_argument("--thue", action="store_true", help="Recensement de Thue")
    parser.add_argument("--d-max", type=int, default=1000, help="Borne des invariants")
    parser.add_argument("--pell-d-max", type=int, default=150, help="Borne de d (Pell)")
    parser.add_argument("--ab-max", type=int, default=40, help="Borne de a et b")
    parser.add_argument(
        "--thue-max", type=int, default=20, help="Borne de a et b (Thue)"
    )
    parser.add_argument(
        "--progress", action="store_true", help="Barres de progression tqdm"
    )
    args = parser.parse_args(argv)

    settings = get_settings()
    logging.basicConfig(level=settings.log_level, format=settings.log_format)
    oracle = BruteForceOracle()
    progress = args.progress or settings.show_progress

    selected = {
        "invariants": args.all or args.invariants,
        "pell": args.all or args.pell,
        "ab": args.all or args.ab,
        "thue": args.all or args.thue,
    }
    if not any(selected.values()):
        parser.print_help()
        return 64

    logger.info("🔍 Démarrage des balayages de vérification...")
    ok = True
    try:
        if selected["invariants"]:
            ok &= _report("Invariants", sweep_invariants(args.d_max, progress))
        if selected["pell"]:
            failures = sweep_pell_oracle(
                args.pell_d_max, settings.pell_y_bound, oracle, progress
            )
            ok &= _report("Pell / oracle", failures)
        if selected["ab"]:
            failures = sweep_ab_oracle(
                args.ab_max, settings.ab_x_bound, oracle, progress
            )
            ok &= _report("ab / oracle", failures)
        if selected["thue"]:
            failures = thue_census(
                args.thue_max, settings.thue_bound, 3, oracle, progress
            )
            ok &= _report("Thue", failures)

    except KeyboardInterrupt:
        logger.warning("⚠️ Balayages interrompus")
        return 130
    except Exception as e:
        logger.error(f"❌ Erreur inattendue: {e}")
        return 70

    if ok:
        logger.info("🎉 Tous les balayages sont concluants")
        return 0
    return 1


if __name__ == "__main__":
    sys.exit(main())
