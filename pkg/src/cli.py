"""
Interface en ligne de commande de pellab.

Exemples :
    pellab cf 21 --terms 6
    pellab pell 21 --count 2
    pellab pellgen 21 4 --count 2 --imprimitive --trivial
    pellab pellgen 21 m=-3
    pellab ab 18 23 --count 1
    pellab --json oracle ab 25 19 --bound 100

Codes de sortie : 0 succès, 1 aucune solution, 2 entrée hors domaine,
64 erreur d'utilisation, 70 erreur interne.
"""

import argparse
import logging
import sys
from typing import Callable, Dict, List, Mapping, NoReturn, Optional, Tuple

import pandas as pd
from pydantic import ValidationError

from src.config import Settings, get_settings
from src.continued_fractions.expansion import expand_sqrt
from src.exceptions import DomainError, InternalError
from src.oracle.brute_force import BruteForceOracle
from src.oracle.report import SearchReport
from src.output import (
    OutputRecord,
    Status,
    expansion_payload,
    family_payload,
    render_text,
    report_payload,
    solutions_payload,
    verdict_payload,
)
from src.solvers.ab import enumerate_ab, solve_ab, solve_ab_negative
from src.solvers.pell import (
    enumerate_family,
    has_solutions,
    solve_pell,
    solve_pell_general,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NO_SOLUTION = 1
EXIT_DOMAIN_ERROR = 2
EXIT_USAGE = 64
EXIT_INTERNAL_ERROR = 70
EXIT_INTERRUPTED = 130

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]

Outcome = Tuple[OutputRecord, Optional[Mapping[str, pd.DataFrame]]]


class _Parser(argparse.ArgumentParser):
    """Analyseur dont les erreurs d'utilisation sortent avec le code 64."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: erreur : {message}\n")


def _integer(value: str) -> int:
    """Entier signé ; accepte aussi la forme ``nom=valeur`` (``m=-3``)."""
    _, _, digits = value.rpartition("=")
    try:
        return int(digits)
    except ValueError:
        raise argparse.ArgumentTypeError(f"entier invalide : {value!r}")


def _natural(value: str) -> int:
    n = _integer(value)
    if n < 0:
        raise argparse.ArgumentTypeError(f"entier naturel attendu : {value!r}")
    return n


def _or_default(value: Optional[int], default: int) -> int:
    return default if value is None else value


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _status(found: bool) -> Status:
    return "ok" if found else "no_solution"


def cmd_cf(args: argparse.Namespace, settings: Settings) -> Outcome:
    terms = _or_default(args.terms, settings.cf_terms)
    exp = expand_sqrt(args.d)
    record = OutputRecord(
        command="cf",
        status="ok",
        inputs={"d": str(args.d), "terms": str(terms)},
        result=expansion_payload(exp, terms),
    )
    return record, {"(n, a_n, u_n, v_n)": exp.to_frame()}


def cmd_pell(args: argparse.Namespace, settings: Settings) -> Outcome:
    count = _or_default(args.count, settings.default_count)
    fundamental, family = solve_pell(args.d)
    record = OutputRecord(
        command="pell",
        status="ok",
        inputs={"d": str(args.d), "count": str(count)},
        result={
            "period_length": str(family.expansion.T),
            "fundamental": fundamental.to_payload(),
            "solutions": solutions_payload(enumerate_family(family, count)),
        },
    )
    return record, None


def cmd_pellgen(args: argparse.Namespace, settings: Settings) -> Outcome:
    count = _or_default(args.count, settings.default_count)
    family = solve_pell_general(args.d, args.m)
    solutions = enumerate_family(family, count, args.trivial, args.imprimitive)
    found = has_solutions(family, args.trivial, args.imprimitive)

    if not found:
        logger.info(
            f"Aucune solution : indices(m) = {sorted(family.residues_m)}, "
            f"indices(-m) = {sorted(family.residues_neg_m)}"
        )

    record = OutputRecord(
        command="pellgen",
        status=_status(found),
        inputs={
            "d": str(args.d),
            "m": str(args.m),
            "count": str(count),
            "trivial": _flag(args.trivial),
            "imprimitive": _flag(args.imprimitive),
        },
        result=family_payload(family, solutions),
    )
    return record, None


def cmd_ab(args: argparse.Namespace, settings: Settings) -> Outcome:
    count = _or_default(args.count, settings.default_count)
    solver = solve_ab_negative if args.neg else solve_ab
    verdict = solver(args.a, args.b)
    record = OutputRecord(
        command="ab",
        status=_status(verdict.solvable),
        inputs={
            "a": str(args.a),
            "b": str(args.b),
            "count": str(count),
            "neg": _flag(args.neg),
        },
        result=verdict_payload(verdict, enumerate_ab(verdict, count)),
    )
    return record, None


def _run_oracle(
    args: argparse.Namespace, settings: Settings
) -> Tuple[SearchReport, Dict[str, str]]:
    oracle = BruteForceOracle(n_jobs=args.jobs)

    if args.kind == "pellgen":
        bound = _or_default(args.bound, settings.pell_y_bound)
        inputs = {"d": args.d, "m": args.m}
        report = oracle.pell_general(args.d, args.m, bound)
    elif args.kind == "ab":
        bound = _or_default(args.bound, settings.ab_x_bound)
        inputs = {"a": args.a, "b": args.b}
        report = oracle.ab(args.a, args.b, bound)
    elif args.kind == "thue":
        bound = _or_default(args.bound, settings.thue_bound)
        inputs = {"a": args.a, "b": args.b, "n": args.n}
        report = oracle.thue(args.a, args.b, args.n, bound)
    else:
        bound = _or_default(args.bound, settings.legendre_q_bound)
        inputs = {"d": args.d}
        report = oracle.legendre(args.d, bound)

    echo = {"kind": args.kind}
    echo.update({name: str(value) for name, value in inputs.items()})
    echo["bound"] = str(bound)
    return report, echo


def cmd_oracle(args: argparse.Namespace, settings: Settings) -> Outcome:
    report, inputs = _run_oracle(args, settings)
    record = OutputRecord(
        command="oracle",
        status=_status(bool(report.solutions)),
        inputs=inputs,
        result=report_payload(report),
    )
    return record, {"solutions": report.to_frame()}


COMMANDS: Dict[str, Callable[[argparse.Namespace, Settings], Outcome]] = {
    "cf": cmd_cf,
    "pell": cmd_pell,
    "pellgen": cmd_pellgen,
    "ab": cmd_ab,
    "oracle": cmd_oracle,
}


def build_parser() -> argparse.ArgumentParser:
    """Construit l'analyseur de la ligne de commande."""
    parser = _Parser(
        prog="pellab",
        description=(
            "Fractions continuées de √d et équations de Pell-Fermat "
            "en arithmétique exacte"
        ),
    )
    parser.add_argument(
        "--json", action="store_true", help="Sortie JSON (format machine)"
    )
    parser.add_argument(
        "--log-level", type=str.upper, choices=LOG_LEVELS, help="Niveau de log"
    )

    commands = parser.add_subparsers(dest="command", required=True)

    cf = commands.add_parser("cf", help="Développement de √d en fraction continuée")
    cf.add_argument("d", type=_natural)
    cf.add_argument("--terms", type=_natural, help="Nombre de réduites affichées")

    pell = commands.add_parser("pell", help="Équation x² - d·y² = 1")
    pell.add_argument("d", type=_natural)
    pell.add_argument("--count", type=_natural, help="Nombre de solutions")

    pellgen = commands.add_parser("pellgen", help="Équation x² - d·y² = m")
    pellgen.add_argument("d", type=_natural)
    pellgen.add_argument("m", type=_integer, help="Second membre (ou m=-3)")
    pellgen.add_argument("--count", type=_natural, help="Nombre de solutions")
    pellgen.add_argument("--trivial", action="store_true", help="Inclure (√m, 0)")
    pellgen.add_argument(
        "--imprimitive", action="store_true", help="Inclure PGCD(x, y) > 1"
    )

    ab = commands.add_parser("ab", help="Équation a·x² - b·y² = 1")
    ab.add_argument("a", type=_natural)
    ab.add_argument("b", type=_natural)
    ab.add_argument("--count", type=_natural, help="Nombre de solutions")
    ab.add_argument("--neg", action="store_true", help="Résoudre a·x² - b·y² = -1")

    oracle = commands.add_parser("oracle", help="Recherche exhaustive bornée")
    oracle.add_argument("--jobs", type=int, help="Nombre de processus joblib")
    kinds = oracle.add_subparsers(dest="kind", required=True)

    oracle_pellgen = kinds.add_parser("pellgen", help="x² - d·y² = m, y ≤ borne")
    oracle_pellgen.add_argument("d", type=_natural)
    oracle_pellgen.add_argument("m", type=_integer)

    oracle_ab = kinds.add_parser("ab", help="a·x² - b·y² = 1, x ≤ borne")
    oracle_ab.add_argument("a", type=_natural)
    oracle_ab.add_argument("b", type=_natural)

    oracle_thue = kinds.add_parser(
        "thue", help="a·xⁿ - b·yⁿ = 1, |x|, |y| ≤ borne"
    )
    oracle_thue.add_argument("a", type=_integer)
    oracle_thue.add_argument("b", type=_integer)
    oracle_thue.add_argument("n", type=_natural)

    oracle_legendre = kinds.add_parser(
        "legendre", help="|√d - p/q| < 1/(2q²), q ≤ borne"
    )
    oracle_legendre.add_argument("d", type=_natural)

    for kind_parser in (oracle_pellgen, oracle_ab, oracle_thue, oracle_legendre):
        kind_parser.add_argument("--bound", type=_natural, help="Borne de recherche")

    return parser


def _error_record(args: argparse.Namespace, error: Exception) -> OutputRecord:
    hidden = {"json", "log_level", "command", "jobs"}
    inputs = {
        name: _flag(value) if isinstance(value, bool) else str(value)
        for name, value in vars(args).items()
        if name not in hidden and value is not None
    }
    return OutputRecord(
        command=args.command,
        status="error",
        inputs=inputs,
        result={"error": type(error).__name__, "message": str(error)},
    )


def _emit(
    args: argparse.Namespace,
    record: OutputRecord,
    tables: Optional[Mapping[str, pd.DataFrame]] = None,
) -> None:
    if args.json:
        print(record.to_json())
    elif record.status == "error":
        print(f"Erreur : {record.result['message']}", file=sys.stderr)
    else:
        print(render_text(record, tables))


def main(argv: Optional[List[str]] = None) -> int:
    """
    Point d'entrée de la ligne de commande.

    Args:
        argv: Arguments (par défaut ``sys.argv[1:]``)

    Returns:
        Code de sortie
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        settings = get_settings()
    except (ValidationError, ValueError) as e:
        logging.basicConfig(
            level=args.log_level or "WARNING", stream=sys.stderr, force=True
        )
        logger.error(f"Configuration invalide : {e}")
        _emit(args, _error_record(args, e))
        return EXIT_DOMAIN_ERROR

    logging.basicConfig(
        level=args.log_level or settings.log_level,
        format=settings.log_format,
        stream=sys.stderr,
        force=True,
    )

    tables = None
    try:
        record, tables = COMMANDS[args.command](args, settings)
        code = EXIT_OK if record.status == "ok" else EXIT_NO_SOLUTION
    except (DomainError, ValueError) as e:
        logger.error(f"Entrée hors domaine : {e}")
        record, code = _error_record(args, e), EXIT_DOMAIN_ERROR
    except InternalError as e:
        logger.error(f"Erreur interne (bogue) : {e}")
        record, code = _error_record(args, e), EXIT_INTERNAL_ERROR
    except KeyboardInterrupt:
        logger.warning("⚠️ Calcul interrompu")
        return EXIT_INTERRUPTED

    _emit(args, record, tables)
    return code


if __name__ == "__main__":
    sys.exit(main())
