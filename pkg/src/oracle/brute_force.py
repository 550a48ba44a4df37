"""
Oracles par force brute, indépendants des fractions continuées.

Chaque recherche parcourt un intervalle borné, découpé en tranches traitées
par ``joblib`` ; les tranches sont fusionnées puis triées, de sorte que le
rapport ne dépend ni du nombre de processus ni de la taille des tranches.

Accélérations exactes (aucune solution n'est perdue) :
- a·x² - b·y² = 1 : seuls les x tels que a·x² ≡ 1 (mod b) sont examinés ;
- a·xⁿ - b·yⁿ = 1 : y est extrait par racine n-ième entière ;
- Legendre : |q√d - p| < 1/2 impose p ∈ {⌊q√d⌋, ⌊q√d⌋ + 1}.

Forme entière de l'inégalité de Legendre, pour p, q ≥ 1 :

    |√d - p/q| < 1/(2q²)  ⟺  |2q²√d - 2pq| < 1
                          ⟺  (2pq - 1)² < 4q⁴·d < (2pq + 1)²

(2pq - 1 ≥ 1 et les égalités sont impossibles : 4q⁴·d est pair, (2pq ± 1)² impair.)
"""

import logging
from typing import Callable, List, Optional, Sequence, Tuple

from joblib import Parallel, delayed
from tqdm import tqdm

from src.arithmetic import compare_sqrt, gcd, integer_nthroot, is_perfect_square, isqrt
from src.config import get_settings
from src.exceptions import InvariantViolation, PerfectSquare
from src.oracle.report import SearchReport
from src.solvers.solution import Solution

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]
ChunkResult = Tuple[List[Pair], int]


def _split_range(start: int, stop: int, size: int) -> List[Pair]:
    """Découpe [start, stop) en tranches [lo, hi) de longueur au plus ``size``."""
    return [(lo, min(lo + size, stop)) for lo in range(start, stop, size)]


def _pell_general_chunk(d: int, m: int, lo: int, hi: int) -> ChunkResult:
    found = []
    for y in range(lo, hi):
        t = m + d * y * y
        if t < 0:
            continue
        x = isqrt(t)
        if x * x == t:
            found.append((x, y))
    return found, hi - lo


def _ab_chunk(a: int, b: int, residues: Sequence[int], lo: int, hi: int) -> ChunkResult:
    found = []
    visited = 0
    for r in residues:
        for x in range(lo + (r - lo) % b, hi, b):
            visited += 1
            y, exact = integer_nthroot((a * x * x - 1) // b, 2)
            if exact:
                found.append((x, y))
    return found, visited


def _thue_chunk(a: int, b: int, n: int, bound: int, lo: int, hi: int) -> ChunkResult:
    found = []
    for x in range(lo, hi):
        t = a * x**n - 1
        if t % b:
            continue
        target = t // b
        if target < 0 and n % 2 == 0:
            continue
        y, exact = integer_nthroot(target, n)
        if not exact or abs(y) > bound:
            continue
        found.append((x, y))
        if n % 2 == 0 and y != 0:
            found.append((x, -y))
    return found, hi - lo


def _legendre_chunk(d: int, lo: int, hi: int) -> ChunkResult:
    found = []
    for q in range(lo, hi):
        root = isqrt(d * q * q)
        scaled = 4 * q**4 * d
        for p in (root, root + 1):
            if p < 1 or gcd(p, q) != 1:
                continue
            if (2 * p * q - 1) ** 2 < scaled < (2 * p * q + 1) ** 2:
                found.append((p, q))
    return found, hi - lo


def _compare_sqrt_fraction(d: int, r: int, s: int) -> int:
    """Signe de √d - r/s pour s > 0, c'est-à-dire de s·√d - r."""
    return compare_sqrt(d * s * s, r)


def is_sqrt_convergent(d: int, p: int, q: int) -> bool:
    """
    Vrai si p/q est une réduite de √d, sans développer √d.

    p/q = [c_0; …, c_k] a deux développements, [c_0; …, c_k] et
    [c_0; …, c_k - 1, 1]. C'est une réduite d'un irrationnel x si et
    seulement si x s'écrit avec l'un d'eux suivi d'un quotient complet t > 1,
    c'est-à-dire si x est strictement compris entre les médiantes
    (p + p')/(q + q') et (2p - p')/(2q - q'), où p'/q' est la réduite
    précédant p/q dans son propre développement (1/0 si q = 1).

    Args:
        d: Radicande (non carré)
        p: Numérateur ≥ 1
        q: Dénominateur ≥ 1
    """
    if q < 1 or p < 1:
        raise ValueError(f"fraction invalide : {p}/{q}")
    if gcd(p, q) != 1:
        return False

    # Réduites successives de p/q par l'algorithme d'Euclide
    p_prev, q_prev = 0, 1
    p_cur, q_cur = 1, 0
    num, den = p, q
    while den:
        c, rest = divmod(num, den)
        p_cur, p_prev = c * p_cur + p_prev, p_cur
        q_cur, q_prev = c * q_cur + q_prev, q_cur
        num, den = den, rest

    if (p_cur, q_cur) != (p, q):
        raise InvariantViolation(f"Euclide n'a pas reconstruit {p}/{q}")

    side_low = _compare_sqrt_fraction(d, p + p_prev, q + q_prev)
    side_high = _compare_sqrt_fraction(d, 2 * p - p_prev, 2 * q - q_prev)
    return side_low * side_high < 0


class BruteForceOracle:
    """Recherches exhaustives bornées, réparties par tranches sur ``n_jobs`` processus."""

    def __init__(
        self,
        n_jobs: Optional[int] = None,
        chunk_size: Optional[int] = None,
        show_progress: Optional[bool] = None,
    ):
        """
        Initialise l'oracle.

        Args:
            n_jobs: Nombre de processus joblib (par défaut celui de la configuration)
            chunk_size: Taille des tranches
            show_progress: Affiche une barre tqdm par recherche
        """
        settings = get_settings()
        self.n_jobs = settings.n_jobs if n_jobs is None else n_jobs
        self.chunk_size = settings.chunk_size if chunk_size is None else chunk_size
        self.show_progress = (
            settings.show_progress if show_progress is None else show_progress
        )

        if self.chunk_size < 1:
            raise ValueError(f"taille de tranche invalide : {self.chunk_size}")

    def _scan(
        self,
        chunk_fn: Callable[..., ChunkResult],
        args: Tuple,
        start: int,
        stop: int,
        desc: str,
    ) -> ChunkResult:
        """Applique ``chunk_fn`` à chaque tranche de [start, stop) et fusionne."""
        ranges = _split_range(start, stop, self.chunk_size)
        progress = tqdm(
            ranges, desc=desc, unit="tranche", disable=not self.show_progress
        )

        try:
            results = Parallel(n_jobs=self.n_jobs)(
                delayed(chunk_fn)(*args, lo, hi) for lo, hi in progress
            )
        except Exception as e:
            logger.error(f"Erreur lors de la recherche {desc}: {e}")
            raise

        found = [pair for chunk, _ in results for pair in chunk]
        visited = sum(count for _, count in results)
        return found, visited

    @staticmethod
    def _sorted(solutions: List[Solution]) -> Tuple[Solution, ...]:
        return tuple(sorted(solutions, key=lambda s: s.sort_key))

    def pell_general(self, d: int, m: int, y_bound: int) -> SearchReport:
        """
        Solutions naturelles de x² - d·y² = m avec y ≤ y_bound.

        Pour chaque y, m + d·y² est testé par racine carrée entière.
        """
        if d < 1 or m == 0 or y_bound < 0:
            raise ValueError(
                f"paramètres invalides : d = {d}, m = {m}, borne = {y_bound}"
            )

        found, visited = self._scan(
            _pell_general_chunk, (d, m), 0, y_bound + 1, f"x²-{d}y²={m}"
        )
        solutions = [Solution.for_pell(d, m, x, y) for x, y in found]

        report = SearchReport(
            "pell_general", {"d": d, "m": m}, y_bound, self._sorted(solutions), visited
        )
        logger.info(f"Oracle {report}")
        return report

    def ab(self, a: int, b: int, x_bound: int) -> SearchReport:
        """Solutions naturelles de a·x² - b·y² = 1 avec 1 ≤ x ≤ x_bound."""
        if a < 1 or b < 1 or x_bound < 0:
            raise ValueError(
                f"paramètres invalides : a = {a}, b = {b}, borne = {x_bound}"
            )

        residues = tuple(r for r in range(b) if (a * r * r - 1) % b == 0)
        found, visited = self._scan(
            _ab_chunk, (a, b, residues), 1, x_bound + 1, f"{a}x²-{b}y²=1"
        )
        solutions = [Solution.for_ab(a, b, x, y) for x, y in found]

        report = SearchReport(
            "ab", {"a": a, "b": b}, x_bound, self._sorted(solutions), visited
        )
        logger.info(f"Oracle {report}")
        return report

    def thue(self, a: int, b: int, n: int, bound: int) -> SearchReport:
        """Solutions entières de a·xⁿ - b·yⁿ = 1 avec |x|, |y| ≤ bound."""
        if n < 3 or a == 0 or b == 0 or bound < 0:
            raise ValueError(
                f"paramètres invalides : a = {a}, b = {b}, n = {n}, borne = {bound}"
            )

        found, visited = self._scan(
            _thue_chunk, (a, b, n, bound), -bound, bound + 1, f"{a}x^{n}-{b}y^{n}=1"
        )
        solutions = []
        for x, y in found:
            if a * x**n - b * y**n != 1:
                raise InvariantViolation(
                    f"({x}, {y}) n'est pas solution de {a}x^{n} - {b}y^{n} = 1"
                )
            solutions.append(Solution(x, y))

        report = SearchReport(
            "thue", {"a": a, "b": b, "n": n}, bound, self._sorted(solutions), visited
        )
        logger.info(f"Oracle {report}")
        return report

    def legendre(self, d: int, q_bound: int) -> SearchReport:
        """
        Fractions p/q irréductibles, q ≤ q_bound, telles que |√d - p/q| < 1/(2q²).

        Chaque fraction trouvée est confrontée à ``is_sqrt_convergent`` ; celles
        qui échouent vont dans ``rejected`` (toujours vide si le critère de
        Legendre est correct).
        """
        if d < 2 or is_perfect_square(d):
            raise PerfectSquare(d)
        if q_bound < 0:
            raise ValueError(f"borne invalide : {q_bound}")

        found, visited = self._scan(
            _legendre_chunk, (d,), 1, q_bound + 1, f"Legendre √{d}"
        )
        hits, rejected = [], []
        for p, q in found:
            (hits if is_sqrt_convergent(d, p, q) else rejected).append(Solution(p, q))

        if rejected:
            logger.warning(
                f"√{d} : {len(rejected)} fraction(s) de Legendre hors des réduites"
            )

        report = SearchReport(
            "legendre",
            {"d": d},
            q_bound,
            self._sorted(hits),
            visited,
            self._sorted(rejected),
        )
        logger.info(f"Oracle {report}")
        return report


def oracle_pell_general(d: int, m: int, y_bound: int) -> SearchReport:
    return BruteForceOracle().pell_general(d, m, y_bound)


def oracle_ab(a: int, b: int, x_bound: int) -> SearchReport:
    return BruteForceOracle().ab(a, b, x_bound)


def oracle_thue(a: int, b: int, n: int, bound: int) -> SearchReport:
    return BruteForceOracle().thue(a, b, n, bound)


def oracle_legendre(d: int, q_bound: int) -> SearchReport:
    return BruteForceOracle().legendre(d, q_bound)
