"""
Arithmétique entière exacte.

Aucune fonction de ce module n'utilise de flottants : racines entières,
tests de carré parfait et comparaisons de √d à un entier se font
exclusivement sur des entiers de précision arbitraire.
"""

from math import gcd, isqrt
from typing import Tuple

__all__ = [
    "ceil_sqrt",
    "compare_sqrt",
    "gcd",
    "integer_nthroot",
    "is_perfect_square",
    "is_square_mod",
    "isqrt",
]


def is_perfect_square(n: int) -> bool:
    """Vrai si n est le carré d'un entier (faux pour n < 0)."""
    if n < 0:
        return False
    root = isqrt(n)
    return root * root == n


def ceil_sqrt(n: int) -> int:
    """Plus petit entier r tel que r² ≥ n."""
    if n < 0:
        raise ValueError("math domain error")
    root = isqrt(n)
    return root if root * root == n else root + 1


def integer_nthroot(n: int, k: int) -> Tuple[int, bool]:
    """
    Racine k-ième entière de n par la méthode de Newton.

    Pour n < 0 et k impair, la racine est négative : integer_nthroot(-27, 3) = (-3, True).

    Args:
        n: Entier dont on extrait la racine
        k: Indice de la racine (k ≥ 1)

    Returns:
        (r, exact) où r est la racine tronquée vers zéro et exact indique r**k == n

    Raises:
        ValueError: k < 1, ou n < 0 avec k pair
    """
    if k < 1:
        raise ValueError(f"indice de racine invalide : {k}")
    if n < 0:
        if k % 2 == 0:
            raise ValueError("math domain error")
        root, exact = integer_nthroot(-n, k)
        return -root, exact
    if k == 1 or n <= 1:
        return n, True
    if k == 2:
        root = isqrt(n)
        return root, root * root == n

    # Point de départ au-dessus de la racine : la suite de Newton décroît ensuite vers elle
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x, x**k == n


def compare_sqrt(d: int, c: int) -> int:
    """
    Signe de √d - c, calculé exactement.

    Returns:
        -1, 0 ou 1 (0 seulement si d = c² avec c ≥ 0)
    """
    if d < 0:
        raise ValueError("math domain error")
    if c < 0:
        return 1
    square = c * c
    return (d > square) - (d < square)


def is_square_mod(m: int, d: int) -> bool:
    """
    Vrai si la congruence x² ≡ m (mod d) admet une solution.

    Balayage exhaustif des résidus 0, 1, …, ⌊d/2⌋ (x et -x ont le même carré).
    """
    if d < 1:
        raise ValueError(f"module invalide : {d}")
    target = m % d
    return any(x * x % d == target for x in range(d // 2 + 1))
