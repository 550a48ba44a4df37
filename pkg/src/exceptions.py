"""
Exceptions de pellab.

Deux familles :
- DomainError : l'appelant a fourni une entrée hors du domaine de la fonction
  (code de sortie 2 en ligne de commande) ;
- InternalError : une garantie mathématique a été violée, donc un bogue
  (code de sortie 70).
"""

from typing import Optional


class PellabError(Exception):
    """Exception de base du package."""


class DomainError(PellabError):
    """Entrée hors du domaine de l'opération demandée."""


class InternalError(PellabError):
    """Garantie mathématique violée : signale un bogue, jamais une entrée valide."""


class PerfectSquare(DomainError):
    """Le radicande est un carré parfait (ou vaut moins de 2)."""

    def __init__(self, d: int):
        self.d = d
        super().__init__(
            f"{d} est un carré parfait ou est inférieur à 2 : √{d} n'a pas de "
            "développement périodique, factoriser (x - ky)(x + ky) = m à la place"
        )


class MagnitudeOutOfRange(DomainError):
    """Le second membre m ne vérifie pas 1 ≤ |m| < √d."""

    def __init__(self, d: int, m: int):
        self.d = d
        self.m = m
        super().__init__(
            f"m = {m} hors de l'intervalle 1 ≤ |m| < √{d} (il faut m² < d)"
        )


class NotCoprime(DomainError):
    """a et b ne sont pas premiers entre eux."""

    def __init__(self, a: int, b: int, gcd: int):
        self.a = a
        self.b = b
        self.gcd = gcd
        super().__init__(
            f"a = {a} et b = {b} ne sont pas premiers entre eux (PGCD = {gcd})"
        )


class NotReduced(DomainError):
    """L'irrationnel quadratique n'est pas réduit."""

    def __init__(self, surd: object):
        self.surd = surd
        super().__init__(
            f"{surd} n'est pas réduit : "
            "son développement n'est pas purement périodique"
        )


class NormalizationRequired(DomainError):
    """Le triplet (d, u, v) n'est pas sous forme canonique (v ne divise pas d - u²)."""

    def __init__(self, d: int, u: int, v: int):
        self.d = d
        self.u = u
        self.v = v
        super().__init__(
            f"({u} + √{d})/{v} n'est pas canonique : {v} ne divise pas {d} - {u}² ; "
            "utiliser QuadraticSurd.scaled"
        )


class InternalPeriodOverflow(InternalError):
    """Le plafond d'itérations de la détection de période a été atteint."""

    def __init__(self, d: int, cap: int):
        self.d = d
        self.cap = cap
        super().__init__(f"Période de √{d} non détectée après {cap} itérations")


class InternalDivisibility(InternalError):
    """p_n n'est pas divisible par le diviseur attendu."""

    def __init__(self, p: int, divisor: int, index: int):
        self.p = p
        self.divisor = divisor
        self.index = index
        super().__init__(f"p_{index} = {p} n'est pas divisible par {divisor}")


class InvariantViolation(InternalError):
    """Un invariant exact (développement, solution) n'est pas respecté."""

    def __init__(self, message: str, context: Optional[dict] = None):
        self.context = context or {}
        super().__init__(message)
