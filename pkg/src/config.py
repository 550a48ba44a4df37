"""
Configuration de pellab.

Ordre de résolution (le dernier l'emporte) :
1. valeurs par défaut du modèle ``Settings`` ;
2. fichier YAML désigné par ``PELLAB_CONFIG`` (par défaut ``configs/default.yaml`` s'il existe) ;
3. variables d'environnement ``PELLAB_<CHAMP>``, éventuellement chargées depuis un fichier ``.env``.
"""

import logging
import os
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

from src.arithmetic import ceil_sqrt

logger = logging.getLogger(__name__)

ENV_PREFIX = "PELLAB_"
DEFAULT_CONFIG_PATH = Path("configs/default.yaml")


class Settings(BaseModel):
    """Paramètres d'exécution (journalisation, plafonds de calcul, bornes des oracles)."""

    log_level: str = "INFO"
    log_format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    # Plafond de sécurité de la détection de période : max(floor, factor * ceil(sqrt(d)))
    period_cap_floor: int = Field(default=1_000_000, ge=1)
    period_cap_factor: int = Field(default=100, ge=1)

    # Au-delà, l'obstruction modulo d n'est pas recherchée pour m² ≥ d
    residue_scan_limit: int = Field(default=1_000_000, ge=2)

    default_count: int = Field(default=5, ge=0)
    cf_terms: int = Field(default=10, ge=0)

    pell_y_bound: int = Field(default=10_000, ge=0)
    ab_x_bound: int = Field(default=100_000, ge=0)
    thue_bound: int = Field(default=1_000, ge=0)
    legendre_q_bound: int = Field(default=200, ge=1)

    n_jobs: int = 1
    chunk_size: int = Field(default=50_000, ge=1)
    show_progress: bool = False

    @field_validator("log_level")
    @classmethod
    def _check_log_level(cls, value: str) -> str:
        level = value.upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"niveau de log inconnu : {value}")
        return level

    def period_cap(self, d: int) -> int:
        """Nombre maximal d'itérations autorisé pour développer √d."""
        return max(self.period_cap_floor, self.period_cap_factor * ceil_sqrt(d))


def _read_yaml(path: Path) -> Dict[str, Any]:
    """Lit un fichier YAML de configuration (dictionnaire vide si absent)."""
    if not path.exists():
        return {}

    try:
        with path.open("r", encoding="utf-8") as fh:
            data = yaml.safe_load(fh) or {}
    except yaml.YAMLError as e:
        logger.error(f"Erreur lors de la lecture de {path}: {e}")
        raise

    if not isinstance(data, dict):
        raise ValueError(f"{path} doit contenir un dictionnaire YAML")
    return data


def _read_env() -> Dict[str, str]:
    """Récupère les variables ``PELLAB_*`` correspondant à un champ de ``Settings``."""
    values = {}
    for name in Settings.model_fields:
        raw = os.getenv(f"{ENV_PREFIX}{name.upper()}")
        if raw is not None:
            values[name] = raw
    return values


def load_settings(config_path: Optional[Path] = None) -> Settings:
    """
    Construit les paramètres à partir du YAML puis de l'environnement.

    Args:
        config_path: Fichier YAML explicite (sinon ``PELLAB_CONFIG`` ou le défaut)

    Returns:
        Paramètres validés

    Raises:
        pydantic.ValidationError: Valeur invalide
    """
    load_dotenv()

    if config_path is None:
        config_path = Path(os.getenv(f"{ENV_PREFIX}CONFIG", str(DEFAULT_CONFIG_PATH)))

    values = _read_yaml(config_path)
    values.update(_read_env())

    settings = Settings(**values)
    logger.debug(f"Configuration chargée depuis {config_path}: {settings}")
    return settings


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Paramètres partagés (chargés une seule fois)."""
    return load_settings()


def reset_settings() -> None:
    """Vide le cache de ``get_settings`` (utile dans les tests)."""
    get_settings.cache_clear()
