"""Tests de la configuration."""

import pytest
import yaml
from pydantic import ValidationError

from src.config import Settings, get_settings, load_settings, reset_settings


def write_yaml(path, data):
    path.write_text(yaml.safe_dump(data), encoding="utf-8")
    return path


class TestLoadSettings:
    def test_defaults_without_file(self, tmp_path):
        settings = load_settings(tmp_path / "absent.yaml")

        assert settings == Settings()
        assert settings.default_count == 5
        assert settings.n_jobs == 1

    def test_shipped_file_matches_defaults(self):
        assert load_settings() == Settings()

    def test_yaml_values(self, tmp_path):
        path = write_yaml(tmp_path / "cfg.yaml", {"cf_terms": 3, "show_progress": True})

        settings = load_settings(path)

        assert settings.cf_terms == 3
        assert settings.show_progress is True

    def test_environment_overrides_yaml(self, tmp_path, monkeypatch):
        path = write_yaml(tmp_path / "cfg.yaml", {"pell_y_bound": 10})
        monkeypatch.setenv("PELLAB_PELL_Y_BOUND", "20")

        assert load_settings(path).pell_y_bound == 20

    def test_config_path_from_environment(self, tmp_path, monkeypatch):
        path = write_yaml(tmp_path / "cfg.yaml", {"chunk_size": 7})
        monkeypatch.setenv("PELLAB_CONFIG", str(path))

        assert load_settings().chunk_size == 7

    def test_log_level_is_normalized(self):
        assert Settings(log_level="debug").log_level == "DEBUG"

    def test_invalid_log_level(self):
        with pytest.raises(ValidationError):
            Settings(log_level="BAVARD")

    def test_invalid_bound(self, monkeypatch, tmp_path):
        monkeypatch.setenv("PELLAB_CHUNK_SIZE", "0")

        with pytest.raises(ValidationError):
            load_settings(tmp_path / "absent.yaml")

    def test_yaml_must_be_a_mapping(self, tmp_path):
        path = tmp_path / "liste.yaml"
        path.write_text("- 1\n- 2\n", encoding="utf-8")

        with pytest.raises(ValueError):
            load_settings(path)


def test_period_cap():
    settings = Settings()

    assert settings.period_cap(21) == 1_000_000
    assert settings.period_cap(10**16) == 10**10


def test_cached_settings(monkeypatch):
    first = get_settings()
    assert get_settings() is first

    monkeypatch.setenv("PELLAB_CF_TERMS", "4")
    assert get_settings().cf_terms == 10

    reset_settings()
    assert get_settings().cf_terms == 4
