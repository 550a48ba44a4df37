"""Tests des balayages de vérification."""

import pytest

from scripts.run_sweeps import (
    main,
    sweep_ab_oracle,
    sweep_invariants,
    sweep_pell_oracle,
    thue_census,
)


def test_invariants_small_range():
    assert sweep_invariants(60) == []


def test_pell_oracle_small_range():
    assert sweep_pell_oracle(40, y_bound=2000) == []


def test_ab_oracle_small_range():
    assert sweep_ab_oracle(10, x_bound=5000) == []


def test_thue_small_range():
    assert thue_census(6, bound=100) == []


class TestMain:
    def test_nothing_selected(self, capsys):
        assert main([]) == 64
        assert "--invariants" in capsys.readouterr().out

    def test_selected_sweep(self):
        assert main(["--invariants", "--d-max", "30"]) == 0

    def test_failures_give_exit_code_one(self, mocker):
        mocker.patch("scripts.run_sweeps.sweep_invariants", return_value=["d=2 : faux"])

        assert main(["--invariants"]) == 1

    def test_unexpected_error(self, mocker):
        mocker.patch("scripts.run_sweeps.thue_census", side_effect=RuntimeError("boum"))

        assert main(["--thue", "--thue-max", "3"]) == 70

    def test_progress_is_off_by_default(self, mocker):
        sweep = mocker.patch("scripts.run_sweeps.sweep_invariants", return_value=[])

        assert main(["--invariants", "--d-max", "10"]) == 0
        sweep.assert_called_once_with(10, False)

    def test_progress_flag(self, mocker):
        sweep = mocker.patch("scripts.run_sweeps.sweep_invariants", return_value=[])

        main(["--invariants", "--d-max", "10", "--progress"])
        sweep.assert_called_once_with(10, True)

    def test_progress_from_settings(self, mocker, monkeypatch):
        monkeypatch.setenv("PELLAB_SHOW_PROGRESS", "true")
        sweep = mocker.patch("scripts.run_sweeps.sweep_invariants", return_value=[])

        main(["--invariants", "--d-max", "10"])
        sweep.assert_called_once_with(10, True)

    def test_interrupted(self, mocker):
        mocker.patch("scripts.run_sweeps.sweep_invariants", side_effect=KeyboardInterrupt)

        assert main(["--invariants"]) == 130


@pytest.mark.slow
def test_full_invariants():
    assert sweep_invariants(1000) == []


@pytest.mark.slow
def test_full_pell_oracle():
    assert sweep_pell_oracle(150) == []


@pytest.mark.slow
def test_full_ab_oracle():
    assert sweep_ab_oracle(40) == []


@pytest.mark.slow
def test_full_thue_census():
    assert thue_census(20, bound=1000) == []
