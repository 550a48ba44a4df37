"""Tests de l'équation a·x² - b·y² = ±1."""

from itertools import takewhile

import pytest

from src.arithmetic import gcd, is_perfect_square
from src.continued_fractions.expansion import expand_sqrt
from src.exceptions import InternalDivisibility, NotCoprime
from src.oracle.brute_force import BruteForceOracle
from src.solvers.ab import (
    AbProblem,
    NoSolution,
    NoSolutionReason,
    Orientation,
    PellCase,
    PellSide,
    Solvable,
    check_odd_midpoint_criterion,
    enumerate_ab,
    iter_ab,
    solve_ab,
    solve_ab_negative,
)
from src.solvers.pell import Branch


def pairs(solutions):
    return [(s.x, s.y) for s in solutions]


class TestSolvable:
    def test_a_smaller_than_b(self):
        verdict = solve_ab(18, 23)

        assert isinstance(verdict, Solvable)
        assert verdict.branch == Branch(4, 8)
        assert verdict.divisor == 18
        assert verdict.orientation is Orientation.DIVIDE_X
        assert pairs(enumerate_ab(verdict, 3)) == [
            (26, 23),
            (1265394, 1119433),
            (61586725954, 54482804087),
        ]

    def test_b_smaller_than_a(self):
        verdict = solve_ab(25, 19)

        assert isinstance(verdict, Solvable)
        assert verdict.branch == Branch(5, 10)
        assert verdict.divisor == 19
        assert verdict.orientation is Orientation.DIVIDE_Y
        assert pairs(enumerate_ab(verdict, 3)) == [
            (34, 39),
            (3930298, 4508361),
            (454334588170, 521157514839),
        ]

    def test_count(self):
        verdict = solve_ab(18, 23)

        assert pairs(enumerate_ab(verdict, 1)) == [(26, 23)]
        assert enumerate_ab(verdict, 0) == []

    def test_negative_count(self):
        with pytest.raises(ValueError):
            enumerate_ab(solve_ab(18, 23), -1)

    def test_internal_divisibility(self):
        forged = Solvable(AbProblem(18, 23), expand_sqrt(414), Branch(4, 8), 7, Orientation.DIVIDE_X)

        with pytest.raises(InternalDivisibility):
            enumerate_ab(forged, 1)


class TestNoSolution:
    @pytest.mark.parametrize(
        "a, b, reason",
        [
            (19, 25, NoSolutionReason.PERIOD_PARITY_MISMATCH),
            (18, 25, NoSolutionReason.MIDPOINT_VALUE_MISMATCH),
            (16, 19, NoSolutionReason.MIDPOINT_DIVISIBILITY_FAILS),
            (23, 18, NoSolutionReason.PERIOD_PARITY_MISMATCH),
            (4, 9, NoSolutionReason.PERFECT_SQUARE_AB),
            (4, 1, NoSolutionReason.PERFECT_SQUARE_AB),
        ],
    )
    def test_reasons(self, a, b, reason):
        verdict = solve_ab(a, b)

        assert isinstance(verdict, NoSolution)
        assert verdict.reason is reason
        assert not verdict.solvable
        assert enumerate_ab(verdict, 5) == []

    def test_period_parity_details(self):
        verdict = solve_ab(19, 25)
        assert verdict.period_length == 10

    def test_midpoint_value_details(self):
        verdict = solve_ab(18, 25)
        assert (verdict.midpoint, verdict.v_midpoint) == (4, 9)

    def test_midpoint_divisibility_details(self):
        verdict = solve_ab(16, 19)

        assert verdict.period_length == 12
        assert (verdict.midpoint, verdict.u_midpoint, verdict.v_midpoint) == (6, 8, 16)

    def test_odd_period(self):
        verdict = solve_ab(2, 5)

        assert verdict.reason is NoSolutionReason.ODD_PERIOD
        assert verdict.period_length == 1

    def test_not_coprime(self):
        with pytest.raises(NotCoprime) as excinfo:
            solve_ab(18, 24)
        assert excinfo.value.gcd == 6

    def test_invalid_coefficient(self):
        with pytest.raises(ValueError):
            solve_ab(0, 5)


class TestPellCases:
    def test_a_equals_b_equals_one(self):
        verdict = solve_ab(1, 1)

        assert isinstance(verdict, PellCase)
        assert pairs(enumerate_ab(verdict, 3)) == [(1, 0)]

    def test_a_equals_one(self):
        verdict = solve_ab(1, 21)

        assert verdict.which is PellSide.A_IS_ONE
        assert pairs(enumerate_ab(verdict, 3)) == [(1, 0), (55, 12), (6049, 1320)]

    def test_a_equals_one_square_b(self):
        verdict = solve_ab(1, 4)

        assert verdict.family is None
        assert pairs(enumerate_ab(verdict, 3)) == [(1, 0)]

    def test_b_equals_one(self):
        verdict = solve_ab(2, 1)

        assert verdict.which is PellSide.B_IS_ONE
        assert verdict.solvable
        assert pairs(enumerate_ab(verdict, 2)) == [(1, 1), (5, 7)]

    def test_b_equals_one_without_solution(self):
        verdict = solve_ab(3, 1)

        assert isinstance(verdict, PellCase)
        assert not verdict.solvable
        assert enumerate_ab(verdict, 3) == []


class TestNegativeRightHandSide:
    def test_swap(self):
        verdict = solve_ab_negative(23, 18)

        assert verdict.negated
        assert pairs(enumerate_ab(verdict, 1)) == [(23, 26)]
        assert all(23 * s.x**2 - 18 * s.y**2 == -1 for s in enumerate_ab(verdict, 2))

    def test_negative_without_solution(self):
        verdict = solve_ab_negative(25, 19)
        assert not verdict.solvable


class TestOddMidpointCriterion:
    def test_mirrored_case(self):
        assert check_odd_midpoint_criterion(25, 19) is True
        assert solve_ab(25, 19).solvable

    def test_even_a(self):
        assert check_odd_midpoint_criterion(16, 19) is None

    def test_inapplicable_period(self):
        assert check_odd_midpoint_criterion(9, 10) is None
        assert solve_ab(9, 10).reason is NoSolutionReason.PERIOD_PARITY_MISMATCH

    def test_not_coprime(self):
        assert check_odd_midpoint_criterion(6, 9) is None

    def test_consistency_with_solver(self):
        for a in range(2, 41):
            for b in range(2, 41):
                if gcd(a, b) != 1 or is_perfect_square(a * b):
                    continue
                fast = check_odd_midpoint_criterion(a, b)
                if fast is not None:
                    assert fast == solve_ab(a, b).solvable, (a, b)


class TestStructure:
    def test_solvable_structure(self):
        for a in range(2, 41):
            for b in range(2, 41):
                if gcd(a, b) != 1 or is_perfect_square(a * b):
                    continue
                verdict = solve_ab(a, b)
                if not isinstance(verdict, Solvable):
                    continue
                T = verdict.expansion.T
                u_mid = verdict.expansion.u_seq[verdict.midpoint - 1]

                assert T % 2 == 0 and verdict.midpoint == T // 2
                assert (T % 4 == 0 and a < b) != (T % 4 == 2 and b < a)
                assert u_mid % verdict.divisor == 0


class TestOracleEquivalence:
    @staticmethod
    def _compare(max_coefficient, x_bound):
        oracle = BruteForceOracle(n_jobs=1)
        for a in range(2, max_coefficient + 1):
            for b in range(2, max_coefficient + 1):
                if gcd(a, b) != 1 or is_perfect_square(a * b):
                    continue
                verdict = solve_ab(a, b)
                expected = list(takewhile(lambda s: s.x <= x_bound, iter_ab(verdict)))
                found = list(oracle.ab(a, b, x_bound).solutions)

                assert expected == found, (a, b)
                assert not found or verdict.solvable

    def test_small_range(self):
        self._compare(max_coefficient=15, x_bound=5000)

    @pytest.mark.slow
    def test_full_range(self):
        self._compare(max_coefficient=40, x_bound=100_000)
