"""Tests du développement de √d en fraction continuée."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.arithmetic import is_perfect_square
from src.continued_fractions.expansion import (
    SurdExpansion,
    convergent_at,
    convergents,
    expand_sqrt,
    partial_quotient,
    pell_value,
    uv_at,
)
from src.continued_fractions.quadratics import QuadraticSurd
from src.exceptions import InternalPeriodOverflow, InvariantViolation, PerfectSquare


class TestExpandSqrt:
    def test_sqrt21(self, sqrt21):
        assert sqrt21.a0 == 4
        assert sqrt21.period == (1, 1, 2, 1, 1, 8)
        assert sqrt21.T == 6
        assert list(zip(sqrt21.u_seq, sqrt21.v_seq)) == [
            (4, 5), (1, 4), (3, 3), (3, 4), (1, 5), (4, 1),
        ]

    def test_sqrt414(self):
        exp = expand_sqrt(414)

        assert exp.a0 == 20
        assert exp.period == (2, 1, 7, 2, 7, 1, 2, 40)
        assert uv_at(exp, 4) == (18, 18)

    @pytest.mark.parametrize(
        "d, period",
        [(2, (2,)), (3, (1, 2)), (7, (1, 1, 1, 4)), (13, (1, 1, 1, 1, 6)), (304, (2, 3, 2, 1, 1, 1, 1, 1, 2, 3, 2, 34))],
    )
    def test_known_periods(self, d, period):
        assert expand_sqrt(d).period == period

    @pytest.mark.parametrize("d", [0, 1, 4, 9, 441])
    def test_perfect_square(self, d):
        with pytest.raises(PerfectSquare):
            expand_sqrt(d)

    def test_iteration_cap(self):
        with pytest.raises(InternalPeriodOverflow):
            expand_sqrt(21, max_iterations=2)

    def test_str(self, sqrt21):
        assert str(sqrt21) == "√21 = [4; (1, 1, 2, 1, 1, 8)]"

    def test_to_frame(self, sqrt21):
        frame = sqrt21.to_frame()

        assert list(frame.columns) == ["n", "a_n", "u_n", "v_n"]
        assert len(frame) == 6
        assert frame["v_n"].tolist() == ["5", "4", "3", "4", "5", "1"]

    def test_verify_rejects_tampered_expansion(self):
        tampered = SurdExpansion(21, 4, (1, 1, 2, 1, 1, 8), (4, 1, 3, 3, 1, 4), (5, 4, 3, 4, 5, 2))

        with pytest.raises(InvariantViolation):
            tampered.verify()

    def test_verify_rejects_broken_palindrome(self):
        tampered = SurdExpansion(21, 4, (1, 2, 1, 1, 1, 8), (4, 1, 3, 3, 1, 4), (5, 4, 3, 4, 5, 1))

        with pytest.raises(InvariantViolation):
            tampered.verify()


class TestIndexing:
    def test_uv_extension(self, sqrt21):
        assert uv_at(sqrt21, 0) == (4, 1)
        assert uv_at(sqrt21, 7) == (4, 5)
        assert uv_at(sqrt21, 12) == (4, 1)

    def test_uv_negative_index(self, sqrt21):
        with pytest.raises(ValueError):
            uv_at(sqrt21, -1)

    @pytest.mark.parametrize("n, expected", [(0, 4), (1, 1), (6, 8), (7, 1), (12, 8)])
    def test_partial_quotient(self, sqrt21, n, expected):
        assert partial_quotient(sqrt21, n) == expected

    def test_complete_quotient(self, sqrt21):
        assert sqrt21.complete_quotient(3) == QuadraticSurd(21, 3, 3)
        assert sqrt21.complete_quotient(3).floor() == partial_quotient(sqrt21, 3)


class TestConvergents:
    def test_first_convergents(self, sqrt21):
        head = [(c.p, c.q) for c, _ in zip(convergents(sqrt21), range(6))]

        assert head == [(4, 1), (5, 1), (9, 2), (23, 5), (32, 7), (55, 12)]

    def test_independent_cursors(self, sqrt21):
        first, second = convergents(sqrt21), convergents(sqrt21)
        next(first)
        next(first)

        assert next(second).index == 0
        assert next(first).index == 2

    @pytest.mark.parametrize(
        "n, expected", [(-2, (0, 1)), (-1, (1, 0)), (5, (55, 12)), (8, (999, 218))]
    )
    def test_convergent_at(self, sqrt21, n, expected):
        convergent = convergent_at(sqrt21, n)
        assert (convergent.p, convergent.q) == expected

    def test_convergent_at_invalid(self, sqrt21):
        with pytest.raises(ValueError):
            convergent_at(sqrt21, -3)

    def test_as_fraction(self, sqrt21):
        assert convergent_at(sqrt21, 5).as_fraction() * 12 == 55

    @pytest.mark.parametrize("n", range(0, 13))
    def test_pell_value(self, sqrt21, n):
        _, v = uv_at(sqrt21, n)
        assert pell_value(sqrt21, n) == (-1) ** n * v

    def test_determinant_identity(self, sqrt21):
        stream = convergents(sqrt21)
        previous = next(stream)
        for convergent, _ in zip(stream, range(20)):
            n = convergent.index
            assert convergent.p * previous.q - previous.p * convergent.q == (-1) ** (n - 1)
            previous = convergent


nonsquares = st.integers(min_value=2, max_value=10**6).filter(lambda d: not is_perfect_square(d))


class TestProperties:
    @given(nonsquares)
    @settings(max_examples=200, deadline=None)
    def test_value_identity(self, d):
        exp = expand_sqrt(d)

        for convergent, _ in zip(convergents(exp), range(2 * exp.T)):
            n = convergent.index + 1
            _, v = uv_at(exp, n)
            assert convergent.p**2 - d * convergent.q**2 == (-1) ** n * v

    @given(nonsquares)
    @settings(max_examples=200, deadline=None)
    def test_v_equals_one_exactly_at_period_multiples(self, d):
        exp = expand_sqrt(d)

        for n in range(1, 4 * exp.T + 1):
            assert (uv_at(exp, n)[1] == 1) == (n % exp.T == 0)

    @pytest.mark.slow
    def test_all_expansions_up_to_1000(self):
        for d in range(2, 1001):
            if is_perfect_square(d):
                continue
            exp = expand_sqrt(d)
            exp.verify()
            assert exp.period[-1] == 2 * exp.a0
