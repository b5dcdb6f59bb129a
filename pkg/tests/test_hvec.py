from fractions import Fraction

import pytest

from levelcone import (
    HVector,
    binom_r,
    codim2_level_condition,
    ecomp_hvector,
    greedy_decompose,
    hvector_of,
    lefschetz_split,
    level_condition,
    max_betti_combo,
    rational_cancellable,
    rational_dual_cancellable,
    reverse,
    wlp_condition,
)
from levelcone.errors import NotModuleHVector, ZeroPolynomial

import oracles
from helpers import H_MAIN, H_WLP, KOSZUL3, grid


MAIN_D = grid(
    3,
    [
        [1, "-", "-", "-"],
        ["-", "-", "-", "-"],
        ["-", 3, "9/2", "9/5"],
        ["-", "3/2", "12/5", 1],
        ["-", "63/5", 21, 9],
    ],
)


class TestMaxBettiCombo:
    def test_main(self):
        a, D = max_betti_combo(H_MAIN, 3)
        assert a == [0, 0, Fraction(3, 10), Fraction(1, 10), Fraction(3, 5)]
        assert D == MAIN_D
        assert hvector_of(D) == H_MAIN

    def test_one(self):
        a, D = max_betti_combo(HVector([1]), 3)
        assert a == [1] and D == KOSZUL3

    def test_not_module(self):
        with pytest.raises(NotModuleHVector) as err:
            max_betti_combo(HVector([1, 4]), 3)
        assert err.value.index == 0


def _f_by_solving(h, p):
    """Solve h = sum f_i ecomp_i as a dense linear system."""
    c = h.degree
    cols = [oracles.hvector_of_pure((0, *range(i + 1, i + p), c + p)) for i in range(c + 1)]
    A = [[cols[i][k] if k < len(cols[i]) else 0 for i in range(c + 1)] for k in range(c + 1)]
    return oracles.solve(A, h.coefficients(0, c))


class TestLevelCondition:
    def test_main(self):
        w = level_condition(H_MAIN, 3)
        assert w.passed
        assert w.f == (0, 0, Fraction(3, 7), 0, Fraction(4, 7))

    def test_wlp_example(self):
        w = level_condition(H_WLP, 3)
        assert w.passed
        assert w.f == (0, Fraction(5, 21), Fraction(11, 42), Fraction(1, 2), 0)

    @pytest.mark.parametrize("h", [H_MAIN, H_WLP, HVector([1, 3, 6, 10, 7, 6, 2]), HVector([2, 5, 1, 7])])
    def test_matches_linear_solve(self, h):
        assert list(level_condition(h, 3).f) == _f_by_solving(h, 3)

    def test_sign_agreement(self):
        for h in (H_MAIN, H_WLP, HVector([1, 3, 6, 10, 7, 6, 2]), HVector([1, 1, 3])):
            w = level_condition(h, 3)
            for f, d in zip(w.f, w.dets):
                assert (f > 0) == (d > 0) and (f < 0) == (d < 0)

    def test_indicator(self):
        for j in range(5):
            w = level_condition(ecomp_hvector(j, 4, 3), 3)
            assert w.passed
            assert w.f == tuple(Fraction(int(i == j)) for i in range(5))

    def test_combo(self):
        combo = level_condition(H_MAIN, 3).combo()
        assert combo.types() == [(0, 3, 4, 7), (0, 5, 6, 7)]
        assert level_condition(HVector([1, 3, 6, 10, 7, 6, 2]), 3).combo() is None

    def test_codim_guard(self):
        with pytest.raises(ValueError):
            level_condition(H_MAIN, 1)


class TestCodim2:
    def test_examples(self):
        assert codim2_level_condition(HVector([1, 2, 1]))
        assert not codim2_level_condition(HVector([1, 1, 3]))
        assert codim2_level_condition(HVector([1]))

    def test_determinants(self):
        assert oracles.det([[1, 2, 1], [1, 2, 3], [3, 2, 1]]) == 8
        assert oracles.det([[1, 1, 3], [1, 2, 3], [3, 2, 1]]) == -8
        assert level_condition(HVector([1, 2, 1]), 2).dets[1] == 8
        assert level_condition(HVector([1, 1, 3]), 2).dets[1] == -8

    def test_concavity(self):
        for coeffs in ([1, 2, 3, 3, 2], [1, 2, 2, 3], [1, 2, 3, 4, 5, 3, 1], [1, 3, 4, 4]):
            h = HVector(coeffs)
            c = h.degree
            concave = all(2 * h[i] - h[i - 1] - h[i + 1] >= 0 for i in range(c + 1))
            assert codim2_level_condition(h) == concave


class TestCancellable:
    def test_main(self):
        rep = rational_cancellable(H_MAIN, 3)
        assert rep.passed
        assert Fraction(12, 5) - Fraction(9, 5) in rep.margins
        assert 21 - 1 in rep.margins

    def test_margins_read_from_diagram(self):
        for h in (H_MAIN, H_WLP, HVector([1, 3, 6, 8, 8, 9])):
            a, D = max_betti_combo(h, 3)
            rep = rational_cancellable(h, 3)
            assert list(rep.margins) == [D[(2, 3 + j)] - D[(3, 3 + j)] for j in range(h.degree)]

    def test_one(self):
        for p in (2, 3, 4):
            assert rational_cancellable(HVector([1]), p)

    def test_listed(self):
        assert rational_cancellable(HVector([1, 3, 6, 8, 8, 9]), 3)

    def test_dual(self):
        assert rational_dual_cancellable(H_MAIN, 3)
        assert rational_dual_cancellable(HVector([1, 3, 5, 7, 6, 6, 2]), 3)
        for h in (H_MAIN, H_WLP, HVector([1, 2, 9, 3]), HVector([4, 1, 1, 5])):
            assert rational_dual_cancellable(h, 3) == rational_dual_cancellable(reverse(h), 3)


class TestReverse:
    def test_basic(self):
        assert reverse(HVector([1, 2, 3])) == HVector([3, 2, 1])
        assert reverse(reverse(H_MAIN)) == H_MAIN
        h = HVector([1, 3, 5, 7, 6, 6, 2])
        assert reverse(h) == HVector([2, 6, 6, 7, 5, 3, 1])
        with pytest.raises(ZeroPolynomial):
            reverse(HVector([]))


class TestLefschetz:
    def test_wlp_example(self):
        s = lefschetz_split(H_WLP)
        assert s.u == 3
        assert s.h_Q == HVector([1, 2, 2, 1])
        assert s.h_P == HVector({4: 4, 5: 2})
        assert s.h_P_dual == HVector([2, 4])

    def test_one(self):
        s = lefschetz_split(HVector([1]))
        assert (s.u, s.h_Q, s.h_P, s.h_P_dual) == (0, HVector([1]), HVector({1: 1}), HVector([1]))

    def test_rise_then_drop(self):
        s = lefschetz_split(HVector([1, 3]))
        assert (s.u, s.h_Q, s.h_P, s.h_P_dual) == (1, HVector([1, 2]), HVector({2: 3}), HVector([3]))


class TestWlp:
    def test_example(self):
        data = wlp_condition(H_WLP, 3)
        assert data.passed and data.u == 3
        assert data.f == (0, Fraction(1, 3), Fraction(5, 12), Fraction(1, 4))
        assert data.g == (0, 2)
        assert data.F == grid(2, [[1, "-", "-"], ["-", 1, "2/3"], ["-", "5/3", "5/4"], ["-", "5/4", 1]])
        assert data.G == grid(2, [[2, "-", "-"], ["-", 6, 4]])
        assert data.E[(1, 4)] == Fraction(21, 4)
        assert data.E[(2, 5)] == 7
        assert data.E[(3, 7)] == 2

    def test_full_power_profile(self):
        for p in (2, 3, 4):
            h = HVector([binom_r(i, p) for i in range(5)])
            data = wlp_condition(h, p)
            assert data.passed
            greedy_decompose(data.E)

    def test_failing(self):
        data = wlp_condition(HVector([1, 3, 6, 10, 7, 6, 2]), 3)
        assert not data.passed
        assert any(x < 0 for x in data.f + data.g)
        assert not level_condition(HVector([1, 3, 6, 10, 7, 6, 2]), 3).passed
