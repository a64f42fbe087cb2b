"""
Unit Tests for point evaluation, sweeps and closed forms

Tests for:
- Closed-form oracles at known points
- evaluate_point against the closed forms
- Grid helpers and ordered parallel evaluation
- Pair symmetry and the W trade-off
- Optimal filter parameters
"""

import pytest

from entanglement_filter.core.calculators.closed_form import (
    closed_form_w,
    closed_form_w_success_prob,
    closed_form_wwbar_purity,
)
from entanglement_filter.core.calculators.sweeps import (
    evaluate_point,
    gamma_t_grid,
    k_grid,
    optimal_filter_parameters,
    pair_concurrence,
    sweep_filter,
    sweep_noise_filter,
)
from entanglement_filter.core.models import QubitPair, StateName, SweepRecord
from entanglement_filter.exceptions import ContractViolationError


class TestClosedForms:
    """Tests for the analytic oracles"""

    def test_w_endpoints(self):
        at0 = closed_form_w(0.0)
        assert (at0.c12, at0.c23, at0.g12, at0.g23) == (0.0, 1.0, 0.5, 1.0)
        at1 = closed_form_w(1.0)
        assert at1.c12 == 0.0 and at1.c23 == 0.0
        assert at1.g12 == pytest.approx(1.0) and at1.g23 == pytest.approx(1.0)

    def test_w_unfiltered(self):
        half = closed_form_w(0.5)
        assert half.c12 == pytest.approx(2 / 3)
        assert half.c23 == pytest.approx(2 / 3)
        assert half.g23 == pytest.approx(5 / 9)

    def test_wwbar_purity(self):
        assert closed_form_wwbar_purity(0.0) == pytest.approx((7 / 9, 1.0))
        assert closed_form_wwbar_purity(0.5).g23 == pytest.approx(13 / 18)

    def test_success_probability(self):
        assert closed_form_w_success_prob(0.0) == pytest.approx(2 / 3)
        assert closed_form_w_success_prob(1.0) == pytest.approx(1 / 3)

    def test_rejects_bad_k(self):
        with pytest.raises(ContractViolationError):
            closed_form_w(1.5)


class TestGrids:
    """Tests for k_grid / gamma_t_grid"""

    def test_k_grid(self):
        assert k_grid(5) == [0.0, 0.25, 0.5, 0.75, 1.0]

    def test_gamma_t_grid(self):
        assert gamma_t_grid(2.0, 3) == [0.0, 1.0, 2.0]
        assert gamma_t_grid(2.0, 3, gamma_t_min=1.0) == [1.0, 1.5, 2.0]

    @pytest.mark.parametrize("args", [(1.0, 1), (0.0, 5), (1.0, 5, 2.0)])
    def test_grid_rejects_bad_ranges(self, args):
        with pytest.raises(ContractViolationError):
            gamma_t_grid(*args)


class TestEvaluatePoint:
    """Tests for evaluate_point"""

    def test_returns_record(self):
        record = evaluate_point("W3", 0.3)
        assert isinstance(record, SweepRecord)
        assert record.state_name is StateName.W3
        assert record.gamma_t == 0.0

    @pytest.mark.parametrize("k", [0.0, 0.1, 0.35, 0.5, 0.8, 1.0])
    def test_w_matches_closed_form(self, k):
        record = evaluate_point(StateName.W3, k)
        expected = closed_form_w(k)
        assert record.c12 == pytest.approx(expected.c12, abs=1e-9)
        assert record.c13 == pytest.approx(expected.c12, abs=1e-9)
        assert record.c23 == pytest.approx(expected.c23, abs=1e-9)
        assert record.g12 == pytest.approx(expected.g12, abs=1e-9)
        assert record.g23 == pytest.approx(expected.g23, abs=1e-9)
        assert record.success_prob == pytest.approx(closed_form_w_success_prob(k), abs=1e-12)

    def test_ghz_filtered_anywhere_is_separable(self):
        for target in (1, 2, 3):
            record = evaluate_point(StateName.GHZ3, 0.3, target_qubit=target)
            assert (record.c12, record.c13, record.c23) == (0.0, 0.0, 0.0)

    def test_noise_lowers_concurrence(self):
        clean = evaluate_point(StateName.W3, 0.2)
        noisy = evaluate_point(StateName.W3, 0.2, gamma_t=0.3)
        assert noisy.c23 < clean.c23
        assert noisy.gamma_t == 0.3

    def test_noise_does_not_change_success_probability(self):
        """Noise on qubits 2, 3 leaves qubit 1's populations alone"""
        record = evaluate_point(StateName.W3, 0.2, gamma_t=1.0)
        assert record.success_prob == pytest.approx(closed_form_w_success_prob(0.2), abs=1e-12)

    def test_rejects_negative_time(self):
        with pytest.raises(ContractViolationError):
            evaluate_point(StateName.W3, 0.5, gamma_t=-0.5)

    def test_pair_concurrence(self):
        assert pair_concurrence("W3", 0.0, 0.0, "23") == pytest.approx(1.0, abs=1e-10)


class TestSweeps:
    """Tests for sweep_filter / sweep_noise_filter"""

    def test_sweep_filter_follows_grid_order(self):
        ks = [1.0, 0.0, 0.5]
        records = sweep_filter(StateName.W3, ks)
        assert [r.k for r in records] == ks

    def test_thread_pool_gives_identical_records(self):
        ks = k_grid(7)
        serial = sweep_filter(StateName.WWBAR3, ks)
        pooled = sweep_filter(StateName.WWBAR3, ks, max_workers=4)
        assert [r.to_row() for r in pooled] == [r.to_row() for r in serial]

    def test_sweep_noise_filter(self):
        times = gamma_t_grid(1.0, 4)
        records = sweep_noise_filter(StateName.W3, 0.0, times, max_workers=2)
        assert [r.gamma_t for r in records] == times
        c23 = [r.c23 for r in records]
        assert c23[0] == pytest.approx(1.0, abs=1e-10)
        assert all(a >= b for a, b in zip(c23, c23[1:]))


class TestSweepInvariants:
    """Pair symmetry and the W trade-off between pairs"""

    def test_w_trade_off_on_lower_half(self):
        """On k in [0, 1/2], c23 never rises and c12 never falls"""
        records = sweep_filter(StateName.W3, [k for k in k_grid(51) if k <= 0.5])
        c23 = [r.c23 for r in records]
        c12 = [r.c12 for r in records]
        assert all(b <= a + 1e-12 for a, b in zip(c23, c23[1:]))
        assert all(b >= a - 1e-12 for a, b in zip(c12, c12[1:]))

    @pytest.mark.parametrize("name", list(StateName))
    def test_filter_sweep_pairs_12_and_13_agree(self, name):
        for record in sweep_filter(name, [0.0, 0.2, 0.7, 1.0]):
            assert record.c12 == pytest.approx(record.c13, abs=1e-10)
            assert record.g12 == pytest.approx(record.g13, abs=1e-10)

    @pytest.mark.parametrize("name", list(StateName))
    @pytest.mark.parametrize("k", [0.0, 0.2, 0.7, 1.0])
    def test_noise_sweep_pairs_12_and_13_agree(self, name, k):
        for record in sweep_noise_filter(name, k, [0.0, 0.3, 1.1, 2.5]):
            assert record.c12 == pytest.approx(record.c13, abs=1e-10)
            assert record.g12 == pytest.approx(record.g13, abs=1e-10)


class TestOptimalFilter:
    """Tests for optimal_filter_parameters"""

    def test_w_pair_23_prefers_k0(self):
        assert optimal_filter_parameters(StateName.W3, QubitPair.P23, k_grid(11)) == [0.0]

    def test_wwbar_pair_23_ties_at_ends(self):
        assert optimal_filter_parameters(StateName.WWBAR3, "23", k_grid(11)) == [0.0, 1.0]

    def test_empty_grid(self):
        assert optimal_filter_parameters(StateName.W3, "12", []) == []
