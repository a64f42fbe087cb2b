#!/usr/bin/env python3
"""
INTEGRATION TEST - Full filter + noise pipeline against analytic results

TEST FLOW:
1. Closed-form equivalence for W (concurrence, purity) and W-W̄ (purity)
2. Endpoint states of the filtered W state
3. Unfiltered symmetric values and the GHZ null result
4. W-W̄ mirror symmetry in k
5. Channel completeness and state-property preservation
6. ESD ordering across k and pairs
7. k = 1/2 fixed point, success probability, purity of Tr_1|W><W|
8. Coarse runtime ceilings for the 101-point sweep and the ESD set

Priority: HIGH - Validates core functionality
"""

import time

import numpy as np
import pytest

from entanglement_filter.core.calculators.closed_form import (
    closed_form_w,
    closed_form_w_success_prob,
    closed_form_wwbar_purity,
)
from entanglement_filter.core.calculators.esd import esd_onset
from entanglement_filter.core.calculators.measures import concurrence, fidelity, purity
from entanglement_filter.core.calculators.sweeps import evaluate_point, k_grid, sweep_filter
from entanglement_filter.core.channels import (
    apply_filter,
    apply_noise,
    depolarizing_kraus,
    lift_kraus,
    p_of_time,
)
from entanglement_filter.core.linalg import herm_eigvals, is_hermitian, matrices_close, partial_trace
from entanglement_filter.core.models import FilterParams, NoiseParams, QubitPair, StateName
from entanglement_filter.core.states import basis_state, bell_psi_plus, build_state, density, w3

GRID = k_grid(101)

# coarse ceilings; the sweep runs well under 1 s and the ESD set under 10 s
SWEEP_SECONDS = 3.0
ESD_SET_SECONDS = 30.0


@pytest.fixture(scope="module")
def w_sweep():
    return sweep_filter(StateName.W3, GRID)


@pytest.fixture(scope="module")
def wwbar_sweep():
    return sweep_filter(StateName.WWBAR3, GRID)


class TestClosedFormEquivalence:
    """Numeric pipeline against the analytic expressions on 101 k points"""

    def test_w_concurrence_and_purity(self, w_sweep):
        for record in w_sweep:
            expected = closed_form_w(record.k)
            assert record.c12 == pytest.approx(expected.c12, abs=1e-9)
            assert record.c13 == pytest.approx(expected.c12, abs=1e-9)
            assert record.c23 == pytest.approx(expected.c23, abs=1e-9)
            assert record.g12 == pytest.approx(expected.g12, abs=1e-9)
            assert record.g13 == pytest.approx(expected.g12, abs=1e-9)
            assert record.g23 == pytest.approx(expected.g23, abs=1e-9)

    def test_wwbar_purity(self, wwbar_sweep):
        for record in wwbar_sweep:
            expected = closed_form_wwbar_purity(record.k)
            assert record.g12 == pytest.approx(expected.g12, abs=1e-9)
            assert record.g13 == pytest.approx(expected.g12, abs=1e-9)
            assert record.g23 == pytest.approx(expected.g23, abs=1e-9)


class TestFilteredEndpoints:
    """k = 0 and k = 1 leave pure subsystems"""

    def test_k0_gives_bell_pair(self, rho_w):
        filtered, _ = apply_filter(rho_w, FilterParams(k=0.0))
        pair23 = partial_trace(filtered, [2, 3])
        assert concurrence(pair23) == pytest.approx(1.0, abs=1e-10)
        assert purity(pair23) == pytest.approx(1.0, abs=1e-10)
        assert fidelity(pair23, bell_psi_plus()) >= 1.0 - 1e-10

    def test_k1_gives_product_states(self, rho_w):
        filtered, _ = apply_filter(rho_w, FilterParams(k=1.0))
        assert matrices_close(partial_trace(filtered, [2, 3]).mat, density(basis_state("00")).mat, 1e-10)
        assert matrices_close(partial_trace(filtered, [1, 3]).mat, density(basis_state("10")).mat, 1e-10)


class TestSymmetricStates:
    """Unfiltered values and the GHZ null result"""

    def test_unfiltered_pair_concurrences(self):
        w = evaluate_point(StateName.W3, 0.5)
        wwbar = evaluate_point(StateName.WWBAR3, 0.5)
        for pair in QubitPair:
            assert w.concurrence(pair) == pytest.approx(2 / 3, abs=1e-10)
            assert wwbar.concurrence(pair) == pytest.approx(1 / 3, abs=1e-10)

    def test_ghz_subsystem_purity(self, rho_ghz):
        for keep in ([1, 2], [1, 3], [2, 3]):
            assert purity(partial_trace(rho_ghz, keep)) == pytest.approx(0.5, abs=1e-10)

    def test_ghz_never_entangled_under_filtering(self):
        for record in sweep_filter(StateName.GHZ3, GRID):
            assert (record.c12, record.c13, record.c23) == (0.0, 0.0, 0.0)

    @pytest.mark.parametrize("k", [0.0, 1.0])
    def test_ghz_extreme_filter_gives_pure_subsystems(self, k):
        record = evaluate_point(StateName.GHZ3, k)
        for pair in QubitPair:
            assert record.purity(pair) == pytest.approx(1.0, abs=1e-10)


class TestWWbarSymmetry:
    """c23(k) = c23(1 - k) for the W-W̄ superposition"""

    def test_mirror_symmetry(self, wwbar_sweep):
        values = [record.c23 for record in wwbar_sweep]
        for left, right in zip(values, reversed(values)):
            assert left == pytest.approx(right, abs=1e-9)

    def test_endpoints(self, wwbar_sweep):
        assert wwbar_sweep[0].c23 == pytest.approx(2 / 3, abs=1e-9)
        assert wwbar_sweep[-1].c23 == pytest.approx(2 / 3, abs=1e-9)


class TestChannelProperties:
    """Kraus completeness and preservation of density-matrix properties"""

    @pytest.mark.parametrize("gamma_t", [0.0, 0.4, 2.5, 30.0])
    def test_lifted_completeness(self, gamma_t):
        lifted = lift_kraus(depolarizing_kraus(p_of_time(gamma_t)), 3, [2, 3])
        assert matrices_close(lifted.completeness(), np.eye(8), 1e-12)

    def test_random_states_stay_physical(self, random_density):
        noise = NoiseParams(gamma_t=1.7)
        for _ in range(100):
            out = apply_noise(random_density(3), noise)
            assert np.trace(out.mat).real == pytest.approx(1.0, abs=1e-12)
            assert is_hermitian(out.mat, 1e-12)
            assert herm_eigvals(out.mat)[-1] >= -1e-12


class TestEsdOrdering:
    """Onsets to tol 1e-6"""

    def test_w_pair23_and_pair12(self):
        k0 = esd_onset(StateName.W3, 0.0, "23")
        half = esd_onset(StateName.W3, 0.5, "23")
        high = esd_onset(StateName.W3, 0.9, "23")
        assert k0 > half > high
        assert half < esd_onset(StateName.W3, 0.5, "12")

    def test_wwbar_pair23(self):
        assert esd_onset(StateName.WWBAR3, 0.0, "23") > esd_onset(StateName.WWBAR3, 0.5, "23")


class TestFilterProbabilities:
    """No-op filter, success probability and the Tr_1|W><W| purity"""

    @pytest.mark.parametrize("name", list(StateName))
    def test_half_is_fixed_point(self, name):
        filtered = evaluate_point(name, 0.5)
        rho = density(build_state(name))
        assert filtered.success_prob == pytest.approx(0.5, abs=1e-12)
        for pair in QubitPair:
            reduced = partial_trace(rho, pair.qubits)
            assert filtered.concurrence(pair) == pytest.approx(concurrence(reduced), abs=1e-10)
            assert filtered.purity(pair) == pytest.approx(purity(reduced), abs=1e-10)

    def test_w_success_probability(self, w_sweep):
        for record in w_sweep:
            assert record.success_prob == pytest.approx(closed_form_w_success_prob(record.k), abs=1e-12)

    def test_w_success_probability_from_amplitudes(self):
        """||(F ⊗ I ⊗ I)|W>||² computed directly on amplitudes"""
        amps = w3().amplitudes
        for k in GRID:
            scaled = amps.copy()
            scaled[:4] *= np.sqrt(1.0 - k)
            scaled[4:] *= np.sqrt(k)
            assert float(np.vdot(scaled, scaled).real) == pytest.approx((2.0 - k) / 3.0, abs=1e-12)

    def test_w_pair23_purity_is_five_ninths(self, rho_w):
        """Tr_1|W><W| has purity 5/9; not 1/3"""
        value = purity(partial_trace(rho_w, [2, 3]))
        assert value == pytest.approx(5 / 9, abs=1e-12)
        assert value == pytest.approx(closed_form_w(0.5).g23, abs=1e-12)
        assert abs(value - 1 / 3) > 0.2


class TestRuntime:
    """Regression guards on solver speed"""

    def test_101_point_filter_sweep(self):
        start = time.perf_counter()
        sweep_filter(StateName.W3, GRID)
        assert time.perf_counter() - start < SWEEP_SECONDS

    def test_esd_ordering_set(self):
        start = time.perf_counter()
        for name, k, pair in [
            (StateName.W3, 0.0, "23"),
            (StateName.W3, 0.5, "23"),
            (StateName.W3, 0.9, "23"),
            (StateName.W3, 0.5, "12"),
            (StateName.WWBAR3, 0.0, "23"),
            (StateName.WWBAR3, 0.5, "23"),
        ]:
            esd_onset(name, k, pair, tol=1e-6)
        assert time.perf_counter() - start < ESD_SET_SECONDS
