"""Theorem checkers: worked examples plus the exhaustive-truth sweeps."""

import math

import numpy as np
import pytest

from spectral_turan import (
    SuiteConfig,
    build_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    join,
    path_graph,
    run_suite,
    spectral_radius,
    turan_graph,
    verify_clique_bound,
    verify_coronal_bound,
    verify_edge_to_spectral,
    verify_family_join_equality,
    verify_family_local,
    verify_guiduli,
    verify_join_preservation,
    verify_kfold_join,
    verify_rayleigh_identity,
    verify_regular_join_monotonicity,
    verify_spectral_turan,
    verify_turan_quotient,
)
from spectral_turan.harness import SplitMix64, random_graph
from spectral_turan.verifiers import complement_profile


def prism():
    return build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])


def test_spectral_turan_branches():
    v = verify_spectral_turan(cycle_graph(5), 2)
    assert v.holds and v.branch == "strict" and v.category == "holds"
    v = verify_spectral_turan(turan_graph(7, 3), 3)
    assert v.holds and v.branch == "equality-isomorphic"
    v = verify_spectral_turan(complete_graph(4), 2)
    assert v.branch == "not-applicable" and v.category == "vacuous"
    with pytest.raises(ValueError):
        verify_spectral_turan(cycle_graph(5), 1)


def test_edge_to_spectral_branches():
    v = verify_edge_to_spectral(prism(), 2)
    assert v.holds and v.branch == "equality-family" and "family" in v.witnesses
    assert v.residuals["S_minus_1"] >= -1e-9
    assert v.residuals["rayleigh_minus_lambda0"] >= -1e-8
    v = verify_edge_to_spectral(complete_graph(5), 2)
    assert v.holds and v.branch == "strict"
    v = verify_edge_to_spectral(empty_graph(3), 2)
    assert v.category == "vacuous"
    # n=2, r=2: e = e0 = 1, so this is the equality branch and K2 = T_2(2)
    v = verify_edge_to_spectral(complete_graph(2), 2)
    assert v.holds and v.branch == "equality-family"


def test_rayleigh_identity():
    v = verify_rayleigh_identity(turan_graph(4, 2), 2)
    assert v.holds and v.residuals["identity_error"] <= 1e-12
    v = verify_rayleigh_identity(path_graph(3), 2)
    assert v.holds and v.residuals["identity_error"] <= 1e-12
    rng = SplitMix64(3)
    for _ in range(100):
        g = random_graph("gnp:0.5", 7, rng.next_u64())
        v = verify_rayleigh_identity(g, 3)
        assert v.holds


def test_guiduli_branches():
    v = verify_guiduli(complete_graph(4), 2)
    assert v.holds and v.branch == "dense-neighborhood-witness"
    assert v.residuals["min_argmax_margin"] > 1e-8  # every max-weight vertex works
    v = verify_guiduli(prism(), 2)
    assert v.holds and v.branch == "dense-neighborhood-witness"
    v = verify_guiduli(turan_graph(6, 2), 2)
    assert v.holds and v.branch == "isomorphic-to-extremal"
    v = verify_guiduli(empty_graph(4), 2)
    assert v.category == "vacuous"


def test_guiduli_disconnected_strict():
    g = join(complete_graph(5), empty_graph(0))  # K5 alone
    g = build_graph(7, list(complete_graph(5).edges()))  # K5 plus two isolated vertices
    v = verify_guiduli(g, 2)
    assert v.holds and v.branch == "dense-neighborhood-witness"
    assert set(v.witnesses["argmax_vertices"]) <= set(range(5))


def test_join_preservation_branches():
    v = verify_join_preservation(complete_graph(4), 2, 1)
    assert v.holds and "2" in v.branch
    assert v.residuals["root_vs_eigensolve"] <= 1e-8
    ctx = v.witnesses["context"]
    assert ctx.rho == pytest.approx(4.0, abs=1e-9)  # the join is K5
    assert ctx.mu == pytest.approx(1 + math.sqrt(5), abs=1e-9)
    v = verify_join_preservation(prism(), 2, 2)
    assert v.holds and "1" in v.branch and "3" in v.branch
    assert abs(v.residuals["rho_minus_mu"]) <= 1e-8
    v = verify_join_preservation(path_graph(4), 2, 1)
    assert v.category == "vacuous"
    # degenerate r = 1: the extremal graph is edgeless
    v = verify_join_preservation(empty_graph(4), 1, 2)
    assert v.holds and "1" in v.branch


def test_family_join_equality():
    v = verify_family_join_equality(prism(), 2, 1)
    assert v.holds
    assert np.array_equal(v.witnesses["quotient"], [[3, 1], [6, 0]])
    # lambda of the join solves x^2 - 3x - 6 = 0
    expected = (3 + math.sqrt(33)) / 2
    g = join(empty_graph(1), prism())
    assert spectral_radius(g) == pytest.approx(expected, abs=1e-9)
    v = verify_family_join_equality(turan_graph(5, 2), 2, 2)
    assert v.holds
    pk2 = join(prism(), empty_graph(2))
    v = verify_family_join_equality(pk2, 3, 1)
    assert v.holds
    assert np.array_equal(v.witnesses["quotient"], [[3, 2, 1], [6, 0, 1], [6, 2, 0]])
    with pytest.raises(ValueError):
        verify_family_join_equality(path_graph(4), 2, 1)


def test_family_local():
    v = verify_family_local(prism(), 2)
    assert v.holds and v.residuals["edge_surplus"] >= 1
    pk2 = join(prism(), empty_graph(2))
    v = verify_family_local(pk2, 3)
    assert v.holds
    with pytest.raises(ValueError):
        verify_family_local(turan_graph(6, 2), 2)  # extremal graph itself
    with pytest.raises(ValueError):
        verify_family_local(path_graph(4), 2)  # not in the family


def test_coronal_bound():
    v = verify_coronal_bound(complete_graph(2), 2.0)
    assert v.holds and v.residuals["bound_minus_chi"] == pytest.approx(0.0, abs=1e-9)
    v = verify_coronal_bound(path_graph(4), 2.0)
    assert v.holds and 0.1 < v.residuals["bound_minus_chi"] < 0.2
    v = verify_coronal_bound(empty_graph(3), 1.0)
    assert v.holds and v.residuals["bound_minus_chi"] == pytest.approx(0.0, abs=1e-9)
    with pytest.raises(ValueError):
        verify_coronal_bound(complete_graph(3), 2.0)


def test_turan_quotient():
    assert verify_turan_quotient(6, 2, 1).holds
    assert verify_turan_quotient(7, 3, 2).holds
    v = verify_turan_quotient(4, 1, 1)
    assert v.holds and v.residuals["margin"] > 0


def test_clique_bound():
    for n in (2, 3, 5, 8):
        v = verify_clique_bound(complete_graph(n))
        assert v.holds and v.residuals["omega_minus_bound"] == pytest.approx(0.0, abs=1e-9)
    v = verify_clique_bound(cycle_graph(5))
    bound = 2 - v.residuals["omega_minus_bound"]
    assert v.holds and bound == pytest.approx(1.921, abs=1e-3)
    v = verify_clique_bound(empty_graph(4))
    assert v.category == "degenerate" and v.holds


def test_kfold_join():
    v = verify_kfold_join(complete_graph(2), 2)
    assert v.holds and v.category == "degenerate"  # complete input
    v = verify_kfold_join(empty_graph(2), 2)  # the join is C4
    assert v.holds and v.residuals["weyl_slack"] == pytest.approx(0.0, abs=1e-9)
    assert v.residuals["omega_minus_bound"] == pytest.approx(0.0, abs=1e-9)
    v = verify_kfold_join(cycle_graph(5), 3)
    assert v.holds
    with pytest.raises(ValueError):
        verify_kfold_join(cycle_graph(5), 1)
    with pytest.raises(ValueError):
        verify_kfold_join(complete_graph(60), 6)


def test_regular_join_monotonicity():
    v = verify_regular_join_monotonicity(cycle_graph(5), path_graph(5), 1)
    assert v.holds and v.residuals["join_gap"] > 0.2
    g = prism()
    v = verify_regular_join_monotonicity(g, g, 2)
    assert v.holds and v.residuals["join_gap"] == 0
    v = verify_regular_join_monotonicity(turan_graph(6, 2), prism(), 2)
    assert v.holds and v.residuals["join_gap"] == pytest.approx(0.0, abs=1e-9)
    v = verify_regular_join_monotonicity(empty_graph(4), complete_graph(4), 1)
    assert v.category == "vacuous"
    with pytest.raises(ValueError):
        verify_regular_join_monotonicity(path_graph(4), path_graph(4), 1)
    with pytest.raises(ValueError):
        verify_regular_join_monotonicity(cycle_graph(4), path_graph(5), 1)


def test_complement_profile_total_behaves():
    # S >= 1 exactly when the edge count reaches the extremal count
    from spectral_turan import turan_params

    params = turan_params(6, 2)
    rng = SplitMix64(12)
    for _ in range(200):
        g = random_graph("gnp:0.6", 6, rng.next_u64())
        profile = complement_profile(g, params.lam0)
        if g.edge_count >= params.e0:
            assert profile.total >= 1 - 1e-9


def test_exhaustive_truth_all_verifiers_small():
    # every checker, every graph on up to 5 vertices: holds or vacuous only
    config = SuiteConfig(
        theorems=("all",),
        mode="exhaustive",
        n=5,
        r_values=(1, 2, 3),
        s_values=(1, 2),
        k_values=(2, 3),
    )
    report = run_suite(config)
    assert report.violation_count == 0
    for res in report.results:
        assert res.instances == res.holds + res.vacuous + res.degenerate + len(res.violations)


def test_exhaustive_truth_all_verifiers_n6():
    # the full checker battery over all 2^15 graphs on 6 vertices
    config = SuiteConfig(
        theorems=("all",),
        mode="exhaustive",
        n=6,
        r_values=(2, 3, 4),
        s_values=(1, 2),
        k_values=(2, 3),
        workers=4,
    )
    report = run_suite(config)
    assert report.violation_count == 0
    assert len(report.results) == 12
    for res in report.results:
        assert res.instances == res.holds + res.vacuous + res.degenerate + len(res.violations)
        assert res.instances > 0
