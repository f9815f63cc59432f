"""Extremal-graph parameters, family enumeration, and membership."""

import itertools
import math

import numpy as np
import pytest

from spectral_turan import (
    build_graph,
    complete_graph,
    convexity_oracle,
    cycle_graph,
    edge_mask,
    empty_graph,
    enumerate_family,
    enumerate_regular,
    family_membership,
    is_isomorphic,
    path_graph,
    secular_radius,
    spectral_radius,
    turan_graph,
    turan_params,
)
from spectral_turan.families import TuranParamError, turan_edges, turan_radius
from spectral_turan.harness import SplitMix64, enumerate_labeled_graphs, random_graph


def prism():
    return build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])


def test_turan_params_examples():
    tp = turan_params(7, 3)
    assert (tp.a, tp.b, tp.p, tp.q, tp.m0, tp.e0) == (2, 1, 3, 4, 5, 16)
    assert tp.lam0 == pytest.approx(1 + math.sqrt(13), abs=1e-12)
    tp = turan_params(4, 2)
    assert (tp.b, tp.e0) == (0, 4) and tp.lam0 == 2
    tp = turan_params(5, 2)
    assert (tp.L, tp.M, tp.e0) == (0, 6, 6)
    assert tp.lam0 == pytest.approx(math.sqrt(6), abs=1e-12)


def test_turan_params_degenerate_r1():
    tp = turan_params(5, 1)
    assert tp.lam0 == 0 and tp.e0 == 0 and tp.b == 0
    assert turan_graph(5, 1) == empty_graph(5)


def test_turan_params_errors():
    with pytest.raises(TuranParamError):
        turan_params(3, 4)
    with pytest.raises(TuranParamError):
        turan_params(5, 0)


def test_turan_params_internal_consistency_wide():
    # every construction revalidates the three edge formulas and the
    # quadratic/secular identities; run the whole desk-scale range
    for n in range(1, 201):
        for r in range(1, n + 1):
            turan_params(n, r)


def test_turan_graph_examples():
    t73 = turan_graph(7, 3)
    assert sorted(t73.degree(v) for v in range(7)) == [4, 4, 4, 5, 5, 5, 5]
    assert t73.edge_count == turan_params(7, 3).e0
    assert is_isomorphic(turan_graph(6, 2), build_graph(6, [(a, b) for a in range(3) for b in range(3, 6)]))
    assert turan_graph(5, 1) == empty_graph(5)
    assert turan_graph(4, 4) == complete_graph(4)
    with pytest.raises(TuranParamError):
        turan_graph(3, 4)


def test_turan_graph_matches_lam0():
    for n, r in [(7, 2), (8, 3), (9, 4), (10, 2), (12, 5), (6, 6)]:
        assert spectral_radius(turan_graph(n, r)) == pytest.approx(turan_params(n, r).lam0, abs=1e-8)


def test_turan_radius_capped_conventions():
    assert turan_radius(0, 3) == 0.0
    # fewer vertices than parts caps at the complete graph
    assert turan_radius(2, 5) == pytest.approx(1.0, abs=1e-12)
    assert turan_edges(2, 5) == 1
    assert turan_edges(0, 2) == 0


def test_secular_radius_examples():
    assert secular_radius((3, 3)) == pytest.approx(3.0, abs=1e-9)
    assert secular_radius((2, 3)) == pytest.approx(math.sqrt(6), abs=1e-9)
    assert secular_radius((4,)) == pytest.approx(0.0, abs=1e-9)
    with pytest.raises(ValueError):
        secular_radius(())


def test_secular_radius_matches_eigensolve():
    rng = SplitMix64(19)
    for _ in range(40):
        sizes = tuple(1 + rng.below(4) for _ in range(1 + rng.below(4)))
        parts = []
        start = 0
        edges = []
        for size in sizes:
            parts.append(range(start, start + size))
            start += size
        for pa, pb in itertools.combinations(parts, 2):
            edges.extend((u, v) for u in pa for v in pb)
        g = build_graph(start, edges)
        assert secular_radius(sizes) == pytest.approx(spectral_radius(g), abs=1e-8)


def _bruteforce_regular(n, d):
    return [g for g in enumerate_labeled_graphs(n) if all(g.degree(v) == d for v in range(n))]


def test_enumerate_regular_counts():
    assert len(list(enumerate_regular(3, 2))) == 1
    assert len(list(enumerate_regular(4, 2))) == len(_bruteforce_regular(4, 2)) == 3
    assert len(list(enumerate_regular(5, 2))) == len(_bruteforce_regular(5, 2))
    assert list(enumerate_regular(5, 3)) == []  # odd parity
    for n in range(1, 6):
        for d in range(n):
            got = {edge_mask(g) for g in enumerate_regular(n, d)}
            want = {edge_mask(g) for g in _bruteforce_regular(n, d)}
            assert got == want


def test_enumerate_regular_classes():
    classes = list(enumerate_regular(6, 3, distinct=True))
    assert len(classes) == 2
    names = {is_isomorphic(g, turan_graph(6, 2)) for g in classes}
    assert names == {True, False}  # K_{3,3} and the prism


def test_enumerate_regular_errors():
    with pytest.raises(ValueError):
        list(enumerate_regular(13, 2))
    with pytest.raises(ValueError):
        list(enumerate_regular(4, 4))


def test_enumerate_family_examples():
    labeled = list(enumerate_family(4, 2))
    assert len(labeled) == 3 and all(is_isomorphic(g, cycle_graph(4)) for g in labeled)
    classes = list(enumerate_family(6, 2, distinct=True))
    assert len(classes) == 2
    assert {is_isomorphic(g, turan_graph(6, 2)) for g in classes} == {True, False}
    classes83 = list(enumerate_family(8, 3, distinct=True))
    assert len(classes83) == 2
    assert {is_isomorphic(g, turan_graph(8, 3)) for g in classes83} == {True, False}


def test_enumerate_family_matches_membership_scan():
    for n, r in [(4, 2), (5, 2), (6, 2), (5, 3), (6, 3), (6, 4), (7, 4)]:
        enumerated = {edge_mask(g) for g in enumerate_family(n, r)}
        scanned = {edge_mask(g) for g in enumerate_labeled_graphs(n) if family_membership(g, r)}
        assert enumerated == scanned


def test_family_members_hit_the_extremal_invariants():
    for n, r in [(5, 2), (6, 2), (7, 2), (7, 3), (7, 4), (6, 3), (8, 3), (8, 4)]:
        params = turan_params(n, r)
        members = list(enumerate_family(n, r))
        assert members
        for g in members:
            assert g.edge_count == params.e0
            assert spectral_radius(g) == pytest.approx(params.lam0, abs=1e-8)
            assert family_membership(g, r) is not None


def test_family_two_level_eigenvector():
    # the two-valued vector built from the partition is an exact eigenvector
    for n, r in [(5, 2), (7, 2), (7, 3), (7, 4), (8, 3)]:
        params = turan_params(n, r)
        if params.b == 0:
            continue
        for g in itertools.islice(enumerate_family(n, r), 50):
            w = family_membership(g, r)
            z = np.zeros(n)
            for v in w.x_vertices:
                z[v] = 1.0 / (params.lam0 + params.a + 1)
            for v in w.y_vertices:
                z[v] = 1.0 / (params.lam0 + params.a)
            assert float(np.max(np.abs(g.adjacency_matrix() @ z - params.lam0 * z))) <= 1e-9


def test_family_membership_examples():
    w = family_membership(prism(), 2)
    assert w is not None and w.x_vertices == () and w.y_inner_degree == 3
    w = family_membership(turan_graph(5, 2), 2)
    assert w is not None and len(w.x_vertices) == 3 and len(w.y_vertices) == 2
    assert family_membership(path_graph(4), 2) is None
    assert family_membership(empty_graph(4), 1) is not None
    assert family_membership(path_graph(4), 1) is None
    with pytest.raises(ValueError):
        family_membership(path_graph(3), 4)


def test_convexity_oracle_examples():
    res = convexity_oracle(4, 2.0, 4)
    assert res.value == pytest.approx(1.0, abs=1e-12)
    assert res.argmin == (1, 1, 1, 1) and res.tie_count == 1
    res = convexity_oracle(5, math.sqrt(6), 8)
    assert res.value == pytest.approx(1.0, abs=1e-9)
    assert res.argmin == (1, 1, 2, 2, 2) and res.tie_count == 1
    res = convexity_oracle(6, 2.5, 0)
    assert res.argmin == (0,) * 6
    assert res.value == pytest.approx(6 / 3.5, abs=1e-12)


def test_random_regular_model_degrees():
    rng = SplitMix64(9)
    for _ in range(40):
        n = 3 + rng.below(8)
        d = rng.below(n)
        if (n * d) % 2:
            continue
        g = random_graph(f"reg:{d}", n, rng.next_u64())
        assert all(g.degree(v) == d for v in range(n))
