from math import comb

import networkx as nx
import pytest

from errors.exceptions import DomainError
from frames.strata import (
    FrameSpaceParams, Relation, SegmentKind, StratumIndex, ThresholdCase,
    boundary, boundary_points, component_count, component_report, endpoints,
    enumerate_domain, locus_dimensions, maximal_strata, maximize_sigma,
    poset_compare, poset_graph, raw_sigma, segment_of, sigma, sigma_difference_p,
    sigma_difference_q, stratum_table,
)
from frames.thresholds import classify_ring


def S(p, q):
    return StratumIndex(p, q)


@pytest.mark.parametrize("d, n", [(0, 3), (3, 1), (-1, 2), (2.0, 3)])
def test_params_rejects_invalid(d, n):
    with pytest.raises(DomainError):
        FrameSpaceParams(d, n)


def test_domain_of_small_case():
    params = FrameSpaceParams(4, 3)
    points = enumerate_domain(params)
    assert points == [S(0, 0), S(0, 1), S(0, 2), S(1, 0), S(1, 1), S(2, 0), S(2, 1), S(3, 0)]


def test_domain_when_d_is_one():
    assert enumerate_domain(FrameSpaceParams(1, 2)) == [S(0, 0), S(1, 0)]


@pytest.mark.parametrize("d, n, s, value", [
    (16, 8, (8, 0), 100),
    (20, 16, (16, 0), 200),
    (10, 9, (9, 0), 54),
    (10, 9, (0, 5), 55),
    (6, 6, (6, 0), 21),
    (6, 6, (0, 3), 21),
    (4, 3, (2, 0), 7),
])
def test_sigma_regressions(d, n, s, value):
    assert sigma(FrameSpaceParams(d, n), S(*s)) == value


def test_principal_value_outside_domain():
    # (16, 0) is not a stratum of V(12, 16), but nd - C(n,2) still evaluates to 72
    params = FrameSpaceParams(12, 16)
    assert raw_sigma(12, 16, 16, 0) == 72 == params.expected_dimension
    with pytest.raises(DomainError):
        sigma(params, S(16, 0))


def test_sigma_of_principal_stratum_is_expected_dimension():
    for n in range(2, 15):
        for d in range(n, 30):
            params = FrameSpaceParams(d, n)
            assert sigma(params, S(n, 0)) == params.expected_dimension


def test_first_differences_on_grid():
    for n in range(2, 41):
        for d in range(1, 81):
            params = FrameSpaceParams(d, n)
            for s in enumerate_domain(params):
                if s.p > 0:
                    assert sigma(params, s) - sigma(params, S(s.p - 1, s.q)) == sigma_difference_p(params, s)
                    assert sigma_difference_p(params, s) >= 1
                if s.q > 0:
                    assert sigma(params, s) - sigma(params, S(s.p, s.q - 1)) == sigma_difference_q(params, s)
                    assert sigma_difference_q(params, s) >= 1


def test_boundary_restrictions_on_grid():
    """sigma drops by one per step along Omega1; along Omega2 it never decreases,
    and strictly increases once q >= d - n + 2."""
    for n in range(2, 41):
        for d in range(1, 81):
            params = FrameSpaceParams(d, n)
            omega1, omega2 = boundary(params)
            values1 = [sigma(params, s) for s in omega1]
            assert all(a - b == 1 for a, b in zip(values1, values1[1:]))
            points2 = list(omega2)
            for s, t in zip(points2, points2[1:]):
                assert sigma(params, t) >= sigma(params, s)
                if s.q >= d - n + 2:
                    assert sigma(params, t) > sigma(params, s)


def test_boundary_closed_forms_on_grid():
    for n in range(2, 21):
        for d in range(1, 41):
            params = FrameSpaceParams(d, n)
            omega1, omega2 = boundary(params)
            for s in omega1:
                assert s.p == n - s.q
                assert sigma(params, s) == d * n + (n - n * n) // 2 - s.q
            for s in omega2:
                assert s.p == d - 2 * s.q
                # 2 sigma(d-2q, q) = q^2 + (2n - 2d - 3) q + d^2 + d
                assert 2 * sigma(params, s) == s.q ** 2 + (2 * n - 2 * d - 3) * s.q + d * d + d
            values2 = {s.q: sigma(params, s) for s in omega2}
            if d - n + 1 in values2 and d - n + 2 in values2:
                assert values2[d - n + 1] == values2[d - n + 2]


def test_boundary_segments():
    omega1, omega2 = boundary(FrameSpaceParams(4, 3))
    assert omega1.kind is SegmentKind.OMEGA1
    assert list(omega1) == [S(3, 0), S(2, 1)]
    assert list(omega2) == [S(0, 2)]
    assert segment_of(FrameSpaceParams(4, 3), S(1, 1)) is None


def test_omega1_empty_below_n():
    omega1, omega2 = boundary(FrameSpaceParams(3, 4))
    assert len(omega1) == 0
    assert list(omega2) == [S(3, 0), S(1, 1)]


def test_boundary_points_are_componentwise_maximal():
    for n in range(2, 12):
        for d in range(1, 20):
            params = FrameSpaceParams(d, n)
            points = set(enumerate_domain(params))
            expected = {
                s for s in points
                if not any(t != s and s.leq(t) for t in points)
            }
            assert set(boundary_points(params)) == expected


def test_endpoints():
    assert endpoints(FrameSpaceParams(10, 9)) == (S(9, 0), S(0, 5))
    assert endpoints(FrameSpaceParams(7, 9)) == (S(7, 0), S(1, 3))


def test_maximize_sigma_exhaustive_grid():
    ties = set()
    for n in range(2, 41):
        for d in range(1, 81):
            params = FrameSpaceParams(d, n)
            report = maximize_sigma(params, exhaustive=True)
            assert report.argmax <= {report.p1, report.p2}
            if report.case is ThresholdCase.EQUAL:
                ties.add((d, n))
    assert {(1, 2), (2, 3), (3, 4), (6, 6), (7, 7), (12, 10)} <= ties
    # on the tie locus one of the two radicals is an exact square
    for d, n in ties:
        assert (8 * n + 1 if d % 2 == 0 else 8 * n - 7) in {k * k for k in range(1, 40)}


@pytest.mark.parametrize("d, n, case", [
    (16, 8, ThresholdCase.ABOVE),
    (10, 9, ThresholdCase.BELOW),
    (6, 6, ThresholdCase.EQUAL),
])
def test_threshold_case(d, n, case):
    assert maximize_sigma(FrameSpaceParams(d, n)).case is case


def test_components_10_9():
    report = component_report(FrameSpaceParams(10, 9))
    assert [(r.stratum, r.dimension) for r in report.components] == [(S(9, 0), 54), (S(0, 5), 55)]
    assert report.variety_dimension == 55
    assert not report.is_irreducible


def test_components_6_6():
    report = component_report(FrameSpaceParams(6, 6))
    assert {r.stratum: (r.dimension, r.count) for r in report.components} == {
        S(6, 0): (21, 1),
        S(0, 3): (21, 2),
    }
    assert report.total_count == 3


def test_components_16_8_irreducible():
    report = component_report(FrameSpaceParams(16, 8))
    assert report.is_irreducible
    assert report.variety_dimension == 100
    assert report.principal_dimension == 100


def test_single_maximal_for_d_one():
    assert maximal_strata(FrameSpaceParams(1, 2)) == [S(1, 0)]


def test_maximal_strata_3_4():
    assert maximal_strata(FrameSpaceParams(3, 4)) == [S(3, 0), S(1, 1)]


@pytest.mark.parametrize("d, n, s, count", [
    (6, 6, (6, 0), 1),
    (6, 6, (0, 3), 2),
    (5, 4, (1, 2), 8),
    (4, 3, (1, 1), 3),
])
def test_component_count(d, n, s, count):
    assert component_count(FrameSpaceParams(d, n), S(*s)) == count


def test_ring_bits_match_components():
    for n in range(2, 41):
        for d in range(1, 81):
            params = FrameSpaceParams(d, n)
            report = component_report(params)
            ring = classify_ring(params)
            assert ring.complete_intersection == (report.variety_dimension == params.expected_dimension)
            assert ring.domain == (report.is_irreducible and d >= n)


def test_poset_rules():
    params = FrameSpaceParams(10, 9)
    assert poset_compare(params, S(3, 2), S(3, 2)).relation is Relation.BELOW
    assert poset_compare(params, S(1, 1), S(3, 2)).relation is Relation.BELOW
    assert poset_compare(params, S(3, 2), S(1, 1)).relation is Relation.NOT_BELOW
    # maximal strata sit below nothing
    assert poset_compare(params, S(0, 5), S(9, 0)).relation is Relation.NOT_BELOW
    verdict = poset_compare(params, S(6, 2), S(9, 0))
    assert verdict.relation is Relation.BELOW
    assert "dichotomy" in verdict.reason


def test_maximal_strata_pairwise_not_below_on_grid():
    for n in range(2, 21):
        for d in range(1, 41):
            params = FrameSpaceParams(d, n)
            maximal = maximal_strata(params)
            for a in maximal:
                for b in maximal:
                    if a != b:
                        assert poset_compare(params, a, b).relation is Relation.NOT_BELOW


def test_non_maximal_boundary_points_lie_below_principal_on_grid():
    for n in range(2, 21):
        for d in range(n, 41):
            params = FrameSpaceParams(d, n)
            maximal = set(maximal_strata(params))
            for s in boundary_points(params):
                if s not in maximal:
                    assert poset_compare(params, s, S(n, 0)).relation is Relation.BELOW


def test_poset_compare_rejects_outside_domain():
    with pytest.raises(DomainError):
        poset_compare(FrameSpaceParams(4, 3), S(4, 0), S(3, 0))


def test_poset_graph():
    params = FrameSpaceParams(3, 4)
    graph = poset_graph(params)
    assert set(graph.maximal) == {S(3, 0), S(1, 1)}
    assert nx.is_directed_acyclic_graph(graph.below)
    assert all(a != b for a, b in graph.hasse.edges)
    for a, b in graph.below.edges:
        assert sigma(params, a) < sigma(params, b)
    # maximal strata have no outgoing relation
    for s in graph.maximal:
        assert graph.below.out_degree(s) == 0


def test_poset_graph_16_8_is_componentwise_chain():
    graph = poset_graph(FrameSpaceParams(16, 8))
    assert graph.maximal == [S(8, 0)]
    for s in enumerate_domain(FrameSpaceParams(16, 8)):
        if s != S(8, 0):
            assert nx.has_path(graph.below, s, S(8, 0))


def test_stratum_table():
    rows = stratum_table(FrameSpaceParams(4, 3))
    assert len(rows) == 8
    by_stratum = {row.stratum: row for row in rows}
    assert by_stratum[S(3, 0)].maximal
    assert by_stratum[S(3, 0)].codimension == 12 - 9
    assert by_stratum[S(0, 2)].segment is SegmentKind.OMEGA2
    assert by_stratum[S(1, 1)].segment is None


def test_locus_dimensions():
    loci = locus_dimensions(FrameSpaceParams(6, 6))
    assert loci.anisotropic == 21 and loci.isotropic == 21
    assert loci.anisotropic_is_component and loci.isotropic_is_component
    odd = locus_dimensions(FrameSpaceParams(5, 6))
    assert odd.anisotropic is None and odd.isotropic is None


def test_generators():
    params = FrameSpaceParams(5, 7)
    assert params.generators == comb(7, 2)
    assert params.ambient_dimension == 35
