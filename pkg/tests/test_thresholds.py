import pytest
import sympy

from errors.exceptions import DomainError, GraphFormatError
from frames.exactint import (
    ceil_half_minus_sqrt, compare_with_radical, floor_half_minus_sqrt,
    least_even_at_least, least_odd_at_least,
)
from frames.strata import FrameSpaceParams
from frames.thresholds import (
    ReducedStatus, UfdStatus, build_graph, certify_lss, ci_oracle, classify_ring,
    d_ci, d_prime, d_ufd, parity_equivalence_check, prime_oracle,
    prime_ufd_differences, threshold_table, threshold_triple,
)


@pytest.mark.parametrize("a, b", [(7, 25), (5, 17), (13, 41), (9, 9), (3, 0), (0, 5), (2, 16)])
def test_half_sqrt_rounding_matches_sympy(a, b):
    exact = (a - sympy.sqrt(b)) / 2
    assert floor_half_minus_sqrt(a, b) == sympy.floor(exact)
    assert ceil_half_minus_sqrt(a, b) == sympy.ceiling(exact)


def test_compare_with_radical_ties():
    # 7 - sqrt(25) == 2
    assert compare_with_radical(2, 7, 25) == 0
    assert compare_with_radical(3, 7, 25) == 1
    assert compare_with_radical(1, 7, 25) == -1
    assert compare_with_radical(1, 5, 17) == 1
    with pytest.raises(ValueError):
        compare_with_radical(0, 1, -1)


def test_least_parity_helpers():
    # 7 - sqrt(25) == 2
    assert least_even_at_least(7, 25) == 2
    assert least_even_at_least(7, 25, strict=True) == 4
    assert least_odd_at_least(7, 25) == 3
    assert least_odd_at_least(7, 25, strict=True) == 3


@pytest.mark.parametrize("n, ci, prime, ufd", [
    (2, 1, 2, 3),
    (3, 2, 3, 4),
    (4, 3, 4, 6),
    (5, 5, 5, 8),
    (6, 6, 7, 8),
    (7, 7, 8, 10),
    (8, 9, 9, 11),
    (9, 11, 11, 12),
])
def test_threshold_golden_values(n, ci, prime, ufd):
    triple = threshold_triple(n)
    assert (triple.d_ci, triple.d_prime, triple.d_ufd) == (ci, prime, ufd)
    assert (d_ci(n), d_prime(n), d_ufd(n)) == (ci, prime, ufd)


@pytest.mark.parametrize("n", [1, 0, -3, 2.5])
def test_thresholds_reject_small_n(n):
    with pytest.raises(DomainError):
        d_ci(n)


def test_thresholds_are_ordered():
    for t in threshold_table(2, 10_000):
        assert t.d_ci <= t.d_prime <= t.d_ufd
        # the prime threshold trails the CI one by at most two
        assert t.d_prime - t.d_ci <= 2


def test_prime_threshold_range():
    for t in threshold_table(2, 10_000):
        assert t.n <= t.d_prime <= 2 * t.n - 2


def test_ufd_threshold_is_at_least_n_plus_two():
    for t in threshold_table(4, 10_000):
        assert t.d_ufd >= t.n + 2
        assert (t.d_ufd == t.n + 2) == (t.n in (4, 6))


@pytest.mark.parametrize("d, n, ufd", [(7, 5, UfdStatus.NOT_IMPLIED), (8, 5, UfdStatus.YES),
                                       (9, 7, UfdStatus.NOT_IMPLIED), (10, 7, UfdStatus.YES)])
def test_classify_ufd_needs_n_plus_three(d, n, ufd):
    assert classify_ring(FrameSpaceParams(d, n)).ufd is ufd


def test_threshold_table_range():
    table = threshold_table(2, 10)
    assert [t.n for t in table] == list(range(2, 11))
    with pytest.raises(DomainError):
        threshold_table(5, 4)
    with pytest.raises(DomainError):
        threshold_table(1, 4)


def test_prime_ufd_differences():
    differences = prime_ufd_differences(30)
    assert differences
    assert all(t.d_prime != t.d_ufd for t in differences)
    assert {t.n for t in differences} >= {2, 3, 4, 5, 6, 8}


def test_closed_forms_match_oracles():
    for n in range(2, 501):
        assert d_ci(n) == ci_oracle(n)
        assert d_prime(n) == prime_oracle(n)


def test_parity_equivalence_large():
    for n in range(2, 501):
        assert parity_equivalence_check(n, 1200)


def test_parity_equivalence_small():
    for n in range(2, 60):
        assert parity_equivalence_check(n, 150)
    with pytest.raises(DomainError):
        parity_equivalence_check(5, 1)


def test_classify_above_all_thresholds():
    report = classify_ring(FrameSpaceParams(4, 3))
    assert report.complete_intersection and report.gorenstein and report.cohen_macaulay
    assert report.domain and report.normal_domain
    assert report.ufd is UfdStatus.YES
    assert report.reduced is ReducedStatus.YES
    assert any("D_CI(3)=2" in note for note in report.justifications)


def test_classify_below_ci_threshold():
    report = classify_ring(FrameSpaceParams(10, 9))
    assert not report.complete_intersection
    assert not report.equidimensional
    assert not report.domain
    assert report.ufd is UfdStatus.NOT_IMPLIED
    assert report.reduced is ReducedStatus.GENERICALLY_REDUCED_ONLY


def test_classify_ci_but_not_prime():
    # D_CI(6) = 6 < D_prime(6) = 7
    report = classify_ring(FrameSpaceParams(6, 6))
    assert report.complete_intersection
    assert not report.domain
    assert report.ufd is UfdStatus.NOT_IMPLIED


def test_classify_prime_but_ufd_not_implied():
    report = classify_ring(FrameSpaceParams(7, 6))
    assert report.domain and report.normal_domain
    assert report.ufd is UfdStatus.NOT_IMPLIED


@pytest.mark.parametrize("n, ci", [(2, True), (3, False), (5, False)])
def test_classify_d_one(n, ci):
    report = classify_ring(FrameSpaceParams(1, n))
    assert report.complete_intersection is ci
    assert report.gorenstein is ci
    assert report.cohen_macaulay and report.equidimensional
    assert report.reduced is ReducedStatus.YES
    assert not report.domain


def test_classify_monotone_in_d():
    for n in range(2, 25):
        flags = [classify_ring(FrameSpaceParams(d, n)) for d in range(2, 3 * n)]
        for lower, upper in zip(flags, flags[1:]):
            assert upper.complete_intersection >= lower.complete_intersection
            assert upper.domain >= lower.domain


def test_build_graph_collapses_duplicates():
    graph = build_graph(4, [(1, 2), (2, 1), (3, 4)])
    assert graph.number_of_nodes() == 4
    assert graph.number_of_edges() == 2


@pytest.mark.parametrize("count, edges", [
    (1, []),
    (3, [(2, 2)]),
    (3, [(1, 4)]),
    (3, [(0, 1)]),
])
def test_build_graph_rejects(count, edges):
    with pytest.raises(GraphFormatError):
        build_graph(count, edges)


def test_certify_lss_triangle():
    certificate = certify_lss(3, [(1, 2), (2, 3), (1, 3)], 4)
    assert certificate.edge_count == 3
    assert certificate.radical_ci and certificate.normal_domain and certificate.ufd


def test_certify_lss_path():
    path = [(i, i + 1) for i in range(1, 6)]
    certificate = certify_lss(6, path, 7)
    assert certificate.radical_ci
    assert certificate.normal_domain
    assert not certificate.ufd
    assert certificate.minimal_d.d_ufd == 8


def test_certify_lss_single_edge_is_radical_ci():
    certificate = certify_lss(2, [(1, 2)], 1)
    assert certificate.radical_ci
    assert not certificate.normal_domain


def test_certify_lss_only_depends_on_vertices():
    sparse = certify_lss(5, [(1, 2)], 6)
    dense = certify_lss(5, [(i, j) for i in range(1, 6) for j in range(i + 1, 6)], 6)
    assert (sparse.radical_ci, sparse.normal_domain, sparse.ufd) == (dense.radical_ci, dense.normal_domain, dense.ufd)


def test_certify_lss_rejects_bad_d():
    with pytest.raises(DomainError):
        certify_lss(3, [(1, 2)], 0)
