"""Closed-form thresholds on d for the ring R(d, n) = S / I(d, n).

D_CI(n), D_prime(n) and D_UFD(n) are minima of an "even" and an "odd"
candidate, each a ceiling or floor of (a - sqrt(b)) / 2. They are evaluated
with integer square roots only.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Tuple

import networkx as nx

from errors.exceptions import DomainError, GraphFormatError
from frames.exactint import (
    ceil_half_minus_sqrt, compare_with_radical, floor_half_minus_sqrt,
    least_even_at_least, least_odd_at_least,
)
from frames.strata import FrameSpaceParams

logger = logging.getLogger(__name__)


class UfdStatus(Enum):
    YES = "Yes"
    NOT_IMPLIED = "NotImpliedByPaper"


class ReducedStatus(Enum):
    YES = "Yes"
    GENERICALLY_REDUCED_ONLY = "GenericallyReducedOnly"


@dataclass(frozen=True)
class ThresholdTriple:
    n: int
    d_ci: int
    d_prime: int
    d_ufd: int


@dataclass(frozen=True)
class PropertyReport:
    params: FrameSpaceParams
    complete_intersection: bool
    gorenstein: bool
    cohen_macaulay: bool
    equidimensional: bool
    domain: bool
    normal_domain: bool
    ufd: UfdStatus
    reduced: ReducedStatus
    justifications: Tuple[str, ...]


@dataclass(frozen=True)
class LssCertificate:
    vertex_count: int
    edge_count: int
    d: int
    radical_ci: bool
    normal_domain: bool
    ufd: bool
    minimal_d: ThresholdTriple


def _check_n(n: int):
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"thresholds need an integer n >= 2, got {n!r}")


def d_ci(n: int) -> int:
    """Least d making I(d, n) a complete intersection (for d >= 2)."""
    _check_n(n)
    even = 2 * ceil_half_minus_sqrt(2 * n + 1, 8 * n + 1)
    odd = 2 * ceil_half_minus_sqrt(2 * n - 1, 8 * n - 7) + 1
    return min(even, odd)


def d_prime(n: int) -> int:
    """Least d making I(d, n) prime."""
    _check_n(n)
    even = 2 * floor_half_minus_sqrt(2 * n + 1, 8 * n + 1) + 2
    odd = 2 * floor_half_minus_sqrt(2 * n + 1, 8 * n - 7) + 1
    return min(even, odd)


def d_ufd(n: int) -> int:
    """d >= d_ufd(n) is sufficient for R(d, n) to be factorial."""
    _check_n(n)
    if n == 2:
        return 3
    if n == 3:
        return 4
    even = 2 * ceil_half_minus_sqrt(2 * n + 1, 8 * n - 23)
    odd = 2 * ceil_half_minus_sqrt(2 * n - 1, 8 * n - 31) + 1
    value = min(even, odd)
    # the factoriality argument needs d >= n+3 except at n = 4, 6
    if n not in (4, 6):
        value = max(value, n + 3)
    return value


def threshold_triple(n: int) -> ThresholdTriple:
    return ThresholdTriple(n, d_ci(n), d_prime(n), d_ufd(n))


def threshold_table(n_from: int, n_to: int) -> List[ThresholdTriple]:
    if n_from < 2 or n_to < n_from:
        raise DomainError(f"invalid range n={n_from}..{n_to}")
    return [threshold_triple(n) for n in range(n_from, n_to + 1)]


def prime_ufd_differences(n_max: int) -> List[ThresholdTriple]:
    return [t for t in threshold_table(2, n_max) if t.d_prime != t.d_ufd]


def ci_by_parity(d: int, n: int) -> bool:
    """d >= 2n+1-sqrt(8n+1) for even d, d >= 2n-sqrt(8n-7) for odd d."""
    if d % 2 == 0:
        return compare_with_radical(d, 2 * n + 1, 8 * n + 1) >= 0
    return compare_with_radical(d, 2 * n, 8 * n - 7) >= 0


def prime_by_parity(d: int, n: int) -> bool:
    if d % 2 == 0:
        return compare_with_radical(d, 2 * n + 1, 8 * n + 1) > 0
    return compare_with_radical(d, 2 * n, 8 * n - 7) > 0


def ci_oracle(n: int) -> int:
    """min(least even >= 2n+1-sqrt(8n+1), least odd >= 2n-sqrt(8n-7))."""
    return min(least_even_at_least(2 * n + 1, 8 * n + 1), least_odd_at_least(2 * n, 8 * n - 7))


def prime_oracle(n: int) -> int:
    """min(least even > 2n+1-sqrt(8n+1), least odd > 2n-sqrt(8n-7))."""
    return min(
        least_even_at_least(2 * n + 1, 8 * n + 1, strict=True),
        least_odd_at_least(2 * n, 8 * n - 7, strict=True),
    )


def parity_equivalence_check(n: int, d_max: int) -> bool:
    """Closed forms agree with the parity-split comparisons for every 2 <= d <= d_max."""
    _check_n(n)
    if d_max < 2:
        raise DomainError(f"d_max must be at least 2, got {d_max}")
    ci, prime = d_ci(n), d_prime(n)
    for d in range(2, d_max + 1):
        if (d >= ci) != ci_by_parity(d, n):
            logger.debug(f"complete intersection threshold mismatch at (d,n)=({d},{n})")
            return False
        if (d >= prime) != prime_by_parity(d, n):
            logger.debug(f"prime threshold mismatch at (d,n)=({d},{n})")
            return False
    return True


def classify_ring(params: FrameSpaceParams) -> PropertyReport:
    d, n = params.d, params.n
    ci_bound, prime_bound, ufd_bound = d_ci(n), d_prime(n), d_ufd(n)
    notes = []

    if d == 1:
        # I(1, n) is the edge ideal of K_n: n coordinate lines through the origin
        ci = n <= 2
        gorenstein = ci
        cohen_macaulay = equidimensional = True
        reduced = ReducedStatus.YES
        notes.append("d=1: monomial ideal of n isolated vertices, radical and Cohen-Macaulay")
        notes.append(f"d=1: Gorenstein iff n <= 2 (n={n})")
    else:
        ci = d >= ci_bound
        gorenstein = cohen_macaulay = equidimensional = ci
        reduced = ReducedStatus.YES if ci else ReducedStatus.GENERICALLY_REDUCED_ONLY
        relation = ">=" if ci else "<"
        notes.append(f"CI/Gorenstein/CM/equidimensional: d={d} {relation} D_CI({n})={ci_bound}")
        if ci:
            notes.append("reduced: complete intersection and generically reduced")
        else:
            notes.append("reduced: generically reduced only, radicality not decided")

    domain = d >= prime_bound
    relation = ">=" if domain else "<"
    notes.append(f"domain/normal: d={d} {relation} D_prime({n})={prime_bound}")

    if d >= ufd_bound:
        ufd = UfdStatus.YES
        notes.append(f"UFD: d={d} >= D_UFD({n})={ufd_bound}")
    else:
        ufd = UfdStatus.NOT_IMPLIED
        notes.append(f"UFD: not implied, d={d} < D_UFD({n})={ufd_bound}")

    return PropertyReport(
        params=params,
        complete_intersection=ci,
        gorenstein=gorenstein,
        cohen_macaulay=cohen_macaulay,
        equidimensional=equidimensional,
        domain=domain,
        normal_domain=domain,
        ufd=ufd,
        reduced=reduced,
        justifications=tuple(notes),
    )


def build_graph(vertex_count: int, edges: Iterable[Tuple[int, int]]) -> nx.Graph:
    if vertex_count < 2:
        raise GraphFormatError(f"need at least 2 vertices, got {vertex_count}")
    graph = nx.Graph()
    graph.add_nodes_from(range(1, vertex_count + 1))
    for u, v in edges:
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        for w in (u, v):
            if not 1 <= w <= vertex_count:
                raise GraphFormatError(f"vertex {w} outside 1..{vertex_count}")
        graph.add_edge(u, v)
    return graph


def certify_lss(vertex_count: int, edges: Iterable[Tuple[int, int]], d: int) -> LssCertificate:
    """Sufficient conditions for LSS(d, G); only the number of vertices matters."""
    if not isinstance(d, int) or d < 1:
        raise DomainError(f"d must be a positive integer, got {d!r}")
    graph = build_graph(vertex_count, edges)
    triple = threshold_triple(vertex_count)
    return LssCertificate(
        vertex_count=vertex_count,
        edge_count=graph.number_of_edges(),
        d=d,
        radical_ci=d >= triple.d_ci,
        normal_domain=d >= triple.d_prime,
        ufd=d >= triple.d_ufd,
        minimal_d=triple,
    )
