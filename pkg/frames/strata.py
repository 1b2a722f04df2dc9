"""Integer combinatorics of the stratification of V(d, n).

A frame A in V(d, n) has an anisotropic rank p and an isotropic rank q; the
pairs that occur form the lattice polygon Delta(d, n) and each stratum
S_{p,q} has pure dimension sigma(p, q). Everything in this module is exact
integer arithmetic on those pairs.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from math import comb
from typing import List, Optional, Tuple

import networkx as nx
import numpy as np

from errors.exceptions import DomainError
from frames.exactint import compare_with_radical

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FrameSpaceParams:
    """The pair (d, n): n frame vectors in a d-dimensional quadratic space."""
    d: int
    n: int

    def __post_init__(self):
        if not isinstance(self.d, int) or not isinstance(self.n, int):
            raise DomainError(f"d and n must be integers, got d={self.d!r}, n={self.n!r}")
        if self.d < 1:
            raise DomainError(f"d must be at least 1, got {self.d}")
        if self.n < 2:
            raise DomainError(f"n must be at least 2, got {self.n}")

    @property
    def generators(self) -> int:
        return comb(self.n, 2)

    @property
    def ambient_dimension(self) -> int:
        return self.d * self.n

    @property
    def expected_dimension(self) -> int:
        """nd - C(n,2): the Krull lower bound for every component."""
        return self.d * self.n - comb(self.n, 2)


@dataclass(frozen=True, order=True)
class StratumIndex:
    p: int
    q: int

    def __str__(self):
        return f"({self.p},{self.q})"

    def as_tuple(self) -> Tuple[int, int]:
        return (self.p, self.q)

    def leq(self, other: "StratumIndex") -> bool:
        return self.p <= other.p and self.q <= other.q


class SegmentKind(Enum):
    OMEGA1 = "Omega1"
    OMEGA2 = "Omega2"


@dataclass(frozen=True)
class BoundarySegment:
    kind: SegmentKind
    points: Tuple[StratumIndex, ...]

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __contains__(self, s):
        return s in self.points


class ThresholdCase(Enum):
    """Where d sits relative to 2n+1-sqrt(8n+1) (d even) or 2n-sqrt(8n-7) (d odd)."""
    ABOVE = "above"
    EQUAL = "equal"
    BELOW = "below"


@dataclass(frozen=True)
class MaximumReport:
    max_value: int
    argmax: frozenset
    case: ThresholdCase
    p1: StratumIndex
    p2: StratumIndex


class Relation(Enum):
    BELOW = "Below"
    NOT_BELOW = "NotBelow"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class PosetVerdict:
    lower: StratumIndex
    upper: StratumIndex
    relation: Relation
    reason: str


@dataclass(frozen=True)
class ComponentRecord:
    stratum: StratumIndex
    dimension: int
    count: int


@dataclass(frozen=True)
class ComponentReport:
    params: FrameSpaceParams
    components: Tuple[ComponentRecord, ...]
    total_count: int
    variety_dimension: int
    is_irreducible: bool
    principal_dimension: Optional[int]


@dataclass(frozen=True)
class StratumRow:
    stratum: StratumIndex
    dimension: int
    codimension: int
    segment: Optional[SegmentKind]
    maximal: bool
    components: int


@dataclass
class PosetGraph:
    params: FrameSpaceParams
    below: nx.DiGraph
    hasse: nx.DiGraph
    unknown: List[Tuple[StratumIndex, StratumIndex]] = field(default_factory=list)
    maximal: List[StratumIndex] = field(default_factory=list)


@dataclass(frozen=True)
class LocusDimensions:
    """Dimensions of the purely anisotropic and purely isotropic loci, when defined."""
    anisotropic: Optional[int]
    isotropic: Optional[int]
    anisotropic_is_component: bool
    isotropic_is_component: bool


# Raw helpers on plain integers. The smooth-point recursion walks down to
# (d - p, n - p), which can leave the d >= 1, n >= 2 range of FrameSpaceParams.

def in_domain(d: int, n: int, p: int, q: int) -> bool:
    return p >= 0 and q >= 0 and p + q <= n and p + 2 * q <= d


def raw_sigma(d: int, n: int, p: int, q: int) -> int:
    numerator = 2 * p * d + 2 * q * d + 2 * q * n - p * p - 4 * q * p - 3 * q * q + p - q
    assert numerator % 2 == 0, f"odd numerator for sigma({p},{q}) at (d,n)=({d},{n})"
    return numerator // 2


def raw_boundary(d: int, n: int) -> Tuple[List[Tuple[int, int]], List[Tuple[int, int]]]:
    omega1 = [(n - q, q) for q in range(0, min(d - n, n) + 1)] if d >= n else []
    omega2 = [(d - 2 * q, q) for q in range(max(d - n + 1, 0), d // 2 + 1)]
    return omega1, omega2


def raw_in_boundary(d: int, n: int, p: int, q: int) -> bool:
    omega1, omega2 = raw_boundary(d, n)
    return (p, q) in omega1 or (p, q) in omega2


def _require(params: FrameSpaceParams, s: StratumIndex):
    if not in_domain(params.d, params.n, s.p, s.q):
        raise DomainError(f"stratum {s} is outside Delta({params.d},{params.n})")


def enumerate_domain(params: FrameSpaceParams) -> List[StratumIndex]:
    d, n = params.d, params.n
    return [
        StratumIndex(p, q)
        for p in range(0, min(n, d) + 1)
        for q in range(0, min(n, d // 2) + 1)
        if in_domain(d, n, p, q)
    ]


def sigma(params: FrameSpaceParams, s: StratumIndex) -> int:
    """Dimension of every irreducible component of S_{p,q}."""
    _require(params, s)
    return raw_sigma(params.d, params.n, s.p, s.q)


def sigma_difference_p(params: FrameSpaceParams, s: StratumIndex) -> int:
    """sigma(p, q) - sigma(p-1, q)."""
    return params.d - s.p - 2 * s.q + 1


def sigma_difference_q(params: FrameSpaceParams, s: StratumIndex) -> int:
    """sigma(p, q) - sigma(p, q-1)."""
    return params.d + params.n - 2 * s.p - 3 * s.q + 1


def boundary(params: FrameSpaceParams) -> Tuple[BoundarySegment, BoundarySegment]:
    """The upper boundary Omega = Omega1 + Omega2, each ordered by increasing q."""
    omega1, omega2 = raw_boundary(params.d, params.n)
    return (
        BoundarySegment(SegmentKind.OMEGA1, tuple(StratumIndex(p, q) for p, q in omega1)),
        BoundarySegment(SegmentKind.OMEGA2, tuple(StratumIndex(p, q) for p, q in omega2)),
    )


def boundary_points(params: FrameSpaceParams) -> List[StratumIndex]:
    omega1, omega2 = boundary(params)
    return list(omega1.points) + list(omega2.points)


def segment_of(params: FrameSpaceParams, s: StratumIndex) -> Optional[SegmentKind]:
    for segment in boundary(params):
        if s in segment:
            return segment.kind
    return None


def endpoints(params: FrameSpaceParams) -> Tuple[StratumIndex, StratumIndex]:
    d, n = params.d, params.n
    return StratumIndex(min(d, n), 0), StratumIndex(d % 2, d // 2)


def threshold_case(params: FrameSpaceParams) -> ThresholdCase:
    d, n = params.d, params.n
    if d % 2 == 0:
        sign = compare_with_radical(d, 2 * n + 1, 8 * n + 1)
    else:
        sign = compare_with_radical(d, 2 * n, 8 * n - 7)
    return {1: ThresholdCase.ABOVE, 0: ThresholdCase.EQUAL, -1: ThresholdCase.BELOW}[sign]


def _exhaustive_maximum(params: FrameSpaceParams) -> Tuple[int, frozenset]:
    d, n = params.d, params.n
    p, q = np.meshgrid(np.arange(0, min(n, d) + 1), np.arange(0, min(n, d // 2) + 1), indexing="ij")
    mask = (p + q <= n) & (p + 2 * q <= d)
    numerator = 2 * p * d + 2 * q * d + 2 * q * n - p * p - 4 * q * p - 3 * q * q + p - q
    values = np.where(mask, numerator // 2, np.iinfo(np.int64).min)
    best = int(values.max())
    hits = np.argwhere(values == best)
    return best, frozenset(StratumIndex(int(a), int(b)) for a, b in hits)


def maximize_sigma(params: FrameSpaceParams, exhaustive: bool = False) -> MaximumReport:
    """Maximum of sigma over Delta(d, n); it is only ever attained at P1 and/or P2."""
    p1, p2 = endpoints(params)
    # P2 leaves Delta once d > 2n
    values = {s: sigma(params, s) for s in (p1, p2) if in_domain(params.d, params.n, s.p, s.q)}
    best = max(values.values())
    argmax = frozenset(s for s, v in values.items() if v == best)
    case = threshold_case(params)

    if exhaustive:
        brute_value, brute_argmax = _exhaustive_maximum(params)
        logger.debug(f"exhaustive maximum at (d,n)=({params.d},{params.n}): {brute_value} at {sorted(brute_argmax)}")
        assert brute_value == best, f"endpoint maximum {best} != exhaustive {brute_value}"
        assert brute_argmax == argmax, f"argmax {sorted(argmax)} != exhaustive {sorted(brute_argmax)}"
        expected = {ThresholdCase.ABOVE: {p1}, ThresholdCase.EQUAL: {p1, p2}, ThresholdCase.BELOW: {p2}}[case]
        assert argmax == frozenset(expected), f"threshold case {case.value} disagrees with argmax"

    return MaximumReport(best, argmax, case, p1, p2)


def maximal_strata(params: FrameSpaceParams) -> List[StratumIndex]:
    """Maximal elements of the degeneration order: points of Omega with sigma >= nd - C(n,2)."""
    bound = params.expected_dimension
    return [s for s in boundary_points(params) if sigma(params, s) >= bound]


def component_count(params: FrameSpaceParams, s: StratumIndex) -> int:
    """Number of connected (= irreducible) components of S_{p,q}."""
    _require(params, s)
    count = comb(params.n, s.p)
    if s.p + 2 * s.q == params.d and s.q > 0:
        return 2 * count
    return count


def component_report(params: FrameSpaceParams) -> ComponentReport:
    records = tuple(
        ComponentRecord(s, sigma(params, s), component_count(params, s))
        for s in maximal_strata(params)
    )
    total = sum(r.count for r in records)
    return ComponentReport(
        params=params,
        components=records,
        total_count=total,
        variety_dimension=max(r.dimension for r in records),
        is_irreducible=total == 1,
        principal_dimension=params.expected_dimension if params.d >= params.n else None,
    )


def poset_compare(params: FrameSpaceParams, lower: StratumIndex, upper: StratumIndex) -> PosetVerdict:
    """Decide lower <= upper in the degeneration order as far as the known criteria allow."""
    _require(params, lower)
    _require(params, upper)

    def verdict(relation, reason):
        return PosetVerdict(lower, upper, relation, reason)

    if lower == upper:
        return verdict(Relation.BELOW, "reflexive")
    if lower.leq(upper):
        return verdict(Relation.BELOW, "componentwise: chain of single-step deformations in p and q")

    if sigma(params, lower) >= sigma(params, upper):
        return verdict(Relation.NOT_BELOW, "necessary condition: sigma must strictly increase")
    if lower.p > upper.p:
        return verdict(Relation.NOT_BELOW, "necessary condition: anisotropic rank cannot drop")
    if lower.p + lower.q > upper.p + upper.q:
        return verdict(Relation.NOT_BELOW, "necessary condition: rank cannot drop")

    maximal = maximal_strata(params)
    if lower in maximal:
        return verdict(Relation.NOT_BELOW, "lower is a maximal stratum")
    principal = StratumIndex(params.n, 0)
    if params.d >= params.n and upper == principal and lower in boundary_points(params):
        return verdict(Relation.BELOW, "dichotomy: non-maximal boundary stratum lies below (n,0)")

    return verdict(Relation.UNKNOWN, "open: not decided by the known criteria")


def stratum_table(params: FrameSpaceParams) -> List[StratumRow]:
    maximal = set(maximal_strata(params))
    rows = []
    for s in enumerate_domain(params):
        dim = sigma(params, s)
        rows.append(StratumRow(
            stratum=s,
            dimension=dim,
            codimension=params.ambient_dimension - dim,
            segment=segment_of(params, s),
            maximal=s in maximal,
            components=component_count(params, s),
        ))
    return rows


def poset_graph(params: FrameSpaceParams) -> PosetGraph:
    """All decided Below relations, their Hasse diagram, and the undecided pairs."""
    points = enumerate_domain(params)
    below = nx.DiGraph()
    below.add_nodes_from(points)
    unknown = []
    for lower in points:
        for upper in points:
            if lower == upper:
                continue
            verdict = poset_compare(params, lower, upper)
            if verdict.relation is Relation.BELOW:
                below.add_edge(lower, upper, reason=verdict.reason)
            elif verdict.relation is Relation.UNKNOWN:
                unknown.append((lower, upper))
    # Below strictly increases sigma, so the graph is acyclic
    hasse = nx.transitive_reduction(below)
    hasse.add_nodes_from(below.nodes)
    return PosetGraph(params, below, hasse, unknown, maximal_strata(params))


def locus_dimensions(params: FrameSpaceParams) -> LocusDimensions:
    """Dimensions of V_ani = closure of S_{n,0} (d >= n) and V_iso = closure of S_{0,d/2} (d even, d <= 2n)."""
    d, n = params.d, params.n
    maximal = set(maximal_strata(params))
    ani = iso = None
    ani_component = iso_component = False
    if d >= n:
        principal = StratumIndex(n, 0)
        ani = sigma(params, principal)
        ani_component = principal in maximal
    if d % 2 == 0 and d <= 2 * n:
        isotropic = StratumIndex(0, d // 2)
        iso = sigma(params, isotropic)
        iso_component = isotropic in maximal
    return LocusDimensions(ani, iso, ani_component, iso_component)
