"""Explicit frames, the Jacobian of the orthogonality quadrics, and smoothness certificates.

Theta(d, n) has one row per generator <x_h, x_k> (h < k, lexicographic) and
one column per coordinate A[i, j], ordered row-major over A (i outer, j inner).
Row (h, k) holds A[i, k] in column (i, h) and A[i, h] in column (i, k).
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from errors.exceptions import DomainError, FieldError, GenericityError, HypothesisError
from frames.exactfield import (
    FieldContext, FrameMatrix, bilinear, frame_invariants, isotropic_vector_in,
    matmul, nullspace, rank,
)
from frames.strata import (
    FrameSpaceParams, StratumIndex, boundary_points, in_domain, raw_in_boundary, sigma,
)
from frames.thresholds import classify_ring

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class JacobianEntry:
    row: int
    column: int
    source: Tuple[int, int]  # (i, j) of the coordinate of A placed here, 0-indexed


@dataclass(frozen=True)
class JacobianLayout:
    d: int
    n: int
    rows: Tuple[Tuple[int, int], ...]     # (h, k), 1-indexed
    columns: Tuple[Tuple[int, int], ...]  # (i, j), 1-indexed
    entries: Tuple[JacobianEntry, ...]

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.columns)

    def symbol(self, row: int, column: int) -> str:
        for entry in self.entries:
            if entry.row == row and entry.column == column:
                i, j = entry.source
                return f"x_{{{i + 1},{j + 1}}}"
        return "0"

    def to_strings(self) -> List[List[str]]:
        table = [["0"] * len(self.columns) for _ in self.rows]
        for entry in self.entries:
            i, j = entry.source
            table[entry.row][entry.column] = f"x_{{{i + 1},{j + 1}}}"
        return table


@dataclass(frozen=True)
class JacobianCertificate:
    params: FrameSpaceParams
    point: FrameMatrix
    stratum: StratumIndex
    jacobian_rank: int
    required_bound: int
    passed: bool


@dataclass(frozen=True)
class PerturbationWitness:
    base: FrameMatrix
    base_stratum: StratumIndex
    direction_column: int
    direction_vector: Tuple[int, ...]
    epsilon: int
    perturbed: FrameMatrix
    target: StratumIndex


def _column_index(n: int, i: int, j: int) -> int:
    return i * n + j


def jacobian_layout(d: int, n: int) -> JacobianLayout:
    """Layout for any d >= 0, n >= 0; the smooth-point chain passes through tiny shapes."""
    rows = tuple((h + 1, k + 1) for h, k in combinations(range(n), 2))
    columns = tuple((i + 1, j + 1) for i in range(d) for j in range(n))
    entries = []
    for r, (h, k) in enumerate(combinations(range(n), 2)):
        for i in range(d):
            entries.append(JacobianEntry(r, _column_index(n, i, h), (i, k)))
            entries.append(JacobianEntry(r, _column_index(n, i, k), (i, h)))
    return JacobianLayout(d, n, rows, columns, tuple(entries))


def build_jacobian(params: FrameSpaceParams) -> JacobianLayout:
    return jacobian_layout(params.d, params.n)


def evaluate_jacobian(layout: JacobianLayout, A: FrameMatrix) -> np.ndarray:
    if A.entries.shape != (layout.d, layout.n):
        raise FieldError(f"frame has shape {A.entries.shape}, Jacobian expects {(layout.d, layout.n)}")
    theta = A.ctx.zeros(*layout.shape)
    if not layout.entries:
        return theta
    rows = np.array([e.row for e in layout.entries])
    cols = np.array([e.column for e in layout.entries])
    src_i = np.array([e.source[0] for e in layout.entries])
    src_j = np.array([e.source[1] for e in layout.entries])
    theta[rows, cols] = A.entries[src_i, src_j]
    return theta


def jacobian_rank(A: FrameMatrix) -> int:
    layout = jacobian_layout(A.rows, A.cols)
    return rank(A.ctx, evaluate_jacobian(layout, A))


def half_jacobian_rank(A: FrameMatrix, q: int) -> int:
    """Rank of Theta restricted to the columns (i, j) with i <= q."""
    if not 0 <= q <= A.rows:
        raise DomainError(f"q={q} outside 0..{A.rows}")
    theta = evaluate_jacobian(jacobian_layout(A.rows, A.cols), A)
    return rank(A.ctx, theta[:, : q * A.cols])


def required_bound(params: FrameSpaceParams, s: StratumIndex) -> int:
    return min(params.generators, params.ambient_dimension - sigma(params, s))


def certifiable(params: FrameSpaceParams, s: StratumIndex) -> bool:
    """Strata where the local dimension of X(d, n) is known: the upper boundary,
    or everywhere when X(d, n) is a complete intersection of dimension nd - C(n,2)."""
    if raw_in_boundary(params.d, params.n, s.p, s.q):
        return True
    return in_domain(params.d, params.n, s.p, s.q) and classify_ring(params).complete_intersection


def _rng(seed) -> np.random.Generator:
    return np.random.default_rng(seed)


def sample_stratum_point(params: FrameSpaceParams, s: StratumIndex, ctx: FieldContext, seed=0) -> FrameMatrix:
    """A point of L_{p,q}: e_1..e_p, then q hyperbolic isotropic columns, then combinations of those."""
    d, n, p, q = params.d, params.n, s.p, s.q
    if not in_domain(d, n, p, q):
        raise DomainError(f"stratum {s} is outside Delta({d},{n})")
    rng = _rng(seed)
    entries = ctx.zeros(d, n)
    for j in range(p):
        entries[j, j] = 1
    for k in range(q):
        entries[p + 2 * k, p + k] = 1
        entries[p + 2 * k + 1, p + k] = ctx.nu
    rest = n - p - q
    if rest and q:
        coefficients = ctx.random_matrix(q, rest, rng)
        entries[:, p + q:] = matmul(ctx, entries[:, p:p + q], coefficients)
    return FrameMatrix(ctx, entries)


def isotropic_identity_witness(ctx: FieldContext, d: int, n: int) -> FrameMatrix:
    if d < 2 * n:
        raise HypothesisError(f"[Id; nu Id] needs d >= 2n, got d={d}, n={n}")
    entries = ctx.zeros(d, n)
    for j in range(n):
        entries[j, j] = 1
        entries[n + j, j] = ctx.nu
    return FrameMatrix(ctx, entries)


def doubled_frame(ctx: FieldContext, B: np.ndarray) -> FrameMatrix:
    """[B; nu B]; every column is isotropic and the columns are pairwise orthogonal."""
    return FrameMatrix(ctx, ctx.array(np.vstack([B, (B.astype(object) * ctx.nu)])))


def certify_smooth(params: FrameSpaceParams, A: FrameMatrix) -> JacobianCertificate:
    if A.entries.shape != (params.d, params.n):
        raise FieldError(f"frame has shape {A.entries.shape}, expected {(params.d, params.n)}")
    invariants = frame_invariants(A)
    if not invariants.in_variety:
        raise HypothesisError("frame is not in V(d,n): the Gram matrix is not diagonal")
    s = StratumIndex(*invariants.stratum)
    if not certifiable(params, s):
        raise HypothesisError(
            f"stratum {s} is not on the upper boundary of Delta({params.d},{params.n}); "
            "the local dimension bound is only known there"
        )
    bound = required_bound(params, s)
    observed = jacobian_rank(A)
    return JacobianCertificate(params, A, s, observed, bound, observed >= bound)


def certify_smooth_p0_general(params: FrameSpaceParams, q: int, ctx: FieldContext,
                              seed=0, trials: int = 8) -> JacobianCertificate:
    """Certify a general [B; nu B] with B a random q x n matrix, for d = 2q."""
    if params.d != 2 * q:
        raise HypothesisError(f"[B; nu B] lives in d = 2q, got d={params.d}, q={q}")
    if q > params.n:
        raise DomainError(f"q={q} exceeds n={params.n}")
    certificate = None
    for attempt in range(trials):
        B = ctx.random_matrix(q, params.n, _rng([seed, attempt]))
        A = doubled_frame(ctx, B)
        if frame_invariants(A).stratum != (0, q):
            logger.debug(f"attempt {attempt}: B has rank below {q}, redrawing")
            continue
        certificate = certify_smooth(params, A)
        if certificate.passed:
            return certificate
        logger.debug(f"attempt {attempt}: Jacobian rank {certificate.jacobian_rank} < {certificate.required_bound}")
    if certificate is None:
        raise GenericityError(f"no rank-{q} matrix B found in {trials} attempts")
    logger.warning(f"(d,n)=({params.d},{params.n}), q={q}: no passing draw in {trials} attempts")
    return certificate


def extend_witness(A: FrameMatrix) -> FrameMatrix:
    """[[A, 0], [0, 1]]: one more dimension and one more anisotropic column."""
    ctx = A.ctx
    entries = ctx.zeros(A.rows + 1, A.cols + 1)
    entries[: A.rows, : A.cols] = A.entries
    entries[A.rows, A.cols] = 1
    return FrameMatrix(ctx, entries)


def _base_witness(ctx: FieldContext, d: int, n: int, q: int, rng: np.random.Generator) -> FrameMatrix:
    # (0, q) on the boundary of Delta(d, n), where n may be 0 or 1 and d may be 0
    if q == n and 2 * n <= d:
        return isotropic_identity_witness(ctx, d, n)
    if d == 2 * q:
        return doubled_frame(ctx, ctx.random_matrix(q, n, rng))
    raise HypothesisError(f"(0,{q}) is not on the boundary of Delta({d},{n})")


def smooth_point_chain(params: FrameSpaceParams, s: StratumIndex, ctx: FieldContext,
                       seed=0, trials: int = 8) -> JacobianCertificate:
    """Build a smooth point of X(d, n) in L_{p,q} for (p, q) on the boundary.

    Strip the p anisotropic columns down to (0, q) in (d - p, n - p), take the
    isotropic base frame there, then extend p times.
    """
    d, n, p, q = params.d, params.n, s.p, s.q
    if not raw_in_boundary(d, n, p, q):
        raise HypothesisError(f"stratum {s} is not on the upper boundary of Delta({d},{n})")
    base_d, base_n = d - p, n - p
    deterministic = q == base_n and 2 * base_n <= base_d
    certificate = None
    for attempt in range(1 if deterministic else trials):
        A = _base_witness(ctx, base_d, base_n, q, _rng([seed, d, n, p, q, attempt]))
        for _ in range(p):
            A = extend_witness(A)
        certificate = certify_smooth(params, A)
        if certificate.passed:
            return certificate
        logger.debug(f"chain at (d,n)=({d},{n}), {s}: attempt {attempt} rank "
                      f"{certificate.jacobian_rank} < {certificate.required_bound}")
    logger.warning(f"chain at (d,n)=({d},{n}), {s}: no passing draw in {trials} attempts")
    return certificate


def _certify_cell(cell) -> JacobianCertificate:
    d, n, p, q, ctx, seed, trials = cell
    return smooth_point_chain(FrameSpaceParams(d, n), StratumIndex(p, q), ctx, seed, trials)


def grid_cells(d_max: int, n_max: int) -> List[Tuple[int, int, int, int]]:
    cells = []
    for n in range(2, n_max + 1):
        for d in range(1, d_max + 1):
            for s in boundary_points(FrameSpaceParams(d, n)):
                cells.append((d, n, s.p, s.q))
    return cells


def certify_grid(d_max: int, n_max: int, ctx: FieldContext, seed: int = 0,
                 trials: int = 8, workers: int = 1) -> List[JacobianCertificate]:
    """smooth_point_chain on every boundary stratum of every (d, n) with d <= d_max, 2 <= n <= n_max."""
    if d_max < 1 or n_max < 2:
        raise DomainError(f"grid needs d_max >= 1 and n_max >= 2, got {d_max}, {n_max}")
    cells = [(d, n, p, q, ctx, seed, trials) for d, n, p, q in grid_cells(d_max, n_max)]
    if workers <= 1:
        return [_certify_cell(cell) for cell in cells]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(_certify_cell, cells, chunksize=16))


def explicit_4_3_frames(ctx: FieldContext) -> Dict[str, FrameMatrix]:
    nu = ctx.nu
    frames = {
        "A_{2,0}": FrameMatrix.from_rows(ctx, [[1, 0, 0], [0, 1, 0], [0, 0, 0], [0, 0, 0]]),
    }
    for delta in (0, 1, 2):
        frames[f"A_{{1,1}}({delta})"] = FrameMatrix.from_rows(
            ctx, [[1, 0, 0], [0, 1, delta], [0, nu, nu * delta], [0, 0, 0]]
        )
    for eps in (0, 1):
        for eta in (0, 1):
            frames[f"A_{{0,2}}({eps},{eta})"] = FrameMatrix.from_rows(
                ctx, [[1, 0, eps], [nu, 0, nu * eps], [0, 1, eta], [0, nu, nu * eta]]
            )
    return frames


def dependent_isotropic_column(A: FrameMatrix, anisotropic: Iterable[int]) -> Optional[int]:
    """First isotropic column lying in the span of the other isotropic columns."""
    ctx = A.ctx
    isotropic = [j for j in range(A.cols) if j not in set(anisotropic)]
    full = rank(ctx, A.entries[:, isotropic]) if isotropic else 0
    for j in isotropic:
        others = [c for c in isotropic if c != j]
        if (rank(ctx, A.entries[:, others]) if others else 0) == full:
            return j
    return None


def _perturbation_setup(params: FrameSpaceParams, A: FrameMatrix, target_step: Tuple[int, int]):
    if A.entries.shape != (params.d, params.n):
        raise FieldError(f"frame has shape {A.entries.shape}, expected {(params.d, params.n)}")
    invariants = frame_invariants(A)
    if not invariants.in_variety:
        raise HypothesisError("base frame is not in V(d,n)")
    base = StratumIndex(*invariants.stratum)
    target = StratumIndex(base.p + target_step[0], base.q + target_step[1])
    if not in_domain(params.d, params.n, target.p, target.q):
        raise HypothesisError(f"target {target} is outside Delta({params.d},{params.n})")
    column = dependent_isotropic_column(A, invariants.anisotropic_column_set)
    if column is None:
        raise HypothesisError("no isotropic column lies in the span of the other isotropic columns")
    return invariants, base, target, column


def _finish(A: FrameMatrix, base: StratumIndex, column: int, w: np.ndarray,
            epsilon: int, target: StratumIndex) -> PerturbationWitness:
    ctx = A.ctx
    if epsilon % ctx.modulus == 0:
        raise HypothesisError("epsilon must be nonzero in F_P")
    perturbed = A.with_column(column, A.column(column) + (epsilon % ctx.modulus) * w)
    reached = frame_invariants(perturbed)
    if not reached.in_variety or reached.stratum != target.as_tuple():
        raise GenericityError(f"perturbed frame landed in {reached.stratum}, expected {target}")
    return PerturbationWitness(A, base, column, tuple(int(x) for x in w), epsilon % ctx.modulus, perturbed, target)


def perturb_increase_p(params: FrameSpaceParams, A: FrameMatrix, ctx: FieldContext,
                       seed=0, epsilon: int = 1, trials: int = 32) -> PerturbationWitness:
    """Move a dependent isotropic column along an anisotropic w orthogonal to every column."""
    _, base, target, column = _perturbation_setup(params, A, (1, 0))
    complement = nullspace(ctx, A.entries.T)
    if complement.shape[1] == 0:
        raise HypothesisError("the columns of A span the whole space")
    rng = _rng(seed)
    for attempt in range(trials):
        w = matmul(ctx, complement, ctx.random_matrix(complement.shape[1], 1, rng))[:, 0]
        if bilinear(ctx, w, w):
            return _finish(A, base, column, w, epsilon, target)
        logger.debug(f"increase_p attempt {attempt}: drew an isotropic vector")
    raise GenericityError(f"no anisotropic vector in col(A)^perp after {trials} attempts")


def perturb_increase_q(params: FrameSpaceParams, A: FrameMatrix, ctx: FieldContext,
                       seed=0, epsilon: int = 1, trials: int = 32) -> PerturbationWitness:
    """Move a dependent isotropic column along an isotropic w in col(A)^perp outside col_iso(A)."""
    invariants, base, target, column = _perturbation_setup(params, A, (0, 1))
    complement = nullspace(ctx, A.entries.T)
    isotropic = [j for j in range(A.cols) if j not in invariants.anisotropic_column_set]
    w = isotropic_vector_in(ctx, complement, A.entries[:, isotropic], _rng(seed), trials)
    return _finish(A, base, column, w, epsilon, target)


def perturbation_family(witness: PerturbationWitness, epsilons: Sequence[int]) -> List[Tuple[int, Tuple[int, int]]]:
    """Stratum of A_eps = base + eps * w in the perturbed column, for each eps (0 gives the base back)."""
    A = witness.base
    w = A.ctx.array(witness.direction_vector)
    family = []
    for eps in epsilons:
        moved = A.with_column(witness.direction_column, A.column(witness.direction_column) + (eps % A.ctx.modulus) * w)
        family.append((eps, frame_invariants(moved).stratum))
    return family
