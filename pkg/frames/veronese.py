"""Dimension of the span of squares of linear forms.

For general linear forms h_1..h_n in r variables the squares h_j^2 span a
space of quadrics of dimension min(C(r+1, 2), n). Through the doubled frames
[B; nu B] this fixes the Jacobian rank on the isotropic boundary strata.
"""
import logging
from dataclasses import dataclass
from math import comb

import numpy as np

from errors.exceptions import DomainError, FieldError
from frames.exactfield import FieldContext, rank
from frames.strata import FrameSpaceParams
from frames.witness import doubled_frame, half_jacobian_rank, jacobian_rank

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SquaresRankInstance:
    r: int
    n: int
    forms: np.ndarray
    observed_dim: int
    expected_dim: int


@dataclass(frozen=True)
class IdentityCheck:
    r: int
    n: int
    passes: int
    total: int


@dataclass(frozen=True)
class ChainIdentity:
    n: int
    q: int
    squares_dim: int
    predicted_rank: int
    half_rank: int
    full_rank: int
    closed_form: int

    @property
    def holds(self) -> bool:
        return self.half_rank == self.full_rank == self.predicted_rank


def expected_squares_dimension(r: int, n: int) -> int:
    return min(comb(r + 1, 2), n)


def square_coefficients(ctx: FieldContext, forms) -> np.ndarray:
    """Rows are h_j^2 in the basis Y_a Y_b, a <= b: alpha_a^2 on the diagonal, 2 alpha_a alpha_b off it."""
    forms = ctx.array(forms)
    if forms.ndim != 2:
        raise FieldError(f"forms must be an n x r matrix, got shape {forms.shape}")
    n, r = forms.shape
    upper_a, upper_b = np.triu_indices(r)
    alpha = forms.astype(object)
    products = alpha[:, upper_a] * alpha[:, upper_b]
    doubled = np.where(upper_a == upper_b, 1, 2).astype(object)
    return ctx.array(products * doubled)


def squares_span_dimension(ctx: FieldContext, forms) -> int:
    forms = ctx.array(forms)
    if forms.ndim != 2 or forms.shape[0] < 1 or forms.shape[1] < 1:
        raise FieldError(f"need at least one form in at least one variable, got shape {forms.shape}")
    return rank(ctx, square_coefficients(ctx, forms))


def squares_instance(ctx: FieldContext, forms) -> SquaresRankInstance:
    forms = ctx.array(forms)
    n, r = forms.shape
    return SquaresRankInstance(r, n, forms, squares_span_dimension(ctx, forms), expected_squares_dimension(r, n))


def check_generic_identity(ctx: FieldContext, r: int, n: int, trials: int = 20, seed: int = 0) -> IdentityCheck:
    if r < 1 or n < 1:
        raise DomainError(f"need r >= 1 and n >= 1, got r={r}, n={n}")
    if trials < 1:
        raise DomainError(f"trials must be at least 1, got {trials}")
    expected = expected_squares_dimension(r, n)
    passes = 0
    for trial in range(trials):
        forms = ctx.random_matrix(n, r, np.random.default_rng([seed, r, n, trial]))
        observed = squares_span_dimension(ctx, forms)
        assert observed <= expected
        if observed == expected:
            passes += 1
        else:
            logger.debug(f"(r,n)=({r},{n}) trial {trial}: squares span {observed} < {expected}")
    return IdentityCheck(r, n, passes, trials)


def predicted_half_jacobian_rank(squares_dim: int, n: int, q: int) -> int:
    """dim[H]_2 + qn - C(q,2) - n."""
    return squares_dim + q * n - comb(q, 2) - n


def check_chain_identity(ctx: FieldContext, n: int, q: int, seed: int = 0) -> ChainIdentity:
    """Half-Jacobian rank of a random [B; nu B] in V(2q, n) against the squares count with r = n - q."""
    if not 1 <= q <= n:
        raise DomainError(f"need 1 <= q <= n, got q={q}, n={n}")
    params = FrameSpaceParams(2 * q, n)
    rng = np.random.default_rng([seed, n, q])
    A = doubled_frame(ctx, ctx.random_matrix(q, n, rng))
    r = n - q
    squares_dim = squares_span_dimension(ctx, ctx.random_matrix(n, r, rng)) if r else 0
    return ChainIdentity(
        n=n,
        q=q,
        squares_dim=squares_dim,
        predicted_rank=predicted_half_jacobian_rank(squares_dim, n, q),
        half_rank=half_jacobian_rank(A, q),
        full_rank=jacobian_rank(A),
        closed_form=min(params.generators, q * n - comb(q, 2)),
    )
