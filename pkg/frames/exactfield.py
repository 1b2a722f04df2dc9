"""Linear algebra over a prime field F_P with P = 1 (mod 4).

The field stands in for an algebraically closed field: it contains a square
root nu of -1, which is all the explicit constructions need, and "general"
means "uniformly random", with failures retried.
"""
import json
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, List, Optional, Tuple

import numpy as np
from sympy import isprime, legendre_symbol
from sympy.ntheory import sqrt_mod

from errors.exceptions import FieldError, GenericityError

logger = logging.getLogger(__name__)

DEFAULT_PRIME = 998244353
INT64_SAFE = 2 ** 31


@dataclass(frozen=True)
class FieldContext:
    modulus: int
    nu: int

    @property
    def dtype(self):
        # products of two residues must fit in int64
        return np.int64 if self.modulus < INT64_SAFE else object

    def array(self, data) -> np.ndarray:
        arr = np.array(data, dtype=object)
        if arr.size:
            arr = arr % self.modulus
        return arr.astype(self.dtype)

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        return np.zeros((rows, cols), dtype=self.dtype)

    def identity(self, k: int) -> np.ndarray:
        return np.eye(k, dtype=self.dtype)

    def random_matrix(self, rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
        values = [[int(rng.integers(0, self.modulus)) for _ in range(cols)] for _ in range(rows)]
        return self.array(values) if rows and cols else self.zeros(rows, cols)

    def random_scalar(self, rng: np.random.Generator, nonzero: bool = False) -> int:
        low = 1 if nonzero else 0
        return int(rng.integers(low, self.modulus))

    def inverse(self, a: int) -> int:
        return pow(int(a) % self.modulus, -1, self.modulus)


def make_context(modulus: int = DEFAULT_PRIME) -> FieldContext:
    """Field context with the smaller square root of -1 as nu."""
    if not isinstance(modulus, int) or modulus < 2 or not isprime(modulus):
        raise FieldError(f"modulus {modulus!r} is not prime")
    if modulus % 4 != 1:
        raise FieldError(f"modulus {modulus} is not 1 mod 4, so -1 has no square root")
    # characteristic 2 is excluded by the congruence above

    g = 2
    while legendre_symbol(g, modulus) != -1:
        g += 1
    root = pow(g, (modulus - 1) // 4, modulus)
    nu = min(root, modulus - root)
    assert (nu * nu + 1) % modulus == 0
    return FieldContext(modulus, nu)


def sqrt(ctx: FieldContext, a: int) -> Optional[int]:
    a = int(a) % ctx.modulus
    if a == 0:
        return 0
    return sqrt_mod(a, ctx.modulus)


@dataclass(frozen=True, eq=False)
class FrameMatrix:
    """A d x n matrix over F_P whose columns are the candidate frame vectors."""
    ctx: FieldContext
    entries: np.ndarray

    def __post_init__(self):
        if self.entries.ndim != 2:
            raise FieldError(f"frame matrices are 2-dimensional, got shape {self.entries.shape}")
        self.entries.setflags(write=False)

    @classmethod
    def from_rows(cls, ctx: FieldContext, rows, cols: Optional[int] = None) -> "FrameMatrix":
        if isinstance(rows, str):
            try:
                rows = json.loads(rows)
            except json.JSONDecodeError as e:
                raise FieldError(f"matrix literal is not valid JSON: {e}")
        try:
            rows = [[int(x) for x in row] for row in rows]
        except (TypeError, ValueError):
            raise FieldError("matrix literal must be a list of rows of integers")
        if len({len(r) for r in rows}) > 1:
            raise FieldError("matrix rows have different lengths")
        if not rows:
            return cls(ctx, ctx.zeros(0, cols or 0))
        return cls(ctx, ctx.array(rows))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def column(self, j: int) -> np.ndarray:
        return self.entries[:, j]

    def with_column(self, j: int, vector) -> "FrameMatrix":
        entries = np.array(self.entries, copy=True)
        entries[:, j] = self.ctx.array(vector)
        return FrameMatrix(self.ctx, entries)

    def to_lists(self) -> List[List[int]]:
        return [[int(x) for x in row] for row in self.entries]

    def to_json(self) -> List[List[str]]:
        return [[str(int(x)) for x in row] for row in self.entries]

    def __eq__(self, other):
        if not isinstance(other, FrameMatrix):
            return NotImplemented
        return (self.ctx == other.ctx and self.entries.shape == other.entries.shape
                and bool(np.all(self.entries == other.entries)))

    __hash__ = None


@dataclass(frozen=True)
class FrameInvariants:
    in_variety: bool
    rank: int
    rk_ani: int
    rk_iso: int
    anisotropic_column_set: FrozenSet[int]

    @property
    def stratum(self) -> Tuple[int, int]:
        return (self.rk_ani, self.rk_iso)


def bilinear(ctx: FieldContext, v, w) -> int:
    v, w = ctx.array(v), ctx.array(w)
    if v.shape != w.shape:
        raise FieldError(f"length mismatch: {v.shape} vs {w.shape}")
    return int(sum(int(a) * int(b) for a, b in zip(v, w)) % ctx.modulus)


def matmul(ctx: FieldContext, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # object arithmetic keeps the inner sums exact before reduction
    product = a.astype(object).dot(b.astype(object)) if a.size and b.size else np.zeros((a.shape[0], b.shape[1]), dtype=object)
    return ctx.array(product)


def gram(A: FrameMatrix) -> np.ndarray:
    return matmul(A.ctx, A.entries.T, A.entries)


def row_echelon(ctx: FieldContext, M: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form over F_P and the pivot columns."""
    P = ctx.modulus
    R = ctx.array(M).copy()
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        candidates = np.nonzero(R[r:, c])[0]
        if len(candidates) == 0:
            continue
        pivot = int(candidates[0]) + r
        if pivot != r:
            R[[r, pivot]] = R[[pivot, r]]
        R[r] = (R[r] * ctx.inverse(R[r, c])) % P
        factors = R[:, c].copy()
        factors[r] = 0
        # eliminate the pivot column everywhere else in one outer product
        R = (R - np.outer(factors, R[r])) % P
        pivots.append(c)
        r += 1
    return R, pivots


def rank(ctx: FieldContext, M: np.ndarray) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    # eliminate along the shorter side
    if M.shape[0] > M.shape[1]:
        M = M.T
    return len(row_echelon(ctx, M)[1])


def nullspace(ctx: FieldContext, M: np.ndarray) -> np.ndarray:
    """Basis of {x : M x = 0} as the columns of the returned matrix."""
    M = np.asarray(M)
    cols = M.shape[1]
    if M.shape[0] == 0:
        return ctx.identity(cols)
    R, pivots = row_echelon(ctx, M)
    free = [c for c in range(cols) if c not in pivots]
    basis = ctx.zeros(cols, len(free))
    for k, f in enumerate(free):
        basis[f, k] = 1
        for i, pc in enumerate(pivots):
            basis[pc, k] = (-int(R[i, f])) % ctx.modulus
    return basis


def minor_rank(ctx: FieldContext, M: np.ndarray) -> int:
    """Largest k with a nonzero k x k minor. Exponential; only for tiny test matrices."""
    M = [[int(x) for x in row] for row in np.asarray(M)]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    for k in range(min(rows, cols), 0, -1):
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                if _det([[M[i][j] for j in cs] for i in rs]) % ctx.modulus:
                    return k
    return 0


def _det(M: List[List[int]]) -> int:
    # Laplace expansion along the first row
    if len(M) == 1:
        return M[0][0]
    total = 0
    for j, a in enumerate(M[0]):
        if a:
            minor = [row[:j] + row[j + 1:] for row in M[1:]]
            total += (-1) ** j * a * _det(minor)
    return total


def frame_invariants(A: FrameMatrix) -> FrameInvariants:
    """Anisotropic and isotropic rank of a frame, or in_variety=False with the rank only."""
    ctx = A.ctx
    G = gram(A)
    total_rank = rank(ctx, A.entries)
    off_diagonal = G.copy()
    np.fill_diagonal(off_diagonal, 0)
    if np.any(off_diagonal != 0):
        return FrameInvariants(False, total_rank, 0, 0, frozenset())

    anisotropic = frozenset(j for j in range(A.cols) if int(G[j, j]) != 0)
    isotropic = [j for j in range(A.cols) if j not in anisotropic]
    rk_iso = rank(ctx, A.entries[:, isotropic]) if isotropic else 0
    rk_ani = len(anisotropic)
    assert rk_ani + rk_iso == total_rank, "anisotropic columns must be independent of the isotropic span"
    assert rk_ani + 2 * rk_iso <= A.rows
    return FrameInvariants(True, total_rank, rk_ani, rk_iso, anisotropic)


def span_contains(ctx: FieldContext, basis: np.ndarray, v) -> bool:
    if basis.shape[1] == 0:
        return not np.any(ctx.array(v) != 0)
    stacked = np.column_stack([basis, ctx.array(v)])
    return rank(ctx, stacked) == rank(ctx, basis)


def isotropic_vector_in(ctx: FieldContext, basis: np.ndarray, avoid: np.ndarray,
                        rng: np.random.Generator, trials: int = 32) -> np.ndarray:
    """A random isotropic vector of span(basis) outside span(avoid).

    Draws u, v in the span and solves <u + t v, u + t v> = 0 for t; about half
    of the draws have a square discriminant.
    """
    P = ctx.modulus
    k = basis.shape[1]
    if k == 0:
        raise GenericityError("empty subspace has no vector outside the avoided span")
    for attempt in range(trials):
        u = matmul(ctx, basis, ctx.random_matrix(k, 1, rng))[:, 0]
        v = matmul(ctx, basis, ctx.random_matrix(k, 1, rng))[:, 0]
        a, b, c = bilinear(ctx, v, v), bilinear(ctx, u, v), bilinear(ctx, u, u)
        if a == 0:
            # v is itself isotropic; the equation in t is linear
            candidates = [v]
            if b:
                t = (-c * ctx.inverse(2 * b)) % P
                candidates.append((u + t * v) % P)
        else:
            root = sqrt(ctx, (b * b - a * c) % P)
            if root is None:
                logger.debug(f"isotropic search attempt {attempt}: non-square discriminant")
                continue
            inv = ctx.inverse(a)
            candidates = [(u + ((-b + s) * inv % P) * v) % P for s in (root, -root)]
        for w in candidates:
            w = ctx.array(w)
            if bilinear(ctx, w, w) == 0 and not span_contains(ctx, avoid, w):
                return w
    raise GenericityError(f"no isotropic vector found after {trials} attempts")
