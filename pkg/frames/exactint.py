"""Exact comparisons against quantities of the form a - sqrt(b).

Every threshold in the package has this shape, and the interesting cases are
exactly the ties, so nothing here touches floating point.
"""
from math import isqrt


def _check_radicand(b: int):
    if b < 0:
        raise ValueError(f"negative radicand {b}")


def compare_with_radical(x: int, a: int, b: int) -> int:
    """Sign of x - (a - sqrt(b)): -1, 0 or 1."""
    _check_radicand(b)
    # x >= a - sqrt(b)  <=>  sqrt(b) >= a - x
    gap = a - x
    if gap < 0:
        return 1
    square = gap * gap
    if b > square:
        return 1
    if b == square:
        return 0
    return -1


def floor_minus_sqrt(a: int, b: int) -> int:
    _check_radicand(b)
    s = isqrt(b)
    return a - s if s * s == b else a - s - 1


def floor_half_minus_sqrt(a: int, b: int) -> int:
    _check_radicand(b)
    s = isqrt(b)
    if s * s == b:
        return (a - s) // 2
    # a - sqrt(b) lies strictly inside (m, m + 1)
    m = a - s - 1
    return m // 2


def ceil_half_minus_sqrt(a: int, b: int) -> int:
    _check_radicand(b)
    s = isqrt(b)
    if s * s == b:
        return -((s - a) // 2)
    return floor_half_minus_sqrt(a, b) + 1


def least_even_at_least(a: int, b: int, strict: bool = False) -> int:
    """Least even integer >= a - sqrt(b) (or > when strict)."""
    m = floor_minus_sqrt(a, b)
    exact = isqrt(b) ** 2 == b
    candidate = m if exact and not strict else m + 1
    return candidate if candidate % 2 == 0 else candidate + 1


def least_odd_at_least(a: int, b: int, strict: bool = False) -> int:
    m = floor_minus_sqrt(a, b)
    exact = isqrt(b) ** 2 == b
    candidate = m if exact and not strict else m + 1
    return candidate if candidate % 2 == 1 else candidate + 1
