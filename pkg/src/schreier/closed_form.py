"""Binomial-sum formulas, evaluated term by term with exact integers.

Each function mirrors one displayed sum; no algebraic simplification is
applied, so a failing comparison points at a specific formula. The k = 1
cases are answered with Fibonacci numbers instead of stretching the k >= 2
sums beyond where they were derived.
"""
from __future__ import annotations

from .core import binomial, ceil_div, floor_div


class IndexBelowTwo(ValueError):
    pass


def fibonacci(n: int) -> int:
    """F_n with F_{-1} = 1, F_0 = 0."""
    if n < -1:
        raise ValueError(f"Fibonacci index must be >= -1, got {n}")
    a, b = 1, 0
    for _ in range(n + 1):
        a, b = b, a + b
    return a


def _require_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")


def padovan_like_closed(k: int, n: int) -> int:
    """a_{k,n} = sum_{i=0}^{floor((n-2)/(k+1))+1} C(floor((n-i-1)/k)+1, i)."""
    _require_k(k)
    if n < 0:
        raise ValueError("index must be nonnegative")
    if k == 1:
        return fibonacci(n + 1)
    top = floor_div(n - 2, k + 1) + 1
    return sum(binomial(floor_div(n - i - 1, k) + 1, i) for i in range(top + 1))


def padovan_like_at_multiple(k: int, n: int) -> int:
    """a_{k,(n-1)k} via sum_{i=0}^{floor((nk-1)/(k+1))} C(floor((-i-1)/k)+n, i).

    Same quantity as ``padovan_like_closed(k, (n-1)*k)`` but with the upper
    limit written in terms of n rather than of the sequence index.
    """
    _require_k(k)
    if n < 1:
        raise ValueError("n must be positive")
    top = floor_div(n * k - 1, k + 1)
    return sum(binomial(floor_div(-i - 1, k) + n, i) for i in range(top + 1))


def padovan_like_at_multiple_ceil(k: int, n: int) -> int:
    """Ceiling form of the same sum: C(n - ceil((i+1)/k), i)."""
    _require_k(k)
    top = floor_div(n * k - 1, k + 1)
    return sum(binomial(n - ceil_div(i + 1, k), i) for i in range(top + 1))


def max_padovan_like_closed(k: int, index: int) -> int:
    """a^(m)_{k,index} for index >= 2: sum_{i=0}^{floor(m/k)} C(i, m - k i), m = index - 2."""
    _require_k(k)
    if index < 2:
        raise IndexBelowTwo(f"closed form starts at index 2, got {index}")
    if k == 1:
        return fibonacci(index - 1)
    m = index - 2
    return sum(binomial(i, m - k * i) for i in range(floor_div(m, k) + 1))


def schreier_count_closed(k: int, n: int) -> int:
    """s_{k,n} by choosing the minimum ik and then up to ik-2 middle elements."""
    _require_k(k)
    if n < 1:
        raise ValueError("n must be positive")
    if k == 1:
        return fibonacci(n)
    if n == 1:
        return 1
    total = 2
    for i in range(1, n - 1):
        total += sum(binomial(n - i - 1, j) for j in range(i * k - 1))
    return total


def schreier_count_swapped(k: int, n: int) -> int:
    """The double sum of ``schreier_count_closed`` with the summation order exchanged."""
    _require_k(k)
    if n < 2:
        raise ValueError("n must be at least 2")
    total = 2
    for j in range((n - 2) * k - 1):
        total += sum(binomial(n - i - 1, j) for i in range(ceil_div(j + 2, k), n - 1))
    return total


def max_schreier_count_closed(k: int, n: int) -> int:
    """s^(m)_{k,n} = sum_{i=1}^{floor((n+1)/(k+1))} C(n-i-1, ik-2)."""
    _require_k(k)
    if n < 1:
        raise ValueError("n must be positive")
    if k == 1:
        return fibonacci(n - 2)
    if n == 1:
        return 0
    return sum(binomial(n - i - 1, i * k - 2) for i in range(1, floor_div(n + 1, k + 1) + 1))


def strict_level_count_closed(k: int, n: int, i: int) -> int:
    """|L_{k,n,i}|: sets with max nk and min F > |F| = i.

    For i >= 2 the count is sum of C(n-j-1, i-2) over i+1 <= jk <= (n-i+1)k;
    the i = 1 level holds only {nk}.
    """
    if k < 2:
        raise ValueError("level formulas assume k >= 2")
    if i < 1:
        raise ValueError("i must be positive")
    if i == 1:
        return 1
    return sum(binomial(n - j - 1, i - 2) for j in range(ceil_div(i + 1, k), n - i + 2))


def relaxed_level_count_closed(k: int, n: int, i: int) -> int:
    """|R_{k,n,i}|: sets with max (n+1)k and min F >= |F| = i > min F - k.

    For i >= 3: sum of C(n-j, i-2) over i <= jk <= i+k-1 with j <= n-i+2.
    Level 1 is empty and level 2 holds only {k, (n+1)k}.
    """
    if k < 2:
        raise ValueError("level formulas assume k >= 2")
    if i < 1:
        raise ValueError("i must be positive")
    if i == 1:
        return 0
    if i == 2:
        return 1
    lo = ceil_div(i, k)
    hi = min(floor_div(i + k - 1, k), n - i + 2)
    return sum(binomial(n - j, i - 2) for j in range(lo, hi + 1))


def relaxed_level_shifted(k: int, n: int, i: int) -> int:
    """Right-hand side of the level identity written for index i:
    sum of C(n-j, i-1) over i+1 <= jk <= i+k with j <= n-i+1."""
    lo = ceil_div(i + 1, k)
    hi = min(floor_div(i + k, k), n - i + 1)
    return sum(binomial(n - j, i - 1) for j in range(lo, hi + 1))


def hockey_stick_lhs(r: int, d: int) -> int:
    return sum(binomial(r + t, r) for t in range(d + 1))


def hockey_stick_rhs(r: int, d: int) -> int:
    return binomial(r + d + 1, r + 1)
