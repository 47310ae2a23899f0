"""Known values of the interval functions and the intervals swept against."""

from __future__ import annotations

__all__ = ["f", "f3", "general_interval", "cubic_interval"]


def f(k: int) -> int:
    """Least ``X`` such that every 3-connected planar graph of circumference
    at least ``k`` has a cycle with length in ``[k, X]``."""
    if k < 1:
        raise ValueError("k must be positive")
    if k <= 3:
        return 5
    if k == 4:
        return 10
    return 2 * k + 3


def f3(k: int) -> int:
    """Same as :func:`f` for 3-connected cubic planar graphs."""
    if k < 1:
        raise ValueError("k must be positive")
    if k <= 3:
        return 5
    if k == 4:
        return 10
    if k in (5, 7, 9):
        return 5 * (k - 1) // 2
    return 2 * k + 3


def general_interval(k: int) -> tuple:
    """Interval every 3-connected planar graph of circumference >= k meets."""
    return (4, 10) if k == 4 else (k, 2 * k + 3)


def cubic_interval(k: int) -> tuple:
    """Interval for 3-connected cubic planar graphs, ``k`` in 5, 7, 9."""
    if k not in (5, 7, 9):
        raise ValueError("the cubic interval is stated for k = 5, 7, 9")
    return (k, 5 * (k - 1) // 2)
