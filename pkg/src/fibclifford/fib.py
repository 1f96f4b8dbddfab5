"""Fibonacci, Lucas and Horadam sequences on big integers.

Fast doubling gives O(log n) arithmetic steps for every sequence; the naive
recurrences survive only in the test suite, as independent oracles.
Negative indices are rejected everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactnum import ALPHA, BETA, SQRT5, QSqrt5


@dataclass(frozen=True, slots=True)
class HoradamParams:
    """Integer seeds (p, q) of the generalized Fibonacci recurrence."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not isinstance(self.q, int):
            raise TypeError("Horadam seeds must be integers")


def _check_index(n: int) -> None:
    if n < 0:
        raise ValueError(f"sequence index must be nonnegative, got {n}")


def _pair(n: int) -> tuple[int, int]:
    # fast doubling: f(2k) = f(k)(2 f(k+1) - f(k)), f(2k+1) = f(k)^2 + f(k+1)^2
    if n == 0:
        return 0, 1
    a, b = _pair(n >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    if n & 1:
        return d, c + d
    return c, d


def fib_pair(n: int) -> tuple[int, int]:
    """``(fib(n), fib(n+1))`` in one doubling pass."""
    _check_index(n)
    return _pair(n)


def fib(n: int) -> int:
    """n-th Fibonacci number, f(0) = 0, f(1) = 1."""
    return fib_pair(n)[0]


def lucas(n: int) -> int:
    """n-th Lucas number, L(0) = 2, L(1) = 1; L(n) = 2 f(n+1) - f(n)."""
    a, b = fib_pair(n)
    return 2 * b - a


def horadam(n: int, seeds: HoradamParams) -> int:
    """n-th term of the sequence with h(0) = p, h(1) = q, h(n) = h(n-1) + h(n-2).

    For n >= 1 the term collapses onto Fibonacci numbers as
    ``h(n) = p*f(n-1) + q*f(n)``; the recurrence itself is kept as the
    oracle in the tests.
    """
    _check_index(n)
    if n == 0:
        return seeds.p
    a, b = _pair(n - 1)
    return seeds.p * a + seeds.q * b


def binet(n: int) -> QSqrt5:
    """``(alpha^n - beta^n)/sqrt(5)`` computed exactly in Q(sqrt 5).

    The sqrt(5) component always cancels: the result equals ``fib(n)``
    embedded as a rational element.
    """
    _check_index(n)
    return (ALPHA**n - BETA**n) / SQRT5
