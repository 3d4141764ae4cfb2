"""Exact Fibonacci/Lucas numbers and the 2x2 key matrices built from them.

The two key families:

    q_power(n)  = [[F(n+1), F(n)], [F(n), F(n-1)]]     (n-th power of [[1,1],[1,0]])
    r_matrix(n) = [[L(n+1), L(n)], [L(n), L(n-1)]]     (= [[1,2],[2,-1]] times q_power(n))

and their determinants, which the decoder relies on:

    det q_power(n)  = F(n+1)F(n-1) - F(n)^2 = (-1)^n
    det r_matrix(n) = L(n+1)L(n-1) - L(n)^2 = 5(-1)^(n+1)

Everything is plain Python int, so the identities hold exactly for any n.
"""

from dataclasses import dataclass
from enum import Enum


class Family(Enum):
    """Which key family a matrix belongs to."""

    QPOW = "qpow"
    RMAT = "rmat"


@dataclass(frozen=True)
class KeyMatrix:
    """A symmetric 2x2 integer key matrix, entries row-major m11 m12 / m21 m22."""

    family: Family
    n: int
    m11: int
    m12: int
    m21: int
    m22: int

    def entry_determinant(self) -> int:
        """Determinant computed from the entries (not the closed form)."""
        return self.m11 * self.m22 - self.m12 * self.m21

    @property
    def label(self) -> str:
        return f"Q^{self.n}" if self.family is Family.QPOW else f"R_{self.n}"


def fibonacci(n: int) -> int:
    """F(n) with F(0) = 0, F(1) = 1."""
    if n < 0:
        raise ValueError(f"fibonacci index must be >= 0, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def lucas(n: int) -> int:
    """L(n) with L(0) = 2, L(1) = 1."""
    if n < 0:
        raise ValueError(f"lucas index must be >= 0, got {n}")
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def _check_index(n: int) -> None:
    if n < 1:
        raise ValueError(f"key index must be >= 1, got {n}")


def q_power(n: int) -> KeyMatrix:
    """The n-th power of the matrix [[1, 1], [1, 0]], for n >= 1."""
    _check_index(n)
    # one pass of the recurrence yields the three consecutive terms
    prev, cur = fibonacci(n - 1), fibonacci(n)
    return KeyMatrix(Family.QPOW, n, prev + cur, cur, cur, prev)


def r_matrix(n: int) -> KeyMatrix:
    """[[1, 2], [2, -1]] times q_power(n), written with Lucas entries, n >= 1."""
    _check_index(n)
    prev, cur = lucas(n - 1), lucas(n)
    return KeyMatrix(Family.RMAT, n, prev + cur, cur, cur, prev)


def key_determinant(family: Family, n: int) -> int:
    """Closed-form determinant of the key matrix: the decode-side constant."""
    _check_index(n)
    if family is Family.QPOW:
        return -1 if n % 2 else 1
    return -5 if n % 2 == 0 else 5


def key_matrix(family: Family, n: int) -> KeyMatrix:
    """Dispatch on family."""
    return q_power(n) if family is Family.QPOW else r_matrix(n)
