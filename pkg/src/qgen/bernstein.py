"""Weighted q-Bernstein polynomial basis and operator.

The basis element of index k, degree n and weight alpha at an integer
point x is

    C(n, k) [x]_{q^alpha}^k [1-x]_{q^-alpha}^(n-k),

a q-deformation of the Bernstein basis.  x is restricted to integers so
every value stays an exact rational function of q; the symmetry
B_{k,n}(x | q) = B_{n-k,n}(1-x | 1/q) then holds structurally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from qgen.qcore import RatFuncQ, ZERO, binomial, qbracket, subst_q_inverse
from qgen.records import VerificationRecord, compare

__all__ = [
    "BernsteinIndex",
    "bernstein_operator",
    "bernstein_poly",
    "bernstein_symmetry_check",
]


@dataclass(frozen=True)
class BernsteinIndex:
    k: int
    n: int
    alpha: int

    def __post_init__(self):
        if self.n < 0 or self.k < 0:
            raise IndexError("basis indices must be nonnegative")
        if self.k > self.n:
            raise IndexError(f"basis index k={self.k} exceeds degree n={self.n}")
        if self.alpha < 1:
            raise ValueError("weight alpha must be a positive integer")


def bernstein_poly(idx: BernsteinIndex, x: int) -> RatFuncQ:
    """C(n,k) [x]_{q^a}^k [1-x]_{q^-a}^(n-k) as a canonical value."""
    left = qbracket(x, idx.alpha) ** idx.k
    right = qbracket(1 - x, -idx.alpha) ** (idx.n - idx.k)
    return binomial(idx.n, idx.k) * left * right


def bernstein_symmetry_check(idx: BernsteinIndex, x: int) -> VerificationRecord:
    """PASS iff B_{k,n}(x | q) == B_{n-k,n}(1-x | 1/q) structurally."""
    lhs = bernstein_poly(idx, x)
    mirrored = BernsteinIndex(idx.n - idx.k, idx.n, idx.alpha)
    rhs = subst_q_inverse(bernstein_poly(mirrored, 1 - x))
    params = (("k", idx.k), ("n", idx.n), ("alpha", idx.alpha), ("x", x))
    return compare("bernstein-symmetry", params, lhs, rhs)


def bernstein_operator(samples: Sequence[Union[Fraction, int]], n: int, alpha: int,
                       x: int) -> RatFuncQ:
    """Weighted q-Bernstein operator applied to sampled values.

    samples[k] stands for f(k/n); exactly n+1 samples are required.
    """
    if n < 1:
        raise ValueError("operator degree must be positive")
    if len(samples) != n + 1:
        raise ValueError(f"expected {n + 1} sample values, got {len(samples)}")
    total = ZERO
    for k, sample in enumerate(samples):
        total = total + Fraction(sample) * bernstein_poly(BernsteinIndex(k, n, alpha), x)
    return total
