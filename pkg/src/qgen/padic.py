"""Fermionic p-adic q-integral on Z_p, made exact and testable.

The integral of f over Z_p against the alternating q-measure is the
p-adic limit of normalized sums

    S_N(f) = (1 / [p^N]_{-q}) * sum_{x=0}^{p^N - 1} f(x) (-q)^x,

with [p^N]_{-q} = (1 - (-q)^(p^N)) / (1 + q).  Every integrand used here
is a finite combination of q-exponentials x -> q^(m x), for which the
limit has the exact closed form

    integral of q^(m x)  =  [2]_q / (1 + q^(m+1)),

so symbolic integration reduces to finite moment combinations, and the
truncated sums provide an independent numeric route whose convergence
can be measured in the p-adic valuation.

Note on normalization: without the 1/[p^N]_{-q} factor the limiting
functional satisfies q I(f1) + I(f) = 2 f(0) instead of the q-shift
equation q I(f1) + I(f) = [2]_q f(0).  The normalized reading is the
one adopted throughout; the unnormalized sums and moments remain
available for comparison (``normalized=False``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

from qgen.qcore import (
    ONE,
    RatFuncQ,
    ZERO,
    binomial,
    eval_at,
    q_power,
    qbracket,
)
from qgen.records import VerificationRecord, compare

__all__ = [
    "ConvergenceTrace",
    "IntegrandSpec",
    "PadicContext",
    "PrecisionError",
    "bracket_power_integrand",
    "convergence_probe",
    "functional_equation_check",
    "functional_equation_residual",
    "integrate",
    "moment_integral",
    "truncated_integral",
    "vp",
]

CoeffLike = Union[RatFuncQ, Fraction, int]


class PrecisionError(ArithmeticError):
    """Modular arithmetic hit a denominator divisible by p."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def vp(r: Union[Fraction, int], p: int) -> int:
    """p-adic valuation of a nonzero rational (|r|_p = p^-vp(r))."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    r = Fraction(r)
    if r == 0:
        raise ValueError("valuation of zero is undefined (callers treat it as +infinity)")
    v = 0
    n = r.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = r.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


@dataclass(frozen=True)
class PadicContext:
    """Odd prime p, truncation level N, working precision M, and a
    rational q with v_p(q - 1) >= 1 and a p-free denominator."""

    p: int
    N: int
    q: Fraction
    M: int = -1  # -1 means "default to N + 4 guard digits"

    def __post_init__(self):
        if self.p < 3 or not _is_prime(self.p):
            raise ValueError("p must be an odd prime")
        if self.N < 0:
            raise ValueError("truncation level must be nonnegative")
        q = Fraction(self.q)
        object.__setattr__(self, "q", q)
        if q.denominator % self.p == 0:
            raise ValueError("q must have a p-free denominator")
        if q == 1 or vp(q - 1, self.p) < 1:
            raise ValueError("q must satisfy v_p(q - 1) >= 1")
        if self.M == -1:
            object.__setattr__(self, "M", self.N + 4)
        if self.M < self.N:
            raise ValueError("working precision M must be at least N")


class IntegrandSpec:
    """Finite combination x -> sum_m c_m q^(m x).

    Exponents m are integers; coefficients live in Q(q) (rational
    constants embed as constant rational functions).  Zero coefficients
    are dropped.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, CoeffLike]):
        out: dict[int, RatFuncQ] = {}
        for m, c in terms.items():
            c = c if isinstance(c, RatFuncQ) else RatFuncQ(c)
            if not c.is_zero:
                out[int(m)] = c
        self._terms = out

    def items(self) -> list[tuple[int, RatFuncQ]]:
        return sorted(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntegrandSpec):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def at_zero(self) -> RatFuncQ:
        """f(0), the sum of all coefficients."""
        total = ZERO
        for _, c in self.items():
            total = total + c
        return total

    def shifted(self, k: int = 1) -> "IntegrandSpec":
        """The integrand x -> f(x + k); each c_m picks up a factor q^(m k)."""
        return IntegrandSpec({m: c * q_power(m * k) for m, c in self._terms.items()})

    def __add__(self, other: "IntegrandSpec") -> "IntegrandSpec":
        merged = dict(self._terms)
        for m, c in other._terms.items():
            merged[m] = merged.get(m, ZERO) + c
        return IntegrandSpec(merged)

    def __rmul__(self, scalar: CoeffLike) -> "IntegrandSpec":
        return IntegrandSpec({m: scalar * c for m, c in self._terms.items()})

    __mul__ = __rmul__

    def describe(self) -> str:
        if not self._terms:
            return "0"
        return "; ".join(f"{m}: {c}" for m, c in self.items())

    def __repr__(self) -> str:
        return f"IntegrandSpec({{{self.describe()}}})"


def bracket_power_integrand(x: int, scale: int, power: int, *, sign: int = 1,
                            exp_shift: int = 0) -> IntegrandSpec:
    """Binomial expansion of q^(exp_shift * xi) [x + sign*xi]_{q^scale}^power.

    [x + s xi]_{q^a}^n = (1 - q^a)^-n sum_l C(n,l) (-1)^l q^(a l x) q^(a l s xi),
    so the term at exponent m = a*l*sign + exp_shift carries coefficient
    (1 - q^a)^-n C(n,l) (-1)^l q^(a l x).
    """
    if scale == 0:
        raise ValueError("bracket scale must be nonzero")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if power < 0:
        raise ValueError("power must be nonnegative")
    if power == 0:
        return IntegrandSpec({exp_shift: ONE})
    prefactor = (ONE - q_power(scale)) ** (-power)
    terms: dict[int, RatFuncQ] = {}
    for l in range(power + 1):
        m = scale * l * sign + exp_shift
        coeff = prefactor * ((-1) ** l * binomial(power, l)) * q_power(scale * l * x)
        terms[m] = terms.get(m, ZERO) + coeff
    return IntegrandSpec(terms)


# ---------------------------------------------------------------------------
# exact moments and symbolic integration
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def moment_integral(m: int, normalized: bool = True) -> RatFuncQ:
    """Exact value of the integral of q^(m x): [2]_q / (1 + q^(m+1)).

    With ``normalized=False`` this is instead 2 / (1 + q^(m+1)), the
    p-adic limit of the raw (un-normalized) alternating sums.
    """
    num = qbracket(2, 1) if normalized else RatFuncQ(2)
    return num / (ONE + q_power(m + 1))


def integrate(spec: IntegrandSpec, normalized: bool = True) -> RatFuncQ:
    """Integrate a finite q-exponential combination; exact and linear."""
    total = ZERO
    for m, c in spec.items():
        total = total + c * moment_integral(m, normalized)
    return total


# ---------------------------------------------------------------------------
# truncated sums
# ---------------------------------------------------------------------------


def _coeff_values(spec: IntegrandSpec, q: Fraction) -> list[tuple[int, Fraction]]:
    return [(m, eval_at(c, q)) for m, c in spec.items()]


def _truncated_exact(spec: IntegrandSpec, ctx: PadicContext, normalized: bool) -> Fraction:
    q = ctx.q
    coeffs = _coeff_values(spec, q)
    count = ctx.p**ctx.N
    bases = [(c, q**m) for m, c in coeffs]
    powers = [Fraction(1)] * len(bases)
    alt = Fraction(1)
    total = Fraction(0)
    for _ in range(count):
        fx = Fraction(0)
        for i, (c, _) in enumerate(bases):
            fx += c * powers[i]
        total += fx * alt
        for i, (_, b) in enumerate(bases):
            powers[i] *= b
        alt *= -q
    if normalized:
        bracket = (1 - (-q) ** count) / (1 + q)
        total /= bracket
    return total


def _to_mod(r: Fraction, p: int, mod: int) -> int:
    if r.denominator % p == 0:
        raise PrecisionError(
            f"denominator {r.denominator} divisible by p={p}; raise M or use the exact path"
        )
    return r.numerator * pow(r.denominator, -1, mod) % mod


def _truncated_modular(spec: IntegrandSpec, ctx: PadicContext, normalized: bool) -> Fraction:
    p, mod = ctx.p, ctx.p**ctx.M
    q = ctx.q
    qm = _to_mod(q, p, mod)
    q_inv = pow(qm, -1, mod)
    coeffs = _coeff_values(spec, q)
    bases = []
    for m, c in coeffs:
        base = pow(qm, m, mod) if m >= 0 else pow(q_inv, -m, mod)
        bases.append((_to_mod(c, p, mod), base))
    count = ctx.p**ctx.N
    neg_q = (-qm) % mod
    powers = [1] * len(bases)
    alt = 1
    total = 0
    for _ in range(count):
        fx = 0
        for i, (c, _) in enumerate(bases):
            fx += c * powers[i]
        total = (total + fx * alt) % mod
        for i, (_, b) in enumerate(bases):
            powers[i] = powers[i] * b % mod
        alt = alt * neg_q % mod
    if normalized:
        bracket = (1 - pow(neg_q, count, mod)) * pow((1 + qm) % mod, -1, mod) % mod
        total = total * pow(bracket, -1, mod) % mod
    return Fraction(total)


def truncated_integral(spec: IntegrandSpec, ctx: PadicContext, *,
                       normalized: bool = True, method: str = "auto") -> Fraction:
    """Truncated sum S_N(f) at q = ctx.q.

    Exact rational for N <= 4 (or ``method="exact"``); for larger N the
    value is a reduced representative mod p^M (``method="modular"``).
    The raw sum without the 1/[p^N]_{-q} normalizer is available via
    ``normalized=False``.
    """
    if method == "auto":
        method = "exact" if ctx.N <= 4 else "modular"
    if method == "exact":
        return _truncated_exact(spec, ctx, normalized)
    if method == "modular":
        return _truncated_modular(spec, ctx, normalized)
    raise ValueError(f"unknown method: {method!r}")


# ---------------------------------------------------------------------------
# convergence diagnostics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConvergenceTrace:
    """Valuations of S_N(f) - L for increasing N, against the exact limit L.

    ``constant`` is the smallest C with vp(S_N - L) >= N - C across the
    trace (None when every difference vanished exactly).
    """

    p: int
    q: Fraction
    entries: tuple[tuple[int, float], ...]
    limit: Fraction
    constant: int | None

    def valuations(self) -> list[float]:
        return [v for _, v in self.entries]


def convergence_probe(spec: IntegrandSpec, p: int, q: Union[Fraction, int],
                      N_list: Iterable[int], M: int | None = None) -> ConvergenceTrace:
    """Measure vp(S_N(f) - L) for each N, where L is the exact symbolic
    integral evaluated at q.  Raises if the valuation sequence ever
    decreases (it is asserted, not assumed)."""
    q = Fraction(q)
    limit = eval_at(integrate(spec), q)
    entries: list[tuple[int, float]] = []
    previous = -math.inf
    for N in sorted(set(int(n) for n in N_list)):
        ctx = PadicContext(p=p, N=N, q=q, M=(M if M is not None else -1))
        method = "exact" if N <= 4 else "modular"
        s_n = truncated_integral(spec, ctx, method=method)
        diff = s_n - limit
        if diff == 0:
            v: float = math.inf
        else:
            v = vp(diff, p)
            if method == "modular":
                v = min(v, ctx.M)
        if v < previous:
            raise ValueError(
                f"valuation sequence decreased at N={N}: {v} < {previous}"
            )
        previous = v
        entries.append((N, v))
    finite = [N - int(v) for N, v in entries if v != math.inf]
    constant = max(finite) if finite else None
    return ConvergenceTrace(p=p, q=q, entries=tuple(entries), limit=limit,
                            constant=constant)


# ---------------------------------------------------------------------------
# the q-shift functional equation
# ---------------------------------------------------------------------------


def functional_equation_residual(spec: IntegrandSpec, normalized: bool = True) -> RatFuncQ:
    """q I(f1) + I(f) - [2]_q f(0), with f1(x) = f(x + 1).

    Zero for every integrand under the normalized integral; under the
    unnormalized reading it equals (2 - [2]_q) f(0) instead.
    """
    lhs = q_power(1) * integrate(spec.shifted(1), normalized) + integrate(spec, normalized)
    return lhs - qbracket(2, 1) * spec.at_zero()


def functional_equation_check(spec: IntegrandSpec) -> VerificationRecord:
    """PASS iff q I(f1) + I(f) equals [2]_q f(0) as canonical forms."""
    lhs = q_power(1) * integrate(spec.shifted(1)) + integrate(spec)
    rhs = qbracket(2, 1) * spec.at_zero()
    return compare("functional-equation", (("spec", spec.describe()),), lhs, rhs)
