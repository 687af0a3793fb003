"""Weighted (h,q)-Genocchi numbers and polynomials, by three exact routes.

For a weight alpha >= 1 and auxiliary exponent h >= 1, the polynomial of
index n >= 1 at an integer point x is n times the fermionic p-adic
q-integral of q^((h-1) xi) [x + xi]_{q^alpha}^(n-1); index 0 is 0 by
convention.  Three independent computations are provided:

closed form    expand the bracket power binomially and integrate each
               q-exponential moment exactly:
               n [2]_q (1 - q^alpha)^-(n-1)
                 * sum_l C(n-1, l) (-1)^l q^(alpha l x) / (1 + q^(alpha l + h));

recurrence     numbers only: (1 + q^h) g_1 = [2]_q and, for n > 1,
               (1 + q^(h + alpha (n-1))) g_n
                   = -q^(h - alpha) sum_{k=1}^{n-1} C(n, k) q^(alpha k) g_k;

umbral         polynomials from numbers:
               g_n(x) = q^(-alpha x) sum_k C(n, k) q^(alpha k x) g_k [x]_{q^alpha}^(n-k),
               under the convention that the 0-th symbolic power maps to
               g_0 = 0 (not to 1);

plus a fourth, numeric route through truncated p-adic sums that must
converge to the closed form at any admissible rational q.

All routes agree structurally; the q -> 1 limit of the (alpha=1, h=1)
numbers reproduces the classical Genocchi integers generated by
2t/(e^t + 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from qgen.padic import (
    ConvergenceTrace,
    PadicContext,
    bracket_power_integrand,
    convergence_probe,
)
from qgen.qcore import ONE, RatFuncQ, ZERO, binomial, eval_at, q_power, qbracket

__all__ = [
    "GenocchiTable",
    "ROUTE_CLOSED",
    "ROUTE_INTEGRAL",
    "ROUTE_RECURRENCE",
    "ROUTE_UMBRAL",
    "WeightParams",
    "build_table",
    "classical_genocchi",
    "unweighted_recurrence_residual",
    "unweighted_reductions",
    "weighted_genocchi_integral_route",
    "weighted_genocchi_number",
    "weighted_genocchi_poly_closed",
    "weighted_genocchi_poly_umbral",
    "weighted_genocchi_recurrence",
]

ROUTE_CLOSED = "closed-form"
ROUTE_RECURRENCE = "recurrence"
ROUTE_UMBRAL = "umbral"
ROUTE_INTEGRAL = "integral"


@dataclass(frozen=True)
class WeightParams:
    """Weight alpha >= 1 and auxiliary exponent h >= 1.

    alpha = 0 degenerates the defining bracket ([x]_{q^0} is 0/0) and is
    rejected even though weight 0 formally appears in the literature.
    """

    alpha: int
    h: int

    def __post_init__(self):
        if self.alpha < 1:
            raise ValueError("weight alpha must be a positive integer")
        if self.h < 1:
            raise ValueError("h must be a positive integer")


@lru_cache(maxsize=None)
def _closed(n: int, alpha: int, h: int, x: int) -> RatFuncQ:
    if n == 0:
        return ZERO
    acc = ZERO
    for l in range(n):
        term = (
            ((-1) ** l * binomial(n - 1, l))
            * q_power(alpha * l * x)
            / (ONE + q_power(alpha * l + h))
        )
        acc = acc + term
    acc = (n * qbracket(2, 1)) * acc
    if n > 1:
        acc = acc / (ONE - q_power(alpha)) ** (n - 1)
    return acc


def weighted_genocchi_poly_closed(n: int, w: WeightParams, x: int) -> RatFuncQ:
    """Closed-form polynomial value via exact moments.

    The apparent (1 - q^alpha) pole always cancels structurally, so the
    result is regular at q = 1 and eval_at(., 1) is defined.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    return _closed(n, w.alpha, w.h, x)


def weighted_genocchi_number(n: int, w: WeightParams) -> RatFuncQ:
    """The number g_n = g_n(0); index 0 gives 0."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    return _closed(n, w.alpha, w.h, 0)


@lru_cache(maxsize=None)
def _recurrence_number(n: int, alpha: int, h: int) -> RatFuncQ:
    if n == 0:
        return ZERO
    if n == 1:
        return qbracket(2, 1) / (ONE + q_power(h))
    acc = ZERO
    for k in range(1, n):
        acc = acc + binomial(n, k) * q_power(alpha * k) * _recurrence_number(k, alpha, h)
    return -(q_power(h - alpha) * acc) / (ONE + q_power(h + alpha * (n - 1)))


def weighted_genocchi_recurrence(n_max: int, w: WeightParams) -> dict[int, RatFuncQ]:
    """Numbers g_0 .. g_{n_max} computed solely from the umbral recurrence."""
    if n_max < 1:
        raise ValueError("n_max must be a positive integer")
    return {n: _recurrence_number(n, w.alpha, w.h) for n in range(n_max + 1)}


@lru_cache(maxsize=None)
def _umbral(n: int, alpha: int, h: int, x: int) -> RatFuncQ:
    acc = ZERO
    bracket = qbracket(x, alpha)
    for k in range(n + 1):
        g_k = _recurrence_number(k, alpha, h)
        if g_k.is_zero:
            continue
        acc = acc + binomial(n, k) * q_power(alpha * k * x) * g_k * bracket ** (n - k)
    return q_power(-alpha * x) * acc


def weighted_genocchi_poly_umbral(n: int, w: WeightParams, x: int) -> RatFuncQ:
    """Umbral expansion of the polynomial from the recurrence numbers.

    Implements q^(-alpha x) (q^(alpha x) g + [x]_{q^alpha})^n with the
    running index on g and the convention g^0 -> g_0 = 0; structurally
    equal to the closed form at every integer x.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    return _umbral(n, w.alpha, w.h, x)


def weighted_genocchi_integral_route(n: int, w: WeightParams, x: int,
                                     ctx: PadicContext,
                                     N_list: list[int] | None = None) -> ConvergenceTrace:
    """Numeric route: truncated alternating sums of the defining integrand.

    Probes convergence over N_list (default 0..ctx.N) and checks that the
    p-adic limit equals the closed form at q = ctx.q divided by n.
    """
    if n < 1:
        raise ValueError("index must be positive for the integral route")
    spec = bracket_power_integrand(x, w.alpha, n - 1, exp_shift=w.h - 1)
    Ns = list(N_list) if N_list is not None else list(range(ctx.N + 1))
    trace = convergence_probe(spec, ctx.p, ctx.q, Ns, M=ctx.M)
    expected = eval_at(_closed(n, w.alpha, w.h, x), ctx.q) / n
    if trace.limit != expected:
        raise ArithmeticError(
            f"integral-route limit {trace.limit} != closed form / n = {expected}"
        )
    return trace


# ---------------------------------------------------------------------------
# classical limit and unweighted specializations
# ---------------------------------------------------------------------------

_genocchi_cache: list[Fraction] = []


def classical_genocchi(n: int) -> Fraction:
    """n! times the t^n coefficient of 2t/(e^t + 1), by exact series division.

    Always an integer (returned as a Fraction); odd indices >= 3 vanish.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    while len(_genocchi_cache) <= n:
        j = len(_genocchi_cache)
        # denominator series e^t + 1: constant 2, then 1/j!
        num_j = Fraction(2) if j == 1 else Fraction(0)
        acc = num_j
        for i in range(j):
            c_i = _genocchi_cache[i] / factorial(i)
            acc -= c_i * Fraction(1, factorial(j - i))
        _genocchi_cache.append(acc / 2 * factorial(j))
    return _genocchi_cache[n]


def unweighted_reductions(n: int, variant: str, h: int | None = None) -> RatFuncQ:
    """q-Genocchi and (h,q)-Genocchi numbers as weight-1 specializations.

    variant "q-genocchi" is the weight-1, h=2 family; "hq-genocchi"
    requires h and is the weight-1 family at that h.
    """
    if variant == "q-genocchi":
        return weighted_genocchi_number(n, WeightParams(1, 2))
    if variant == "hq-genocchi":
        if h is None:
            raise ValueError("hq-genocchi requires h")
        return weighted_genocchi_number(n, WeightParams(1, h))
    raise ValueError(f"unknown variant: {variant!r}")


def unweighted_recurrence_residual(n: int, h: int) -> RatFuncQ:
    """Residual of the printed umbral recurrence for the weight-1 family:

        q^(h-1) (q g + 1)^n + g_n - [2]_q delta_{n,1}

    with g^k -> g_k and g^0 -> g_0 = 0.  The q-Genocchi case is h = 2.
    Zero certifies that the reductions satisfy their own recurrences.
    """
    w = WeightParams(1, h)
    acc = ZERO
    for k in range(n + 1):
        acc = acc + binomial(n, k) * q_power(k) * weighted_genocchi_number(k, w)
    residual = q_power(h - 1) * acc + weighted_genocchi_number(n, w)
    if n == 1:
        residual = residual - qbracket(2, 1)
    return residual


# ---------------------------------------------------------------------------
# memo table with provenance
# ---------------------------------------------------------------------------


class GenocchiTable:
    """Memoized values indexed by (n, alpha, h, x) with route tags.

    Recording the same index from two routes cross-checks them: a
    structural mismatch raises immediately.
    """

    def __init__(self):
        self._values: dict[tuple[int, int, int, int], RatFuncQ] = {}
        self._routes: dict[tuple[int, int, int, int], set[str]] = {}

    def record(self, n: int, w: WeightParams, x: int, value: RatFuncQ, route: str) -> None:
        key = (n, w.alpha, w.h, x)
        existing = self._values.get(key)
        if existing is not None and existing != value:
            raise ValueError(
                f"route disagreement at {key}: {route} produced {value}, "
                f"table holds {existing} from {sorted(self._routes[key])}"
            )
        self._values[key] = value
        self._routes.setdefault(key, set()).add(route)

    def value(self, n: int, w: WeightParams, x: int = 0) -> RatFuncQ:
        return self._values[(n, w.alpha, w.h, x)]

    def routes(self, n: int, w: WeightParams, x: int = 0) -> set[str]:
        return set(self._routes[(n, w.alpha, w.h, x)])

    def entries(self) -> list[tuple[tuple[int, int, int, int], RatFuncQ, set[str]]]:
        return [
            (key, self._values[key], set(self._routes[key]))
            for key in sorted(self._values)
        ]

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, key: tuple[int, int, int, int]) -> bool:
        return key in self._values


def build_table(n_max: int, w: WeightParams, xs: tuple[int, ...] = (0,),
                routes: tuple[str, ...] = (ROUTE_CLOSED, ROUTE_RECURRENCE, ROUTE_UMBRAL)
                ) -> GenocchiTable:
    """Fill a table over n = 0..n_max and the given x values, cross-checking
    every requested route against the others."""
    table = GenocchiTable()
    if ROUTE_RECURRENCE in routes:
        for n, value in weighted_genocchi_recurrence(max(n_max, 1), w).items():
            if n <= n_max:
                table.record(n, w, 0, value, ROUTE_RECURRENCE)
    for x in xs:
        for n in range(n_max + 1):
            if ROUTE_CLOSED in routes:
                table.record(n, w, x, weighted_genocchi_poly_closed(n, w, x), ROUTE_CLOSED)
            if ROUTE_UMBRAL in routes:
                table.record(n, w, x, weighted_genocchi_poly_umbral(n, w, x), ROUTE_UMBRAL)
    return table
