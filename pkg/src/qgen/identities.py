"""Mechanical verifiers for the weighted Genocchi identities.

Each verifier computes both sides of one identity as canonical rational
functions of q and records PASS or FAIL by structural equality; a sweep
driver maps the parameter domains where each identity holds.

Domain policy: parameters inside an identity's asserted domain produce
PASS/FAIL records that gate regressions; probes outside it (e.g. the
shift identity below its stated n > 1) are recorded with BOUNDARY-*
statuses and never gate.  Where an identity as printed fails on part of
its stated domain, a corrected variant (the same equation with the
binomial prefactors restored, which is the underlying equality of
integrals) is registered alongside the as-stated record; nothing is
substituted silently.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from itertools import product
from math import comb

from qgen.genocchi import WeightParams, weighted_genocchi_number, weighted_genocchi_poly_closed
from qgen.padic import bracket_power_integrand, integrate
from qgen.qcore import ONE, RatFuncQ, binomial, q_power, qbracket, subst_q_inverse
from qgen.records import (
    AS_STATED,
    BOUNDARY_FAIL,
    BOUNDARY_PASS,
    CORRECTED,
    FAIL,
    PASS,
    VerificationRecord,
    compare,
)

__all__ = [
    "SweepConfig",
    "SweepReport",
    "THEOREMS",
    "sweep",
    "unresolved_failures",
    "verify_bernstein_double",
    "verify_bernstein_multi",
    "verify_bernstein_single",
    "verify_integral_reflect",
    "verify_integral_shift",
    "verify_shift2",
    "verify_symmetry",
]

THEOREMS = (
    "symmetry",
    "shift2",
    "integral-shift",
    "integral-reflect",
    "bernstein-single",
    "bernstein-double",
    "bernstein-multi",
)


def _number(n: int, w: WeightParams) -> RatFuncQ:
    return weighted_genocchi_number(n, w)


def _number_inv(n: int, w: WeightParams) -> RatFuncQ:
    return subst_q_inverse(weighted_genocchi_number(n, w))


def _weight_params(w: WeightParams) -> tuple[tuple[str, int], ...]:
    return (("alpha", w.alpha), ("h", w.h))


def verify_symmetry(n: int, w: WeightParams, x: int) -> VerificationRecord:
    """g_{n+1}(1-x) at 1/q against (-1)^n q^(h + alpha n - 1) g_{n+1}(x)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    lhs = subst_q_inverse(weighted_genocchi_poly_closed(n + 1, w, 1 - x))
    rhs = ((-1) ** n) * q_power(w.h + w.alpha * n - 1) * weighted_genocchi_poly_closed(n + 1, w, x)
    params = (("n", n),) + _weight_params(w) + (("x", x),)
    return compare("symmetry", params, lhs, rhs)


def verify_shift2(n: int, w: WeightParams) -> VerificationRecord:
    """g_n(2) against n q^-h [2]_q + q^-2h g_n; asserted for n > 1 only,
    with n in {0, 1} recorded as boundary probes."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    lhs = weighted_genocchi_poly_closed(n, w, 2)
    rhs = n * q_power(-w.h) * qbracket(2, 1) + q_power(-2 * w.h) * _number(n, w)
    params = (("n", n),) + _weight_params(w)
    return compare("shift2", params, lhs, rhs, boundary=(n < 2))


def _reflected_integrand(n: int, w: WeightParams):
    # q^((h-1) xi) [1 - xi]_{q^-alpha}^n, expanded to exact moments
    return bracket_power_integrand(1, -w.alpha, n, sign=-1, exp_shift=w.h - 1)


def verify_integral_shift(n: int, w: WeightParams) -> VerificationRecord:
    """Integral of q^((h-1)(xi+1)) [1-xi]_{q^-alpha}^n against
    g_{n+1}(2) at 1/q divided by n+1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    lhs = q_power(w.h - 1) * integrate(_reflected_integrand(n, w))
    rhs = subst_q_inverse(weighted_genocchi_poly_closed(n + 1, w, 2)) / (n + 1)
    params = (("n", n),) + _weight_params(w)
    return compare("integral-shift", params, lhs, rhs)


def verify_integral_reflect(n: int, w: WeightParams) -> VerificationRecord:
    """Integral of q^((h-1) xi) [1-xi]_{q^-alpha}^n against
    [2]_q + q^(h+1) g_{n+1} at 1/q divided by n+1; asserted for n >= 1,
    n = 0 is a boundary probe (it fails, fixing the implicit domain)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    lhs = integrate(_reflected_integrand(n, w))
    rhs = qbracket(2, 1) + q_power(w.h + 1) * _number_inv(n + 1, w) / (n + 1)
    params = (("n", n),) + _weight_params(w)
    return compare("integral-reflect", params, lhs, rhs, boundary=(n < 1))


def _alternating_genocchi_sum(count: int, offset: int, w: WeightParams) -> RatFuncQ:
    # sum_{l=0}^{count} C(count, l) (-1)^l g_{l+offset+1} / (l+offset+1)
    total = RatFuncQ(0)
    for l in range(count + 1):
        coeff = (-1) ** l * binomial(count, l)
        total = total + coeff * _number(l + offset + 1, w) / (l + offset + 1)
    return total


def _reflected_rhs(total_degree: int, k_count: int, w: WeightParams) -> RatFuncQ:
    # k = 0 branch: [2]_q + q^(h+1) g_{D+1}(1/q) / (D+1);
    # k != 0 branch: sum_{l=0}^{K} C(K,l) (-1)^(K+l) {same at D-l}
    if k_count == 0:
        return qbracket(2, 1) + q_power(w.h + 1) * _number_inv(total_degree + 1, w) / (total_degree + 1)
    total = RatFuncQ(0)
    for l in range(k_count + 1):
        inner = qbracket(2, 1) + q_power(w.h + 1) * _number_inv(total_degree - l + 1, w) / (total_degree - l + 1)
        total = total + ((-1) ** (k_count + l) * binomial(k_count, l)) * inner
    return total


def verify_bernstein_single(n: int, k: int, w: WeightParams) -> VerificationRecord:
    """Single-basis integral identity, stated for n > k >= 0."""
    if not n > k >= 0:
        raise ValueError("requires n > k >= 0")
    lhs = _alternating_genocchi_sum(n - k, k, w)
    rhs = _reflected_rhs(n, k, w)
    params = (("n", n), ("k", k)) + _weight_params(w)
    return compare("bernstein-single", params, lhs, rhs)


def verify_bernstein_multi(n_list: list[int], k: int, w: WeightParams,
                           variant: str = AS_STATED) -> VerificationRecord:
    """Product-of-s-bases integral identity, stated for s >= 2 and
    sum(n_i) > s k.

    The as-stated equation has the product of binomials C(n_i, k)
    cancelled from both sides; the corrected variant keeps that product,
    which restores the literal equality of the two integral expansions
    (trivially 0 = 0 when some C(n_i, k) vanishes).
    """
    s = len(n_list)
    if s < 2:
        raise ValueError("requires at least two basis factors")
    if k < 0 or any(n < 0 for n in n_list):
        raise ValueError("indices must be nonnegative")
    total_degree = sum(n_list)
    if total_degree <= s * k:
        raise ValueError("requires sum(n_i) > s*k")
    lhs = _alternating_genocchi_sum(total_degree - s * k, s * k, w)
    rhs = _reflected_rhs(total_degree, s * k, w)
    if variant == CORRECTED:
        prefactor = 1
        for n_i in n_list:
            prefactor *= binomial(n_i, k)
        lhs = prefactor * lhs
        rhs = prefactor * rhs
    elif variant != AS_STATED:
        raise ValueError(f"unknown variant: {variant!r}")
    params = (
        ("n_list", ",".join(str(n) for n in n_list)),
        ("k", k),
        ("s", s),
    ) + _weight_params(w)
    return compare("bernstein-multi", params, lhs, rhs, variant=variant)


def verify_bernstein_double(n1: int, n2: int, k: int, w: WeightParams,
                            variant: str = AS_STATED) -> VerificationRecord:
    """Two-basis special case; identical content to the multi verifier at
    s = 2, relabeled with its own theorem id and (n1, n2) parameters."""
    rec = verify_bernstein_multi([n1, n2], k, w, variant=variant)
    params = (("n1", n1), ("n2", n2), ("k", k)) + _weight_params(w)
    return replace(rec, theorem="bernstein-double", params=params)


# ---------------------------------------------------------------------------
# sweep driver
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SweepConfig:
    """Finite parameter grids for every verifier.

    Defaults cover the standard regression grid; shrink the maxima (or
    use `empty`) for quicker runs.  A range with max < min contributes
    no records.
    """

    n_min: int = 0
    n_max: int = 8            # symmetry and integral-shift index range
    scalar_n_min: int = 0
    scalar_n_max: int = 10    # shift2 and integral-reflect index range
    alpha_min: int = 1
    alpha_max: int = 3
    h_min: int = 1
    h_max: int = 3
    x_min: int = -2
    x_max: int = 3
    single_n_max: int = 8
    pair_n_min: int = 1
    pair_n_max: int = 4
    multi_n_min: int = 1
    multi_n_max: int = 3
    s_min: int = 2
    s_max: int = 3
    product_alpha_max: int = 2
    product_h_max: int = 2

    @classmethod
    def empty(cls) -> "SweepConfig":
        return cls(n_max=-1, scalar_n_max=-1, alpha_max=0, h_max=0,
                   x_max=-3, single_n_max=0, pair_n_max=0, multi_n_max=0,
                   s_max=1, product_alpha_max=0, product_h_max=0)

    def _weights(self, product_grid: bool = False) -> list[WeightParams]:
        a_hi = self.product_alpha_max if product_grid else self.alpha_max
        h_hi = self.product_h_max if product_grid else self.h_max
        return [
            WeightParams(a, h)
            for a in range(self.alpha_min, a_hi + 1)
            for h in range(self.h_min, h_hi + 1)
        ]


_Task = tuple[str, tuple]


def _tasks(config: SweepConfig) -> list[_Task]:
    tasks: list[_Task] = []
    weights = config._weights()
    product_weights = config._weights(product_grid=True)
    for n in range(config.n_min, config.n_max + 1):
        for w in weights:
            for x in range(config.x_min, config.x_max + 1):
                tasks.append(("symmetry", (n, w, x)))
    for n in range(config.scalar_n_min, config.scalar_n_max + 1):
        for w in weights:
            tasks.append(("shift2", (n, w)))
    for n in range(config.n_min, config.n_max + 1):
        for w in weights:
            tasks.append(("integral-shift", (n, w)))
    for n in range(config.scalar_n_min, config.scalar_n_max + 1):
        for w in weights:
            tasks.append(("integral-reflect", (n, w)))
    for n in range(1, config.single_n_max + 1):
        for k in range(n):
            for w in product_weights:
                tasks.append(("bernstein-single", (n, k, w)))
    for n1 in range(config.pair_n_min, config.pair_n_max + 1):
        for n2 in range(config.pair_n_min, config.pair_n_max + 1):
            for k in range((n1 + n2 - 1) // 2 + 1):
                for w in product_weights:
                    tasks.append(("bernstein-double", (n1, n2, k, w)))
    for s in range(config.s_min, config.s_max + 1):
        for n_list in product(range(config.multi_n_min, config.multi_n_max + 1), repeat=s):
            total = sum(n_list)
            for k in range((total - 1) // s + 1):
                if total > s * k:
                    for w in product_weights:
                        tasks.append(("bernstein-multi", (list(n_list), k, w)))
    return tasks


def _run_task(task: _Task) -> list[VerificationRecord]:
    theorem, args = task
    if theorem == "symmetry":
        return [verify_symmetry(*args)]
    if theorem == "shift2":
        return [verify_shift2(*args)]
    if theorem == "integral-shift":
        return [verify_integral_shift(*args)]
    if theorem == "integral-reflect":
        return [verify_integral_reflect(*args)]
    if theorem == "bernstein-single":
        return [verify_bernstein_single(*args)]
    if theorem == "bernstein-double":
        rec = verify_bernstein_double(*args)
        if rec.status == FAIL:
            return [rec, verify_bernstein_double(*args, variant=CORRECTED)]
        return [rec]
    if theorem == "bernstein-multi":
        rec = verify_bernstein_multi(*args)
        if rec.status == FAIL:
            return [rec, verify_bernstein_multi(*args, variant=CORRECTED)]
        return [rec]
    raise ValueError(f"unknown theorem: {theorem!r}")


@dataclass(frozen=True)
class SweepReport:
    """Deterministically ordered records plus per-theorem summary counts
    and the detected domain boundaries (status flips along n)."""

    records: tuple[VerificationRecord, ...]
    summary: dict[str, dict[str, int]] = field(default_factory=dict)
    boundaries: tuple[dict, ...] = ()


def _summarize(records: tuple[VerificationRecord, ...]) -> dict[str, dict[str, int]]:
    summary: dict[str, dict[str, int]] = {}
    for rec in records:
        per = summary.setdefault(rec.theorem, {})
        key = rec.status if rec.variant == AS_STATED else f"{rec.variant}-{rec.status}"
        per[key] = per.get(key, 0) + 1
        per["total"] = per.get("total", 0) + 1
    return {t: dict(sorted(v.items())) for t, v in sorted(summary.items())}


_BOUNDARY_AXES = ("symmetry", "shift2", "integral-shift", "integral-reflect", "bernstein-single")


def _boundaries(records: tuple[VerificationRecord, ...]) -> tuple[dict, ...]:
    series: dict[tuple, list[tuple[int, str]]] = {}
    for rec in records:
        if rec.theorem not in _BOUNDARY_AXES or rec.variant != AS_STATED:
            continue
        params = rec.params_dict()
        n = params.pop("n")
        key = (rec.theorem, tuple(sorted(params.items())))
        verdict = "PASS" if rec.passed else "FAIL"
        series.setdefault(key, []).append((int(n), verdict))
    out = []
    for (theorem, rest), points in sorted(series.items()):
        points.sort()
        for (n0, v0), (n1, v1) in zip(points, points[1:]):
            if v0 != v1:
                out.append({
                    "theorem": theorem,
                    "params": " ".join(f"{k}={v}" for k, v in rest),
                    "n_from": n0,
                    "n_to": n1,
                    "flip": f"{v0}->{v1}",
                })
    return tuple(out)


def sweep(config: SweepConfig | None = None, workers: int | None = None,
          only: tuple[str, ...] | None = None) -> SweepReport:
    """Run every verifier over its grid; deterministic record order
    (theorem declaration order, then lexicographic parameters).

    `only` restricts the run to the named theorems.  Parallelism is
    capped by `workers` or the QGEN_WORKERS environment variable; the
    report ordering is schedule-independent.
    """
    config = config or SweepConfig()
    if workers is None:
        workers = int(os.environ.get("QGEN_WORKERS", "1") or "1")
    tasks = _tasks(config)
    if only is not None:
        unknown = set(only) - set(THEOREMS)
        if unknown:
            raise ValueError(f"unknown theorems: {sorted(unknown)}")
        tasks = [t for t in tasks if t[0] in only]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (workers * 8)))
            record_lists = list(chunks)
    else:
        record_lists = [_run_task(t) for t in tasks]
    records = tuple(rec for sub in record_lists for rec in sub)
    return SweepReport(records=records, summary=_summarize(records),
                       boundaries=_boundaries(records))


def unresolved_failures(report: SweepReport) -> list[VerificationRecord]:
    """Asserted-domain FAIL records with no passing variant at the same
    parameter point; these are what regression gating acts on."""
    passing: set[tuple[str, tuple]] = set()
    for rec in report.records:
        if rec.status == PASS:
            passing.add((rec.theorem, rec.params))
    return [
        rec for rec in report.records
        if rec.status == FAIL and (rec.theorem, rec.params) not in passing
    ]
