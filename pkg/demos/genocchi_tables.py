#!/usr/bin/env python3
"""Walkthrough: weighted Genocchi numbers by three exact routes.

Builds small tables for a few weights, shows that the closed form, the
umbral recurrence and the umbral polynomial expansion produce identical
canonical rational functions, and takes the q -> 1 limit back to the
classical Genocchi integers.
"""

from fractions import Fraction

from qgen.genocchi import (
    WeightParams,
    classical_genocchi,
    weighted_genocchi_number,
    weighted_genocchi_poly_closed,
    weighted_genocchi_poly_umbral,
    weighted_genocchi_recurrence,
)
from qgen.qcore import eval_at


def main() -> None:
    print("Weighted (h,q)-Genocchi numbers, three routes, exact in Q(q)")
    print("=" * 64)

    for alpha, h in ((1, 1), (1, 2), (2, 3)):
        w = WeightParams(alpha, h)
        recurrence = weighted_genocchi_recurrence(6, w)
        print(f"\nweight alpha={alpha}, h={h}")
        for n in range(7):
            closed = weighted_genocchi_number(n, w)
            assert closed == recurrence[n], "route disagreement"
            assert closed == weighted_genocchi_poly_umbral(n, w, 0)
            print(f"  g_{n} = {closed}")

    print("\nPolynomial values at x = 2 (weight 1, h = 1):")
    w = WeightParams(1, 1)
    for n in range(1, 6):
        value = weighted_genocchi_poly_closed(n, w, 2)
        assert value == weighted_genocchi_poly_umbral(n, w, 2)
        print(f"  g_{n}(2) = {value}")

    print("\nq -> 1 limit of the (alpha=1, h=1) numbers vs the classical")
    print("Genocchi integers from the generating function 2t/(e^t + 1):")
    for n in range(13):
        limit = eval_at(weighted_genocchi_number(n, w), 1)
        classical = classical_genocchi(n)
        marker = "ok" if limit == classical else "MISMATCH"
        print(f"  n={n:<3} limit={str(limit):>6}   classical={str(classical):>6}   {marker}")


if __name__ == "__main__":
    main()
