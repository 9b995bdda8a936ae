#!/usr/bin/env python3
"""Solve odd cycles and compare against the closed form n cos(pi/n)/(1 + cos(pi/n))."""

import math

import numpy as np

from loorkit import ExclusivityGraph, independence_number, lovasz_theta


def main() -> None:
    print(f"{'n':>3} {'alpha':>6} {'theta (SDP)':>14} {'closed form':>14} {'gap':>10}")
    for n in range(5, 16, 2):
        g = ExclusivityGraph(
            n=n, weights=np.ones(n), edges=tuple((i, (i + 1) % n) for i in range(n))
        )
        alpha, _ = independence_number(g)
        sol = lovasz_theta(g, tol=1e-8)
        c = math.cos(math.pi / n)
        reference = n * c / (1.0 + c)
        print(f"{n:>3} {alpha:>6.1f} {sol.value:>14.9f} {reference:>14.9f} "
              f"{abs(sol.value - reference):>10.2e}")


if __name__ == "__main__":
    main()
