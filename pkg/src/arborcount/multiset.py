"""Multiset counting operators on power series.

If a(x) counts a family of objects by size, ``pairs(a)`` counts unordered
pairs of objects and ``multisets(a)`` counts all finite multisets (the Euler
transform of a's coefficients).
"""

from __future__ import annotations

from .series import NonzeroConstantTerm, PowerSeries


def pairs(a: PowerSeries) -> PowerSeries:
    """Count 2-element multisets: (a(x)^2 + a(x^2)) / 2.

    a(x)^2 counts ordered pairs, so it double-counts pairs of distinct
    objects and single-counts repeated ones; adding a(x^2), which counts the
    repeated pairs, makes every multiset counted exactly twice.  The halving
    is therefore always exact for integer input.
    """
    return (a * a + a.scale_exponents(2)).div_exact(2)


def multisets(a: PowerSeries) -> PowerSeries:
    """Count all multisets of objects weighted by a(x).

    Requires a zero constant coefficient (an object of size 0 could be
    repeated indefinitely, making every count infinite).

    Rather than exponentiating sum_k a(x^k)/k, which has fractional
    coefficients, this uses the equivalent integer recurrence

        n*g_n = sum_{m=1}^{n} c_m * g_{n-m},   c_m = sum_{d | m} d * a_d,

    with g_0 = 1.  Each division by n is exact because the Euler transform
    of an integer sequence is integral.
    """
    if a.coeffs[0] != 0:
        raise NonzeroConstantTerm("multiset counting needs a zero constant term")
    n = a.order
    c = [0] * (n + 1)
    for d in range(1, n + 1):
        ad = a.coeffs[d]
        if ad:
            for m in range(d, n + 1, d):
                c[m] += d * ad
    g = [1] + [0] * n
    for m in range(1, n + 1):
        acc = 0
        for j in range(1, m + 1):
            if c[j]:
                acc += c[j] * g[m - j]
        g[m] = acc // m
        assert g[m] * m == acc, "Euler transform produced a non-integer"
    return PowerSeries(g)
