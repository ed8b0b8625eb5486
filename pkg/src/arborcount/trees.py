"""Counting series for unlabeled tree families.

Each solver returns a PowerSeries whose x^n coefficient is the number of
n-vertex trees of the family, computed exactly.  Rooted trees satisfy the
fixed point r = x * multisets(r); S-trees (rooted, no vertex with exactly
one child) satisfy s = x * (multisets(s) - s).  Both are solved degree by
degree: the leading factor x makes each new coefficient depend only on
lower-degree ones.  Free-tree families then follow by combining vertex,
edge, and vertex-edge rootings.
"""

from __future__ import annotations

import enum

from .multiset import multisets, pairs
from .series import PowerSeries


class TreeFamily(enum.Enum):
    ROOTED = "rooted"
    UNROOTED = "unrooted"
    STREE = "stree"
    HIT = "hit"
    HIT_VERTEX_ROOTED = "hit_vertex_rooted"
    HIT_EDGE_ROOTED = "hit_edge_rooted"
    HIT_VERTEX_EDGE_ROOTED = "hit_vertex_edge_rooted"


def _solve_planted(order: int, subtract_self: bool) -> PowerSeries:
    """Solve t = x * (multisets(t) - [subtract_self] * t) degree by degree.

    g tracks multisets(t) and c its divisor-sum convolution kernel; both are
    extended one degree at a time as new coefficients of t become known.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    t = [0] * (order + 1)
    t[1] = 1
    g = [0] * order  # g[m] = multisets(t) coefficient at x^m, m < order
    g[0] = 1
    c = [0] * order  # c[m] = sum_{d | m} d * t[d]
    known = 0  # t[d] folded into c for all d <= known

    for n in range(2, order + 1):
        while known < n - 1:
            known += 1
            if t[known]:
                for m in range(known, order, known):
                    c[m] += known * t[known]
        m = n - 1
        acc = 0
        for j in range(1, m + 1):
            if c[j]:
                acc += c[j] * g[m - j]
        g[m] = acc // m
        assert g[m] * m == acc
        t[n] = g[m] - t[m] if subtract_self else g[m]
    return PowerSeries(t)


def rooted_series(order: int) -> PowerSeries:
    """Unlabeled rooted trees by vertex count (1, 1, 2, 4, 9, 20, ...)."""
    return _solve_planted(order, subtract_self=False)


def rooted_series_naive(order: int) -> PowerSeries:
    """Rooted trees by whole-series successive substitution.

    Iterates t <- x * multisets(t) from t = x, gaining at least one correct
    coefficient per pass.  Much slower than rooted_series; kept as an
    independent computation path for differential testing.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    x = PowerSeries.x(order)
    t = x
    for _ in range(order):
        t = x * multisets(t)
    return t


def stree_series(order: int) -> PowerSeries:
    """Rooted trees in which no vertex has exactly one child.

    Equivalently: root degree != 1 and every non-root degree != 2.  First
    terms 1, 0, 1, 1, 2, 3, 6, ... (the 2-vertex tree is excluded because
    its root has exactly one child).
    """
    return _solve_planted(order, subtract_self=True)


def unrooted_series(order: int) -> PowerSeries:
    """Unlabeled free trees: u = r - (r^2 - r(x^2)) / 2."""
    r = rooted_series(order)
    return r - (r * r - r.scale_exponents(2)).div_exact(2)


def hit_vertex_rooted_series(order: int) -> PowerSeries:
    """Vertex-rooted trees with no vertex of free degree 2.

    The root is a vertex with any number of S-tree children other than 2:
    (1 + x) s - x * pairs(s).
    """
    s = stree_series(order)
    one_plus_x = PowerSeries.from_coeffs([1, 1], order)
    return one_plus_x * s - PowerSeries.x(order) * pairs(s)


def hit_edge_rooted_series(order: int) -> PowerSeries:
    """Edge-rooted trees with no degree-2 vertex: an unordered pair of
    S-trees joined at their roots, i.e. pairs(s)."""
    return pairs(stree_series(order))


def hit_vertex_edge_rooted_series(order: int) -> PowerSeries:
    """Vertex-and-incident-edge rootings: an ordered pair of S-trees, s^2."""
    s = stree_series(order)
    return s * s


def hit_series(order: int) -> PowerSeries:
    """Homeomorphically irreducible (series-reduced) free trees.

    Computed from the closed form

        (1 + x) s + ((1 - x) s(x^2) - (1 + x) s^2) / 2

    and cross-checked against the rooting combination
    vertex + edge - vertex_edge before returning.
    """
    s = stree_series(order)
    one_plus_x = PowerSeries.from_coeffs([1, 1], order)
    one_minus_x = PowerSeries.from_coeffs([1, -1], order)
    closed = one_plus_x * s + (
        one_minus_x * s.scale_exponents(2) - one_plus_x * (s * s)
    ).div_exact(2)

    combined = (
        hit_vertex_rooted_series(order)
        + hit_edge_rooted_series(order)
        - hit_vertex_edge_rooted_series(order)
    )
    assert closed == combined, "rooting combination disagrees with closed form"
    return closed


_SOLVERS = {
    TreeFamily.ROOTED: rooted_series,
    TreeFamily.UNROOTED: unrooted_series,
    TreeFamily.STREE: stree_series,
    TreeFamily.HIT: hit_series,
    TreeFamily.HIT_VERTEX_ROOTED: hit_vertex_rooted_series,
    TreeFamily.HIT_EDGE_ROOTED: hit_edge_rooted_series,
    TreeFamily.HIT_VERTEX_EDGE_ROOTED: hit_vertex_edge_rooted_series,
}


def series_for(family: TreeFamily, order: int) -> PowerSeries:
    """Dispatch to the solver for a family; order must be >= 1."""
    if order < 1:
        raise ValueError("order must be at least 1 (counts start at one vertex)")
    return _SOLVERS[family](order)
