"""Ready-made point configurations used across tests, demos and the CLI corpus."""

from __future__ import annotations

import itertools

from .lattice import PointConfiguration


def standard_simplex(n: int) -> PointConfiguration:
    """Vertices of the unit n-simplex: the origin and the standard basis of Z^n."""
    pts = [tuple(0 for _ in range(n))]
    pts += [tuple(int(i == j) for i in range(n)) for j in range(n)]
    return PointConfiguration.from_points(pts)


def dilated_simplex(n: int, degree: int) -> PointConfiguration:
    """All lattice points of degree * (unit n-simplex)."""
    pts = [
        c
        for c in itertools.product(range(degree + 1), repeat=n)
        if sum(c) <= degree
    ]
    return PointConfiguration.from_points(sorted(pts))


def product_configuration(*configs: PointConfiguration) -> PointConfiguration:
    """Configuration of the product variety: coordinate-wise concatenation."""
    pts = [()]
    for cfg in configs:
        pts = [p + q for p in pts for q in cfg.points]
    return PointConfiguration.from_points(pts)


def product_of_simplices(*dims: int) -> PointConfiguration:
    """Segre product of projective spaces P^d1 x ... x P^dq."""
    return product_configuration(*(standard_simplex(d) for d in dims))


def unit_square() -> PointConfiguration:
    return PointConfiguration.from_points([(0, 0), (1, 0), (0, 1), (1, 1)])


def bl_p2_p5() -> PointConfiguration:
    """The blowup of P^5 along a plane, embedded by |2H - E|.

    Elements (u1..u5) with u1+u2+u3 >= 1, u4, u5 >= 0 and sum <= 2.
    """
    pts = []
    for u in itertools.product(range(3), repeat=5):
        if sum(u) <= 2 and u[0] + u[1] + u[2] >= 1:
            pts.append(u)
    return PointConfiguration.from_points(sorted(pts))


def bl_point_p2() -> PointConfiguration:
    """The blowup of P^2 at a point, embedded by |2H - E|."""
    return PointConfiguration.from_points(
        [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    )


def bl_point_p2_times_pq(q: int) -> PointConfiguration:
    """Bl_P(P^2) x P^q embedded by |2H - E + F|; the surjectivity counterexample."""
    return product_configuration(bl_point_p2(), standard_simplex(q))
