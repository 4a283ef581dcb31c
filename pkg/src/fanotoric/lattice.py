"""Exact lattice and polyhedral geometry for finite point configurations.

All computations are over exact integers and rationals; convex hulls,
face lattices, smoothness tests and (mixed) volumes never touch floats.
Scales are desk-sized: ambient rank up to ~10, a few hundred points.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from .errors import BudgetExceededError, DimensionMismatchError, FanoToricError
from .intlinalg import (
    Vector,
    bareiss_det,
    fraction_vector_to_primitive,
    integer_kernel,
    integer_solve,
    lattice_coordinates,
    mat_rank,
    primitive,
    rational_kernel,
    vdot,
    vsub,
)

DEFAULT_FACE_BUDGET = 100_000


@dataclass(frozen=True)
class AffineMap:
    """x -> matrix @ (x - base); exact, integral on the relevant lattice points."""

    matrix: tuple[tuple[Fraction, ...], ...]
    base: Vector

    def apply(self, point) -> Vector:
        shifted = vsub(tuple(point), self.base)
        image = []
        for row in self.matrix:
            value = sum(a * b for a, b in zip(row, shifted))
            if value.denominator != 1:
                raise FanoToricError("point is not in the domain lattice of this map")
            image.append(int(value))
        return tuple(image)

    def apply_vector(self, vec) -> Vector:
        """Linear part applied to a lattice vector."""
        image = []
        for row in self.matrix:
            value = sum(a * b for a, b in zip(row, tuple(vec)))
            if value.denominator != 1:
                raise FanoToricError("vector is not in the domain lattice of this map")
            image.append(int(value))
        return tuple(image)

    @property
    def is_identity(self) -> bool:
        m = len(self.matrix)
        if any(self.base):
            return False
        if any(len(row) != m for row in self.matrix):
            return False
        return all(
            self.matrix[i][j] == (1 if i == j else 0) for i in range(m) for j in range(m)
        )

    @classmethod
    def identity(cls, rank: int) -> "AffineMap":
        rows = tuple(
            tuple(Fraction(1 if i == j else 0) for j in range(rank)) for i in range(rank)
        )
        return cls(matrix=rows, base=(0,) * rank)


def _as_int_points(points) -> tuple[Vector, ...]:
    arr = np.asarray(list(points), dtype=object)
    if arr.ndim == 1:
        arr = arr.reshape(len(arr), 1) if len(arr) else arr.reshape(0, 0)
    out = []
    for row in arr:
        vals = []
        for x in row:
            ix = int(x)
            if ix != x:
                raise FanoToricError(f"non-integer coordinate {x!r}")
            vals.append(ix)
        out.append(tuple(vals))
    return tuple(out)


def _affine_rank(points) -> int:
    pts = list(points)
    if len(pts) <= 1:
        return 0
    base = pts[0]
    return mat_rank([vsub(p, base) for p in pts[1:]])


def _affine_basis_indices(points) -> list[int]:
    """Indices of an affinely independent subset spanning aff(points)."""
    chosen = [0]
    rows: list[Vector] = []
    base = points[0]
    rank = 0
    for i in range(1, len(points)):
        candidate = rows + [vsub(points[i], base)]
        r = mat_rank(candidate)
        if r > rank:
            chosen.append(i)
            rows = candidate
            rank = r
    return chosen


def _hyperplane_through(points) -> Vector:
    """Primitive normal of the hyperplane spanned by the given points.

    The points must affinely span a space of codimension one.
    """
    base = points[0]
    rows = [vsub(p, base) for p in points[1:]]
    kernel = rational_kernel(rows) if rows else rational_kernel([(0,) * len(base)])
    kernel = [v for v in kernel]
    if len(kernel) != 1:
        raise FanoToricError("points do not span a hyperplane")
    return fraction_vector_to_primitive(kernel[0])


def _hull_facets_fulldim(pts):
    """Facets of conv(pts) for a full-dimensional point list in Z^d.

    Returns a sorted list of (inner_normal, offset, members) with
    <normal, x> >= offset for every point and equality exactly on members.
    """
    d = len(pts[0])
    n = len(pts)
    if d == 0:
        return []
    if d == 1:
        vals = [p[0] for p in pts]
        lo, hi = min(vals), max(vals)
        out = [
            ((1,), lo, frozenset(i for i, v in enumerate(vals) if v == lo)),
            ((-1,), -hi, frozenset(i for i, v in enumerate(vals) if v == hi)),
        ]
        return sorted(out)

    seed = _affine_basis_indices(pts)
    if len(seed) != d + 1:
        raise FanoToricError("point set is not full-dimensional")
    center = tuple(Fraction(sum(pts[i][j] for i in seed), d + 1) for j in range(d))

    def frdot(normal, point) -> Fraction:
        return sum(Fraction(a) * b for a, b in zip(normal, point))

    def oriented(normal, offset):
        if frdot(normal, center) < offset:
            return tuple(-x for x in normal), -offset
        return tuple(normal), offset

    facets: dict[tuple[Vector, int], set[int]] = {}
    processed: list[int] = list(seed)
    for omit_pos in range(d + 1):
        support = [seed[i] for i in range(d + 1) if i != omit_pos]
        normal = _hyperplane_through([pts[i] for i in support])
        offset = vdot(normal, pts[support[0]])
        normal, offset = oriented(normal, offset)
        facets[(normal, offset)] = set(support)

    remaining = [i for i in range(n) if i not in set(seed)]
    for p_idx in remaining:
        p = pts[p_idx]
        visible = [key for key in facets if vdot(key[0], p) < key[1]]
        if not visible:
            for key in facets:
                if vdot(key[0], p) == key[1]:
                    facets[key].add(p_idx)
            processed.append(p_idx)
            continue
        invisible = [key for key in facets if key not in set(visible)]
        ridges = set()
        for fv in visible:
            mv = facets[fv]
            for fi in invisible:
                common = mv & facets[fi]
                if len(common) < d - 1:
                    continue
                common_pts = [pts[i] for i in common]
                if _affine_rank(common_pts) == d - 2:
                    ridges.add(frozenset(common))
        for ridge in sorted(ridges, key=sorted):
            support = sorted(ridge) + [p_idx]
            normal = _hyperplane_through([pts[i] for i in support])
            offset = vdot(normal, p)
            normal, offset = oriented(normal, offset)
            members = {
                i for i in processed + [p_idx] if vdot(normal, pts[i]) == offset
            }
            facets.setdefault((normal, offset), set()).update(members)
        for key in visible:
            del facets[key]
        processed.append(p_idx)

    out = []
    for normal, offset in facets:
        members = frozenset(i for i in range(n) if vdot(normal, pts[i]) == offset)
        if any(vdot(normal, pts[i]) < offset for i in range(n)):
            raise FanoToricError("convex hull internal error: point below facet")
        out.append((normal, offset, members))
    return sorted(out, key=lambda f: (f[0], f[1]))


def _saturated_coords(points):
    """Coordinates of points in the saturated lattice of their affine hull.

    Returns (base, basis, local_points): base + basis @ local reproduces the
    inputs, and every ambient lattice point of the affine hull has integer
    local coordinates.
    """
    pts = [tuple(p) for p in points]
    base = min(pts)
    diffs = [vsub(p, base) for p in pts if p != base]
    m = len(base)
    if not diffs:
        return base, [], [() for _ in pts]
    normal_rows = integer_kernel(diffs)
    basis = integer_kernel(normal_rows) if normal_rows else [
        tuple(int(i == j) for i in range(m)) for j in range(m)
    ]
    local = []
    for p in pts:
        coords = lattice_coordinates(basis, vsub(p, base))
        if coords is None:
            raise FanoToricError("saturation error: point outside induced lattice")
        local.append(coords)
    return base, basis, local


def _vertex_indices(pts, facet_data=None):
    """Indices of hull vertices of a full-dimensional point list."""
    d = len(pts[0]) if pts else 0
    if len(pts) == 1:
        return [0]
    if facet_data is None:
        facet_data = _hull_facets_fulldim(pts)
    out = []
    for i in range(len(pts)):
        normals = [f[0] for f in facet_data if i in f[2]]
        if normals and mat_rank(normals) == d:
            out.append(i)
    return out


@dataclass(frozen=True)
class Face:
    """A face of a point configuration: the members lying on a supporting hyperplane.

    The whole configuration counts as a face of itself (no supporting normal).
    """

    config: "PointConfiguration"
    member_indices: tuple[int, ...]
    dim: int
    supporting_normal: Vector | None

    @property
    def members(self) -> tuple[Vector, ...]:
        return tuple(self.config.points[i] for i in self.member_indices)

    @property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.member_indices)

    def __contains__(self, index: int) -> bool:
        return index in self.member_set

    def contains_face(self, other: "Face") -> bool:
        return self.member_set >= other.member_set

    @property
    def is_full(self) -> bool:
        return len(self.member_indices) == self.config.npoints

    def sort_key(self):
        return (self.dim, self.members)

    def __repr__(self):
        return f"Face(dim={self.dim}, members={list(self.member_indices)})"


@dataclass(frozen=True)
class Cone:
    """A rational polyhedral cone given by primitive generators."""

    generators: tuple[Vector, ...]
    ambient_rank: int

    def __post_init__(self):
        for g in self.generators:
            if primitive(g) != g:
                raise FanoToricError("cone generators must be primitive")

    def is_unimodular(self) -> bool:
        gens = self.generators
        if len(gens) != self.ambient_rank:
            return False
        return abs(bareiss_det([list(g) for g in gens])) == 1

    def contains(self, vec) -> bool:
        """Membership test; supported for simplicial cones."""
        gens = self.generators
        if not gens:
            return not any(vec)
        if mat_rank(gens) != len(gens):
            raise FanoToricError("membership only implemented for simplicial cones")
        rows = [[g[i] for g in gens] for i in range(self.ambient_rank)]
        from .intlinalg import rational_solve

        sol = rational_solve(rows, list(vec))
        if sol is None:
            return False
        return all(c >= 0 for c in sol)


@dataclass(frozen=True)
class PointConfiguration:
    """A finite ordered set of distinct lattice points in Z^m."""

    points: tuple[Vector, ...]

    def __post_init__(self):
        if not self.points:
            raise FanoToricError("empty configuration")
        m = len(self.points[0])
        if any(len(p) != m for p in self.points):
            raise FanoToricError("points have mixed ambient ranks")
        if len(set(self.points)) != len(self.points):
            raise FanoToricError("points must be pairwise distinct")

    @classmethod
    def from_points(cls, points) -> "PointConfiguration":
        return cls(points=_as_int_points(points))

    @classmethod
    def from_columns(cls, matrix) -> "PointConfiguration":
        arr = np.asarray(matrix, dtype=object)
        return cls.from_points(arr.T.tolist())

    @property
    def npoints(self) -> int:
        return len(self.points)

    @property
    def ambient_rank(self) -> int:
        return len(self.points[0])

    def points_matrix(self) -> np.ndarray:
        """Points as matrix columns (one column per configuration element)."""
        return np.array(self.points, dtype=object).T

    @cached_property
    def dim(self) -> int:
        return _affine_rank(self.points)

    @cached_property
    def is_normalized(self) -> bool:
        if self.dim != self.ambient_rank:
            return False
        base = self.points[0]
        diffs = [vsub(p, base) for p in self.points[1:]]
        from .intlinalg import diagonalize

        _, diag, _ = diagonalize([[d[i] for d in diffs] for i in range(self.ambient_rank)])
        return len([d for d in diag if d != 0]) == self.ambient_rank and all(
            abs(d) == 1 for d in diag if d != 0
        )

    @cached_property
    def hull_facet_data(self):
        if self.dim != self.ambient_rank:
            raise FanoToricError(
                "facet data needs a full-dimensional configuration; normalize first"
            )
        return _hull_facets_fulldim(list(self.points))

    @cached_property
    def vertex_indices(self) -> tuple[int, ...]:
        if self.npoints == 1:
            return (0,)
        idx = _vertex_indices(list(self.points), self.hull_facet_data)
        return tuple(sorted(idx, key=lambda i: self.points[i]))

    def _sorted_member_tuple(self, members) -> tuple[int, ...]:
        return tuple(sorted(members, key=lambda i: self.points[i]))

    def _make_face(self, members: frozenset[int]) -> Face:
        pts = [self.points[i] for i in members]
        dim = _affine_rank(pts)
        normal = None
        if len(members) != self.npoints:
            total = [0] * self.ambient_rank
            for fnormal, _, fmembers in self.hull_facet_data:
                if members <= fmembers:
                    total = [a + b for a, b in zip(total, fnormal)]
            normal = primitive(tuple(total))
        return Face(
            config=self,
            member_indices=self._sorted_member_tuple(members),
            dim=dim,
            supporting_normal=normal,
        )

    @cached_property
    def _face_lattice(self) -> tuple[Face, ...]:
        return self.compute_faces(budget=DEFAULT_FACE_BUDGET)

    def compute_faces(self, budget: int | None = None) -> tuple[Face, ...]:
        """All non-empty faces, the configuration itself included."""
        n = self.npoints
        full = frozenset(range(n))
        collected = {full}
        facet_members = [f[2] for f in self.hull_facet_data]
        frontier = set(facet_members)
        collected |= frontier
        while frontier:
            new = set()
            for f in frontier:
                for g in facet_members:
                    h = f & g
                    if h and h not in collected and h not in new:
                        new.add(h)
            collected |= new
            if budget is not None and len(collected) > budget:
                raise BudgetExceededError(
                    f"face lattice exceeds budget of {budget} faces"
                )
            frontier = new
        faces = [self._make_face(members) for members in collected]
        return tuple(sorted(faces, key=Face.sort_key))

    @cached_property
    def _face_by_members(self):
        return {f.member_set: f for f in self._face_lattice}

    def face_from_members(self, members) -> Face:
        key = frozenset(members)
        try:
            return self._face_by_members[key]
        except KeyError:
            raise FanoToricError(f"{sorted(key)} is not a face of the configuration")

    @property
    def full_face(self) -> Face:
        return self.face_from_members(range(self.npoints))

    def __repr__(self):
        return f"PointConfiguration({self.npoints} points in Z^{self.ambient_rank})"


def normalize_configuration(config: PointConfiguration):
    """Re-embed so that differences of points generate the full ambient lattice.

    Returns (normalized configuration, affine map used). Configurations that
    are already normalized come back unchanged with the identity map.
    """
    pts = config.points
    base = min(pts)
    diffs = [vsub(p, base) for p in pts if p != base]
    m = config.ambient_rank
    if not diffs:
        if m == 0:
            return config, AffineMap.identity(0)
        zero_map = AffineMap(matrix=(), base=base)
        return PointConfiguration(points=((),)), zero_map
    from .intlinalg import diagonalize

    matrix = [[d[i] for d in diffs] for i in range(m)]
    s, diag, _ = diagonalize(matrix)
    nonzero = [(i, d) for i, d in enumerate(diag) if d != 0]
    rank = len(nonzero)
    if rank == m and all(abs(d) == 1 for _, d in nonzero):
        return config, AffineMap.identity(m)
    rows = tuple(
        tuple(Fraction(s[i][j], d) for j in range(m)) for i, d in nonzero
    )
    amap = AffineMap(matrix=rows, base=base)
    normalized = PointConfiguration(points=tuple(amap.apply(p) for p in pts))
    return normalized, amap


def faces(config: PointConfiguration, budget: int | None = None):
    """All non-empty faces of a normalized configuration, canonically ordered."""
    _require_normalized(config)
    if budget is not None:
        return list(config.compute_faces(budget=budget))
    return list(config._face_lattice)


def facets(config: PointConfiguration):
    """The codimension-one faces."""
    _require_normalized(config)
    d = config.dim
    return [f for f in config._face_lattice if f.dim == d - 1 and not f.is_full]


def facets_containing(config: PointConfiguration, face: Face):
    """The facets whose member set contains the given face."""
    return [f for f in facets(config) if f.contains_face(face)]


def vertex_cone(config: PointConfiguration, vertex_index: int) -> Cone:
    """Cone of primitive edge directions at a hull vertex."""
    _require_normalized(config)
    if vertex_index not in config.vertex_indices:
        raise FanoToricError(f"point {vertex_index} is not a vertex")
    v = config.points[vertex_index]
    gens = []
    for f in config._face_lattice:
        if f.dim == 1 and vertex_index in f:
            other = next(i for i in f.member_indices if i != vertex_index)
            gens.append(primitive(vsub(config.points[other], v)))
    return Cone(generators=tuple(sorted(set(gens))), ambient_rank=config.ambient_rank)


def _strict_interior_normal(config: PointConfiguration, vertex_index: int) -> Vector:
    total = [0] * config.ambient_rank
    for normal, _, members in config.hull_facet_data:
        if vertex_index in members:
            total = [a + b for a, b in zip(total, normal)]
    return tuple(total)


def _is_nonneg_combination(target, gens, weight) -> bool:
    """Whether target is a nonnegative integer combination of gens.

    `weight` is a functional strictly positive on every generator; it bounds
    the search.
    """
    gens = sorted(gens, key=lambda g: -vdot(weight, g))
    memo: dict[tuple[int, Vector], bool] = {}

    def rec(idx: int, residual: Vector) -> bool:
        if not any(residual):
            return True
        if idx == len(gens):
            return False
        key = (idx, residual)
        if key in memo:
            return memo[key]
        g = gens[idx]
        wg = vdot(weight, g)
        wr = vdot(weight, residual)
        result = False
        for c in range(wr // wg, -1, -1):
            rest = tuple(r - c * x for r, x in zip(residual, g))
            if vdot(weight, rest) < 0:
                continue
            if rec(idx + 1, rest):
                result = True
                break
        memo[key] = result
        return result

    return rec(0, tuple(target))


def is_smooth(config: PointConfiguration) -> bool:
    """Whether the projective toric variety of the configuration is nonsingular.

    Checks, at every hull vertex v, that the semigroup generated by the
    shifted points is free: its minimal generators must be an integral basis
    of the ambient lattice. The configuration must be full-dimensional; the
    lattice is taken to be the ambient Z^m as given.
    """
    if config.dim != config.ambient_rank:
        raise FanoToricError("is_smooth needs a full-dimensional configuration")
    m = config.ambient_rank
    if m == 0:
        return True
    for v_idx in config.vertex_indices:
        v = config.points[v_idx]
        gens = sorted({vsub(p, v) for p in config.points if p != v})
        weight = _strict_interior_normal(config, v_idx)
        if any(vdot(weight, g) <= 0 for g in gens):
            raise FanoToricError("interior normal failed strict positivity")
        atoms = []
        for g in gens:
            others = [h for h in gens if h != g and vdot(weight, h) < vdot(weight, g)]
            if not _is_nonneg_combination(g, others, weight):
                atoms.append(g)
        if len(atoms) != m:
            return False
        if abs(bareiss_det([list(a) for a in atoms])) != 1:
            return False
    return True


def _require_normalized(config: PointConfiguration):
    if not config.is_normalized:
        raise FanoToricError(
            "operation requires a normalized configuration; call normalize_configuration"
        )


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of lattice points, stored by its vertex list."""

    vertices: tuple[Vector, ...]

    @classmethod
    def from_points(cls, points) -> "LatticePolytope":
        pts = sorted(set(_as_int_points(points)))
        if not pts:
            raise FanoToricError("empty polytope")
        if len(pts) == 1:
            return cls(vertices=tuple(pts))
        base, basis, local = _saturated_coords(pts)
        if not basis:
            return cls(vertices=(pts[0],))
        vidx = _vertex_indices(local)
        return cls(vertices=tuple(sorted(pts[i] for i in vidx)))

    @property
    def ambient_rank(self) -> int:
        return len(self.vertices[0])

    @cached_property
    def dim(self) -> int:
        return _affine_rank(self.vertices)

    def __add__(self, other: "LatticePolytope") -> "LatticePolytope":
        """Minkowski sum."""
        if self.ambient_rank != other.ambient_rank:
            raise DimensionMismatchError("Minkowski sum of different ambient ranks")
        sums = {
            tuple(a + b for a, b in zip(p, q))
            for p in self.vertices
            for q in other.vertices
        }
        return LatticePolytope.from_points(sums)

    def __rmul__(self, factor: int) -> "LatticePolytope":
        if factor < 0:
            raise FanoToricError("dilation factor must be nonnegative")
        if factor == 0:
            return LatticePolytope(vertices=((0,) * self.ambient_rank,))
        return LatticePolytope(
            vertices=tuple(sorted(tuple(factor * x for x in v) for v in self.vertices))
        )

    def translate(self, shift) -> "LatticePolytope":
        shift = tuple(shift)
        return LatticePolytope(
            vertices=tuple(sorted(tuple(a + b for a, b in zip(v, shift)) for v in self.vertices))
        )

    def lattice_points(self) -> list[Vector]:
        """All ambient lattice points inside the polytope."""
        verts = list(self.vertices)
        if len(verts) == 1:
            return [verts[0]]
        base, basis, local = _saturated_coords(verts)
        q = len(local[0])
        if q == 0:
            return [verts[0]]
        facet_data = _hull_facets_fulldim(local)
        los = [min(p[i] for p in local) for i in range(q)]
        his = [max(p[i] for p in local) for i in range(q)]
        out = []
        for candidate in itertools.product(
            *(range(lo, hi + 1) for lo, hi in zip(los, his))
        ):
            if all(vdot(normal, candidate) >= off for normal, off, _ in facet_data):
                ambient = tuple(
                    b + sum(basis[j][i] * candidate[j] for j in range(q))
                    for i, b in enumerate(base)
                )
                out.append(ambient)
        return sorted(out)

    def __repr__(self):
        return f"LatticePolytope(dim={self.dim}, {len(self.vertices)} vertices)"


def _nvol_fulldim(pts, d: int) -> int:
    """Normalized volume (d! times euclidean) of conv(pts), full-dim in Z^d."""
    if d == 0:
        return 1
    if d == 1:
        vals = [p[0] for p in pts]
        return max(vals) - min(vals)
    facet_data = _hull_facets_fulldim(pts)
    x0 = pts[0]
    total = 0
    for normal, offset, members in facet_data:
        height = vdot(normal, x0) - offset
        if height == 0:
            continue
        fpts = [pts[i] for i in sorted(members)]
        _, basis, local = _saturated_coords(fpts)
        total += height * _nvol_fulldim(local, d - 1)
    return total


def normalized_volume(polytope) -> int:
    """d!-normalized volume relative to the ambient lattice Z^d; 0 if degenerate."""
    if isinstance(polytope, LatticePolytope):
        verts = list(polytope.vertices)
    else:
        verts = sorted(set(_as_int_points(polytope)))
    d = len(verts[0])
    if _affine_rank(verts) < d:
        return 0
    return _nvol_fulldim(verts, d)


def normalized_mixed_volume(*polytopes) -> int:
    """Normalized mixed volume of d lattice polytopes in Z^d.

    Symmetric and multilinear under Minkowski sum, with value 1 on d copies
    of the standard simplex; equals the normalized volume when the arguments
    coincide. Computed by inclusion-exclusion over Minkowski sums.
    """
    polys = [
        p if isinstance(p, LatticePolytope) else LatticePolytope.from_points(p)
        for p in polytopes
    ]
    if not polys:
        raise DimensionMismatchError("at least one polytope required")
    d = polys[0].ambient_rank
    if len(polys) != d or any(p.ambient_rank != d for p in polys):
        raise DimensionMismatchError(
            f"need exactly {d} polytopes in Z^{d}, got {len(polys)}"
        )
    total = 0
    for size in range(1, d + 1):
        sign = (-1) ** (d - size)
        for subset in itertools.combinations(range(d), size):
            acc = polys[subset[0]]
            for i in subset[1:]:
                acc = acc + polys[i]
            total += sign * normalized_volume(acc)
    import math

    if total % math.factorial(d):
        raise FanoToricError("mixed volume inclusion-exclusion did not divide evenly")
    return total // math.factorial(d)
