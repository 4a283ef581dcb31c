import random

from fanotoric.intlinalg import (
    bareiss_det,
    column_hermite,
    diagonalize,
    in_lattice,
    integer_kernel,
    integer_solve,
    lattice_basis_from_vectors,
    lattice_coordinates,
    mat_rank,
    primitive,
    rational_kernel,
    rational_solve,
    reduce_mod_column_lattice,
    vdot,
)


def test_primitive():
    assert primitive((2, 4, -6)) == (1, 2, -3)
    assert primitive((0, 0)) == (0, 0)
    assert primitive((-3, 0)) == (-3, 0) or primitive((-3, 0)) == (-1, 0)
    assert primitive((5,)) == (1,)


def test_rank_and_det():
    assert mat_rank([[1, 2], [2, 4]]) == 1
    assert mat_rank([[1, 0], [0, 1]]) == 2
    assert bareiss_det([[1, 2], [3, 4]]) == -2
    assert bareiss_det([[2, 0, 0], [0, 3, 0], [0, 0, 5]]) == 30
    assert bareiss_det([]) == 1


def test_rational_solve_and_kernel():
    x = rational_solve([[2, 1], [1, 1]], [3, 2])
    assert x == [1, 1]
    assert rational_solve([[1, 1], [1, 1]], [0, 1]) is None
    ker = rational_kernel([[1, 1, 1]])
    assert len(ker) == 2
    for v in ker:
        assert sum(v) == 0


def test_diagonalize_random():
    rng = random.Random(7)
    for _ in range(60):
        nr = rng.randint(1, 4)
        nc = rng.randint(1, 4)
        a = [[rng.randint(-5, 5) for _ in range(nc)] for _ in range(nr)]
        s, diag, t = diagonalize(a)
        # S A T equals the diagonal matrix
        sat = [[vdot(s[i], tuple(a[r][j] for r in range(nr))) for j in range(nc)] for i in range(nr)]
        sat = [[sum(sat[i][k] * t[k][j] for k in range(nc)) for j in range(nc)] for i in range(nr)]
        for i in range(nr):
            for j in range(nc):
                expect = diag[i] if i == j and i < len(diag) else 0
                assert sat[i][j] == expect
        assert abs(bareiss_det(s)) == 1
        assert abs(bareiss_det(t)) == 1


def test_integer_solve():
    assert integer_solve([[2, 0], [0, 3]], (4, 9)) == (2, 3)
    assert integer_solve([[2]], (3,)) is None
    # underdetermined: any valid solution is fine
    sol = integer_solve([[1, 2, 3]], (6,))
    assert sol is not None and vdot(sol, (1, 2, 3)) == 6


def test_integer_kernel_saturated():
    ker = integer_kernel([[2, 4]])
    assert len(ker) == 1
    assert ker[0] in ((2, -1), (-2, 1))


def test_lattice_membership_and_reduction():
    basis = lattice_basis_from_vectors([(2, 0), (0, 3)])
    assert in_lattice(basis, (4, -3))
    assert not in_lattice(basis, (1, 0))
    assert lattice_coordinates(basis, (2, 3)) is not None
    h = column_hermite([[2, 0], [0, 3]])
    r1 = reduce_mod_column_lattice((5, 7), h)
    r2 = reduce_mod_column_lattice((1, 1), h)
    assert r1 == r2 == (1, 1)


def test_reduction_canonical_on_cosets():
    rng = random.Random(3)
    gens = [(3, 1, 0), (0, 5, 2), (0, 0, 4)]
    matrix = [[g[i] for g in gens] for i in range(3)]
    h = column_hermite(matrix)
    for _ in range(40):
        v = tuple(rng.randint(-9, 9) for _ in range(3))
        coeffs = [rng.randint(-3, 3) for _ in gens]
        shift = tuple(sum(c * g[i] for c, g in zip(coeffs, gens)) for i in range(3))
        assert reduce_mod_column_lattice(v, h) == reduce_mod_column_lattice(
            tuple(a + b for a, b in zip(v, shift)), h
        )
