"""Exact integer and rational linear algebra on small dense matrices.

Everything works on plain Python ints and Fractions; no floating point
anywhere. Matrices are sequences of rows; vectors are tuples.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Vector = tuple[int, ...]


def vadd(a, b) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vscale(c, a):
    return tuple(c * x for x in a)


def vdot(a, b):
    return sum(x * y for x, y in zip(a, b))


def vneg(a):
    return tuple(-x for x in a)


def primitive(v) -> Vector:
    """Divide an integer vector by the gcd of its entries; direction is kept."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def mat_rank(rows) -> int:
    """Rank over the rationals."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pr = m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / pr[col]
                m[i] = [a - f * b for a, b in zip(m[i], pr)]
        rank += 1
        if rank == len(m):
            break
    return rank


def rational_solve(rows, rhs):
    """One solution of A x = b over Q (free variables set to 0), or None."""
    m = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pr = m[rank]
        inv = 1 / pr[col]
        m[rank] = [a * inv for a in pr]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        pivots.append(col)
        rank += 1
    for i in range(rank, len(m)):
        if m[i][ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        x[col] = m[i][ncols]
    return x


def rational_kernel(rows):
    """Basis of {x : A x = 0} over Q, as tuples of Fractions."""
    if not rows:
        return []
    ncols = len(rows[0])
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = {}
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [a * inv for a in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        pivots[col] = rank
        rank += 1
    basis = []
    free = [c for c in range(ncols) if c not in pivots]
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for col, row in pivots.items():
            v[col] = -m[row][fc]
        basis.append(tuple(v))
    return basis


def fraction_vector_to_primitive(v) -> Vector:
    """Clear denominators of a rational vector and divide by the content."""
    denom = 1
    for x in v:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    return primitive(tuple(int(x * denom) for x in v))


def bareiss_det(rows) -> int:
    """Determinant of a square integer matrix (fraction-free elimination)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _xgcd(a: int, b: int):
    """g, s, t with s*a + t*b = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def diagonalize(rows):
    """S, d, T with S @ A @ T diagonal; S, T unimodular, d the diagonal entries.

    Like Smith normal form but without the divisibility chain, which no
    caller here needs.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    a = [list(r) for r in rows]
    s = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    t = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def clear_col(k):
        changed = False
        for i in range(k + 1, nrows):
            if a[i][k] == 0:
                continue
            p = a[k][k]
            if p != 0 and a[i][k] % p == 0:
                # plain elimination keeps the pivot row untouched
                q = a[i][k] // p
                a[i] = [r - q * rk for r, rk in zip(a[i], a[k])]
                s[i] = [r - q * rk for r, rk in zip(s[i], s[k])]
            else:
                g, x, y = _xgcd(p, a[i][k])
                u, v = p // g, a[i][k] // g
                a[k], a[i] = (
                    [x * r + y * q for r, q in zip(a[k], a[i])],
                    [-v * r + u * q for r, q in zip(a[k], a[i])],
                )
                s[k], s[i] = (
                    [x * r + y * q for r, q in zip(s[k], s[i])],
                    [-v * r + u * q for r, q in zip(s[k], s[i])],
                )
            changed = True
        return changed

    def clear_row(k):
        changed = False
        for j in range(k + 1, ncols):
            if a[k][j] == 0:
                continue
            p = a[k][k]
            if p != 0 and a[k][j] % p == 0:
                q = a[k][j] // p
                for row in a:
                    row[j] -= q * row[k]
                for row in t:
                    row[j] -= q * row[k]
            else:
                g, x, y = _xgcd(p, a[k][j])
                u, v = p // g, a[k][j] // g
                for row in a:
                    row[k], row[j] = x * row[k] + y * row[j], -v * row[k] + u * row[j]
                for row in t:
                    row[k], row[j] = x * row[k] + y * row[j], -v * row[k] + u * row[j]
            changed = True
        return changed

    for k in range(min(nrows, ncols)):
        if a[k][k] == 0:
            src = next(
                ((i, j) for i in range(k, nrows) for j in range(k, ncols) if a[i][j] != 0),
                None,
            )
            if src is None:
                break
            i, j = src
            if i != k:
                a[k], a[i] = a[i], a[k]
                s[k], s[i] = s[i], s[k]
            if j != k:
                for row in a:
                    row[k], row[j] = row[j], row[k]
                for row in t:
                    row[k], row[j] = row[j], row[k]
        while True:
            clear_col(k)
            if not clear_row(k):
                break
    diag = [a[i][i] for i in range(min(nrows, ncols))]
    return s, diag, t


def integer_solve(rows, rhs):
    """One integer solution of A x = b, or None if there is none."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    if nrows == 0:
        return (0,) * ncols
    s, diag, t = diagonalize(rows)
    sb = [vdot(s[i], rhs) for i in range(nrows)]
    y = [0] * ncols
    for i in range(nrows):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if sb[i] != 0:
                return None
        else:
            if sb[i] % d != 0:
                return None
            if i < ncols:
                y[i] = sb[i] // d
    return tuple(vdot(t[i], y) for i in range(ncols))


def integer_kernel(rows):
    """Basis of the saturated lattice {x in Z^n : A x = 0}."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    if nrows == 0:
        return [tuple(int(i == j) for i in range(ncols)) for j in range(ncols)]
    _, diag, t = diagonalize(rows)
    out = []
    for j in range(ncols):
        d = diag[j] if j < len(diag) else 0
        if d == 0:
            out.append(tuple(t[i][j] for i in range(ncols)))
    return out


def column_hermite(rows):
    """Column echelon basis of the column lattice of A, pivots positive.

    Returns a list of pivot columns [(pivot_row, column_vector), ...] with
    strictly increasing pivot rows.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    cols = [tuple(rows[i][j] for i in range(nrows)) for j in range(ncols)]
    cols = [c for c in cols if any(c)]
    result = []
    row = 0
    while cols and row < nrows:
        active = [c for c in cols if c[row] != 0]
        rest = [c for c in cols if c[row] == 0]
        if not active:
            row += 1
            continue
        piv = active[0]
        for c in active[1:]:
            g, x, y = _xgcd(piv[row], c[row])
            u, v = piv[row] // g, c[row] // g
            piv, c2 = (
                tuple(x * p + y * q for p, q in zip(piv, c)),
                tuple(-v * p + u * q for p, q in zip(piv, c)),
            )
            if any(c2):
                rest.append(c2)
        if piv[row] < 0:
            piv = vneg(piv)
        result.append((row, piv))
        cols = rest
        row += 1
    return result


def reduce_mod_column_lattice(v, hermite_cols) -> Vector:
    """Canonical representative of v modulo the lattice spanned by the columns."""
    v = list(v)
    for row, col in hermite_cols:
        q = v[row] // col[row]
        if q:
            for i in range(len(v)):
                v[i] -= q * col[i]
    return tuple(v)


def lattice_basis_from_vectors(vectors):
    """Basis (as a list of vectors) of the lattice generated by the inputs."""
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return []
    nrows = len(vectors[0])
    matrix = [[v[i] for v in vectors] for i in range(nrows)]
    return [col for _, col in column_hermite(matrix)]


def in_lattice(basis, v) -> bool:
    """Whether v lies in the lattice spanned by the given basis vectors."""
    if not basis:
        return not any(v)
    rows = [[b[i] for b in basis] for i in range(len(v))]
    return integer_solve(rows, tuple(v)) is not None


def lattice_coordinates(basis, v):
    """Coordinates of v in the given lattice basis, or None."""
    if not basis:
        return () if not any(v) else None
    rows = [[b[i] for b in basis] for i in range(len(v))]
    return integer_solve(rows, tuple(v))
