"""Exact integer linear algebra on small matrices.

Vectors are tuples of ints, matrices are sequences of row tuples.  Every
routine is exact: Fractions are used internally wherever division occurs and
all returned data is integral.  Sizes here are tiny (ambient dimension <= 5
or so), so clarity wins over asymptotics throughout.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vector = tuple[int, ...]


def vec_gcd(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def primitive(v: Sequence[int]) -> Vector:
    """Divide out the gcd; the zero vector has no primitive representative."""
    g = vec_gcd(v)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(x // g for x in v)


def primitive_direction(v: Sequence[Fraction]) -> Vector:
    """Primitive integer vector pointing the same way as a rational vector."""
    denom = 1
    for x in v:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in v]
    return primitive(ints)


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v, strict=True))


def vec_sub(u: Sequence[int], v: Sequence[int]) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_neg(v: Sequence[int]) -> Vector:
    return tuple(-a for a in v)


def mat_vec(rows: Sequence[Sequence[int]], x: Sequence[int]) -> Vector:
    return tuple(dot(r, x) for r in rows)


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> tuple[Vector, ...]:
    bt = list(zip(*b))
    return tuple(tuple(dot(r, c) for c in bt) for r in a)


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_rank(rows: Iterable[Sequence[int]]) -> int:
    """Rank over Q, by fraction elimination."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][c]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (exact, via Fractions)."""
    n = len(rows)
    m = [[Fraction(x) for x in r] for r in rows]
    result = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = -result
        result *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    assert result.denominator == 1
    return int(result)


def _col_addmul(m: list[list[int]], j: int, k: int, q: int) -> None:
    for row in m:
        row[j] += q * row[k]


def _col_swap(m: list[list[int]], j: int, k: int) -> None:
    for row in m:
        row[j], row[k] = row[k], row[j]


def _col_negate(m: list[list[int]], j: int) -> None:
    for row in m:
        row[j] = -row[j]


def kernel_basis(rows: Sequence[Sequence[int]], ncols: int) -> list[Vector]:
    """Basis of the full integer kernel {x in Z^ncols : rows @ x = 0}.

    The result is a lattice basis of the kernel (saturated by construction):
    integer column operations are tracked on an identity matrix, and the
    columns that end up annihilated span the kernel over Z.
    """
    m = [list(r) for r in rows]
    v = identity(ncols)
    lead = 0
    for r in range(len(m)):
        while True:
            nz = [j for j in range(lead, ncols) if m[r][j] != 0]
            if len(nz) <= 1:
                break
            j1, j2 = sorted(nz, key=lambda j: abs(m[r][j]))[:2]
            q = m[r][j2] // m[r][j1]
            _col_addmul(m, j2, j1, -q)
            _col_addmul(v, j2, j1, -q)
        nz = [j for j in range(lead, ncols) if m[r][j] != 0]
        if nz:
            j = nz[0]
            if j != lead:
                _col_swap(m, j, lead)
                _col_swap(v, j, lead)
            if m[r][lead] < 0:
                _col_negate(m, lead)
                _col_negate(v, lead)
            lead += 1
            if lead == ncols:
                break
    return [tuple(v[i][j] for i in range(ncols)) for j in range(lead, ncols)]


def hnf_rows(vectors: Iterable[Sequence[int]], ncols: int) -> tuple[Vector, ...]:
    """Canonical (row-Hermite) basis of the lattice spanned by the given rows."""
    rows = [list(v) for v in vectors if any(v)]
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, len(rows)) if rows[i][c] != 0]
            if len(nz) <= 1:
                break
            i1, i2 = sorted(nz, key=lambda i: abs(rows[i][c]))[:2]
            q = rows[i2][c] // rows[i1][c]
            rows[i2] = [a - q * b for a, b in zip(rows[i2], rows[i1])]
        nz = [i for i in range(r, len(rows)) if rows[i][c] != 0]
        if not nz:
            continue
        i = nz[0]
        rows[r], rows[i] = rows[i], rows[r]
        if rows[r][c] < 0:
            rows[r] = [-a for a in rows[r]]
        piv = rows[r][c]
        for i in range(r):
            q = rows[i][c] // piv
            if q:
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return tuple(tuple(row) for row in rows[:r])


def row_hermite_transform(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Row reduction with transform: returns (h, u) with u @ rows = h, u unimodular."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    u = identity(nrows)
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, nrows) if m[i][c] != 0]
            if len(nz) <= 1:
                break
            i1, i2 = sorted(nz, key=lambda i: abs(m[i][c]))[:2]
            q = m[i2][c] // m[i1][c]
            m[i2] = [a - q * b for a, b in zip(m[i2], m[i1])]
            u[i2] = [a - q * b for a, b in zip(u[i2], u[i1])]
        nz = [i for i in range(r, nrows) if m[i][c] != 0]
        if not nz:
            continue
        i = nz[0]
        m[r], m[i] = m[i], m[r]
        u[r], u[i] = u[i], u[r]
        if m[r][c] < 0:
            m[r] = [-a for a in m[r]]
            u[r] = [-a for a in u[r]]
        r += 1
    return m, u


def invert_unimodular(rows: Sequence[Sequence[int]]) -> tuple[Vector, ...]:
    """Inverse of a unimodular integer matrix (integral by definition)."""
    n = len(rows)
    m = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for c in range(n):
        piv = next(i for i in range(c, n) if m[i][c])
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    out = []
    for i in range(n):
        row = m[i][n:]
        assert all(x.denominator == 1 for x in row), "matrix was not unimodular"
        out.append(tuple(int(x) for x in row))
    return tuple(out)


def saturation_basis(vectors: Sequence[Sequence[int]], n: int) -> list[Vector]:
    """Basis of span(vectors) ∩ Z^n, computed as the double orthogonal kernel."""
    perp = kernel_basis(vectors, n)
    return kernel_basis(perp, n)


def solve_columns(cols: Sequence[Sequence[int]], target: Sequence[int]) -> tuple[Fraction, ...] | None:
    """Solve sum_i x_i * cols[i] = target over Q; None if inconsistent.

    Columns are assumed linearly independent, so the solution is unique.
    """
    k = len(cols)
    n = len(target)
    m = [[Fraction(cols[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(n)]
    rank = 0
    pivots = []
    for c in range(k):
        piv = next((i for i in range(rank, n) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][c]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(n):
            if i != rank and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        pivots.append(c)
        rank += 1
    for i in range(rank, n):
        if m[i][k]:
            return None
    sol = [Fraction(0)] * k
    for i, c in enumerate(pivots):
        sol[c] = m[i][k]
    return tuple(sol)


def solve_columns_int(cols: Sequence[Sequence[int]], target: Sequence[int]) -> Vector | None:
    """Integer solution of sum_i x_i * cols[i] = target, or None."""
    sol = solve_columns(cols, target)
    if sol is None or any(x.denominator != 1 for x in sol):
        return None
    return tuple(int(x) for x in sol)


def minors_gcd(rows: Sequence[Sequence[int]], k: int) -> int:
    """gcd of all k x k minors of an integer matrix."""
    from itertools import combinations

    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    g = 0
    for ri in combinations(range(nrows), k):
        for ci in combinations(range(ncols), k):
            sub = [[rows[i][j] for j in ci] for i in ri]
            g = gcd(g, abs(det(sub)))
            if g == 1:
                return 1
    return g
