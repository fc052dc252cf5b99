"""Shared fixtures and independent brute-force oracles."""

import itertools

import pytest

from exactla.rng import Rng


@pytest.fixture
def rng():
    return Rng(20260810)


def cofactor_det(ring, rows):
    """Determinant by cofactor expansion; the independent oracle."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = None
    for j in range(n):
        if ring.is_zero(rows[0][j]):
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        t = ring.mul(rows[0][j], cofactor_det(ring, minor))
        if j % 2 == 1:
            t = ring.neg(t)
        acc = t if acc is None else ring.add(acc, t)
    return ring.zero if acc is None else acc


def charpoly_cofactor(ring, rows):
    """det(A - X I) by cofactor expansion over ring[X]; descending coeffs."""
    from exactla.rings import PolynomialRing
    pr = PolynomialRing(ring, "X")
    n = len(rows)
    w = [[pr.from_base(x) for x in r] for r in rows]
    for i in range(n):
        w[i][i] = (rows[i][i], ring.neg(ring.one))
    asc = list(cofactor_det(pr, w))
    asc = asc + [ring.zero] * (n + 1 - len(asc))
    return asc[::-1]


def all_minors(ring, rows, k):
    """Every k x k minor (as a list) of the matrix given by rows."""
    m = len(rows)
    n = len(rows[0])
    out = []
    for rsel in itertools.combinations(range(m), k):
        for csel in itertools.combinations(range(n), k):
            sub = [[rows[i][j] for j in csel] for i in rsel]
            out.append(cofactor_det(ring, sub))
    return out


def minimal_polynomial_dense(a):
    """Minimal polynomial by first linear dependence of vec(A^k): the
    independent oracle for Wiedemann (field matrices)."""
    ring = a.ring
    n = a.rows
    from exactla.matrix import DenseMatrix, mat_mul
    vecs = []
    pw = DenseMatrix.identity(ring, n)
    while True:
        vecs.append(list(pw.entries))
        dep = _express_vec(ring, vecs[:-1], vecs[-1])
        if dep is not None:
            # X^d - sum dep_j X^j, monic ascending
            return [ring.neg(c) for c in dep] + [ring.one]
        pw = mat_mul(pw, a)


def _express_vec(ring, basis, w):
    if not basis:
        return None if any(not ring.is_zero(x) for x in w) else []
    rows = len(w)
    m = len(basis)
    mat = [[basis[j][i] for j in range(m)] + [w[i]] for i in range(rows)]
    used = [False] * rows
    piv = []
    for col in range(m):
        sel = None
        for i in range(rows):
            if not used[i] and not ring.is_zero(mat[i][col]):
                sel = i
                break
        if sel is None:
            return None
        used[sel] = True
        piv.append(sel)
        pv = mat[sel][col]
        for i in range(rows):
            if i != sel and not ring.is_zero(mat[i][col]):
                f = ring.div(mat[i][col], pv)
                for j in range(col, m + 1):
                    mat[i][j] = ring.sub(mat[i][j], ring.mul(f, mat[sel][j]))
    for i in range(rows):
        if not used[i] and not ring.is_zero(mat[i][m]):
            return None
    return [ring.div(mat[piv[c]][m], mat[piv[c]][c]) for c in range(m)]


def random_int_matrix(ring, rng, n, lo=-99, hi=99):
    from exactla.matrix import DenseMatrix
    return DenseMatrix(ring, n, n,
                       [ring.from_int(rng.int_between(lo, hi)) for _ in range(n * n)])
