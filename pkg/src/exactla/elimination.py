"""Pivot-based decompositions: Gauss LU / LUP, fraction-free
Jordan-Bareiss, Dodgson condensation for Hankel matrices, the JorBarSol
dependence solver, and the Bunch-Hopcroft recursive LUP."""

from dataclasses import dataclass

from .errors import (DimensionMismatch, ExactDivisionFailed, NotDivisible,
                     NotSurjective, ZeroConnectedMinor, ZeroDivisor)
from .matrix import DenseMatrix, mat_mul, triangular_inverse


@dataclass
class LUFactors:
    L: DenseMatrix
    U: DenseMatrix
    rank_detected: int     # order of the last nonzero dominant minor


@dataclass
class LUPFactors:
    L: DenseMatrix
    U: DenseMatrix
    perm: list             # A[:, perm[k]] = (L*U)[:, k]
    sign: int

    def permutation_matrix(self):
        ring = self.L.ring
        n = len(self.perm)
        P = DenseMatrix.zeros(ring, n, n)
        for k, j in enumerate(self.perm):
            P.entries[k * n + j] = ring.one
        return P

    def multiply_back(self):
        """L*U*P, which must equal the input."""
        return mat_mul(mat_mul(self.L, self.U), self.permutation_matrix())


@dataclass
class BareissTableau:
    """Entry (i,j) holds the bordered minor a_ij^(p), p = min(r, i-1, j-1)."""
    matrix: DenseMatrix
    rank_detected: int

    def determinant(self):
        m = self.matrix
        if m.rows != m.cols:
            raise DimensionMismatch("determinant of a non-square tableau")
        if self.rank_detected < m.rows:
            return m.ring.zero
        return m.at(m.rows - 1, m.cols - 1)


def gauss_lu(a):
    """Simplified Gauss pivoting (no search); stops at the first zero pivot.

    rank_detected is the order of the last nonzero dominant principal
    minor, which may differ from the true rank when the input is not
    strongly regular up to its rank.
    """
    ring = a.ring
    m, n = a.rows, a.cols
    w = a.to_rows()
    q = min(m, n)
    rank = q
    for p in range(q):
        piv = w[p][p]
        if ring.is_zero(piv):
            rank = p
            break
        for i in range(p + 1, m):
            w[i][p] = _pivot_div(ring, w[i][p], piv)
            lip = w[i][p]
            for j in range(p + 1, n):
                w[i][j] = ring.sub(w[i][j], ring.mul(lip, w[p][j]))
    lmat = DenseMatrix.identity(ring, m)
    umat = DenseMatrix.zeros(ring, m, n)
    for i in range(m):
        for j in range(n):
            if j < min(i, rank):
                lmat.entries[i * m + j] = w[i][j]
            elif j >= i:
                umat.entries[i * n + j] = w[i][j]
    return LUFactors(lmat, umat, rank)


def _pivot_div(ring, a, piv):
    if ring.spec.is_field:
        return ring.div(a, piv)
    try:
        return ring.exact_div(a, piv)
    except (NotDivisible, ZeroDivisor) as e:
        raise ExactDivisionFailed(str(e))


def lup_surjective(a):
    """LUP decomposition of a surjective matrix over a field (Alg with
    left-to-right pivot search and column exchanges)."""
    ring = a.ring
    m, n = a.rows, a.cols
    if m > n:
        raise NotSurjective("more rows than columns")
    w = a.to_rows()
    perm = list(range(n))
    sign = 1
    for p in range(m):
        j = p
        while j < n and ring.is_zero(w[p][j]):
            j += 1
        if j == n:
            raise NotSurjective("row %d has no pivot" % (p + 1,))
        if j != p:
            for row in w:
                row[p], row[j] = row[j], row[p]
            perm[p], perm[j] = perm[j], perm[p]
            sign = -sign
        piv = w[p][p]
        for i in range(p + 1, m):
            w[i][p] = ring.div(w[i][p], piv)
            lip = w[i][p]
            for jj in range(p + 1, n):
                w[i][jj] = ring.sub(w[i][jj], ring.mul(lip, w[p][jj]))
    lmat = DenseMatrix.identity(ring, m)
    umat = DenseMatrix.zeros(ring, m, n)
    for i in range(m):
        for j in range(n):
            if j < i:
                lmat.entries[i * m + j] = w[i][j]
            else:
                umat.entries[i * n + j] = w[i][j]
    return LUPFactors(lmat, umat, perm, sign)


BH_RECURSION_FLOOR = 8


def bunch_hopcroft(a):
    """LUP decomposition by the recursive halving scheme, using fast
    multiplication and triangular inversion; falls back to the direct
    algorithm below the recursion floor."""
    ring = a.ring
    m, n = a.rows, a.cols
    if m > n:
        raise NotSurjective("more rows than columns")
    if m < BH_RECURSION_FLOOR:
        return lup_surjective(a)
    nu = 1
    while 2 * nu < m:
        nu *= 2
    n0 = nu
    n1 = m - n0
    rows = a.to_rows()
    a1 = DenseMatrix.from_rows(ring, rows[:n0])
    a2 = DenseMatrix.from_rows(ring, rows[n0:])
    f1 = bunch_hopcroft(a1)
    l1, u1, p1 = f1.L, f1.U, f1.perm
    a2p = _reorder_cols(a2, p1)
    u1rows = u1.to_rows()
    v1 = DenseMatrix.from_rows(ring, [r[:n0] for r in u1rows])
    b = DenseMatrix.from_rows(ring, [r[n0:] for r in u1rows])
    a2rows = a2p.to_rows()
    c = DenseMatrix.from_rows(ring, [r[:n0] for r in a2rows])
    d = DenseMatrix.from_rows(ring, [r[n0:] for r in a2rows])
    v1inv = triangular_inverse(v1, "upper")
    c1 = mat_mul(c, v1inv)
    e = d.sub(mat_mul(c1, b))
    f2 = bunch_hopcroft(e)
    l2, u2, p2 = f2.L, f2.U, f2.perm
    b2 = _reorder_cols(b, p2)
    lmat = DenseMatrix.zeros(ring, m, m)
    for i in range(n0):
        for j in range(n0):
            lmat.entries[i * m + j] = l1.at(i, j)
    for i in range(n1):
        for j in range(n0):
            lmat.entries[(n0 + i) * m + j] = c1.at(i, j)
        for j in range(n1):
            lmat.entries[(n0 + i) * m + n0 + j] = l2.at(i, j)
    umat = DenseMatrix.zeros(ring, m, n)
    for i in range(n0):
        for j in range(n0):
            umat.entries[i * n + j] = v1.at(i, j)
        for j in range(n - n0):
            umat.entries[i * n + n0 + j] = b2.at(i, j)
    for i in range(n1):
        for j in range(n - n0):
            umat.entries[(n0 + i) * n + n0 + j] = u2.at(i, j)
    perm = list(p1[:n0]) + [p1[n0 + k] for k in p2]
    sign = f1.sign * f2.sign
    return LUPFactors(lmat, umat, perm, sign)


def _reorder_cols(m, perm):
    rows = m.to_rows()
    return DenseMatrix.from_rows(m.ring, [[r[k] for k in perm] for r in rows])


def jordan_bareiss(a):
    """Fraction-free elimination without pivot search (integral domain
    with exact division); returns the tableau of bordered minors."""
    ring = a.ring
    m, n = a.rows, a.cols
    w = a.to_rows()
    q = min(m, n)
    rank = q
    den = ring.one
    for p in range(q - 1):
        piv = w[p][p]
        if ring.is_zero(piv):
            rank = p
            break
        for i in range(p + 1, m):
            coe = w[i][p]
            for j in range(p + 1, n):
                t = ring.sub(ring.mul(piv, w[i][j]), ring.mul(coe, w[p][j]))
                try:
                    w[i][j] = ring.exact_div(t, den)
                except (NotDivisible, ZeroDivisor) as e:
                    raise ExactDivisionFailed(str(e))
        den = piv
    else:
        if q > 0 and ring.is_zero(w[q - 1][q - 1]):
            rank = q - 1
    return BareissTableau(DenseMatrix.from_rows(ring, w), rank)


def det_fraction_free(a):
    """Determinant by Jordan-Bareiss with row pivot search (sign tracked).

    Intermediate divisions stay exact because every stored value is a
    minor of the row-permuted input.
    """
    ring = a.ring
    if a.rows != a.cols:
        raise DimensionMismatch("determinant of a non-square matrix")
    n = a.rows
    w = a.to_rows()
    den = ring.one
    sign = 1
    for p in range(n - 1):
        if ring.is_zero(w[p][p]):
            for i in range(p + 1, n):
                if not ring.is_zero(w[i][p]):
                    w[p], w[i] = w[i], w[p]
                    sign = -sign
                    break
            else:
                return ring.zero
        piv = w[p][p]
        for i in range(p + 1, n):
            coe = w[i][p]
            for j in range(p + 1, n):
                t = ring.sub(ring.mul(piv, w[i][j]), ring.mul(coe, w[p][j]))
                try:
                    w[i][j] = ring.exact_div(t, den)
                except (NotDivisible, ZeroDivisor) as e:
                    raise ExactDivisionFailed(str(e))
        den = piv
    d = w[n - 1][n - 1]
    return ring.neg(d) if sign < 0 else d


def det_field(a):
    """Determinant over a field by Gauss elimination with row pivoting."""
    ring = a.ring
    if a.rows != a.cols:
        raise DimensionMismatch("determinant of a non-square matrix")
    n = a.rows
    w = a.to_rows()
    sign = 1
    for p in range(n - 1):
        if ring.is_zero(w[p][p]):
            for i in range(p + 1, n):
                if not ring.is_zero(w[i][p]):
                    w[p], w[i] = w[i], w[p]
                    sign = -sign
                    break
            else:
                return ring.zero
        piv = w[p][p]
        for i in range(p + 1, n):
            c = ring.div(w[i][p], piv)
            for j in range(p + 1, n):
                w[i][j] = ring.sub(w[i][j], ring.mul(c, w[p][j]))
    det = w[0][0]
    for i in range(1, n):
        det = ring.mul(det, w[i][i])
    return ring.neg(det) if sign < 0 else det


class HankelMinorTable:
    """Row r holds the connected minors of order r: entries t_{r,j} for
    j = r .. m+n-r (row 0 spans j = 1 .. m+n-1 by convention)."""

    def __init__(self, ring, m, n):
        self.ring = ring
        self.m = m
        self.n = n
        self.rows = []

    def row(self, r):
        return self.rows[r]

    def entry(self, r, j):
        off = 1 if r == 0 else r
        return self.rows[r][j - off]

    def final_minor(self):
        if self.m != self.n:
            raise DimensionMismatch("final minor needs a square Hankel matrix")
        return self.rows[self.n][0]


def dodgson_hankel(first_coeffs, m, n, ring):
    """Dodgson condensation for the m x n Hankel matrix h_ij = a_{i+j-1}.

    first_coeffs lists the m+n-1 defining values.  Every connected minor
    used as a denominator must be nonzero (ZeroConnectedMinor otherwise).
    """
    if len(first_coeffs) != m + n - 1:
        raise DimensionMismatch("need m+n-1 Hankel coefficients")
    q = min(m, n)
    table = HankelMinorTable(ring, m, n)
    table.rows.append([ring.one] * (m + n - 1))
    table.rows.append(list(first_coeffs))
    for r in range(1, q):
        prev = table.rows[r]
        above = table.rows[r - 1]
        out = []
        for j in range(r + 1, m + n - r):
            tl = prev[j - 1 - r]        # t_{r, j-1}
            tc = prev[j - r]            # t_{r, j}
            tr = prev[j + 1 - r]        # t_{r, j+1}
            if r == 1:
                dn = above[j - 1]       # row 0 starts at j = 1
            else:
                dn = above[j - (r - 1)]
            if ring.is_zero(dn):
                raise ZeroConnectedMinor("zero connected minor of order %d at j=%d" % (r - 1, j))
            t = ring.sub(ring.mul(tl, tr), ring.mul(tc, tc))
            try:
                out.append(ring.exact_div(t, dn))
            except (NotDivisible, ZeroDivisor) as e:
                raise ExactDivisionFailed(str(e))
        table.rows.append(out)
    return table


def jorbarsol(a):
    """Linear dependence of the last column on the first n, for a strongly
    regular n x (n+1) matrix over a domain with exact division."""
    if a.cols != a.rows + 1:
        raise DimensionMismatch("JorBarSol expects an n x (n+1) matrix")
    coeffs, _ = _jorbarsol_rows(a.ring, a.to_rows(), skip_first_pivot=False)
    return coeffs


def _jorbarsol_rows(ring, w, skip_first_pivot):
    """Shared JorBarSol core on mutable rows.

    skip_first_pivot skips the no-op first elimination step and the final
    division by a_11; valid when column 1 is (1, 0, ..., 0), which is how
    the Frobenius algorithm builds its Krylov matrix.
    """
    n = len(w)
    m = n + 1
    den = ring.one
    start = 1 if skip_first_pivot else 0
    try:
        for p in range(start, n - 1):
            piv = w[p][p]
            if ring.is_zero(piv):
                raise ExactDivisionFailed("zero pivot at step %d" % (p + 1,))
            for i in range(p + 1, n):
                coe = w[i][p]
                for j in range(p + 1, m):
                    t = ring.sub(ring.mul(piv, w[i][j]), ring.mul(coe, w[p][j]))
                    w[i][j] = ring.exact_div(t, den)
            den = piv
        coeffs = [ring.zero] * n
        for p in range(n - 1, -1, -1):
            if p == 0 and skip_first_pivot:
                lp = w[0][n]
            else:
                if ring.is_zero(w[p][p]):
                    raise ExactDivisionFailed("zero pivot at step %d" % (p + 1,))
                lp = ring.exact_div(w[p][m - 1], w[p][p])
            coeffs[p] = lp
            for i in range(p):
                w[i][m - 1] = ring.sub(w[i][m - 1], ring.mul(lp, w[i][p]))
    except (NotDivisible, ZeroDivisor) as e:
        raise ExactDivisionFailed(str(e))
    return coeffs, w
