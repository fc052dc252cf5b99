"""Linear-recurrence machinery: Berlekamp-Massey via extended Euclid,
the Hankel-system minimal polynomial, and probabilistic Wiedemann."""

from . import poly
from .errors import RetriesExhausted, SingularHankelSystem, ZeroSequence
from .rng import Rng


def berlekamp_massey(ring, terms, bound):
    """Minimal monic generator of a sequence known to admit a generator of
    degree <= bound; needs the first 2*bound terms (field coefficients).

    Extended Euclid on (X^(2n), sum a_i X^i) stopped at deg R < n, then
    P = X^d V(1/X) normalized monic, d = max(deg V, 1 + deg R).
    """
    n = bound
    if len(terms) < 2 * n:
        raise ValueError("need at least 2*bound terms")
    terms = list(terms[:2 * n])
    if all(ring.is_zero(t) for t in terms):
        raise ZeroSequence("all sampled terms are zero")
    r0 = [ring.zero] * (2 * n) + [ring.one]
    r1 = poly.strip(ring, terms)
    v0, v1 = [], [ring.one]
    while len(r1) - 1 >= n:
        q, r = poly.divmod_poly(ring, r0, r1)
        v = poly.sub(ring, v0, poly.poly_mul(ring, q, v1, "schoolbook"))
        v0, v1 = v1, v
        r0, r1 = r1, r
    d = max(len(v1) - 1, len(r1))       # len(r1) = deg(r1) + 1
    p = poly.reciprocal(ring, v1, d)
    lead_inv = ring.inverse_of_unit(p[-1])
    return [ring.mul(lead_inv, c) for c in p]


def generates(ring, gen, terms):
    """Check that the monic generator reproduces every supplied term."""
    d = len(gen) - 1
    if d == 0:
        return all(ring.is_zero(t) for t in terms)
    for k in range(d, len(terms)):
        acc = ring.zero
        for j in range(d):
            acc = ring.sub(acc, ring.mul(gen[j], terms[k - d + j]))
        if not ring.eq(acc, terms[k]):
            return False
    return True


def hankel_minpoly(ring, terms, bound):
    """Same output as berlekamp_massey, via the Hankel linear system.

    d = rank of H_{0,p,p}; solve H_{0,d,d} g = (a_d .. a_{2d-1}).
    """
    p = bound
    if len(terms) < 2 * p:
        raise ValueError("need at least 2*bound terms")
    terms = list(terms[:2 * p])
    if all(ring.is_zero(t) for t in terms):
        raise ZeroSequence("all sampled terms are zero")
    h = [[terms[i + j] for j in range(p)] for i in range(p)]
    d = _rank(ring, h)
    if d == 0:
        raise SingularHankelSystem("rank 0 for a nonzero sequence")
    rows = [[terms[i + j] for j in range(d)] + [terms[d + i]] for i in range(d)]
    g = _solve(ring, rows)
    if g is None:
        raise SingularHankelSystem("leading Hankel block is singular")
    return [ring.neg(x) for x in g] + [ring.one]


def _rank(ring, rows):
    m = len(rows)
    if m == 0:
        return 0
    n = len(rows[0])
    w = [list(r) for r in rows]
    rank = 0
    row = 0
    for col in range(n):
        sel = None
        for i in range(row, m):
            if not ring.is_zero(w[i][col]):
                sel = i
                break
        if sel is None:
            continue
        w[row], w[sel] = w[sel], w[row]
        piv = w[row][col]
        for i in range(row + 1, m):
            if not ring.is_zero(w[i][col]):
                f = ring.div(w[i][col], piv)
                for j in range(col, n):
                    w[i][j] = ring.sub(w[i][j], ring.mul(f, w[row][j]))
        rank += 1
        row += 1
        if row == m:
            break
    return rank


def _solve(ring, aug):
    """Solve a square augmented system by Gauss; None when singular."""
    n = len(aug)
    w = [list(r) for r in aug]
    for col in range(n):
        sel = None
        for i in range(col, n):
            if not ring.is_zero(w[i][col]):
                sel = i
                break
        if sel is None:
            return None
        w[col], w[sel] = w[sel], w[col]
        piv = w[col][col]
        for i in range(n):
            if i != col and not ring.is_zero(w[i][col]):
                f = ring.div(w[i][col], piv)
                for j in range(col, n + 1):
                    w[i][j] = ring.sub(w[i][j], ring.mul(f, w[col][j]))
    return [ring.div(w[i][n], w[i][i]) for i in range(n)]


def wiedemann_minpoly(a, seed, retries=4, degree_target=None):
    """Generator of (u A^k v) for seeded random u, v over a finite field.

    The result always annihilates the sampled sequence (verified before
    returning) and equals the minimal polynomial of `a` with the usual
    1 - 1/(q^(k-1) - 1) style probability when min = char poly.  Raises
    RetriesExhausted only if a caller-supplied degree target is unmet.
    """
    ring = a.ring
    n = a.rows
    rng = Rng(seed)
    best = None
    for _ in range(max(1, retries)):
        u = [ring.random_element(rng) for _ in range(n)]
        v = [ring.random_element(rng) for _ in range(n)]
        terms = []
        w = list(v)
        for k in range(2 * n):
            acc = ring.mul(u[0], w[0])
            for i in range(1, n):
                acc = ring.add(acc, ring.mul(u[i], w[i]))
            terms.append(acc)
            if k < 2 * n - 1:
                w = a.apply(w)
        try:
            gen = berlekamp_massey(ring, terms, n)
        except ZeroSequence:
            continue
        if not generates(ring, gen, terms):
            continue
        if best is None or len(gen) > len(best):
            best = gen
        if degree_target is None or len(gen) - 1 >= degree_target:
            return gen
    if best is not None and degree_target is None:
        return best
    if degree_target is not None and best is not None and len(best) - 1 >= degree_target:
        return best
    raise RetriesExhausted("no generator of degree >= %s found in %d tries"
                           % (degree_target, retries))
