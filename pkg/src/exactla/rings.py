"""Commutative rings with capability flags, plus the counting wrapper.

Every ring object exposes the same small protocol:

    zero, one, from_int(k), add, sub, mul, neg, eq, is_zero,
    div (fields), exact_div, div_by_int, inverse_of_unit,
    principal_root(order), spec (a RingSpec), format/parse, bit_size,
    random_element(rng, ...)

Elements are plain Python values (ints, Fractions, tuples, dicts) and are
immutable by convention; rings are stateless except for CountingRing.
"""

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from . import multipoly as mp
from . import poly
from .errors import (DftUnavailable, IntegerNotInvertible, NonTriangularIdeal,
                     NotDivisible, ParseError, ZeroDivisor)


@dataclass(frozen=True)
class RingSpec:
    """Declared capabilities of a ring.

    max_invertible_integer: None means unbounded (division by any k!,
    when possible at all, is exact and unique); 0 means no integer
    division is available.
    """
    characteristic: int
    is_integral_domain: bool
    is_field: bool
    has_exact_division: bool
    max_invertible_integer: object
    root_of_unity_orders: frozenset

    def allows_div_by_int(self, k):
        m = self.max_invertible_integer
        return m is None or (0 < k <= m)


@dataclass
class OpStats:
    adds: int = 0
    subs: int = 0
    muls: int = 0
    divs: int = 0
    exact_divs: int = 0

    @property
    def total(self):
        return self.adds + self.subs + self.muls + self.divs + self.exact_divs

    def merged(self, other):
        return OpStats(self.adds + other.adds, self.subs + other.subs,
                       self.muls + other.muls, self.divs + other.divs,
                       self.exact_divs + other.exact_divs)

    def as_dict(self):
        return {"adds": self.adds, "subs": self.subs, "muls": self.muls,
                "divs": self.divs, "exact_divs": self.exact_divs}


class Ring:
    """Base class: sensible defaults for optional capabilities."""

    name = "?"

    def eq(self, a, b):
        return a == b

    def is_zero(self, a):
        return self.eq(a, self.zero)

    def is_one(self, a):
        return self.eq(a, self.one)

    def div(self, a, b):
        raise NotDivisible("%s is not a field" % self.name)

    def exact_div(self, a, b):
        # division by +-1 works in every ring; anything else needs an algorithm
        if self.is_zero(b):
            raise ZeroDivisor("exact division by zero")
        if self.is_one(b):
            return a
        if self.eq(b, self.neg(self.one)):
            return self.neg(a)
        raise NotDivisible("%s has no exact-division algorithm" % self.name)

    def inverse_of_unit(self, a):
        if self.spec.is_field:
            if self.is_zero(a):
                raise ZeroDivisor("inverse of zero")
            return self.div(self.one, a)
        if self.is_one(a):
            return self.one
        if self.eq(a, self.neg(self.one)):
            return a
        raise NotDivisible("element is not a recognized unit of %s" % self.name)

    def div_by_int(self, a, k):
        if k <= 0:
            raise IntegerNotInvertible("integer divisor must be positive")
        return self.exact_div(a, self.from_int(k))

    def principal_root(self, order):
        raise DftUnavailable("%s has no principal root of order %d" % (self.name, order))

    def bit_size(self, a):
        return 0

    def pow(self, a, k):
        acc = self.one
        while k:
            if k & 1:
                acc = self.mul(acc, a)
            k >>= 1
            if k:
                a = self.mul(a, a)
        return acc

    def __repr__(self):
        return "<ring %s>" % self.name


# ---------------------------------------------------------------------------
# integers and rationals

class IntegerRing(Ring):
    name = "Z"
    zero = 0
    one = 1
    spec = RingSpec(0, True, False, True, None, frozenset())

    def from_int(self, k):
        return k

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def exact_div(self, a, b):
        if b == 0:
            raise ZeroDivisor("exact division by zero")
        q, r = divmod(a, b)
        if r:
            raise NotDivisible("%d does not divide %d" % (b, a))
        return q

    def div_by_int(self, a, k):
        if k <= 0:
            raise IntegerNotInvertible("integer divisor must be positive")
        return self.exact_div(a, k)

    def gcd(self, a, b):
        return math.gcd(a, b)

    def unit_normal(self, a):
        """(unit, normal form): normal form has positive sign."""
        return (-1, -a) if a < 0 else (1, a)

    def bit_size(self, a):
        return a.bit_length()

    def format(self, a):
        return str(a)

    def parse(self, s):
        try:
            return int(s)
        except ValueError:
            raise ParseError("bad integer literal %r" % s)

    def random_element(self, rng, bound=99):
        return rng.int_between(-bound, bound)


class RationalField(Ring):
    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)
    spec = RingSpec(0, True, True, True, None, frozenset())

    def from_int(self, k):
        return Fraction(k)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisor("division by zero")
        return a / b

    exact_div = div

    def div_by_int(self, a, k):
        if k <= 0:
            raise IntegerNotInvertible("integer divisor must be positive")
        return a / k

    def bit_size(self, a):
        return max(a.numerator.bit_length(), a.denominator.bit_length())

    def format(self, a):
        if a.denominator == 1:
            return str(a.numerator)
        return "%d/%d" % (a.numerator, a.denominator)

    def parse(self, s):
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError):
            raise ParseError("bad rational literal %r" % s)

    def random_element(self, rng, bound=9):
        num = rng.int_between(-bound, bound)
        den = rng.int_between(1, bound)
        return Fraction(num, den)


ZZ = IntegerRing()
QQ = RationalField()


# ---------------------------------------------------------------------------
# Z/pZ

def _is_probable_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class IntegersMod(Ring):
    """Z/mZ with canonical residues in [0, m)."""

    def __init__(self, m):
        if m < 2:
            raise ValueError("modulus must be >= 2")
        self.m = m
        self.name = "zp:%d" % m
        self.zero = 0
        self.one = 1 % m
        prime = _is_probable_prime(m)
        self._prime = prime
        orders = set()
        if prime:
            t = 2
            while (m - 1) % t == 0:
                orders.add(t)
                t *= 2
        self.spec = RingSpec(m if prime else 0, prime, prime, prime,
                             m - 1 if prime else 0, frozenset(orders))

    def from_int(self, k):
        return k % self.m

    def add(self, a, b):
        return (a + b) % self.m

    def sub(self, a, b):
        return (a - b) % self.m

    def mul(self, a, b):
        return (a * b) % self.m

    def neg(self, a):
        return (-a) % self.m

    def div(self, a, b):
        if b % self.m == 0:
            raise ZeroDivisor("division by zero in %s" % self.name)
        try:
            return a * pow(b, -1, self.m) % self.m
        except ValueError:
            raise ZeroDivisor("%d is a zero divisor mod %d" % (b, self.m))

    def exact_div(self, a, b):
        return self.div(a, b)

    def inverse_of_unit(self, a):
        return self.div(self.one, a)

    def div_by_int(self, a, k):
        if k <= 0:
            raise IntegerNotInvertible("integer divisor must be positive")
        if math.gcd(k, self.m) != 1:
            raise IntegerNotInvertible("%d is not invertible mod %d" % (k, self.m))
        return a * pow(k, -1, self.m) % self.m

    def principal_root(self, order):
        if not self._prime or order < 2 or (self.m - 1) % order != 0:
            raise DftUnavailable("no principal root of order %d mod %d" % (order, self.m))
        m = self.m
        cof = (m - 1) // order
        qs = _prime_factors(order)
        for g in range(2, m):
            x = pow(g, cof, m)
            if all(pow(x, order // q, m) != 1 for q in qs):
                return x
        raise DftUnavailable("no principal root of order %d mod %d" % (order, self.m))

    def bit_size(self, a):
        return a.bit_length()

    def format(self, a):
        return str(a)

    def parse(self, s):
        try:
            return int(s) % self.m
        except ValueError:
            raise ParseError("bad residue literal %r" % s)

    def random_element(self, rng, bound=None):
        return rng.below(self.m)


def _prime_factors(n):
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


# ---------------------------------------------------------------------------
# univariate polynomials (dense tuples, ascending, trailing zeros stripped)

_TERM_RE = re.compile(r"([+-]?\d+)((?:\*[a-zA-Z]\w*\^\d+)*)$")


class PolynomialRing(Ring):
    def __init__(self, base, var="x"):
        self.base = base
        self.var = var
        self.name = "%s[%s]" % (base.name, var)
        self.zero = ()
        self.one = (base.one,)
        self.x = (base.zero, base.one)
        b = base.spec
        self.spec = RingSpec(b.characteristic, b.is_integral_domain, False,
                             b.has_exact_division or b.is_field,
                             b.max_invertible_integer, frozenset())

    def from_int(self, k):
        c = self.base.from_int(k)
        return () if self.base.is_zero(c) else (c,)

    def from_base(self, c):
        return () if self.base.is_zero(c) else (c,)

    def add(self, a, b):
        return tuple(poly.add(self.base, list(a), list(b)))

    def sub(self, a, b):
        return tuple(poly.sub(self.base, list(a), list(b)))

    def mul(self, a, b):
        return tuple(poly.poly_mul(self.base, list(a), list(b)))

    def neg(self, a):
        return tuple(self.base.neg(c) for c in a)

    def exact_div(self, a, b):
        if not b:
            raise ZeroDivisor("exact division by zero polynomial")
        return tuple(poly.exact_div_poly(self.base, list(a), list(b)))

    def div_by_int(self, a, k):
        return tuple(self.base.div_by_int(c, k) for c in a)

    def degree(self, a):
        return len(a) - 1

    def gcd(self, a, b):
        """Monic/primitive gcd; supports field coefficients and Z."""
        a, b = list(a), list(b)
        base = self.base
        if base.spec.is_field:
            while b:
                _, r = poly.divmod_poly(base, a, b)
                a, b = b, r
            if a:
                lead_inv = base.inverse_of_unit(a[-1])
                a = [base.mul(lead_inv, c) for c in a]
            return tuple(a)
        if base is ZZ:
            return tuple(_gcd_int_poly(a, b))
        raise NotImplementedError("gcd unavailable over %s" % base.name)

    def unit_normal(self, a):
        """(unit u of the fraction-field numerator scaling, u*a normalized).

        Over a field base: monic; over Z: positive leading coefficient.
        """
        if not a:
            return self.one, a
        base = self.base
        if base.spec.is_field:
            u = base.inverse_of_unit(a[-1])
            return (u,), tuple(base.mul(u, c) for c in a)
        if base is ZZ:
            if a[-1] < 0:
                return (-1,), tuple(-c for c in a)
            return self.one, tuple(a)
        raise NotImplementedError("normalization unavailable over %s" % base.name)

    def bit_size(self, a):
        return max((self.base.bit_size(c) for c in a), default=0)

    def format(self, a):
        if not a:
            return "0"
        parts = []
        for k in range(len(a) - 1, -1, -1):
            c = a[k]
            if self.base.is_zero(c):
                continue
            cs = self.base.format(c)
            term = cs if k == 0 else "%s*%s^%d" % (cs, self.var, k)
            parts.append(term)
        out = parts[0]
        for t in parts[1:]:
            out += t if t.startswith("-") else "+" + t
        return out

    def parse(self, s):
        terms = _split_terms(s)
        coeffs = {}
        for t in terms:
            m = _TERM_RE.match(t)
            if not m:
                raise ParseError("bad polynomial term %r" % t)
            c = int(m.group(1))
            k = 0
            for piece in filter(None, m.group(2).split("*")):
                var, _, exp = piece.partition("^")
                if var != self.var:
                    raise ParseError("unknown variable %r" % var)
                k += int(exp)
            cur = coeffs.get(k, self.base.zero)
            coeffs[k] = self.base.add(cur, self.base.from_int(c))
        if not coeffs:
            return ()
        out = [self.base.zero] * (max(coeffs) + 1)
        for k, c in coeffs.items():
            out[k] = c
        return tuple(poly.strip(self.base, out))

    def random_element(self, rng, degree=2, bound=99):
        out = [self.base.random_element(rng, bound) for _ in range(degree + 1)]
        return tuple(poly.strip(self.base, out))


def _split_terms(s):
    s = s.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial literal")
    terms, cur = [], ""
    for ch in s:
        if ch in "+-" and cur and cur[-1] not in "*^+-":
            terms.append(cur)
            cur = ch if ch == "-" else ""
        else:
            cur += ch
    terms.append(cur)
    return [t.lstrip("+") or t for t in terms if t not in ("", "+")]


def _gcd_int_poly(a, b):
    # primitive gcd over Z[x]: contents times primitive part computed in Q[x]
    def content(c):
        g = 0
        for x in c:
            g = math.gcd(g, x)
        return g
    if not a:
        return _make_positive(b)
    if not b:
        return _make_positive(a)
    ca, cb = content(a), content(b)
    qa = [Fraction(x) for x in a]
    qb = [Fraction(x) for x in b]
    while qb:
        _, r = poly.divmod_poly(QQ, qa, qb)
        qa, qb = qb, r
    # clear denominators, take primitive part
    den = 1
    for c in qa:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in qa]
    g = content(ints)
    prim = [c // g for c in ints] if g else ints
    cg = math.gcd(ca, cb)
    return _make_positive([c * cg for c in prim])


def _make_positive(a):
    if a and a[-1] < 0:
        return [-c for c in a]
    return list(a)


# ---------------------------------------------------------------------------
# sparse multivariate polynomials over Z or Z/pZ

class MultiPolynomialRing(Ring):
    """Z[vars] (p=None) or Z/p[vars]; elements are {exp-tuple: int} dicts."""

    def __init__(self, p, varnames):
        self.p = p
        self.vars = tuple(varnames)
        k = len(self.vars)
        coeff_name = "Z" if p is None else "zp:%d" % p
        self.name = "%s[%s]" % (coeff_name, ",".join(self.vars))
        self.zero = {}
        self.one = mp.mp_const(1, k, p)
        prime = p is None or _is_probable_prime(p)
        self.spec = RingSpec(0 if p is None else p,
                             prime, False, prime,
                             None if p is None else p - 1, frozenset())

    def nvars(self):
        return len(self.vars)

    def from_int(self, k):
        return mp.mp_const(k, len(self.vars), self.p)

    def add(self, a, b):
        return mp.mp_add(a, b, self.p)

    def sub(self, a, b):
        return mp.mp_sub(a, b, self.p)

    def mul(self, a, b):
        return mp.mp_mul(a, b, self.p)

    def neg(self, a):
        return mp.mp_neg(a, self.p)

    def exact_div(self, a, b):
        if not b:
            raise ZeroDivisor("exact division by zero")
        return mp.mp_exact_div(a, b, self.p)

    def div_by_int(self, a, k):
        if k <= 0:
            raise IntegerNotInvertible("integer divisor must be positive")
        if self.p is None:
            out = {}
            for e, c in a.items():
                q, r = divmod(c, k)
                if r:
                    raise NotDivisible("coefficient %d not divisible by %d" % (c, k))
                out[e] = q
            return mp.mp_trim(out)
        if math.gcd(k, self.p) != 1:
            raise IntegerNotInvertible("%d is not invertible mod %d" % (k, self.p))
        inv = pow(k, -1, self.p)
        return mp.mp_scale(a, inv, self.p)

    def bit_size(self, a):
        return max((abs(c).bit_length() for c in a.values()), default=0)

    def format(self, a):
        if not a:
            return "0"
        parts = []
        for e in sorted(a, key=lambda e: (sum(e), e), reverse=True):
            c = a[e]
            bits = [str(c)]
            for var, k in zip(self.vars, e):
                if k:
                    bits.append("%s^%d" % (var, k))
            parts.append("*".join(bits))
        out = parts[0]
        for t in parts[1:]:
            out += t if t.startswith("-") else "+" + t
        return out

    def parse(self, s):
        out = {}
        for t in _split_terms(s):
            m = _TERM_RE.match(t)
            if not m:
                raise ParseError("bad polynomial term %r" % t)
            c = int(m.group(1))
            e = [0] * len(self.vars)
            for piece in filter(None, m.group(2).split("*")):
                var, _, exp = piece.partition("^")
                if var not in self.vars:
                    raise ParseError("unknown variable %r" % var)
                e[self.vars.index(var)] += int(exp)
            e = tuple(e)
            out[e] = out.get(e, 0) + c
        return mp.mp_trim(out, self.p)

    def random_element(self, rng, total_degree=2, bound=99):
        k = len(self.vars)
        out = {}
        for e in _exponents_upto(k, total_degree):
            c = rng.int_between(-bound, bound) if self.p is None else rng.below(self.p)
            out[e] = c
        return mp.mp_trim(out, self.p)


def _exponents_upto(nvars, total):
    if nvars == 0:
        yield ()
        return
    for head in range(total + 1):
        for rest in _exponents_upto(nvars - 1, total - head):
            yield (head,) + rest


# ---------------------------------------------------------------------------
# triangular quotient rings Z/p[vars]/<ideal>

class QuotientRing(Ring):
    """Z/p[v1..vk]/<I1..Ik> with Ii monic in vi and involving only v1..vi.

    Elements are reduced sparse dicts; reduction divides successively by
    Ik, ..., I1 (descending keeps earlier reductions stable).
    """

    def __init__(self, p, varnames, ideal):
        if not _is_probable_prime(p):
            raise ValueError("quotient rings are built over prime p")
        self.p = p
        self.vars = tuple(varnames)
        k = len(self.vars)
        if len(ideal) != k:
            raise NonTriangularIdeal("need one generator per variable")
        self.ideal = [mp.mp_trim(g, p) for g in ideal]
        for i, g in enumerate(self.ideal):
            d = mp.mp_deg_in(g, i)
            if d < 1:
                raise NonTriangularIdeal("generator %d has no %s term" % (i, self.vars[i]))
            lead = [(e, c) for e, c in g.items() if e[i] == d]
            if lead != [((0,) * i + (d,) + (0,) * (k - i - 1), 1)]:
                raise NonTriangularIdeal(
                    "generator %d is not monic in %s" % (i, self.vars[i]))
            for e in g:
                if any(e[j] for j in range(i + 1, k)):
                    raise NonTriangularIdeal(
                        "generator %d involves a later variable" % i)
        self.zero = {}
        self.one = mp.mp_const(1, k, p)
        self._poly = MultiPolynomialRing(p, varnames)
        self.name = "zp:%d[%s]/%s" % (
            p, ",".join(self.vars), ";".join(self._poly.format(g) for g in self.ideal))
        self.spec = RingSpec(p, False, False, False, p - 1, frozenset())

    def reduce(self, a):
        r = mp.mp_trim(a, self.p)
        for i in range(len(self.ideal) - 1, -1, -1):
            r = mp.mp_rem(r, self.ideal[i], i, self.p)
        return r

    def from_int(self, k):
        return mp.mp_const(k, len(self.vars), self.p)

    def add(self, a, b):
        return mp.mp_add(a, b, self.p)

    def sub(self, a, b):
        return mp.mp_sub(a, b, self.p)

    def neg(self, a):
        return mp.mp_neg(a, self.p)

    def mul(self, a, b):
        return self.reduce(mp.mp_mul(a, b, self.p))

    def div_by_int(self, a, k):
        if k <= 0:
            raise IntegerNotInvertible("integer divisor must be positive")
        if math.gcd(k, self.p) != 1:
            raise IntegerNotInvertible("%d is not invertible mod %d" % (k, self.p))
        return mp.mp_scale(a, pow(k, -1, self.p), self.p)

    def bit_size(self, a):
        return max((c.bit_length() for c in a.values()), default=0)

    def format(self, a):
        return self._poly.format(a)

    def parse(self, s):
        return self.reduce(self._poly.parse(s))

    def random_element(self, rng, bound=None):
        out = {}
        degs = [mp.mp_deg_in(self.ideal[i], i) for i in range(len(self.vars))]
        for e in _exponents_below(degs):
            out[e] = rng.below(self.p)
        return mp.mp_trim(out, self.p)


def _exponents_below(degs):
    if not degs:
        yield ()
        return
    for head in range(degs[0]):
        for rest in _exponents_below(degs[1:]):
            yield (head,) + rest


def quotient_reduce(ring_or_p, polynomial, ideal=None, varnames=None):
    """Canonical representative of a polynomial modulo a triangular ideal.

    Either pass a QuotientRing, or (p, poly-dict, ideal-dicts, varnames).
    """
    if isinstance(ring_or_p, QuotientRing):
        return ring_or_p.reduce(polynomial)
    qr = QuotientRing(ring_or_p, varnames, ideal)
    return qr.reduce(polynomial)


# ---------------------------------------------------------------------------
# fraction fields

class FractionField(Ring):
    """Field of fractions with mandatory gcd normalization on construction."""

    def __init__(self, base):
        if not base.spec.is_integral_domain:
            raise ValueError("fraction field needs an integral domain")
        if not hasattr(base, "gcd"):
            raise NotImplementedError("base ring has no gcd; cannot normalize")
        self.base = base
        self.name = "Frac(%s)" % base.name
        self.zero = (base.zero, base.one)
        self.one = (base.one, base.one)
        b = base.spec
        self.spec = RingSpec(b.characteristic, True, True, True,
                             b.max_invertible_integer if b.characteristic else None,
                             frozenset())

    def make(self, num, den):
        base = self.base
        if base.is_zero(den):
            raise ZeroDivisor("zero denominator")
        if base.is_zero(num):
            return (base.zero, base.one)
        g = base.gcd(num, den)
        if not base.is_zero(g) and not base.is_one(g):
            num = base.exact_div(num, g)
            den = base.exact_div(den, g)
        u, den = base.unit_normal(den)
        if not base.is_one(u):
            num = base.mul(num, u)
        return (num, den)

    def from_int(self, k):
        return (self.base.from_int(k), self.base.one)

    def from_base(self, a):
        return (a, self.base.one)

    def add(self, a, b):
        base = self.base
        return self.make(base.add(base.mul(a[0], b[1]), base.mul(b[0], a[1])),
                         base.mul(a[1], b[1]))

    def sub(self, a, b):
        base = self.base
        return self.make(base.sub(base.mul(a[0], b[1]), base.mul(b[0], a[1])),
                         base.mul(a[1], b[1]))

    def mul(self, a, b):
        base = self.base
        return self.make(base.mul(a[0], b[0]), base.mul(a[1], b[1]))

    def neg(self, a):
        return (self.base.neg(a[0]), a[1])

    def div(self, a, b):
        base = self.base
        if base.is_zero(b[0]):
            raise ZeroDivisor("division by zero fraction")
        return self.make(base.mul(a[0], b[1]), base.mul(a[1], b[0]))

    exact_div = div

    def div_by_int(self, a, k):
        if k <= 0:
            raise IntegerNotInvertible("integer divisor must be positive")
        kk = self.base.from_int(k)
        if self.base.is_zero(kk):
            raise IntegerNotInvertible("%d maps to zero in %s" % (k, self.name))
        return self.make(a[0], self.base.mul(a[1], kk))

    def eq(self, a, b):
        return a == b     # canonical forms make equality structural

    def is_zero(self, a):
        return self.base.is_zero(a[0])

    def bit_size(self, a):
        return max(self.base.bit_size(a[0]), self.base.bit_size(a[1]))

    def format(self, a):
        num = self.base.format(a[0])
        if self.base.is_one(a[1]):
            return num
        den = self.base.format(a[1])
        if "+" in num or "-" in num[1:] or "*" in num:
            num = "(%s)" % num
        if "+" in den or "-" in den[1:] or "*" in den:
            den = "(%s)" % den
        return "%s/%s" % (num, den)

    def parse(self, s):
        if "/" in s and not s.startswith("("):
            num, _, den = s.partition("/")
            return self.make(self.base.parse(num), self.base.parse(den))
        s = s.replace(" ", "")
        m = re.match(r"^\((.*)\)/\((.*)\)$", s)
        if m:
            return self.make(self.base.parse(m.group(1)), self.base.parse(m.group(2)))
        return self.make(self.base.parse(s), self.base.one)

    def random_element(self, rng, bound=9):
        num = self.base.random_element(rng, bound)
        while True:
            den = self.base.random_element(rng, bound)
            if not self.base.is_zero(den):
                return self.make(num, den)


# ---------------------------------------------------------------------------
# truncated power series A[z]/<z^(order+1)>

class SeriesRing(Ring):
    """Truncated series of fixed order over a base ring (tuples of length order+1)."""

    def __init__(self, base, order, var="z"):
        self.base = base
        self.order = order
        self.var = var
        self.name = "%s[%s]/<%s^%d>" % (base.name, var, var, order + 1)
        self.zero = (base.zero,) * (order + 1)
        self.one = (base.one,) + (base.zero,) * order
        self.z = tuple(base.one if i == 1 else base.zero for i in range(order + 1))
        b = base.spec
        self.spec = RingSpec(b.characteristic, False, False, False,
                             b.max_invertible_integer, frozenset())

    def from_int(self, k):
        return (self.base.from_int(k),) + (self.base.zero,) * self.order

    def from_base(self, c):
        return (c,) + (self.base.zero,) * self.order

    def from_poly(self, coeffs):
        return tuple(poly.series_trim(self.base, list(coeffs), self.order))

    def add(self, a, b):
        base = self.base
        return tuple(base.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        base = self.base
        return tuple(base.sub(x, y) for x, y in zip(a, b))

    def mul(self, a, b):
        return tuple(poly.series_mul(self.base, a, b, self.order))

    def neg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def is_zero(self, a):
        return all(self.base.is_zero(x) for x in a)

    def inverse_of_unit(self, a):
        return tuple(poly.series_inverse(self.base, list(a), self.order))

    def exact_div(self, a, b):
        if b == self.one:
            return a
        return self.mul(a, self.inverse_of_unit(b))

    def div_by_int(self, a, k):
        return tuple(self.base.div_by_int(x, k) for x in a)

    def eval_at_one(self, a):
        acc = self.base.zero
        for c in a:
            acc = self.base.add(acc, c)
        return acc

    def bit_size(self, a):
        return max((self.base.bit_size(c) for c in a), default=0)

    def format(self, a):
        helper = PolynomialRing(self.base, self.var)
        return helper.format(tuple(poly.strip(self.base, list(a))))

    def random_element(self, rng, bound=9):
        return tuple(self.base.random_element(rng, bound) for _ in range(self.order + 1))


# ---------------------------------------------------------------------------
# instrumentation

class CountingRing(Ring):
    """Transparent wrapper counting every ring-level operation.

    Copies, negation and comparisons are free, matching the book's
    counting convention.  Wrapping a CountingRing composes additively.
    """

    def __init__(self, inner, track_bits=False):
        self.inner = inner
        self.stats = OpStats()
        self.track_bits = track_bits
        self.max_bits = 0
        self.name = "counted(%s)" % inner.name
        self.zero = inner.zero
        self.one = inner.one
        self.spec = inner.spec
        self.base = getattr(inner, "base", None)

    def _probe(self, r):
        if self.track_bits:
            b = self.inner.bit_size(r)
            if b > self.max_bits:
                self.max_bits = b
        return r

    def from_int(self, k):
        return self.inner.from_int(k)

    def add(self, a, b):
        self.stats.adds += 1
        return self._probe(self.inner.add(a, b))

    def sub(self, a, b):
        self.stats.subs += 1
        return self._probe(self.inner.sub(a, b))

    def mul(self, a, b):
        self.stats.muls += 1
        return self._probe(self.inner.mul(a, b))

    def neg(self, a):
        return self.inner.neg(a)

    def div(self, a, b):
        self.stats.divs += 1
        return self._probe(self.inner.div(a, b))

    def exact_div(self, a, b):
        self.stats.exact_divs += 1
        return self._probe(self.inner.exact_div(a, b))

    def div_by_int(self, a, k):
        self.stats.divs += 1
        return self._probe(self.inner.div_by_int(a, k))

    def inverse_of_unit(self, a):
        self.stats.divs += 1
        return self._probe(self.inner.inverse_of_unit(a))

    def eq(self, a, b):
        return self.inner.eq(a, b)

    def is_zero(self, a):
        return self.inner.is_zero(a)

    def principal_root(self, order):
        return self.inner.principal_root(order)

    def bit_size(self, a):
        return self.inner.bit_size(a)

    def format(self, a):
        return self.inner.format(a)

    def parse(self, s):
        return self.inner.parse(s)

    def random_element(self, rng, **kw):
        return self.inner.random_element(rng, **kw)


def with_counting(ring, fn, track_bits=False):
    """Run fn(counted_ring) and return (result, OpStats)."""
    cr = CountingRing(ring, track_bits=track_bits)
    result = fn(cr)
    return result, cr.stats


# ---------------------------------------------------------------------------
# ring-spec strings (shared by the matrix file format and the CLI)

_QUOT_RE = re.compile(r"^zp:(\d+)\[([^\]]+)\]/(.+)$")
_POLY_RE = re.compile(r"^(Z|Q|zp:\d+)\[([^\]]+)\]$")


def ring_from_string(s):
    """Parse a ring-spec string: Z | Q | zp:<p> | Z[x] | Z[x,y] |
    zp:<p>[x] | zp:<p>[vars]/<poly>;<poly>."""
    s = s.strip()
    if s == "Z":
        return ZZ
    if s == "Q":
        return QQ
    m = _QUOT_RE.match(s)
    if m:
        p = int(m.group(1))
        varnames = [v.strip() for v in m.group(2).split(",")]
        helper = MultiPolynomialRing(p, varnames)
        gens = [helper.parse(g) for g in m.group(3).split(";")]
        return QuotientRing(p, varnames, gens)
    m = _POLY_RE.match(s)
    if m:
        head, varpart = m.group(1), m.group(2)
        varnames = [v.strip() for v in varpart.split(",")]
        if head == "Z":
            coeff = None
        elif head == "Q":
            if len(varnames) == 1:
                return PolynomialRing(QQ, varnames[0])
            raise ParseError("multivariate rings over Q are not supported")
        else:
            coeff = int(head.split(":")[1])
        if len(varnames) == 1:
            base = ZZ if coeff is None else IntegersMod(coeff)
            return PolynomialRing(base, varnames[0])
        return MultiPolynomialRing(coeff, varnames)
    if s.startswith("zp:"):
        return IntegersMod(int(s[3:]))
    raise ParseError("unknown ring spec %r" % s)
