"""Ring protocol: axioms, divisions, quotient reduction, counting."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exactla.errors import (IntegerNotInvertible, NonTriangularIdeal,
                            NotDivisible, ZeroDivisor)
from exactla.matrix import DenseMatrix
from exactla.elimination import gauss_lu
from exactla.rings import (QQ, ZZ, CountingRing, FractionField, IntegersMod,
                           MultiPolynomialRing, PolynomialRing, QuotientRing,
                           ring_from_string, quotient_reduce, with_counting)
from exactla.rng import Rng


F7 = IntegersMod(7)
ZX = PolynomialRing(ZZ, "x")


def _rings_and_samplers():
    rng = Rng(1)
    helper = MultiPolynomialRing(7, ["x"])
    qr = QuotientRing(7, ["x"], [helper.parse("1*x^3+-1")])
    zxy = MultiPolynomialRing(None, ["x", "y"])
    return [
        (ZZ, lambda: ZZ.random_element(rng)),
        (QQ, lambda: QQ.random_element(rng)),
        (F7, lambda: F7.random_element(rng)),
        (ZX, lambda: ZX.random_element(rng, degree=3, bound=5)),
        (FractionField(PolynomialRing(F7, "t")),
         lambda: FractionField(PolynomialRing(F7, "t")).random_element(rng, bound=4)),
        (qr, lambda: qr.random_element(rng)),
        (zxy, lambda: zxy.random_element(rng, total_degree=2, bound=5)),
    ]


@pytest.mark.parametrize("idx", range(7))
def test_ring_axioms_randomized(idx):
    ring, sample = _rings_and_samplers()[idx]
    for _ in range(60):
        a, b, c = sample(), sample(), sample()
        assert ring.eq(ring.add(a, b), ring.add(b, a))
        assert ring.eq(ring.mul(a, b), ring.mul(b, a))
        assert ring.eq(ring.add(ring.add(a, b), c), ring.add(a, ring.add(b, c)))
        assert ring.eq(ring.mul(ring.mul(a, b), c), ring.mul(a, ring.mul(b, c)))
        assert ring.eq(ring.mul(a, ring.add(b, c)),
                       ring.add(ring.mul(a, b), ring.mul(a, c)))
        assert ring.eq(ring.add(a, ring.zero), a)
        assert ring.eq(ring.mul(a, ring.one), a)
        assert ring.eq(ring.add(a, ring.neg(a)), ring.zero)
        assert ring.eq(ring.sub(a, b), ring.add(a, ring.neg(b)))


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_exact_div_roundtrip_integers(a, b):
    if b == 0:
        return
    assert ZZ.exact_div(a * b, b) == a


@settings(max_examples=60)
@given(st.lists(st.integers(-9, 9), min_size=1, max_size=5),
       st.lists(st.integers(-9, 9), min_size=1, max_size=5))
def test_exact_div_roundtrip_polys(ac, bc):
    a, b = tuple(ac), tuple(bc)
    from exactla.poly import strip
    a = tuple(strip(ZZ, list(a)))
    b = tuple(strip(ZZ, list(b)))
    if not b:
        return
    assert ZX.exact_div(ZX.mul(a, b), b) == a


def test_exact_div_examples():
    assert ZZ.exact_div(6, 3) == 2
    x2m1 = ZX.parse("1*x^2+-1")
    xm1 = ZX.parse("1*x^1+-1")
    assert ZX.exact_div(x2m1, xm1) == ZX.parse("1*x^1+1")
    with pytest.raises(NotDivisible):
        ZZ.exact_div(5, 2)
    with pytest.raises(ZeroDivisor):
        ZZ.exact_div(5, 0)


def test_div_by_integer_examples():
    assert ZZ.div_by_int(6, 3) == 2
    assert F7.div_by_int(3, 2) == 5          # 2*5 = 10 = 3 mod 7
    with pytest.raises(NotDivisible):
        ZZ.div_by_int(5, 2)
    with pytest.raises(IntegerNotInvertible):
        F7.div_by_int(3, 7)
    with pytest.raises(IntegerNotInvertible):
        ZZ.div_by_int(5, 0)


def test_div_by_integer_unique_by_enumeration():
    # the returned residue is the unique x with 2x = 3 mod 7
    sols = [x for x in range(7) if (2 * x) % 7 == 3]
    assert sols == [F7.div_by_int(3, 2)]


def test_quotient_reduce_examples():
    helper = MultiPolynomialRing(7, ["x"])
    ideal = [helper.parse("1*x^3+-1")]
    qr = QuotientRing(7, ["x"], ideal)
    assert qr.reduce(helper.parse("1*x^3")) == qr.one
    assert qr.reduce(helper.parse("1*x^4")) == helper.parse("1*x^1")
    assert qr.reduce(helper.parse("8")) == qr.one
    assert quotient_reduce(qr, helper.parse("1*x^3")) == qr.one


def test_quotient_ring_triangular_validation():
    helper = MultiPolynomialRing(7, ["x", "y"])
    good = [helper.parse("1*x^2+1"), helper.parse("1*y^2+1*x^1")]
    QuotientRing(7, ["x", "y"], good)
    with pytest.raises(NonTriangularIdeal):
        QuotientRing(7, ["x", "y"], [helper.parse("1*x^2+1*y^1"), good[1]])
    with pytest.raises(NonTriangularIdeal):
        QuotientRing(7, ["x", "y"], [helper.parse("2*x^2+1"), good[1]])


def test_quotient_ring_bivariate_book_example():
    # Z17[x,y]/<H, L> with L = y^3 - 2y + 1 (y first so the ideal is triangular)
    helper = MultiPolynomialRing(17, ["y", "x"])
    L = helper.parse("1*y^3+-2*y^1+1")
    H = helper.parse("1*x^5+-5*x^1*y^1+1")
    qr = QuotientRing(17, ["y", "x"], [L, H])
    rng = Rng(3)
    for _ in range(30):
        a = qr.random_element(rng)
        b = qr.random_element(rng)
        ab = qr.mul(a, b)
        # canonical: degrees below the ideal degrees
        for e in ab:
            assert e[0] < 3 and e[1] < 5
        assert qr.mul(a, qr.one) == a


def test_counting_scope_examples():
    _, stats = with_counting(ZZ, lambda r: r.add(3, 4))
    assert stats.adds == 1 and stats.total == 1
    _, stats = with_counting(ZZ, lambda r: None)
    assert stats.total == 0


def test_counting_gauss_3x3_matches_prop_2_1_4():
    rng = Rng(9)
    def run(r):
        m = DenseMatrix(r, 3, 3, [QQ.from_int(rng.int_between(1, 50)) for _ in range(9)])
        return gauss_lu(m)
    _, stats = with_counting(QQ, run)
    assert stats.total == 13


def test_counting_nested_scopes_compose():
    outer = CountingRing(ZZ)
    inner = CountingRing(outer)
    inner.mul(2, 3)
    inner.add(1, 1)
    assert inner.stats.total == 2
    assert outer.stats.total == 2


def test_counting_transparent():
    rng = Rng(4)
    vals = [rng.int_between(-50, 50) for _ in range(8)]
    def work(r):
        acc = r.zero
        for v in vals:
            acc = r.add(r.mul(v, v), acc)
        return acc
    plain = work(ZZ)
    counted, stats = with_counting(ZZ, work)
    assert plain == counted
    assert stats.muls == 8 and stats.adds == 8


def test_principal_roots_property():
    p = 12289          # 1 + 12*1024: plenty of 2-power roots
    ring = IntegersMod(p)
    for order in (2, 4, 8, 16):
        assert order in ring.spec.root_of_unity_orders
        xi = ring.principal_root(order)
        assert pow(xi, order, p) == 1
        for i in range(1, order):
            s = sum(pow(xi, i * j, p) for j in range(order)) % p
            assert s == 0


def test_fraction_field_normalization():
    ff = FractionField(ZZ)
    x = ff.make(4, -6)
    assert x == (-2, 3)          # reduced, positive denominator
    fx = FractionField(PolynomialRing(QQ, "t"))
    from fractions import Fraction
    num = (Fraction(2), Fraction(2))      # 2 + 2t
    den = (Fraction(0), Fraction(4))      # 4t
    v = fx.make(num, den)
    # denominator monic, gcd cleared
    assert v[1][-1] == Fraction(1)


def test_ring_literal_and_spec_strings():
    for spec, probe in [("Z", "-42"), ("Q", "3/4"), ("zp:10007", "123"),
                        ("Z[x]", "2*x^2+-3*x^1+1"), ("Z[x,y]", "2*x^1*y^2+-7")]:
        ring = ring_from_string(spec)
        v = ring.parse(probe)
        assert ring.parse(ring.format(v)) == v
    qr = ring_from_string("zp:7[x]/1*x^3+-1")
    v = qr.parse("5*x^4+3")
    assert qr.parse(qr.format(v)) == v


def test_ringspec_invariants():
    assert ZZ.spec.is_integral_domain and not ZZ.spec.is_field
    assert QQ.spec.is_field and QQ.spec.max_invertible_integer is None
    assert F7.spec.is_field and F7.spec.max_invertible_integer == 6
    assert F7.spec.characteristic == 7
    q = ring_from_string("zp:7[x]/1*x^3+-1")
    assert not q.spec.is_field and q.spec.max_invertible_integer == 6


def test_characteristic_two_field():
    from exactla import bench
    from exactla.matrix import DenseMatrix
    f2 = IntegersMod(2)
    rng = Rng(12)
    a = DenseMatrix(f2, 5, 5, [rng.below(2) for _ in range(25)])
    rep = bench.cross_validate(a)
    assert rep.unanimous
    by_id = {e.algo: e.status for e in rep.entries}
    assert by_id["berkowitz"] == "ok" and by_id["hessenberg"] == "ok"
    assert by_id["leverrier"].startswith("IntegerNotInvertible")   # 2 = 0 in F2
