"""Characteristic-polynomial algorithm registry with ring applicability."""

from dataclasses import dataclass

from . import charpoly as cp


@dataclass(frozen=True)
class Algo:
    id: str
    run: object                  # DenseMatrix -> CharPoly
    applicable: object           # (ring, n) -> reason-or-None
    label: str


def _any(ring, n):
    return None


def _needs_int_div(ring, n):
    if ring.spec.allows_div_by_int(n):
        return None
    return "IntegerNotInvertible: cannot divide by 1..%d in %s" % (n, ring.name)


def _needs_field(ring, n):
    return None if ring.spec.is_field else "%s is not a field" % ring.name


def _needs_domain(ring, n):
    s = ring.spec
    if s.is_field or (s.is_integral_domain and s.has_exact_division):
        return None
    return "%s is not a field or exact-division domain" % ring.name


def _first(m):
    return cp.charpoly_faddeev(m, compute_inverse=False)[0]


ALGORITHMS = [
    Algo("berkowitz", cp.charpoly_berkowitz, _any, "Berkowitz"),
    Algo("berkowitz_sparse", lambda m: cp.charpoly_berkowitz(m, sparse_aware=True),
         _any, "Berkowitz (sparse-aware)"),
    Algo("chistov", cp.charpoly_chistov, _any, "Chistov"),
    Algo("chistov_sparse", lambda m: cp.charpoly_chistov(m, sparse_aware=True),
         _any, "Chistov (sparse-aware)"),
    Algo("faddeev", _first, _needs_int_div, "Souriau-Faddeev-Frame"),
    Algo("leverrier", cp.charpoly_leverrier, _needs_int_div, "Le Verrier"),
    Algo("preparata_sarwate", cp.charpoly_preparata_sarwate, _needs_int_div,
         "Preparata-Sarwate"),
    Algo("hessenberg", cp.charpoly_hessenberg, _needs_field, "Hessenberg"),
    Algo("bareiss_modified", cp.charpoly_bareiss_modified, _any,
         "modified Jordan-Bareiss"),
    Algo("interpolation", cp.charpoly_interpolation, _needs_int_div,
         "Lagrange interpolation"),
    Algo("frobenius", cp.charpoly_frobenius, _needs_domain, "Frobenius"),
    Algo("kaltofen", cp.charpoly_kaltofen, _any, "Kaltofen-Wiedemann"),
]

_BY_ID = {a.id: a for a in ALGORITHMS}
_BY_ID["ps"] = _BY_ID["preparata_sarwate"]


def get(algo_id):
    try:
        return _BY_ID[algo_id]
    except KeyError:
        raise KeyError("unknown algorithm %r (have: %s)"
                       % (algo_id, ", ".join(sorted(_BY_ID))))


def ids():
    return [a.id for a in ALGORITHMS]
