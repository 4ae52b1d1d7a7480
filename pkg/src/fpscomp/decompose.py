"""Equivalence classes of decompositions of a series of order >= 2.

Classes are indexed by ordered factorizations of the order: each tuple
(n_1, ..., n_r) with all parts >= 2 and product n yields the canonical
chain beta o z^{n_1}, z^{n_2}, ..., z^{n_r} o beta^{-1}.  Two chains of
equal shape are equivalent when unit bridges mu_i can be threaded
between consecutive factors; the witness search solves one triangular
system per bridge and backtracks over leading-coefficient branches.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .boettcher import BoettcherData, boettcher, solve_conjugator
from .errors import NotADoubleDecomposition, NotEquivalent, OrderMismatch
from .series import TruncatedSeries

__all__ = [
    "Decomposition",
    "ordered_factorizations",
    "canonical_decomposition",
    "enumerate_classes",
    "equivalence_witness",
    "engstrom_refine",
]


@dataclass
class Decomposition:
    target: TruncatedSeries
    factors: list
    bridges: list | None = None

    def recomposes(self):
        cur = self.factors[0]
        for nxt in self.factors[1:]:
            cur = cur.compose(nxt)
        return cur.eq(self.target)

    @property
    def shape(self):
        return tuple(s.ord for s in self.factors)


def ordered_factorizations(n):
    """All tuples of integers >= 2 with product n, lexicographically."""
    if n < 2:
        raise ValueError("n must be >= 2")

    def rec(k):
        if k == 1:
            return [()]
        out = []
        for d in range(2, k + 1):
            if k % d == 0:
                out.extend((d,) + rest for rest in rec(k // d))
        return out

    return rec(n)


def canonical_decomposition(data: BoettcherData, parts) -> Decomposition:
    """The class representative for one ordered factorization of ord A."""
    parts = tuple(parts)
    n = data.n
    prod = 1
    for p in parts:
        if p < 2:
            raise OrderMismatch("factorization parts must be >= 2")
        prod *= p
    if prod != n:
        raise OrderMismatch(f"parts {parts} do not multiply to {n}")
    a = data.a
    if len(parts) == 1:
        return Decomposition(target=a, factors=[a])
    f = a.field
    trunc = a.trunc

    def mono(k):
        return TruncatedSeries.monomial(f, k, trunc)

    factors = [data.beta.compose(mono(parts[0]))]
    factors.extend(mono(p) for p in parts[1:-1])
    factors.append(mono(parts[-1]).compose(data.beta.invert()))
    dec = Decomposition(target=a, factors=factors)
    assert dec.recomposes(), "canonical class failed to recompose"
    return dec


def enumerate_classes(data: BoettcherData):
    """One Decomposition per ordered factorization of ord A."""
    return [
        canonical_decomposition(data, parts)
        for parts in ordered_factorizations(data.n)
    ]


def _bridge_candidates(left, target):
    """Units mu with left o mu = target, one per leading branch."""
    f = left.field
    n = left.ord
    ratio = f.div(target.coeff(n), left.coeff(n))
    base = f.nth_root(ratio, n)
    out = []
    for root in f.roots_of_unity(n):
        leading = f.mul(base, root.value)
        mu = solve_conjugator(left, target, leading)
        if left.compose(mu).eq(target):
            out.append(mu)
    return out


def equivalence_witness(d1: Decomposition, d2: Decomposition):
    """Bridges mu_1..mu_{k-1} relating two decompositions, or NotEquivalent.

    The witness satisfies A_1 = B_1 o mu_1^{-1}, A_i = mu_{i-1} o B_i o
    mu_i^{-1}, A_k = mu_{k-1} o B_k, where A_i are d1's factors and B_i
    are d2's.  Branches of each bridge's leading coefficient are explored
    with backtracking.
    """
    if not d1.target.eq(d2.target):
        raise NotEquivalent("decompositions have different targets")
    if len(d1.factors) != len(d2.factors):
        raise NotEquivalent("decompositions have different lengths")
    if d1.shape != d2.shape:
        raise NotEquivalent(
            f"factor orders differ: {d1.shape} vs {d2.shape}"
        )
    k = len(d1.factors)
    if k == 1:
        if d1.factors[0].eq(d2.factors[0]):
            return []
        raise NotEquivalent("single factors differ")

    a_fac, b_fac = d1.factors, d2.factors

    def extend(i, prev):
        # invariant: A_1 o ... o A_i = B_1 o ... o B_i o prev^{-1}
        if i == k - 1:
            if a_fac[k - 1].eq(prev.compose(b_fac[k - 1])):
                return []
            return None
        left = prev.invert().compose(a_fac[i]) if i else a_fac[0]
        for mu in _bridge_candidates(left, b_fac[i]):
            rest = extend(i + 1, mu)
            if rest is not None:
                return [mu] + rest
        return None

    bridges = extend(0, None)
    if bridges is None:
        raise NotEquivalent("no unit bridge chain exists at truncation")
    return bridges


def engstrom_refine(a, c, b, d):
    """gcd refinement of a double decomposition A o C = B o D.

    Returns (U, V, At, Bt, Ct, Dt) with A = U o At, B = U o Bt,
    C = Ct o V, D = Dt o V, ord U = gcd(ord A, ord B), ord V =
    gcd(ord C, ord D), and At o Ct = Bt o Dt.  Tilde factors may have
    order 1.
    """
    for s, name in ((a, "A"), (c, "C"), (b, "B"), (d, "D")):
        s.require_gamma(name)
    f_series = a.compose(c)
    if not f_series.eq(b.compose(d)):
        raise NotADoubleDecomposition("A o C and B o D differ at truncation")
    oa, oc, ob, od = a.ord, c.ord, b.ord, d.ord
    u, v = gcd(oa, ob), gcd(oc, od)
    data = boettcher(f_series)
    fld = f_series.field
    trunc = f_series.trunc

    def mono(k):
        return TruncatedSeries.monomial(fld, k, trunc)

    beta, beta_inv = data.beta, data.beta.invert()

    def split_pair(outer, inner, n_outer, n_inner):
        target = Decomposition(target=f_series, factors=[outer, inner])
        canon = canonical_decomposition(data, (n_outer, n_inner))
        # bridge nu: outer = beta o z^{n_outer} o nu^{-1}, inner = nu o ...
        return equivalence_witness(target, canon)[0]

    nu = split_pair(a, c, oa, oc)
    mu = split_pair(b, d, ob, od)
    big_u = beta.compose(mono(u))
    big_v = mono(v).compose(beta_inv)
    a_t = mono(oa // u).compose(nu.invert())
    c_t = nu.compose(mono(oc // v))
    b_t = mono(ob // u).compose(mu.invert())
    d_t = mu.compose(mono(od // v))
    assert big_u.compose(a_t).eq(a), "A refinement failed"
    assert big_u.compose(b_t).eq(b), "B refinement failed"
    assert c_t.compose(big_v).eq(c), "C refinement failed"
    assert d_t.compose(big_v).eq(d), "D refinement failed"
    assert a_t.compose(c_t).eq(b_t.compose(d_t)), "cross identity failed"
    return big_u, big_v, a_t, b_t, c_t, d_t
