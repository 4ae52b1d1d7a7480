"""Symmetric series z^r R(z^m): detection and structure.

Three equivalent characterizations are implemented: the support test
(all exponents in one residue class mod m), the Boettcher-function test
(beta = z L(z^m)), and the transition-group test (every phi = z M(z^m),
which allows an extra unit factor mu on the left of the subject).  On
top of these sit the structured decomposition of a symmetric series,
the symmetric-right-factor search, and the iterate criterion.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import gcd

from .boettcher import BoettcherData, boettcher
from .errors import NotSymmetric, OrderMismatch
from .series import TruncatedSeries, split_symmetric
from .transition import TransitionGroup, element_order, series_from_transition

__all__ = [
    "SymmetryProfile",
    "detect_symmetry",
    "is_symmetric",
    "boettcher_symmetry",
    "transition_symmetry",
    "symmetric_right_factor",
    "decompose_symmetric",
    "reznick_check",
    "recover_symmetric_conjugator",
]


@dataclass
class SymmetryProfile:
    """All moduli m >= 2 for which the subject has the z^r R(z^m) shape."""

    subject: TruncatedSeries
    pairs: list = dc_field(default_factory=list)  # (m, r), m descending
    maximal_m: int = 1


def _divisors_desc(n):
    out = [d for d in range(n, 1, -1) if n % d == 0]
    return out


def detect_symmetry(a: TruncatedSeries) -> SymmetryProfile:
    """Support-based profile, valid modulo the truncation.

    The maximal modulus is the gcd of all support differences; a monomial
    admits every modulus, capped here at the truncation order.
    """
    support = a.support()
    if not support:
        raise ValueError("cannot profile the zero series")
    if len(support) == 1:
        maximal = max(a.trunc, 1)
    else:
        maximal = 0
        base = support[0]
        for i in support[1:]:
            maximal = gcd(maximal, i - base)
    pairs = [(m, a.ord % m) for m in _divisors_desc(maximal)]
    return SymmetryProfile(subject=a, pairs=pairs, maximal_m=max(maximal, 1))


def is_symmetric(a: TruncatedSeries, m: int) -> bool:
    """True iff a = z^r R(z^m) modulo the truncation."""
    try:
        split_symmetric(a, m)
        return True
    except NotSymmetric:
        return False


def boettcher_symmetry(data: BoettcherData, m: int) -> bool:
    """True iff the Boettcher function has the z L(z^m) shape.

    Equivalent to the subject itself being symmetric of modulus m; the
    shape is branch independent since rescaling by eps z preserves it.
    """
    return is_symmetric(data.beta, m)


def transition_symmetry(group: TransitionGroup, m: int) -> bool:
    """True iff every transition function has the z M(z^m) shape.

    Equivalent to the subject being mu o z^r R(z^m) for some unit mu;
    the generator suffices because compositions of z M(z^m) forms are
    again of that form, but all elements are checked for robustness on
    the approx backend.
    """
    return all(is_symmetric(g, m) for g in group.elements)


def symmetric_right_factor(data: BoettcherData, m: int):
    """(C, B) with subject = B o C and C = z^r R(z^m) in Gamma, or None.

    Scans the nontrivial transition functions for the z M(z^m) shape;
    a hit phi of compositional order d yields the order-d right factor
    C = z * phi * ... * phi^{o (d-1)}, automatically symmetric because
    each factor has support in 1 + mZ.
    """
    from .solvers import solve_right
    from .transition import transition_group

    group = transition_group(data)
    n = group.order
    z = TruncatedSeries.identity(data.a.field, data.beta.trunc)
    for phi in group.elements:
        if phi.eq(z):
            continue
        if not is_symmetric(phi, m):
            continue
        d = element_order(phi, n)
        if d is None or d < 2:
            continue
        c = series_from_transition(phi, d)
        b = solve_right(data.a, c)
        return c, b
    return None


def decompose_symmetric(a, a1, a2, m, r):
    """Structure of a factorization A = A1 o A2 of a symmetric series.

    Returns (mu, r1, R1, r2, R2) with A2 = mu o z^{r2} R2(z^m) and
    A1 o mu = z^{r1} R1(z^{m'}), m' = m / gcd(r2, m); the exponents obey
    r1 * r2 = r (mod m), which is asserted.
    """
    from .solvers import solve_right

    a.require_gamma("symmetric subject")
    a1.require_gamma("outer factor")
    a2.require_gamma("inner factor")
    if not a1.compose(a2).eq(a):
        raise OrderMismatch("A1 o A2 does not recompose to A at truncation")
    r_check, _ = split_symmetric(a, m)
    if r_check != r % m:
        raise NotSymmetric(a.ord, m)
    f = a.field
    if is_symmetric(a2, m):
        mu = TruncatedSeries.identity(f, a2.trunc)
    else:
        eps = f.primitive_root(m)
        a2_eps = TruncatedSeries(
            f,
            [f.mul(c, f.pow(eps, i)) for i, c in enumerate(a2.coeffs)],
            a2.trunc,
        )
        nu = solve_right(a2_eps, a2)
        d = element_order(nu, m)
        if d is None:
            raise OrderMismatch("conjugating unit has no finite order <= m")
        mu = boettcher(series_from_transition(nu, d)).beta
    r2, big_r2 = split_symmetric(mu.invert().compose(a2), m)
    m1 = m // gcd(r2, m) if r2 else 1
    # the outer factor is pinned down by A = (A1 o mu) o (mu^{-1} o A2)
    # only up to index trunc // ord(A2); later coefficients are free and
    # need not follow the symmetric shape
    lifted = a1.compose(mu).truncate(a.trunc // a2.ord)
    if m1 >= 2:
        r1, big_r1 = split_symmetric(lifted, m1)
    else:
        r1 = lifted.ord % m
        big_r1 = lifted.unshift(r1)
    assert (r1 * r2 - r) % m == 0, "exponent congruence failed"
    return mu, r1, big_r1, r2, big_r2


def reznick_check(a, s, m):
    """(iterate symmetric, base symmetric) for modulus m; the two flags
    agree for every subject in Gamma, which is asserted."""
    a.require_gamma("iterate subject")
    base = is_symmetric(a, m)
    it = is_symmetric(a.iterate(s), m)
    assert base == it, "iterate symmetry flag diverged from the base flag"
    return it, base


def recover_symmetric_conjugator(c, m):
    """(mu, r, R) with C = mu o z^r R(z^m), for C whose transition group
    commutes with the rotations eps z, eps in U_m.

    The unit nu with C o (eps_m z) = nu o C is extracted first; if it is
    the identity, C is already symmetric and mu = z.  Otherwise nu has
    finite order d and mu is the Boettcher function of the order-d series
    built from nu.  mu is canonical but not unique.
    """
    from .solvers import solve_right

    c.require_gamma("symmetric-conjugation subject")
    f = c.field
    if is_symmetric(c, m):
        mu = TruncatedSeries.identity(f, c.trunc)
    else:
        eps = f.primitive_root(m)
        c_eps = TruncatedSeries(
            f,
            [f.mul(x, f.pow(eps, i)) for i, x in enumerate(c.coeffs)],
            c.trunc,
        )
        nu = solve_right(c_eps, c)
        d = element_order(nu, m)
        if d is None:
            raise OrderMismatch("conjugating unit has no finite order <= m")
        mu = boettcher(series_from_transition(nu, d)).beta
    r, big_r = split_symmetric(mu.invert().compose(c), m)
    return mu, r, big_r
