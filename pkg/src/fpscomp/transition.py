"""Transition functions phi with A o phi = A, and the cyclic group they form.

For A of order n the group G_A is {beta o (eps z) o beta^{-1} : eps in U_n},
with the canonical primitive eps generating it.  All group comparisons are
coefficientwise modulo the common truncation; on the approx backend this is
a tolerance-level certificate, not a statement about the untruncated series.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .boettcher import BoettcherData, boettcher
from .errors import OrderMismatch
from .series import TruncatedSeries

__all__ = [
    "TransitionGroup",
    "transition_group",
    "element_order",
    "series_from_transition",
    "subgroup_test",
    "conjugate_group",
    "iterate_group",
    "cancel_right",
]


@dataclass
class TransitionGroup:
    order: int
    beta: TruncatedSeries
    elements: list = dc_field(default_factory=list)

    @property
    def generator(self):
        # powers of the index-1 element enumerate the whole group
        return self.elements[1 % self.order]

    def contains(self, phi):
        return any(phi.eq(g) for g in self.elements)


def _conjugates(beta, scalars):
    beta_inv = beta.invert()
    return [beta.compose(beta_inv.scale(eps)) for eps in scalars]


def transition_group(data: BoettcherData, verify=True) -> TransitionGroup:
    """G_A built from Boettcher data; every element is checked against
    A o g = A when ``verify`` is set."""
    n = data.n
    f = data.a.field
    roots = f.roots_of_unity(n)
    elements = _conjugates(data.beta, [r.value for r in roots])
    group = TransitionGroup(order=n, beta=data.beta, elements=elements)
    if verify:
        for g in elements:
            assert data.a.compose(g).eq(data.a), "transition residual failed"
    return group


def iterate_group(data: BoettcherData, l: int) -> TransitionGroup:
    """G_{A^{o l}} = {beta o (eps z) o beta^{-1} : eps in U_(n^l)}; beta stays
    a Boettcher function for every iterate of A."""
    n = data.n**l
    f = data.a.field
    roots = f.roots_of_unity(n)
    elements = _conjugates(data.beta, [r.value for r in roots])
    return TransitionGroup(order=n, beta=data.beta, elements=elements)


def element_order(phi: TruncatedSeries, bound: int):
    """Least d <= bound with phi^{o d} = z modulo the truncation, else None."""
    phi.require_unit("transition candidate")
    z = TruncatedSeries.identity(phi.field, phi.trunc)
    cur = phi
    for d in range(1, bound + 1):
        if cur.eq(z):
            return d
        cur = cur.compose(phi)
    return None


def series_from_transition(phi: TruncatedSeries, d: int) -> TruncatedSeries:
    """A = z * phi * phi^{o 2} * ... * phi^{o (d-1)}, an order-d series with
    A o phi = A (requires |phi| = d >= 2 at truncation level)."""
    if d < 2:
        raise OrderMismatch("transition order must be >= 2")
    if element_order(phi, d) != d:
        raise OrderMismatch(f"series does not have compositional order {d}")
    result = TruncatedSeries.identity(phi.field, phi.trunc)
    cur = phi
    for _ in range(d - 1):
        result = result * cur
        cur = cur.compose(phi)
    return result


def subgroup_test(g: TransitionGroup, h: TransitionGroup) -> bool:
    """True iff every element of g matches an element of h mod truncation."""
    return all(h.contains(x) for x in g.elements)


def conjugate_group(g: TransitionGroup, mu: TruncatedSeries) -> TransitionGroup:
    """mu^{-1} o G o mu, the transition group of mu^{-1} o A o mu."""
    mu.require_unit("conjugating series")
    mu_inv = mu.invert()
    elements = [mu_inv.compose(x.compose(mu)) for x in g.elements]
    return TransitionGroup(
        order=g.order, beta=mu_inv.compose(g.beta), elements=elements
    )


def cancel_right(a, x1, x2):
    """If A o X1 = A o X2, the phi in G_A with X2 = phi o X1; else None."""
    a.require_gamma("cancellation subject")
    if x1.ord < 1 or x2.ord < 1:
        raise OrderMismatch("X1, X2 must have order >= 1")
    if not a.compose(x1).eq(a.compose(x2)):
        return None
    group = transition_group(boettcher(a))
    for g in group.elements:
        if g.compose(x1).eq(x2):
            return g
    return None
