"""Shared Boettcher coordinates, commutation, and monomial conjugacy.

Two series share a Boettcher coordinate exactly when beta_A = beta_B o cz
for a scalar c; that scalar controls both the commutation criterion
(c^{(ord A - 1)(ord B - 1)} = 1) and the conjugation of a finitely
generated right-reversible semigroup onto monomials c^{m-1} z^m.
"""
from __future__ import annotations

from dataclasses import dataclass

from .boettcher import BoettcherData, boettcher, solve_conjugator
from .errors import NotConjugate, RootNotRepresentable, ToleranceAmbiguous
from .field import ExactField
from .series import TruncatedSeries

__all__ = [
    "MonomialImage",
    "shared_boettcher_scale",
    "commute_check",
    "commute_series",
    "monomialize",
    "reversibility_probe",
]


@dataclass
class MonomialImage:
    """The series coefficient * z^exponent."""

    coefficient: object
    exponent: int

    def as_series(self, field, trunc):
        return TruncatedSeries.monomial(
            field, self.exponent, trunc, coeff=self.coefficient
        )


def shared_boettcher_scale(da: BoettcherData, db: BoettcherData):
    """Scalar c with beta_A = beta_B o cz, or None.

    Linearity of beta_B^{-1} o beta_A is branch independent (branches
    rescale both sides by roots of unity), so only the canonical pair is
    inspected.
    """
    gamma = db.beta.invert().compose(da.beta)
    if gamma.support() != [1]:
        return None
    return gamma.coeff(1)


def commute_check(da: BoettcherData, db: BoettcherData) -> bool:
    """True iff A o B = B o A; the shared-scale criterion
    c^{(n-1)(m-1)} = 1 is cross-validated against direct composition."""
    f = da.a.field
    c = shared_boettcher_scale(da, db)
    criterion = False
    if c is not None:
        power = f.pow(c, (da.n - 1) * (db.n - 1))
        criterion = f.eq(power, f.coerce(1))
    direct = da.a.compose(db.a).eq(db.a.compose(da.a))
    if criterion != direct:
        if isinstance(f, ExactField):
            raise AssertionError(
                "scale criterion and direct commutation check disagree"
            )
        raise ToleranceAmbiguous(
            "scale criterion and direct check disagree within tolerance"
        )
    return criterion


def commute_series(a, b):
    """(commute, c, check) for two raw series.

    Runs the shared-scale criterion when both Boettcher functions exist
    in the field (check = "both") and falls back to the direct
    composition test when a leading root is unrepresentable
    (check = "direct", c = None).
    """
    a.require_gamma("A")
    b.require_gamma("B")
    try:
        da, db = boettcher(a), boettcher(b)
    except RootNotRepresentable:
        return a.compose(b).eq(b.compose(a)), None, "direct"
    return commute_check(da, db), shared_boettcher_scale(da, db), "both"


def monomialize(generators):
    """(beta, images) conjugating every generator to a monomial c^{m-1} z^m.

    beta is the Boettcher function of the first generator; a generator
    that does not share its Boettcher coordinate raises NotConjugate with
    the failing index, which certifies the generated semigroup is not
    right reversible.
    """
    if not generators:
        raise ValueError("monomialize needs at least one generator")
    for g in generators:
        g.require_gamma("semigroup generator")
    first = boettcher(generators[0])
    f = generators[0].field
    beta = first.beta
    beta_inv = beta.invert()
    images = []
    for i, g in enumerate(generators):
        data = first if i == 0 else boettcher(g)
        c = shared_boettcher_scale(first, data)
        if c is None:
            raise NotConjugate(i)
        m = data.n
        image = MonomialImage(coefficient=f.pow(c, m - 1), exponent=m)
        conj = beta_inv.compose(g.compose(beta))
        if not conj.eq(image.as_series(f, conj.trunc)):
            raise NotConjugate(i)
        images.append(image)
    return beta, images


def _iterate_generator(a, l):
    """Generator of the transition group of A^{ol}, of order (ord A)^l.

    Solved directly from F o phi = F with the primitive root of unity as
    leading coefficient; this stays inside the coefficient field even
    when the Boettcher function itself would need a radical.
    """
    f = a.field
    it = a.iterate(l)
    eps = f.primitive_root(a.ord**l)
    phi = solve_conjugator(it, it, eps)
    assert it.compose(phi).eq(it), "iterate transition residual failed"
    return phi


def reversibility_probe(a, b, l_max, s_max) -> bool:
    """True iff X o A^{ol} = Y o B^{os} is solvable for every l <= l_max,
    s <= s_max, tested through commutation of the iterate transition
    groups (generators suffice, the groups being cyclic)."""
    a.require_gamma("A")
    b.require_gamma("B")
    for l in range(1, l_max + 1):
        ga = _iterate_generator(a, l)
        for s in range(1, s_max + 1):
            gb = _iterate_generator(b, s)
            if not ga.compose(gb).eq(gb.compose(ga)):
                return False
    return True
