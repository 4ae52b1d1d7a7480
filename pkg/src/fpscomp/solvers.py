"""Solvers for the compositional functional equations.

Covered here: F = X o A (unique solution), F = A o X (n solutions),
the semiconjugacy family A o X = Y o B, the joint equation X o A = Y o B,
common right factors, and factoring A o C through a given D.  Every
returned solution is re-verified against its equation before it leaves
the module.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .boettcher import boettcher
from .errors import (
    NoFactor,
    NoSolution,
    NotSymmetric,
    OrderMismatch,
    RootNotRepresentable,
)
from .series import (
    TruncatedSeries,
    series_nth_root,
    split_symmetric,
    symmetric_mate,
)
from .transition import series_from_transition, transition_group

__all__ = [
    "SolutionFamily",
    "solve_right",
    "solve_left",
    "semiconjugacy_family",
    "solve_joint",
    "common_right_factor",
    "factor_through",
]


@dataclass
class SolutionFamily:
    """A verified batch of solutions of one functional equation."""

    kind: str  # "unique" | "finite-list" | "parametric"
    solutions: list = dc_field(default_factory=list)  # (X, Y-or-None) pairs
    parameters: dict = dc_field(default_factory=dict)


def solve_right(f_series, a):
    """The unique X with F = X o A, or raise NoSolution.

    Needs ord A | ord F.  The solvability criterion is equivalent to
    G_A being a subgroup of G_F; here it surfaces as the support of
    (beta_F^{-1} o beta_A)^m landing in one residue class mod n.
    """
    a.require_gamma("right factor A")
    f_series.require_gamma("composite F")
    n = a.ord
    if f_series.ord % n != 0:
        raise OrderMismatch(
            f"ord A = {n} does not divide ord F = {f_series.ord}"
        )
    m = f_series.ord // n
    df = boettcher(f_series)
    da = boettcher(a)
    g = df.beta.invert().compose(da.beta)
    gamma = g.pow_ring(m)  # z^m o (beta_F^{-1} o beta_A)
    try:
        r, r_ser = split_symmetric(gamma, n, refs=(df.beta, da.beta))
    except NotSymmetric as exc:
        raise NoSolution(
            f"no X with F = X o A: support index {exc.index} of the "
            f"Boettcher transfer breaks the mod-{n} condition"
        ) from exc
    x = df.beta.compose(symmetric_mate(r_ser, r, n)).compose(da.beta.invert())
    if not x.compose(a).eq(f_series, refs=(x,)):
        raise NoSolution("recomposition X o A differs from F at truncation")
    return x


def solve_left(f_series, a):
    """All ord-A solutions X of F = A o X, as a list of length ord A."""
    a.require_gamma("left factor A")
    f_series.require_gamma("composite F")
    n = a.ord
    if f_series.ord % n != 0:
        raise OrderMismatch(
            f"ord A = {n} does not divide ord F = {f_series.ord}"
        )
    m = f_series.ord // n
    fld = a.field
    da = boettcher(a)
    df = boettcher(f_series)
    delta = da.beta.invert().compose(df.beta).subs_pow(m)
    r = m % n
    try:
        ell = series_nth_root(delta.unshift(r), n)
    except RootNotRepresentable as exc:
        raise NoSolution(
            f"constant-term root falls outside the exact field: {exc}"
        ) from exc
    beta_f_inv = df.beta.invert()
    solutions = []
    for root in fld.roots_of_unity(n):
        inner = ell.subs_pow(n).shift(r).scale(root.value)
        x = da.beta.compose(inner).compose(beta_f_inv)
        if not a.compose(x).eq(f_series):
            raise NoSolution("recomposition A o X differs from F at truncation")
        solutions.append(x)
    return solutions


def semiconjugacy_family(a, b, r, r_ser):
    """The solution (X, Y) of A o X = Y o B attached to the parameters
    (r, R): X = beta_A o z^r R(z^n) o beta_B^{-1}, Y with R^n in place of
    R(z^n).  A and B must share their order n."""
    a.require_gamma("A")
    b.require_gamma("B")
    n = a.ord
    if b.ord != n:
        raise OrderMismatch(f"orders differ: {a.ord} vs {b.ord}")
    if not 0 <= r <= n - 1:
        raise OrderMismatch(f"r must lie in [0, {n - 1}], got {r}")
    inner_x = r_ser.subs_pow(n).shift(r)
    inner_y = symmetric_mate(r_ser, r, n)
    if inner_x.ord == 0 or inner_x.ord != 1 and inner_x.ord < 1:
        raise OrderMismatch("z^r R(z^n) must have order >= 1 to compose")
    da = boettcher(a)
    db = boettcher(b)
    beta_b_inv = db.beta.invert()
    x = da.beta.compose(inner_x).compose(beta_b_inv)
    y = da.beta.compose(inner_y).compose(beta_b_inv)
    assert a.compose(x).eq(y.compose(b)), "semiconjugacy residual failed"
    return x, y


def solve_joint(a, b):
    """A solution (X, Y) of X o A = Y o B, or raise NoSolution.

    Solvable exactly when the transition groups of A and B commute
    elementwise; generators suffice since both groups are cyclic.
    """
    from .symmetry import recover_symmetric_conjugator

    a.require_gamma("A")
    b.require_gamma("B")
    da = boettcher(a)
    db = boettcher(b)
    ga = transition_group(da)
    gb = transition_group(db)
    gen_a, gen_b = ga.generator, gb.generator
    if not gen_a.compose(gen_b).eq(gen_b.compose(gen_a)):
        raise NoSolution("transition groups of A and B do not commute")
    n = a.ord
    beta_inv = da.beta.invert()
    b_tilde = beta_inv.compose(b.compose(da.beta))
    mu, r, r_ser = recover_symmetric_conjugator(b_tilde, n)
    x_tilde = symmetric_mate(r_ser, r, n)  # z^r R^n(z)
    y_tilde = mu.invert().pow_ring(n)  # z^n o mu^{-1}
    x = x_tilde.compose(beta_inv)
    y = y_tilde.compose(beta_inv)
    if not x.compose(a).eq(y.compose(b)):
        raise NoSolution("joint recomposition failed at truncation")
    return x, y


def common_right_factor(a, b, d):
    """(W, A-tilde, B-tilde) with A = At o W, B = Bt o W and ord W = d,
    or raise NoFactor.  Exists iff the order-d subgroups of G_A and G_B
    coincide (cyclic groups have at most one subgroup per order)."""
    a.require_gamma("A")
    b.require_gamma("B")
    n, m = a.ord, b.ord
    if d < 2 or n % d or m % d:
        raise OrderMismatch(f"d = {d} must be a common divisor >= 2 of {n}, {m}")
    ga = transition_group(boettcher(a))
    gb = transition_group(boettcher(b))
    sub_a = [ga.elements[j] for j in range(0, n, n // d)]
    sub_b = [gb.elements[j] for j in range(0, m, m // d)]
    for x in sub_a:
        if not any(x.eq(y) for y in sub_b):
            raise NoFactor(
                f"G_A and G_B share no subgroup of order {d} at truncation"
            )
    phi = ga.elements[n // d]
    w = series_from_transition(phi, d)
    # normalize the leading coefficient to 1; left-composing with a unit
    # keeps the transition group, hence the solvability, unchanged
    fld = a.field
    w = w.scale(fld.inv(w.coeff(w.ord)))
    a_tilde = solve_right(a, w)
    b_tilde = solve_right(b, w)
    return w, a_tilde, b_tilde


def factor_through(a, c, d_series):
    """X with A o C = X o D, or raise NoSolution.

    Criterion: the generator of G_D is intertwined into G_A by C
    (C o phi_D = phi_A o C); cyclicity extends this to the whole group.
    """
    a.require_gamma("A")
    if c.ord < 1:
        raise OrderMismatch("C must have order >= 1")
    d_series.require_gamma("D")
    gd = transition_group(boettcher(d_series))
    ga = transition_group(boettcher(a))
    phi_d = gd.generator
    lhs = c.compose(phi_d)
    if not any(lhs.eq(phi_a.compose(c)) for phi_a in ga.elements):
        raise NoSolution(
            "no transition function of A intertwines with the generator of G_D"
        )
    return solve_right(a.compose(c), d_series)
