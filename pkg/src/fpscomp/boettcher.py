"""Boettcher functions: the unit series conjugating A (order n >= 2) to z^n.

The defining identity A o beta = beta o z^n is solved coefficient by
coefficient: the leading coefficient satisfies b1^(n-1) = 1/c_n (canonical
branch of the field's nth_root), and every later b_j is read off a linear
equation with pivot n (asserted nonzero).  The full family of valid
Boettcher functions is {beta o (eps z) : eps in U_(n-1)}.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import OrderMismatch
from .series import TruncatedSeries, _PowerCache

__all__ = ["BoettcherData", "boettcher", "all_boettcher", "normalize", "solve_conjugator"]


@dataclass
class BoettcherData:
    """A series A in Gamma together with one Boettcher function for it."""

    a: TruncatedSeries
    n: int
    beta: TruncatedSeries
    branch: int = 0

    def residual_ok(self):
        lhs = self.a.compose(self.beta)
        rhs = self.beta.compose(
            TruncatedSeries.monomial(self.a.field, self.n, self.a.trunc)
        )
        return lhs.eq(rhs)


def _solve_triangular(a, n, leading, rhs_at):
    """Unit series mu with [z^k] a(mu) = rhs_at(k, mu_coeffs) for all k <= trunc.

    ``rhs_at`` may consult already-determined coefficients of mu (index
    < k-n+1).  Returns the coefficient list of mu up to index trunc-n+1.
    """
    f = a.field
    big_n = a.trunc
    ac = a.coeffs
    tb = big_n - n + 1
    b = [f.zero] * (tb + 1)
    b[1] = leading
    pc = _PowerCache(f, b)
    pivot = f.mul(f.coerce(n), f.mul(ac[n], f.pow(leading, n - 1)))
    assert not f.is_zero(pivot), "degenerate pivot in triangular solve"
    inv_pivot = f.inv(pivot)
    for j in range(2, tb + 1):
        k = n + j - 1
        s = f.zero
        for p in range(n, k + 1):
            if not f.is_zero(ac[p]):
                s = f.add(s, f.mul(ac[p], pc.get(p, k)))
        bj = f.mul(f.sub(rhs_at(k, b), s), inv_pivot)
        pc.set(j, bj)
    return b


def boettcher(a: TruncatedSeries) -> BoettcherData:
    """Branch-0 Boettcher data for a series of order n in Gamma."""
    a.require_gamma("Boettcher subject")
    n = a.ord
    if n > a.trunc:
        raise OrderMismatch(f"order {n} exceeds truncation {a.trunc}")
    f = a.field
    leading = f.nth_root(f.inv(a.coeffs[n]), n - 1)

    def rhs_at(k, b):
        # right side beta(z^n) contributes b_(k/n) at indices divisible by n
        return b[k // n] if k % n == 0 else f.zero

    b = _solve_triangular(a, n, leading, rhs_at)
    beta = TruncatedSeries(f, b, len(b) - 1)
    return BoettcherData(a=a, n=n, beta=beta, branch=0)


def all_boettcher(data: BoettcherData):
    """The n-1 Boettcher functions beta o (eps z), eps in U_(n-1)."""
    f = data.a.field
    out = []
    for root in f.roots_of_unity(data.n - 1):
        eps = root.value
        coeffs = [
            f.mul(c, f.pow(eps, i)) for i, c in enumerate(data.beta.coeffs)
        ]
        out.append(TruncatedSeries(f, coeffs, data.beta.trunc))
    return out


def with_branch(data: BoettcherData, branch: int) -> BoettcherData:
    """Boettcher data using the branch-th member of the U_(n-1) family."""
    beta = all_boettcher(data)[branch % max(data.n - 1, 1)]
    return BoettcherData(a=data.a, n=data.n, beta=beta, branch=branch)


def normalize(data: BoettcherData) -> TruncatedSeries:
    """beta^{-1} o A o beta, congruent to z^n."""
    return data.beta.invert().compose(data.a.compose(data.beta))


def solve_conjugator(a, target, leading):
    """Unit series mu with a o mu = target, for the given leading coefficient.

    Used for decomposition-equivalence bridges; existence is the caller's
    responsibility (the residual is re-checked there).
    """
    a.require_gamma("outer factor")
    n = a.ord
    f = a.field
    tc = target.coeffs

    def rhs_at(k, b):
        return tc[k] if k <= target.trunc else f.zero

    b = _solve_triangular(a, n, leading, rhs_at)
    return TruncatedSeries(f, b, len(b) - 1)
