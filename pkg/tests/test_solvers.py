from fractions import Fraction

import pytest

import oracles
from fpscomp import (
    NoFactor,
    NoSolution,
    OrderMismatch,
    TruncatedSeries,
    boettcher,
    common_right_factor,
    factor_through,
    parse_series,
    semiconjugacy_family,
    solve_joint,
    solve_left,
    solve_right,
    transition_group,
)
from conftest import from_fractions, gamma_series, to_fractions, unit_series


def S(field, text, trunc=16):
    return parse_series(field, text, trunc)


def rational_gamma(rng, order, trunc, span=2):
    coeffs = [Fraction(0)] * (trunc + 1)
    coeffs[order] = Fraction(1)
    for i in range(order + 1, trunc + 1):
        coeffs[i] = Fraction(rng.randint(-span, span))
    return coeffs


class TestSolveRight:
    def test_monomials(self, exact):
        x = solve_right(S(exact, "z^8"), S(exact, "z^2"))
        assert x.eq(S(exact, "z^4", x.trunc))

    def test_no_solution(self, exact):
        with pytest.raises(NoSolution):
            solve_right(S(exact, "z^8 + z^9"), S(exact, "z^2"))

    def test_order_guard(self, exact):
        with pytest.raises(OrderMismatch):
            solve_right(S(exact, "z^9"), S(exact, "z^2"))

    def test_roundtrip(self, exact, rng):
        for n, m in ((2, 2), (2, 3), (3, 2)):
            a = gamma_series(exact, rng, n, trunc=16)
            x = gamma_series(exact, rng, m, trunc=16)
            f = x.compose(a)
            got = solve_right(f, a)
            assert got.eq(x)

    def test_brute_force_agreement(self, exact, rng):
        nmax = 12
        for _ in range(15):
            a_frac = rational_gamma(rng, 2, nmax)
            x_frac = [Fraction(0)] * 7
            x_frac[2] = Fraction(1)
            for i in (3, 4, 5, 6):
                x_frac[i] = Fraction(rng.randint(-2, 2))
            f_frac = oracles.compose(oracles.trim(x_frac, nmax), a_frac, nmax)
            a = from_fractions(exact, a_frac, nmax)
            f = from_fractions(exact, f_frac, nmax)
            got = to_fractions(solve_right(f, a))
            want = oracles.brute_solve_right(f_frac, a_frac, 6, nmax)
            assert want is not None
            for i in range(min(len(got), 7)):
                assert got[i] == want[i]

    def test_brute_force_negative_agreement(self, exact, rng):
        # whenever the elimination oracle proves no polynomial solution
        # exists in the truncation window, the solver must refuse too
        nmax = 12
        refusals = 0
        for _ in range(20):
            a_frac = rational_gamma(rng, 2, nmax)
            f_frac = rational_gamma(rng, 4, nmax)
            a = from_fractions(exact, a_frac, nmax)
            f = from_fractions(exact, f_frac, nmax)
            want = oracles.brute_solve_right(f_frac, a_frac, 6, nmax)
            if want is None:
                refusals += 1
                with pytest.raises(NoSolution):
                    solve_right(f, a)
        assert refusals > 10  # random composites are essentially never F = X o A


class TestSolveLeft:
    def test_monomials(self, exact):
        sols = solve_left(S(exact, "z^8"), S(exact, "z^2"))
        assert len(sols) == 2
        texts = {"z^4", "-z^4"}
        for s in sols:
            assert any(s.eq(S(exact, t, s.trunc)) for t in texts)

    def test_shifted_composite(self, exact):
        # z^4 + z^5 = z^2 o (z^2 (1 + z)^(1/2)) is solvable
        sols = solve_left(S(exact, "z^4 + z^5"), S(exact, "z^2"))
        assert len(sols) == 2
        for s in sols:
            assert S(exact, "z^2").compose(s).eq(S(exact, "z^4 + z^5", s.trunc))

    def test_roundtrip_and_count(self, exact, rng):
        for n, m in ((2, 2), (2, 3), (3, 2), (4, 2)):
            a = gamma_series(exact, rng, n, trunc=16)
            x = gamma_series(exact, rng, m, trunc=16)
            f = a.compose(x)
            sols = solve_left(f, a)
            assert len(sols) == n
            assert any(s.eq(x) for s in sols)
            for s1, s2 in zip(sols, sols[1:]):
                assert not s1.eq(s2)

    def test_brute_force_agreement(self, exact, rng):
        nmax = 12
        for _ in range(10):
            a_frac = rational_gamma(rng, 2, nmax)
            x_frac = oracles.trim(rational_gamma(rng, 3, 6), nmax)
            f_frac = oracles.compose(a_frac, x_frac, nmax)
            a = from_fractions(exact, a_frac, nmax)
            f = from_fractions(exact, f_frac, nmax)
            sols = solve_left(f, a)
            brute = oracles.brute_solve_left(f_frac, a_frac, 6, nmax)
            assert brute
            for cand in brute:
                assert any(
                    to_fractions(s.truncate(6))[:7] == cand[:7] for s in sols
                )


class TestSemiconjugacy:
    def test_family_members_solve_the_equation(self, exact, rng):
        for n in (2, 3):
            a = gamma_series(exact, rng, n, trunc=16)
            b = gamma_series(exact, rng, n, trunc=16)
            big_r = unit_series(exact, rng, trunc=16).unshift(1)
            for r in range(n):
                if r == 0:
                    continue  # inner z^r R(z^n) must stay a unit or gamma
                x, y = semiconjugacy_family(a, b, r, big_r)
                assert a.compose(x).eq(y.compose(b))

    def test_order_guards(self, exact, rng):
        a = gamma_series(exact, rng, 2, trunc=16)
        b = gamma_series(exact, rng, 3, trunc=16)
        one = S(exact, "1 + z").unshift(0)
        with pytest.raises(OrderMismatch):
            semiconjugacy_family(a, b, 1, one)


class TestSolveJoint:
    def test_coprime_monomials(self, exact):
        x, y = solve_joint(S(exact, "z^2"), S(exact, "z^3"))
        assert x.compose(S(exact, "z^2")).eq(y.compose(S(exact, "z^3")))

    def test_sign_twisted(self, exact):
        a, b = S(exact, "z^2"), S(exact, "-z^3")
        x, y = solve_joint(a, b)
        assert x.compose(a).eq(y.compose(b))

    def test_conjugated_positive(self, exact, rng):
        mu = unit_series(exact, rng, trunc=16)
        mu_inv = mu.invert()
        a = mu_inv.compose(S(exact, "z^2").compose(mu))
        b = mu_inv.compose(S(exact, "z^3").compose(mu))
        x, y = solve_joint(a, b)
        assert x.compose(a).eq(y.compose(b))

    def test_generic_refusal(self, exact, rng):
        a = gamma_series(exact, rng, 2, trunc=16)
        b = gamma_series(exact, rng, 3, trunc=16)
        with pytest.raises(NoSolution):
            solve_joint(a, b)

    def test_brute_force_agreement_scaled_monomials(self, exact, rng):
        nmax = 12
        for _ in range(10):
            p = Fraction(rng.randint(1, 4))
            # the order-3 scale must be a square so its Boettcher
            # coordinate stays inside the exact field
            q = Fraction(rng.choice([1, 4, 9])) / rng.choice([1, 4])
            a_frac = oracles.trim([0, 0, p], nmax)
            b_frac = oracles.trim([0, 0, 0, q], nmax)
            a = from_fractions(exact, a_frac, nmax)
            b = from_fractions(exact, b_frac, nmax)
            x, y = solve_joint(a, b)
            assert x.compose(a).eq(y.compose(b))
            assert oracles.brute_joint_kernel(a_frac, b_frac, 4, nmax)

    def test_brute_force_refusal_agreement(self, exact, rng):
        # if elimination finds no nonzero polynomial pair in the window,
        # the solver must refuse as well
        nmax = 12
        checked = 0
        for _ in range(10):
            a_frac = rational_gamma(rng, 2, nmax)
            b_frac = rational_gamma(rng, 3, nmax)
            if oracles.brute_joint_kernel(a_frac, b_frac, 4, nmax) is None:
                checked += 1
                with pytest.raises(NoSolution):
                    solve_joint(
                        from_fractions(exact, a_frac, nmax),
                        from_fractions(exact, b_frac, nmax),
                    )
        assert checked > 5


class TestCommonRightFactor:
    def test_monomials(self, exact):
        w, at, bt = common_right_factor(S(exact, "z^4"), S(exact, "z^6"), 2)
        assert w.eq(S(exact, "z^2", w.trunc))
        assert at.compose(w).eq(S(exact, "z^4", w.trunc))
        assert bt.compose(w).eq(S(exact, "z^6", w.trunc))

    def test_constructed_common_factor(self, exact, rng):
        w0 = gamma_series(exact, rng, 2, trunc=12)
        a = gamma_series(exact, rng, 2, trunc=12).compose(w0)
        b = gamma_series(exact, rng, 3, trunc=12).compose(w0)
        w, at, bt = common_right_factor(a, b, 2)
        assert at.compose(w).eq(a)
        assert bt.compose(w).eq(b)

    def test_generic_refusal(self, exact, rng):
        a = gamma_series(exact, rng, 4, trunc=12)
        b = gamma_series(exact, rng, 6, trunc=12)
        with pytest.raises(NoFactor):
            common_right_factor(a, b, 2)

    def test_divisor_guard(self, exact, rng):
        with pytest.raises(OrderMismatch):
            common_right_factor(S(exact, "z^4"), S(exact, "z^6"), 3)


class TestFactorThrough:
    def test_constructed_positive(self, exact, rng):
        d = gamma_series(exact, rng, 2, trunc=12)
        c = unit_series(exact, rng, trunc=12)
        x0 = gamma_series(exact, rng, 2, trunc=12)
        a = x0.compose(d).compose(c.invert())
        x = factor_through(a, c, d)
        assert a.compose(c).eq(x.compose(d))

    def test_generic_refusal(self, exact, rng):
        a = gamma_series(exact, rng, 2, trunc=12)
        d = gamma_series(exact, rng, 2, trunc=12)
        with pytest.raises(NoSolution):
            factor_through(a, S(exact, "z + z^2", 12), d)
