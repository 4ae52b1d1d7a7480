import pytest

from fpscomp import (
    OrderMismatch,
    TruncatedSeries,
    boettcher,
    cancel_right,
    conjugate_group,
    element_order,
    iterate_group,
    parse_series,
    series_from_transition,
    subgroup_test,
    transition_group,
)
from conftest import N, gamma_series, unit_series


def S(field, text, trunc=N):
    return parse_series(field, text, trunc)


def group_of(series):
    return transition_group(boettcher(series))


class TestGroupExamples:
    def test_monomial_group_is_scalings(self, exact):
        g = group_of(S(exact, "z^4"))
        assert g.order == 4
        for r, elem in zip(exact.roots_of_unity(4), g.elements):
            assert elem.eq(TruncatedSeries.identity(exact, N).scale(r.value))

    def test_scaled_square(self, exact):
        g = group_of(S(exact, "2*z^2"))
        assert g.order == 2
        assert g.elements[0].eq(S(exact, "z"))
        assert g.elements[1].eq(S(exact, "-z"))

    def test_elements_fix_the_series(self, exact, rng):
        for order in (2, 3, 4, 6):
            a = gamma_series(exact, rng, order)
            g = group_of(a)
            assert g.order == order
            for elem in g.elements:
                assert a.compose(elem).eq(a)

    def test_elements_distinct(self, exact, rng):
        a = gamma_series(exact, rng, 6)
        g = group_of(a)
        for i in range(g.order):
            for j in range(i + 1, g.order):
                assert not g.elements[i].eq(g.elements[j])

    def test_cyclic_generated_by_generator(self, exact, rng):
        a = gamma_series(exact, rng, 4)
        g = group_of(a)
        cur = g.generator
        seen = [cur]
        for _ in range(g.order - 1):
            cur = cur.compose(g.generator)
            seen.append(cur)
        for elem in g.elements:
            assert any(elem.eq(s) for s in seen)

    def test_contains(self, exact, rng):
        a = gamma_series(exact, rng, 3)
        g = group_of(a)
        assert g.contains(g.generator)
        assert not g.contains(S(exact, "z + z^2"))


class TestElementOrder:
    def test_scalings(self, exact):
        assert element_order(S(exact, "-z"), 8) == 2
        i_rep = exact.roots_of_unity(4)[1].value
        phi = TruncatedSeries.identity(exact, N).scale(i_rep)
        assert element_order(phi, 8) == 4

    def test_identity(self, exact):
        assert element_order(S(exact, "z"), 3) == 1

    def test_parabolic_has_no_finite_order(self, exact):
        # z / (1 - z) = z + z^2 + z^3 + ... never returns to z
        phi = TruncatedSeries.from_pairs(
            exact, [(i, 1) for i in range(1, 13)], 12
        )
        assert element_order(phi, 12) is None

    def test_conjugated_scaling(self, exact, rng):
        mu = unit_series(exact, rng)
        eps = exact.roots_of_unity(6)[1].value
        phi = mu.invert().compose(mu.scale(eps))
        assert element_order(phi, 12) == 6


class TestSeriesFromTransition:
    def test_minus_z_gives_minus_square(self, exact):
        got = series_from_transition(S(exact, "-z"), 2)
        assert got.eq(S(exact, "-z^2"))

    def test_iz_gives_minus_fourth(self, exact):
        i_rep = exact.roots_of_unity(4)[1].value
        phi = TruncatedSeries.identity(exact, N).scale(i_rep)
        got = series_from_transition(phi, 4)
        assert got.eq(S(exact, "-z^4"))

    def test_product_admits_the_transition(self, exact, rng):
        mu = unit_series(exact, rng)
        for d in (2, 3, 4):
            eps = exact.roots_of_unity(d)[1 % d].value
            phi = mu.invert().compose(mu.scale(eps))
            a = series_from_transition(phi, d)
            assert a.ord == d
            assert a.compose(phi).eq(a)

    def test_rejects_wrong_order(self, exact):
        with pytest.raises(OrderMismatch):
            series_from_transition(S(exact, "-z"), 3)
        with pytest.raises(OrderMismatch):
            series_from_transition(S(exact, "z"), 1)


class TestSubgroupAndConjugation:
    def test_divisor_subgroup(self, exact, rng):
        a = gamma_series(exact, rng, 6)
        g6 = group_of(a)
        # the subgroup of order 2 sits inside the order-6 group
        stride = g6.order // 2
        small = type(g6)(order=2, beta=g6.beta, elements=g6.elements[0::stride])
        assert subgroup_test(small, g6)
        assert not subgroup_test(g6, small)

    def test_unrelated_groups(self, exact, rng):
        g1 = group_of(gamma_series(exact, rng, 2))
        g2 = group_of(gamma_series(exact, rng, 2))
        assert not subgroup_test(g1, g2)

    def test_conjugate_group_tracks_conjugated_series(self, exact, rng):
        a = gamma_series(exact, rng, 3)
        mu = unit_series(exact, rng)
        conj = mu.invert().compose(a.compose(mu))
        expected = group_of(conj)
        got = conjugate_group(group_of(a), mu)
        assert got.order == expected.order
        for elem in got.elements:
            assert expected.contains(elem)
            assert conj.compose(elem).eq(conj)


class TestIterateGroup:
    def test_monomial_square_iterated(self, exact):
        data = boettcher(S(exact, "z^2"))
        g = iterate_group(data, 3)
        assert g.order == 8
        it = S(exact, "z^2").iterate(3)
        for elem in g.elements:
            assert it.compose(elem).eq(it)

    def test_generic_square_iterated(self, exact, rng):
        a = gamma_series(exact, rng, 2)
        data = boettcher(a)
        for l in (2, 3):
            g = iterate_group(data, l)
            assert g.order == 2**l
            it = a.iterate(l)
            for elem in g.elements:
                assert it.compose(elem).eq(it)

    def test_contains_base_group(self, exact, rng):
        a = gamma_series(exact, rng, 2)
        data = boettcher(a)
        assert subgroup_test(transition_group(data), iterate_group(data, 2))


class TestCancelRight:
    def test_recovers_twist(self, exact, rng):
        a = gamma_series(exact, rng, 2)
        x1 = unit_series(exact, rng)
        phi = group_of(a).elements[1]
        x2 = phi.compose(x1)
        got = cancel_right(a, x1, x2)
        assert got is not None and got.eq(phi)

    def test_equal_arguments_give_identity(self, exact, rng):
        a = gamma_series(exact, rng, 3)
        x = unit_series(exact, rng)
        got = cancel_right(a, x, x)
        assert got is not None
        assert got.eq(TruncatedSeries.identity(exact, N))

    def test_no_relation(self, exact, rng):
        a = gamma_series(exact, rng, 2)
        x = unit_series(exact, rng)
        assert cancel_right(a, x, x.compose(S(exact, "z + z^2"))) is None
