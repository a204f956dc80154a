"""Law-level properties quantified over generated inputs."""

from hypothesis import given, settings, strategies as st

from ndagg.core import (NDimInterval, Permutation, WeightingVector, degenerate, lattice_inf,
                        lattice_sup, product_order_leq, sorted_interval)
from ndagg.orders import AggLexOrder, LexOrder, Ordering, WeightedLexOrder
from ndagg.scalar_agg import owa, weighted_average
from ndagg.semivector import natural_preorder_leq, natural_preorder_witness, scalar_mul, vec_add

units = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
dyadics = st.integers(min_value=0, max_value=1024).map(lambda i: i / 1024)


def interval(n, values=units):
    return st.lists(values, min_size=n, max_size=n).map(lambda vs: NDimInterval(sorted(vs)))


def raw_values(min_size=1, max_size=7):
    return st.lists(units, min_size=min_size, max_size=max_size)


class TestSortingImmersion:
    @given(raw_values())
    def test_output_is_valid_and_bounded(self, vs):
        x = sorted_interval(vs)
        assert x.proj(1) == min(vs)
        assert x.proj(len(vs)) == max(vs)

    @given(raw_values(min_size=2), st.randoms())
    def test_permutation_invariance(self, vs, rng):
        shuffled = list(vs)
        rng.shuffle(shuffled)
        assert sorted_interval(vs) == sorted_interval(shuffled)


class TestProductOrderIsAPartialOrder:
    @given(interval(3))
    def test_reflexive(self, x):
        assert product_order_leq(x, x)

    @given(interval(3), interval(3))
    def test_antisymmetric(self, x, y):
        if product_order_leq(x, y) and product_order_leq(y, x):
            assert x == y

    @given(interval(3), interval(3), interval(3))
    def test_transitive(self, x, y, z):
        if product_order_leq(x, y) and product_order_leq(y, z):
            assert product_order_leq(x, z)

    @given(st.lists(interval(3), min_size=1, max_size=5))
    def test_lattice_bounds(self, items):
        lo, hi = lattice_inf(items), lattice_sup(items)
        for x in items:
            assert product_order_leq(lo, x) and product_order_leq(x, hi)


class TestAlgebraClosure:
    @given(units, interval(4))
    def test_scaling_stays_sorted(self, r, x):
        assert scalar_mul(r, x).dimension == 4

    @given(interval(4), interval(4))
    def test_addition_stays_sorted(self, x, y):
        assert vec_add(x, y).dimension == 4


class TestNaturalPreorder:
    @given(interval(3, dyadics))
    def test_reflexive(self, x):
        assert natural_preorder_leq(x, x)

    @given(interval(3, dyadics), interval(3, dyadics))
    def test_refined_by_product_order(self, x, y):
        if natural_preorder_leq(x, y):
            assert product_order_leq(x, y)

    def test_product_order_does_not_imply_it(self):
        # standing counterexample: componentwise below, but the forced
        # prefix of differences decreases
        x, y = NDimInterval((0.2, 0.5)), NDimInterval((0.5, 0.6))
        assert product_order_leq(x, y)
        assert not natural_preorder_leq(x, y)

    @given(interval(3, dyadics), interval(3, dyadics), interval(3, dyadics))
    def test_transitive_along_constructed_chains(self, x, u, v):
        y = vec_add(x, u)
        z = vec_add(y, v)
        assert natural_preorder_leq(x, y)
        assert natural_preorder_leq(y, z)
        assert natural_preorder_leq(x, z)

    @given(interval(3, dyadics), interval(3, dyadics))
    def test_antisymmetric(self, x, y):
        if natural_preorder_leq(x, y) and natural_preorder_leq(y, x):
            assert x == y

    @given(interval(4, dyadics), interval(4, dyadics))
    def test_witness_reconstructs_the_target(self, x, y):
        z = natural_preorder_witness(x, y)
        if z is not None:
            assert vec_add(x, z) == y


def orders_for(n):
    return [
        LexOrder(Permutation.identity(n)),
        LexOrder(Permutation.reversal(n)),
        WeightedLexOrder(WeightingVector.uniform(n), Permutation.identity(n)),
        AggLexOrder(weighted_average(WeightingVector.uniform(n)), Permutation.reversal(n)),
    ]


class TestComparatorCoherence:
    @given(interval(3, dyadics), interval(3, dyadics))
    def test_flip_consistency(self, x, y):
        for order in orders_for(3):
            assert int(order.compare(x, y)) == -int(order.compare(y, x))

    @given(interval(3, dyadics))
    def test_equality_on_self(self, x):
        for order in orders_for(3):
            assert order.compare(x, x) == Ordering.EQUAL

    @given(interval(3, dyadics), interval(3, dyadics))
    def test_refinement(self, x, y):
        if product_order_leq(x, y):
            for order in orders_for(3):
                assert order.compare(x, y) <= 0

    @given(interval(4), interval(4))
    def test_identity_scan_is_tuple_lex(self, x, y):
        order = LexOrder(Permutation.identity(4))
        expected = (x.components > y.components) - (x.components < y.components)
        assert int(order.compare(x, y)) == expected

    @given(interval(4), interval(4))
    def test_reversal_scan_is_reversed_tuple_lex(self, x, y):
        order = LexOrder(Permutation.reversal(4))
        a, b = x.components[::-1], y.components[::-1]
        assert int(order.compare(x, y)) == (a > b) - (a < b)


class TestScalarAggregationLaws:
    @given(st.lists(dyadics, min_size=3, max_size=3))
    def test_uniform_owa_equals_uniform_average(self, xs):
        assert owa(WeightingVector.uniform(3))(tuple(xs)) == \
            weighted_average(WeightingVector.uniform(3))(tuple(sorted(xs, reverse=True)))

    @given(units)
    def test_degenerate_tuples_scale_like_scalars(self, c):
        x = degenerate(c, 3)
        assert scalar_mul(0.5, x) == degenerate(0.5 * c, 3)
