from itertools import combinations

import pytest

from graphthrottle.catalog import all_graphs, are_isomorphic, connected_catalog
from graphthrottle.characterize import (
    CoronaShape,
    Forbidden,
    double_corona_form,
    find_matched_sum,
    forbidden_free,
    in_H_family,
    is_matched_sum,
    is_near_matched_sum,
    peel_corona,
    thcx_low_conditions,
    _literal,
)
from graphthrottle.errors import BadArity, Undefined
from graphthrottle.families import bowtie, complete, cycle, generalized_wheel, hypercube, path, star
from graphthrottle.graph import Graph, contains_induced, corona_with_k1, disjoint_union, matched_sum_compose
from graphthrottle.propagation import Rule, propagation_time
from graphthrottle.throttling import ParamKind, Variant, throttle_value


class TestMatchedSum:
    def test_examples(self, frozen):
        assert is_matched_sum(path(10)) is not None
        assert is_matched_sum(hypercube(3)) is not None
        assert is_matched_sum(complete(4)) is None
        assert frozen["k4_matched_halves"] == []

    def test_decomposition_is_valid(self):
        for g in connected_catalog(2, 6):
            if g.n % 2:
                continue
            m = find_matched_sum(g)
            if m is None:
                continue
            assert len(m.side) == g.n // 2
            # the half forces everything else in one round
            assert propagation_time(g, Rule.StandardZF, m.side) == 1
            rebuilt = matched_sum_compose(
                g.induced(sorted(m.side)),
                g.induced(sorted(set(range(g.n)) - m.side)),
                [(sorted(m.side).index(a), sorted(set(range(g.n)) - m.side).index(b)) for a, b in m.matching],
            )
            assert are_isomorphic(rebuilt, g)

    def test_matches_one_round_half_sets(self):
        # a half forcing in one round is exactly a half with a perfect cross matching
        for g in connected_catalog(2, 6):
            if g.n % 2:
                continue
            half = any(
                propagation_time(g, Rule.StandardZF, s) == 1 for s in combinations(range(g.n), g.n // 2)
            )
            assert (find_matched_sum(g) is not None) == half

    def test_undefined(self):
        with pytest.raises(Undefined):
            is_matched_sum(path(3))
        with pytest.raises(Undefined):
            is_matched_sum(Graph.empty(2))
        with pytest.raises(Undefined):
            is_near_matched_sum(path(4))

    def test_near(self, frozen):
        assert is_near_matched_sum(path(7)) == frozen["p7_near_matched_vertex"]
        assert is_near_matched_sum(path(9)) is not None
        assert is_near_matched_sum(complete(5)) is frozen["k5_near_matched_vertex"]


class TestForbidden:
    def test_examples(self, frozen):
        for n in range(1, 7):
            assert forbidden_free(complete(n), Forbidden.P4C4Bowtie)
            assert forbidden_free(complete(n), Forbidden.C5House)
        assert not forbidden_free(path(4), Forbidden.P4C4Bowtie)
        assert forbidden_free(path(4), Forbidden.C5House)
        gw = generalized_wheel(6, 2)
        assert not forbidden_free(gw, Forbidden.P4C4Bowtie)
        found = {name: contains_induced(gw, pat) is not None for name, pat in
                 [("P4", path(4)), ("C4", cycle(4)), ("bowtie", bowtie()), ("C5", cycle(5))]}
        assert found == frozen["gw62_induced"]

    def test_h_family(self, frozen):
        assert in_H_family(path(4))
        assert throttle_value(path(4), ParamKind.PsdZF, Variant.ProductNoCost) == frozen["p4_psd_prodstar"] == 2
        assert not in_H_family(complete(5))
        assert not in_H_family(cycle(5))
        assert not in_H_family(Graph.empty(1))


class TestCorona:
    def test_examples(self):
        f = double_corona_form(path(4))
        assert f.shape is CoronaShape.DoubleCorona and f.core.n == 1
        assert double_corona_form(cycle(4)).shape is CoronaShape.C4
        assert double_corona_form(corona_with_k1(cycle(4))).shape is CoronaShape.C4Corona
        assert double_corona_form(path(6)).shape is CoronaShape.NoForm
        with pytest.raises(Undefined):
            double_corona_form(Graph.empty(2))

    def test_peel_round_trip(self):
        for h in connected_catalog(1, 5):
            g = corona_with_k1(corona_with_k1(h))
            perm = list(range(g.n))[::-1]
            f = double_corona_form(g.relabel(perm))
            if are_isomorphic(h, cycle(4)) or are_isomorphic(corona_with_k1(h), cycle(4)):
                continue
            assert f.shape is CoronaShape.DoubleCorona
            assert are_isomorphic(f.core, h)

    def test_peel_rejects(self):
        assert peel_corona(path(3)) is None
        assert peel_corona(star(3)) is None
        assert peel_corona(Graph.empty(2)) is None
        assert peel_corona(path(2)).n == 1


class TestCopsLow:
    def test_examples(self):
        assert thcx_low_conditions(star(5), 2)
        assert thcx_low_conditions(path(5), 3)
        assert not thcx_low_conditions(path(7), 3)
        with pytest.raises(BadArity):
            thcx_low_conditions(path(3), 5)

    def test_against_solver(self):
        for n in range(1, 6):
            for g in all_graphs(n):
                value = throttle_value(g, ParamKind.CopsRobbers, Variant.ProductInitialCost)
                for t in (1, 2, 3, 4):
                    assert thcx_low_conditions(g, t) == (value == t)

    def test_literal_reading_overlaps(self):
        # read one case at a time, the lists overlap on tiny graphs
        assert _literal(Graph.empty(1), 2, False)
        assert _literal(Graph.empty(2), 4, False)
        assert _literal(disjoint_union(Graph.empty(1), complete(2)), 4, False)
        assert not thcx_low_conditions(Graph.empty(1), 2)

    def test_strict_reading_agrees_on_small_graphs(self):
        for n in range(1, 6):
            for g in all_graphs(n):
                assert thcx_low_conditions(g, 3, strict=True) == thcx_low_conditions(g, 3)


def test_half_ratio_exception_at_order_two():
    # K2 reaches n/2 for no-cost power domination yet has no double corona form,
    # which is why that check starts at order 3
    k2 = complete(2)
    assert throttle_value(k2, ParamKind.PowerDom, Variant.ProductNoCost) == 1
    assert double_corona_form(k2).shape is CoronaShape.NoForm
