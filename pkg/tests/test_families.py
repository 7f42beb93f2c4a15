from fractions import Fraction
from math import comb

import networkx as nx
import pytest

from graphthrottle.errors import BadParams
from graphthrottle.families import (
    FamilySpec,
    fixed_gallery,
    g1_chain,
    generate,
    necklace,
    path,
)
from graphthrottle.graph import (
    cartesian_product,
    component_masks,
    contains_induced,
    corona_with_k1,
    is_dominating,
    is_connected,
)
from graphthrottle.families import cycle


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@pytest.mark.parametrize(
    "spec, order",
    [
        (FamilySpec("Hypercube", (0,)), 1),
        (FamilySpec("Hypercube", (3,)), 8),
        (FamilySpec("FullAryTree", (3, 2)), 13),
        (FamilySpec("FullAryTree", (2, 3)), 15),
        (FamilySpec("FullAryTree", (1, 4)), 5),
        (FamilySpec("GeneralizedNecklace", (3, 5)), 15),
        (FamilySpec("Gnsm", (3, 3, 4)), 30),
        (FamilySpec("Gnsm", (4, 2, 3)), 4 + 2 * comb(4, 2) * 2),
        (FamilySpec("GeneralizedWheel", (6, 2)), 13),
        (FamilySpec("Mgraph", (3,)), 26),
        (FamilySpec("Mgraph", (1,)), 14),
        (FamilySpec("G1Chain", (3,)), 21),
        (FamilySpec("Grid", (3, 4)), 12),
        (FamilySpec("CompleteBipartite", (2, 5)), 7),
    ],
)
def test_orders(spec, order):
    assert generate(spec).n == order


def test_known_shapes():
    assert nx.is_isomorphic(to_nx(generate(FamilySpec("Hypercube", (3,)))), nx.hypercube_graph(3))
    assert nx.is_isomorphic(to_nx(generate(FamilySpec("FullAryTree", (3, 2)))), nx.balanced_tree(3, 2))
    assert nx.is_isomorphic(to_nx(generate(FamilySpec("CompleteBipartite", (2, 3)))), nx.complete_bipartite_graph(2, 3))
    assert generate(FamilySpec("Cycle", (5,))).degrees == (2,) * 5


def test_gnsm_structure():
    g = generate(FamilySpec("Gnsm", (3, 3, 4)))
    assert g.degrees[:3] == (6, 6, 6)
    assert all(d == 2 for d in g.degrees[3:])
    assert g.size == 3 * 3 * 4


def test_necklace_regular():
    for j in range(2, 5):
        for d in range(4, 7):
            g = necklace(j, d)
            assert set(g.degrees) == {d - 1}
            assert is_connected(g)


def test_grid_and_corona_agree_with_graph_core():
    assert generate(FamilySpec("Grid", (3, 4))) == cartesian_product(path(3), path(4))
    inner = FamilySpec("Cycle", (5,))
    assert generate(FamilySpec("Corona", (inner,))) == corona_with_k1(cycle(5))


def test_deterministic():
    for spec in [FamilySpec("Gnsm", (3, 3, 4)), FamilySpec("Mgraph", (2,)), FamilySpec("UnitInterval", ("0", "1/2", "3/2"))]:
        assert generate(spec) == generate(spec)


def test_unit_interval_closed_overlap():
    g = generate(FamilySpec("UnitInterval", (Fraction(0), Fraction(1), Fraction(2), Fraction(5, 2))))
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]


def test_mgraph_shape():
    g = generate(FamilySpec("Mgraph", (3,)))
    assert sum(1 for d in g.degrees if d == 1) == 13
    # the cycle vertex without a path has degree 3 after the leaf is added
    assert g.degrees[:4] == (4, 4, 4, 3)


def test_g1_chain():
    g = g1_chain(1)
    assert (g.n, g.size) == (7, 6)
    assert sorted(g.degrees) == [1, 1, 1, 1, 2, 3, 3]
    two = g1_chain(2)
    assert two.has_edge(1, 8) and is_connected(two)
    apart = g1_chain(2, ())
    assert len(component_masks(apart)) == 2
    with pytest.raises(BadParams):
        g1_chain(2, [(0, 8)])
    with pytest.raises(BadParams):
        g1_chain(2, [(1, 5)])


def test_gallery():
    h = fixed_gallery("H11")
    assert (h.n, h.size) == (11, 26)
    assert is_dominating(h, {4, 6})
    b = fixed_gallery("Bowtie")
    assert (b.n, b.size) == (5, 6)
    assert [v for v in range(5) if not is_connected(b.remove_vertex(v))] == [0]
    house = fixed_gallery("House")
    assert (house.n, house.size) == (5, 6)
    assert contains_induced(house, cycle(4)) is not None
    assert contains_induced(house, cycle(5)) is None
    t = fixed_gallery("IntervalT")
    assert nx.is_tree(to_nx(t)) and t.n == 6
    assert fixed_gallery("C5") == cycle(5)


@pytest.mark.parametrize(
    "spec",
    [
        FamilySpec("Path", (0,)),
        FamilySpec("Cycle", (2,)),
        FamilySpec("Path", (1, 2)),
        FamilySpec("GeneralizedNecklace", (1, 4)),
        FamilySpec("GeneralizedNecklace", (2, 3)),
        FamilySpec("Gnsm", (3, 2, 1)),
        FamilySpec("GeneralizedWheel", (3, 1)),
        FamilySpec("Mgraph", (0,)),
        FamilySpec("Nope", ()),
        FamilySpec("UnitInterval", ()),
        FamilySpec("UnitInterval", ("x",)),
        FamilySpec("Corona", (3,)),
    ],
)
def test_bad_params(spec):
    with pytest.raises(BadParams):
        generate(spec)


def test_unknown_gallery():
    with pytest.raises(BadParams):
        fixed_gallery("Petersen")
