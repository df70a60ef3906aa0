import numpy as np
import pytest

from antipodal.graphs import (Graph, GraphError, all_pairs_distances,
                              closed_form_diameter, closed_form_distance,
                              cyclic_distance, make_cartesian_product,
                              make_cycle, make_gp, make_torus)


def test_cycle_smallest_is_triangle():
    g = make_cycle(3)
    assert g.n == 3
    assert all(g.degree(v) == 2 for v in range(3))


def test_cycle_eight_has_eight_edges():
    g = make_cycle(8)
    assert g.edge_count == 8
    assert all(g.degree(v) == 2 for v in range(8))


def test_cycle_five_diameter_two():
    assert all_pairs_distances(make_cycle(5)).diameter == 2


def test_cycle_rejects_small():
    with pytest.raises(GraphError):
        make_cycle(2)


def test_gp_examples():
    g8 = make_gp(8)
    assert (g8.n, g8.edge_count) == (16, 24)
    assert all_pairs_distances(g8).diameter == 5
    assert all_pairs_distances(make_gp(5)).diameter == 3
    g3 = make_gp(3)
    assert g3.n == 6
    assert all_pairs_distances(g3).diameter == 2
    assert all(g8.degree(v) == 3 for v in range(16))
    with pytest.raises(GraphError):
        make_gp(2)


def test_torus_examples():
    t44 = make_torus(4, 4)
    assert t44.n == 16
    assert all_pairs_distances(t44).diameter == 4
    assert all(t44.degree(v) == 4 for v in range(16))
    assert all_pairs_distances(make_torus(3, 4)).diameter == 3
    assert all_pairs_distances(make_torus(3, 3)).diameter == 2
    with pytest.raises(GraphError):
        make_torus(2, 5)


def _k2():
    return Graph(n=2, adjacency=((1,), (0,)), labels={0: 0, 1: 1})


def test_product_of_k2_and_c8_is_gp8():
    prod = make_cartesian_product(_k2(), make_cycle(8))
    gp = make_gp(8)
    # map product label (layer, i) onto ("x"/"y", i)
    def to_gp_index(label):
        layer, i = label
        return gp.index_of[("x" if layer == 0 else "y", i)]
    mapped = set()
    for u, v in prod.edges():
        lu, lv = prod.label_of(u), prod.label_of(v)
        a, b = to_gp_index(lu), to_gp_index(lv)
        mapped.add((min(a, b), max(a, b)))
    assert mapped == set(gp.edges())


def test_product_c3_c3_degree_sum():
    prod = make_cartesian_product(make_cycle(3), make_cycle(3))
    assert prod.n == 9
    assert prod.edge_count == 18
    assert all(prod.degree(v) == 4 for v in range(9))


def test_product_c4_c4_diameter():
    prod = make_cartesian_product(make_cycle(4), make_cycle(4))
    assert all_pairs_distances(prod).diameter == 4


def test_all_pairs_examples():
    c5 = all_pairs_distances(make_cycle(5))
    assert c5.d(0, 3) == 2
    assert int(all_pairs_distances(make_gp(8)).dist.max()) == 5
    t44 = make_torus(4, 4)
    d = all_pairs_distances(t44)
    assert d.d(t44.index_of[(0, 0)], t44.index_of[(2, 2)]) == 4


def test_distance_matrix_invariants():
    for g in (make_cycle(7), make_gp(6), make_torus(3, 5)):
        dm = all_pairs_distances(g)
        d = dm.dist
        assert (d == d.T).all()
        assert (np.diag(d) == 0).all()
        n = g.n
        off = d[~np.eye(n, dtype=bool)]
        assert off.min() >= 1 and off.max() == dm.diameter
        for u in range(n):  # triangle inequality: d[u,w] + d[w,v] >= d[u,v]
            assert (d[u][:, None] + d >= d[u][None, :]).all()


def test_disconnected_graph_rejected():
    with pytest.raises(GraphError):
        Graph(n=4, adjacency=((1,), (0,), (3,), (2,)))


def test_graph_rejects_self_loop_and_asymmetry():
    with pytest.raises(GraphError):
        Graph(n=2, adjacency=((0, 1), (0,)))
    with pytest.raises(GraphError):
        Graph(n=3, adjacency=((1,), (0, 2), ()))


def test_closed_form_distance_cycle():
    assert closed_form_distance("cycle", {"n": 7}, 2, 2) == 0
    assert closed_form_distance("cycle", {"n": 8}, 0, 4) == 4
    with pytest.raises(GraphError):
        closed_form_distance("cycle", {"n": 7}, 0, 7)


def test_closed_form_distance_torus():
    assert closed_form_distance("torus", {"r": 7, "s": 6}, (0, 0), (3, 2)) == 5
    with pytest.raises(GraphError):
        closed_form_distance("torus", {"r": 4, "s": 4}, (0, 0), (4, 0))
    with pytest.raises(GraphError):
        closed_form_distance("gp", {"n": 5}, 0, 1)


def test_closed_form_diameter():
    assert closed_form_diameter("gp", {"n": 8}) == 5
    assert closed_form_diameter("torus", {"r": 5, "s": 4}) == 4
    assert closed_form_diameter("gp", {"n": 3}) == 2
    with pytest.raises(GraphError):
        closed_form_diameter("gp", {"n": 1})


def test_cyclic_distance_basics():
    assert cyclic_distance(10, 2, 9) == 3
    assert cyclic_distance(4, 0, 2) == 2
    assert cyclic_distance(4, 3, 0) == 1


def test_labels_are_bijective():
    g = make_torus(3, 4)
    assert sorted(g.index_of.values()) == list(range(12))
    assert g.label_of(g.index_of[(2, 3)]) == (2, 3)
