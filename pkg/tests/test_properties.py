"""Property-based checks of the verifier, slack identity and distances."""

import random

from hypothesis import given, settings, strategies as st

from antipodal.graphs import (all_pairs_distances, make_cartesian_product,
                              make_cycle, make_torus)
from antipodal.radio import (Coloring, order_by_color, ordering_from_sequence,
                             span_identity_residual, verify_radio_k)

from conftest import greedy_valid_coloring, random_connected_graph


@given(st.integers(0, 10 ** 6), st.integers(4, 12))
@settings(max_examples=60, deadline=None)
def test_slack_identity_holds_for_valid_min0_colorings(seed, n):
    rng = random.Random(seed)
    graph = random_connected_graph(rng, n)
    dist = all_pairs_distances(graph)
    k = rng.randint(1, dist.diameter)
    coloring = greedy_valid_coloring(graph, dist, k, rng)
    assert verify_radio_k(graph, dist, coloring).valid
    assert span_identity_residual(order_by_color(coloring, dist), dist) == 0


@given(st.integers(0, 10 ** 6), st.integers(4, 10))
@settings(max_examples=40, deadline=None)
def test_slack_identity_is_tie_order_independent(seed, n):
    rng = random.Random(seed)
    graph = random_connected_graph(rng, n)
    dist = all_pairs_distances(graph)
    k = rng.randint(1, dist.diameter)
    coloring = greedy_valid_coloring(graph, dist, k, rng)
    canonical = order_by_color(coloring, dist)
    # shuffle inside equal-color blocks
    order = list(canonical.order)
    by_color = {}
    for v in order:
        by_color.setdefault(coloring.colors[v], []).append(v)
    shuffled = []
    for color in sorted(by_color):
        block = by_color[color]
        rng.shuffle(block)
        shuffled.extend(block)
    alt = ordering_from_sequence(coloring, dist, shuffled)
    assert span_identity_residual(alt, dist) == span_identity_residual(canonical, dist) == 0


@given(st.integers(0, 10 ** 6), st.integers(4, 10))
@settings(max_examples=60, deadline=None)
def test_verifier_reports_every_negative_slack_pair(seed, n):
    rng = random.Random(seed)
    graph = random_connected_graph(rng, n)
    dist = all_pairs_distances(graph)
    k = rng.randint(1, dist.diameter)
    colors = tuple(rng.randrange(0, 2 * k + 2) for _ in range(n))
    coloring = Coloring(colors, k=k)
    ordering = order_by_color(coloring, dist)
    report = verify_radio_k(graph, dist, coloring)
    reported = {(u, v) for (u, v, _, _) in report.violations}
    for j in range(2, n + 1):
        if ordering.eps(j) < 0:
            u = ordering.order[j - 2]
            v = ordering.order[j - 1]
            assert (min(u, v), max(u, v)) in reported
    if all(ordering.eps(j) >= 0 for j in range(2, n + 1)) and report.violations:
        # violations may exist even when consecutive slacks are fine
        pass


@given(st.integers(0, 10 ** 6), st.integers(4, 10))
@settings(max_examples=40, deadline=None)
def test_skip_satisfied_flag_is_equivalent(seed, n):
    rng = random.Random(seed)
    graph = random_connected_graph(rng, n)
    dist = all_pairs_distances(graph)
    k = rng.randint(1, dist.diameter)
    colors = tuple(rng.randrange(0, 3 * k) for _ in range(n))
    coloring = Coloring(colors, k=k)
    assert verify_radio_k(graph, dist, coloring) == \
        verify_radio_k(graph, dist, coloring, skip_satisfied=True)


@given(st.integers(0, 10 ** 6), st.integers(4, 10))
@settings(max_examples=40, deadline=None)
def test_equal_colors_imply_antipodal_in_valid_antipodal_colorings(seed, n):
    rng = random.Random(seed)
    graph = random_connected_graph(rng, n)
    dist = all_pairs_distances(graph)
    k = dist.diameter - 1
    if k < 1:
        return
    coloring = greedy_valid_coloring(graph, dist, k, rng)
    for u in range(n):
        for v in range(u + 1, n):
            if coloring.colors[u] == coloring.colors[v]:
                assert dist.d(u, v) == dist.diameter


@given(st.integers(0, 10 ** 6), st.integers(2, 8), st.integers(2, 8))
@settings(max_examples=30, deadline=None)
def test_product_distance_is_componentwise_sum(seed, ng, nh):
    rng = random.Random(seed)
    g = random_connected_graph(rng, ng)
    h = random_connected_graph(rng, nh)
    prod = make_cartesian_product(g, h)
    dg = all_pairs_distances(g)
    dh = all_pairs_distances(h)
    dp = all_pairs_distances(prod)
    assert dp.diameter == dg.diameter + dh.diameter
    for a1 in range(g.n):
        for b1 in range(h.n):
            for a2 in range(g.n):
                for b2 in range(h.n):
                    u = prod.index_of[(g.label_of(a1), h.label_of(b1))]
                    v = prod.index_of[(g.label_of(a2), h.label_of(b2))]
                    assert dp.d(u, v) == dg.d(a1, a2) + dh.d(b1, b2)


def test_torus_shift_invariance_exhaustive():
    for r, s in [(3, 4), (4, 4)]:
        t = make_torus(r, s)
        dist = all_pairs_distances(t)
        for a in range(r):
            for b in range(s):
                for i1 in range(r):
                    for j1 in range(s):
                        for i2 in range(r):
                            for j2 in range(s):
                                u = t.index_of[(i1, j1)]
                                v = t.index_of[(i2, j2)]
                                us = t.index_of[((i1 + a) % r, (j1 + b) % s)]
                                vs = t.index_of[((i2 + a) % r, (j2 + b) % s)]
                                assert dist.d(u, v) == dist.d(us, vs)


@given(st.integers(0, 10 ** 6))
@settings(max_examples=25, deadline=None)
def test_certified_random_colorings_match_exact_solver(seed):
    # certificate soundness at desk scale: whenever a random valid
    # antipodal coloring passes the certificate, the exact solver agrees
    # that its span is minimal
    from antipodal.radio import minimality_certificate
    from antipodal.solver import SOLVED, exact_rc_k

    rng = random.Random(seed)
    graph = random_connected_graph(rng, rng.randint(4, 9))
    dist = all_pairs_distances(graph)
    k = dist.diameter - 1
    if k < 1:
        return
    coloring = greedy_valid_coloring(graph, dist, k, rng)
    cert = minimality_certificate(order_by_color(coloring, dist), dist)
    if cert.certified:
        result = exact_rc_k(graph, dist, k, time_budget=20.0)
        if result.status == SOLVED:
            assert result.value == max(coloring.colors)


@given(st.integers(0, 10 ** 6))
@settings(max_examples=15, deadline=None)
def test_strictly_increasing_colorings_respect_two_step_gap_bound(seed):
    # On odd tori, adding the antipodal conditions of a color-sorted triple
    # and the triameter bound shows every TWO-step sorted-color gap is at
    # least ceil((3*diam - r - s) / 2).  (The single-step form sometimes
    # quoted does not follow and is falsified by tight colorings.)
    rng = random.Random(seed)
    r, s = rng.choice([(3, 3), (3, 5), (5, 5), (5, 7)])
    graph = make_torus(r, s)
    dist = all_pairs_distances(graph)
    k = dist.diameter - 1
    # first-fit with distinct colors: tightest gaps the condition allows
    order = list(range(graph.n))
    rng.shuffle(order)
    assigned: dict[int, int] = {}
    used = set()
    for v in order:
        c = 0
        while c in used or any(abs(c - cu) < 1 + k - dist.d(v, u)
                               for u, cu in assigned.items()):
            c += 1
        assigned[v] = c
        used.add(c)
    colors = [assigned[v] for v in range(graph.n)]
    coloring = Coloring(tuple(colors), k=k)
    assert verify_radio_k(graph, dist, coloring).valid
    assert len(set(colors)) == graph.n
    bound = -((-(3 * dist.diameter - r - s)) // 2)  # ceil
    ordered = sorted(colors)
    assert all(c2 - c0 >= bound for c0, c2 in zip(ordered, ordered[2:]))
