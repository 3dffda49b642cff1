import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import treepack.packing as packing_mod
from treepack.errors import GeneralPositionError, RadialTieError, VerificationError
from treepack.generate import generate_points
from treepack.geometry import DirectedLine, Side, point, points, side_of_line
from treepack.packing import (
    DirectedEdge,
    RadialOrder,
    SpanningTree,
    build_graph,
    extract_tree,
    pack_spanning_trees,
    radial_order,
    tail_schedule,
)
from treepack.verification import is_plane, is_spanning_tree

from .conftest import zero_dim_set

ORIGIN = point(0, 0)


def identity_order(n):
    return RadialOrder(ORIGIN, tuple(range(1, n + 1)))


def pos_edges(pairs):
    """Edges written with 1-based radial positions, as p_a -> p_b."""
    return [DirectedEdge(a, b) for a, b in pairs]


def test_radial_order_axis_points():
    pts = points([(1, 0), (0, 1), (-1, 0), (0, -1)])
    assert radial_order(pts, ORIGIN).order == (0, 1, 2, 3)
    assert radial_order(pts[::-1], ORIGIN).order == (3, 2, 1, 0)   # same points, same cycle


def test_radial_order_starts_at_positive_x_axis():
    pts = points([(0, -1), (-1, 1), (3, 1), (2, 0), (-1, -5)])
    assert radial_order(pts, ORIGIN).order == (3, 2, 1, 4, 0)


def test_radial_order_tie():
    with pytest.raises(RadialTieError):
        radial_order(points([(1, 0), (2, 0), (0, 1)]), ORIGIN)


def test_radial_order_excludes_center_point(seven):
    order = radial_order(seven, seven[0])
    assert order.excluded == 0 and sorted(order.order) == [1, 2, 3, 4, 5, 6]


def test_build_graph_residue0():
    edges = build_graph(identity_order(6), 1, 2, 0)
    assert edges == pos_edges([(1, 2), (1, 3), (3, 4), (3, 5), (5, 6), (5, 1)])


def test_build_graph_residue1():
    edges = build_graph(identity_order(7), 1, 2, 1)
    assert edges == pos_edges([(1, 2), (1, 3), (1, 4), (4, 5), (4, 6), (6, 7), (6, 1)])


def test_build_graph_residue2():
    edges = build_graph(identity_order(8), 2, 2, 2)
    assert edges == pos_edges([(2, 3), (2, 4), (2, 5), (5, 6), (5, 7), (5, 8), (8, 1), (8, 2)])


@pytest.mark.parametrize("i, k, residue, n", [(0, 2, 0, 6), (3, 2, 0, 6), (1, 2, 3, 6),
                                              (1, 2, 1, 6), (1, 0, 0, 0)])
def test_build_graph_rejects_bad_parameters(i, k, residue, n):
    with pytest.raises(ValueError):
        build_graph(identity_order(max(n, 1)), i, k, residue)


def test_extract_tree_residue0():
    t = extract_tree(build_graph(identity_order(6), 1, 2, 0), 1)
    assert t.removed_edge == DirectedEdge(5, 1)
    assert t.edges == tuple(pos_edges([(1, 2), (1, 3), (3, 4), (3, 5), (5, 6)]))
    assert (t.start_index, t.residue) == (1, "3k")


def test_extract_tree_residue1():
    t = extract_tree(build_graph(identity_order(7), 1, 2, 1), 1)
    assert t.removed_edge == DirectedEdge(6, 1)
    assert len(t.edges) == 6 and t.residue == "3k+1"


def test_extract_tree_needs_closing_edge():
    with pytest.raises(RuntimeError):
        extract_tree(pos_edges([(1, 2), (2, 3)]), 1)


def tail_successors(edges):
    """For each tail, the heads of its edges that are themselves tails."""
    tails = {e.tail for e in edges}
    succ = {t: [e.head for e in edges if e.tail == t and e.head in tails] for t in tails}
    return succ


@pytest.mark.parametrize("n", range(6, 31))
def test_schedule_structure(n):
    k, r = divmod(n, 3)
    order = identity_order(n)
    tail_sets = []
    for i in range(1, k + 1):
        edges = build_graph(order, i, k, r)
        assert len(edges) == n
        assert len(set(edges)) == n
        tails = {e.tail for e in edges}
        assert len(tails) == 3
        tail_sets.append(tails)
        # the tails form the single directed cycle p_i -> t2 -> t3 -> p_i
        succ = tail_successors(edges)
        assert all(len(v) == 1 for v in succ.values())
        walk, seen = i, []
        for _ in range(3):
            seen.append(walk)
            walk = succ[walk][0]
        assert walk == i and sorted(seen) == sorted(tails)
        tree = extract_tree(edges, i)
        assert len(tree.edges) == n - 1
        zero_based = SpanningTree(tuple(DirectedEdge(a - 1, b - 1) for a, b in tree.edges), i, "")
        assert is_spanning_tree(zero_based, [ORIGIN] * n)
    for a in range(len(tail_sets)):
        for b in range(a + 1, len(tail_sets)):
            assert not tail_sets[a] & tail_sets[b]


def test_pack_hexagon(hexagon):
    packing = pack_spanning_trees(hexagon)
    assert len(packing.trees) == 2
    assert packing.verification.ok
    assert not packing.centerpoint.in_P


def test_pack_triangle(triangle):
    packing = pack_spanning_trees(triangle)
    assert len(packing.trees) == 1
    assert set(packing.trees[0].edges) == {DirectedEdge(0, 1), DirectedEdge(0, 2)}


@pytest.mark.parametrize("raw", [
    [(0, 0), (4, 0), (5, 3), (1, 4)],
    [(0, 0), (6, 0), (0, 6), (1, 2)],
    [(0, 0), (6, 0), (7, 5), (2, 8), (-3, 4)],
    [(0, 0), (10, 0), (0, 10), (2, 3), (3, 1)],
])
def test_pack_small_sets_use_a_star(raw):
    pts = points(raw)
    packing = pack_spanning_trees(pts)
    assert len(packing.trees) == 1 and packing.trees[0].residue == "star"
    assert packing.verification.ok


def test_pack_point_center(seven):
    packing = pack_spanning_trees(seven)
    assert packing.centerpoint.in_P and packing.centerpoint.index == 0
    assert len(packing.trees) == 2
    for i, t in enumerate(packing.trees, 1):
        at_p = [e for e in t.edges if 0 in e]
        assert at_p == [DirectedEdge(0, packing.radial_order.at(i))]
        assert t.residue == "0-dim"


@pytest.mark.parametrize("k", [3, 4, 6])
def test_pack_cluster_point_centers(k):
    pts = zero_dim_set(k)
    packing = pack_spanning_trees(pts)
    assert packing.centerpoint.in_P and len(packing.trees) == k


def test_pack_rejects_collinear_input():
    with pytest.raises(GeneralPositionError) as err:
        pack_spanning_trees(points([(0, 0), (1, 1), (5, 0), (2, 2)]))
    assert err.value.witness == (0, 1, 3)


def test_pack_without_verification(hexagon):
    unchecked = pack_spanning_trees(hexagon, verify=False)
    assert unchecked.verification is None
    assert unchecked.trees == pack_spanning_trees(hexagon).trees


def test_pack_fails_closed(monkeypatch):
    pts = generate_points(30, seed=4)

    def scrambled(points_, center):
        real = radial_order(points_, center)
        return RadialOrder(real.center, tuple(sorted(real.order)), real.excluded)

    monkeypatch.setattr(packing_mod, "radial_order", scrambled)
    with pytest.raises(VerificationError) as err:
        pack_spanning_trees(pts)
    assert not err.value.summary.plane


def wedge_ok(packing, pts):
    order = packing.radial_order
    c = packing.centerpoint.c
    n = len(order)
    k, r = divmod(n, 3)
    for tree in packing.trees:
        schedule = tail_schedule(tree.start_index, k, r)
        for (t, degree), (t_next, _) in zip(schedule, schedule[1:] + schedule[:1]):
            first = DirectedLine(c, pts[order.at(t)])
            last = DirectedLine(c, pts[order.at(t_next)])
            for e in tree.edges:
                if e.tail != order.at(t) or e.tail == packing.centerpoint.index:
                    continue
                head = pts[e.head]
                if side_of_line(first, head) == Side.RIGHT:
                    return False
                if side_of_line(last, head) == Side.LEFT:
                    return False
    return True


@settings(max_examples=40, deadline=None)
@given(st.integers(6, 40), st.integers(0, 10**6))
def test_packing_properties(n, seed):
    pts = generate_points(n, seed=seed, span=max(n * n, 500))
    packing = pack_spanning_trees(pts, seed=seed)
    assert len(packing.trees) == n // 3
    assert sum(len(t.edges) for t in packing.trees) == (n // 3) * (n - 1)
    undirected = [frozenset(e) for t in packing.trees for e in t.edges]
    assert len(undirected) == len(set(undirected))
    assert all(is_plane(t, pts) and is_spanning_tree(t, pts) for t in packing.trees)
    if packing.centerpoint.index is None:
        assert wedge_ok(packing, pts)


@settings(max_examples=15, deadline=None)
@given(st.integers(6, 30), st.integers(0, 1000), st.randoms(use_true_random=False))
def test_packing_depends_only_on_geometry(n, seed, rnd):
    pts = generate_points(n, seed=seed)
    perm = list(range(n))
    rnd.shuffle(perm)
    shuffled = [pts[i] for i in perm]

    def edge_set(ps):
        packing = pack_spanning_trees(ps, seed=7)
        return {frozenset((ps[a], ps[b])) for t in packing.trees for a, b in t.edges}

    assert edge_set(pts) == edge_set(shuffled)


def test_packing_is_reproducible():
    pts = generate_points(25, seed=9)
    assert pack_spanning_trees(pts, seed=2) == pack_spanning_trees(pts, seed=2)
