from itertools import combinations
from pathlib import Path

import pytest

from level1kit.corpus import ELEVEN_CLUSTERS, SIXTEEN_TRIPLETS
from level1kit.enumeration import EnumSpec, construct_simple, enumerate_level1, random_level1
from level1kit.errors import TooFewLeaves, UnknownTaxon
from level1kit.network import classify, equivalent, validate
from level1kit.systems import (
    ClusterSystem,
    Triplet,
    consistent,
    displayed_trees,
    displays_clusters,
    hardwired_clusters,
    softwired_clusters,
    triplets,
)

from oracles import consistent_by_paths, tree_triplets

DATA = Path(__file__).parent / "data"


def test_triplet_normalizes_pair_order():
    assert Triplet.of("b", "a", "c") == Triplet.of("a", "b", "c")
    assert str(Triplet.of("b", "a", "c")) == "a,b|c"
    with pytest.raises(ValueError):
        Triplet.of("a", "a", "c")


def test_displayed_trees_of_tree_is_itself():
    tree = validate([("r", "c"), ("r", "v"), ("v", "a"), ("v", "b")],
                    {"a": "a", "b": "b", "c": "c"})
    shown = displayed_trees(tree)
    assert len(shown) == 1 and equivalent(shown[0], tree)


def test_displayed_trees_of_simple3():
    net = construct_simple("x1", ["x2"], ["x3"])
    shown = displayed_trees(net)
    assert len(shown) == 2
    assert {frozenset(map(str, triplets(t))) for t in shown} == {
        frozenset({"x1,x3|x2"}), frozenset({"x1,x2|x3"})}


def test_displayed_tree_count_bounds(u4):
    for i in range(len(u4)):
        net = u4.network_at(i)
        g = int(u4.g[i])
        count = len(displayed_trees(net))
        if g == 0:
            assert count == 1
        else:
            assert 2 <= count <= 2 ** g


def test_hardwired_tree_counts():
    for n in (2, 4, 7):
        tree = random_level1([f"t{i}" for i in range(n)], seed=1, gall_probability=0.0)
        assert len(hardwired_clusters(tree)) == 2 * n - 1


def test_hardwired_two_leaf():
    net = validate([("r", "a"), ("r", "b")], {"a": "a", "b": "b"})
    assert set(hardwired_clusters(net).clusters) == {
        frozenset({"a"}), frozenset({"b"}), frozenset({"a", "b"})}


def test_hardwired_upper_bound_on_proper_networks(u5):
    # |C(N)| stays within 3n-2; a hybrid vertex always repeats its child's
    # cluster, so the count can drop below the vertex count.
    for i in range(len(u5)):
        if not u5.g[i]:
            continue
        net = u5.network_at(i)
        count = len(hardwired_clusters(net))
        assert count <= 3 * net.n - 2
        assert count <= net.num_vertices - int(u5.g[i])


def test_softwired_matches_pinned_eleven(fig_eleven):
    assert softwired_clusters(fig_eleven).clusters == ELEVEN_CLUSTERS.clusters


def test_softwired_counts_small():
    simple3 = construct_simple("x1", ["x2"], ["x3"])
    assert len(softwired_clusters(simple3).without_universe()) == 5
    triplet_net = validate([("r", "c"), ("r", "v"), ("v", "a"), ("v", "b")],
                           {"a": "a", "b": "b", "c": "c"})
    assert len(softwired_clusters(triplet_net).without_universe()) == 4


def test_triplets_match_pinned_sixteen(fig_sixteen):
    assert triplets(fig_sixteen).triplets == SIXTEEN_TRIPLETS.triplets


def test_tree_triplet_count_and_oracle():
    tree = random_level1([f"t{i}" for i in range(6)], seed=5, gall_probability=0.0)
    system = triplets(tree)
    assert len(system) == 20  # one triplet per 3-subset
    assert system.triplets == frozenset(tree_triplets(tree))


def test_triplets_requires_three_leaves():
    net = validate([("r", "a"), ("r", "b")], {"a": "a", "b": "b"})
    with pytest.raises(TooFewLeaves):
        triplets(net)


def test_consistency_examples(fig_sixteen):
    assert not consistent(fig_sixteen, Triplet.of("x1", "x3", "x2"))
    assert consistent(fig_sixteen, Triplet.of("x3", "x4", "x5"))
    assert consistent(fig_sixteen, Triplet.of("x4", "x5", "x3"))
    with pytest.raises(UnknownTaxon):
        consistent(fig_sixteen, Triplet.of("x1", "x2", "zz"))


def test_cherry_triplet_consistent():
    tree = validate([("r", "c"), ("r", "v"), ("v", "a"), ("v", "b")],
                    {"a": "a", "b": "b", "c": "c"})
    assert consistent(tree, Triplet.of("a", "b", "c"))
    assert not consistent(tree, Triplet.of("a", "c", "b"))


def test_consistency_agrees_with_path_definition(u4):
    taxa = sorted(u4.taxa)
    for i in range(0, len(u4), 11):
        net = u4.network_at(i)
        for trio in combinations(taxa, 3):
            for k in range(3):
                pair = [x for j, x in enumerate(trio) if j != k]
                t = Triplet.of(pair[0], pair[1], trio[k])
                assert consistent(net, t) == consistent_by_paths(net, t)


def test_triplets_union_of_displayed_trees(u4):
    for i in range(len(u4)):
        net = u4.network_at(i)
        union = set()
        for tree in displayed_trees(net):
            union |= tree_triplets(tree)
        assert triplets(net).triplets == frozenset(union)


def test_per_trio_count_is_one_or_two(u5):
    for i in range(0, len(u5), 13):
        net = u5.network_at(i)
        by_trio = {}
        for t in triplets(net).triplets:
            by_trio.setdefault(t.taxa, set()).add(t)
        assert len(by_trio) == 10
        assert all(1 <= len(v) <= 2 for v in by_trio.values())


def test_trees_have_equal_hardwired_and_softwired():
    for seed in range(5):
        tree = random_level1([f"t{i}" for i in range(6)], seed, 0.0)
        assert hardwired_clusters(tree).clusters == softwired_clusters(tree).clusters


def test_displays_clusters_of_own_displayed_tree():
    net = construct_simple("h", ["a", "b"], ["c", "d"])
    for tree in displayed_trees(net):
        assert displays_clusters(net, hardwired_clusters(tree))


def test_displays_clusters_rejects_foreign_cluster():
    tree = validate([("r", "c"), ("r", "v"), ("v", "a"), ("v", "b")],
                    {"a": "a", "b": "b", "c": "c"})
    bad = ClusterSystem.of([{"a", "c"}], universe={"a", "b", "c"})
    assert not displays_clusters(tree, bad)
    with pytest.raises(UnknownTaxon):
        displays_clusters(tree, ClusterSystem.of([{"zz"}]))


def test_prop42_monotonicity_gap():
    from level1kit.enumeration import search_prop42_pair
    n1, n2 = search_prop42_pair(6)
    assert len(triplets(n2)) - len(triplets(n1)) == 2  # |X'| = n - 4
