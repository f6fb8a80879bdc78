import numpy as np
import pytest

from level1kit.defining import (
    check_defines,
    check_encoded,
    defining_clusters_simple,
    defining_triplets_simple,
    get_universe,
)
from level1kit.enumeration import EnumSpec, construct_simple, enumerate_level1
from level1kit.errors import NotSimple, TooFewLeaves, UniverseTooLarge
from level1kit.network import classify, equivalent, validate
from level1kit.systems import Triplet, TripletSystem, softwired_clusters, triplets


def test_base_case_is_full_induced_system():
    net = construct_simple("x1", ["x2", "x3"], ["x4"])
    system = defining_triplets_simple(net)
    assert len(system) == 7
    assert system.triplets == triplets(net).triplets


def test_single_side_recursion_adds_expected_triplets():
    # all side leaves on one side; removing the topmost one recurses
    net = construct_simple("x1", ["x5", "x4", "x3", "x2"], [])
    base = defining_triplets_simple(construct_simple("x1", ["x4", "x3", "x2"], []))
    system = defining_triplets_simple(net)
    extra = system.triplets - base.triplets
    assert extra == {Triplet.of("x4", "x5", "x1"), Triplet.of("x1", "x4", "x5")}
    assert len(system) <= 9


def test_defining_triplets_requirements():
    with pytest.raises(NotSimple):
        defining_triplets_simple(validate([("r", "a"), ("r", "b")], {"a": "a", "b": "b"}))
    with pytest.raises(TooFewLeaves):
        defining_triplets_simple(construct_simple("a", ["b"], ["c"]))


def test_defining_systems_define_all_simple_networks(u5):
    for i in np.flatnonzero(u5.is_simple):
        net = u5.network_at(int(i))
        ts = defining_triplets_simple(net)
        assert len(ts) <= 2 * net.n - 1
        assert all(t in triplets(net) for t in ts)
        assert check_defines(ts, "triplets", net, collect_survivors=False).defines
        cs = defining_clusters_simple(net)
        assert len(cs) <= net.n
        assert cs.clusters <= softwired_clusters(net).clusters
        assert check_defines(cs, "clusters", net, collect_survivors=False).defines


def test_cluster_case_one_formula():
    net = construct_simple("x1", ["x4", "x3", "x2"], [])
    got = {tuple(sorted(c)) for c in defining_clusters_simple(net).clusters}
    assert got == {("x1", "x2"), ("x1", "x2", "x3"), ("x2", "x3", "x4")}


def test_cluster_case_two_formula():
    net = construct_simple("x1", ["x4", "x3", "x2"], ["x5"])
    got = {tuple(sorted(c)) for c in defining_clusters_simple(net).clusters}
    assert got == {("x2", "x3"), ("x2", "x3", "x4"), ("x1", "x2"),
                   ("x1", "x5"), ("x1", "x2", "x3")}


def test_cluster_case_three_formula_size():
    net = construct_simple("x1", ["x6", "x5", "x4"], ["x2", "x3"])
    system = defining_clusters_simple(net)
    assert len(system) == net.n == 6


def test_tree_is_not_defined_by_its_triplets(u4):
    tree = next(iter(enumerate_level1(EnumSpec(tuple(sorted(u4.taxa)),
                                               frozenset({"tree"})))))
    report = check_defines(triplets(tree), "triplets", tree)
    assert not report.defines
    assert report.survivor_count > 1
    forms = {net.canonical_form for net in report.consistent_networks}
    assert tree.canonical_form in forms


def test_pinned_sixteen_network_not_defined_by_subset_partner(u5, fig_sixteen):
    # a different 4-outwards network whose triplets all hold in the pinned one
    row = u5.row_of(fig_sixteen)
    sub = (u5.tri & u5.tri[row]) == u5.tri
    sub[row] = False
    witnesses = np.flatnonzero(sub & u5.is_four_outwards)
    assert len(witnesses) >= 1
    partner = u5.network_at(int(witnesses[0]))
    report = check_defines(triplets(partner), "triplets", partner)
    assert not report.defines
    survivor_forms = {net.canonical_form for net in report.consistent_networks}
    assert fig_sixteen.canonical_form in survivor_forms


def test_check_defines_survivor_invariant():
    net = construct_simple("x1", ["x2", "x3"], ["x4"])
    report = check_defines(defining_triplets_simple(net), "triplets", net)
    assert report.defines
    assert len(report.consistent_networks) == 1
    assert equivalent(report.consistent_networks[0], net)


def test_universe_cap():
    with pytest.raises(UniverseTooLarge):
        get_universe(tuple(f"x{i}" for i in range(1, 8)))


def test_encoded_iff_four_outwards(u4, u5):
    for uni in (u4, u5):
        for i in range(0, len(uni), 3):
            net = uni.network_at(i)
            expect = bool(uni.is_four_outwards[i])
            assert check_encoded(net, "triplets") == expect
            assert check_encoded(net, "clusters") == expect


def test_three_cut_gall_is_not_encoded():
    # the three outgoing arcs of a short gall can be permuted freely
    net = construct_simple("a", ["b"], ["c"])
    assert not check_encoded(net, "triplets")
    assert not check_encoded(net, "clusters")


def test_path_subdivision_superset_counterexample():
    # a caterpillar with a directed path of three cut arcs; subdividing the
    # first and last arc of the path and joining the new vertices keeps all
    # original triplets
    tree = validate(
        [("r", "v1"), ("r", "d"), ("v1", "v2"), ("v1", "c"),
         ("v2", "a"), ("v2", "b")],
        {"a": "a", "b": "b", "c": "c", "d": "d"})
    prime = validate(
        [("r", "u"), ("r", "d"), ("u", "v1"), ("u", "w"), ("v1", "v2"),
         ("v1", "c"), ("v2", "w"), ("v2", "b"), ("w", "a")],
        {"a": "a", "b": "b", "c": "c", "d": "d"})
    assert classify(tree).is_four_outwards
    assert classify(prime).is_proper
    assert not equivalent(tree, prime)
    assert triplets(tree).issubset(triplets(prime))
    assert not check_defines(triplets(tree), "triplets", tree).defines
