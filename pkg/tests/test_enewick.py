import random

import pytest

from level1kit.enewick import parse_enewick, write_enewick
from level1kit.enumeration import EnumSpec, construct_simple, enumerate_level1, random_level1
from level1kit.errors import (
    DegreeViolation,
    EnewickSyntaxError,
    HybridTagMismatch,
)
from level1kit.formats import (
    format_clusters,
    format_triplets,
    parse_clusters,
    parse_triplets,
)
from level1kit.network import equivalent
from level1kit.systems import softwired_clusters, triplets


def test_two_leaf_tree_round_trip():
    net = parse_enewick("(a,b);")
    assert net.n == 2
    assert write_enewick(net) == "(a,b);"


def test_malformed_input_position():
    with pytest.raises(EnewickSyntaxError):
        parse_enewick("((a,#H1),(b,#H1),?")


def test_hybrid_tag_occurrence_checks():
    with pytest.raises(HybridTagMismatch):
        parse_enewick("((a,(x)#H1),b);")  # one occurrence
    with pytest.raises(HybridTagMismatch):
        parse_enewick("((a,(x)#H1),(b,(y)#H1));")  # two loaded occurrences
    with pytest.raises(HybridTagMismatch):
        parse_enewick("((a,#H1),(b,#H1));")  # no loaded occurrence


def test_simple3_spec_string():
    net = parse_enewick("((x2,(x1)#H1),(x3,#H1));")
    assert equivalent(net, construct_simple("x1", ["x2"], ["x3"]))


def test_leaf_tag_shorthand():
    a = parse_enewick("((x2,x1#H1),(x3,#H1));")
    b = parse_enewick("((x2,(x1)#H1),(x3,#H1));")
    assert equivalent(a, b)


def test_parse_runs_validation():
    with pytest.raises(DegreeViolation):
        parse_enewick("(a,b,c);")  # ternary root


def test_round_trip_and_idempotence(u4):
    for i in range(len(u4)):
        net = u4.network_at(i)
        text = write_enewick(net)
        back = parse_enewick(text)
        assert equivalent(net, back)
        assert write_enewick(back) == text


def test_write_is_canonical_across_equivalent_inputs():
    a = construct_simple("h", ["a", "b"], ["c"])
    b = construct_simple("h", ["c"], ["a", "b"])
    assert write_enewick(a) == write_enewick(b)


def test_random_large_round_trip():
    rng = random.Random(2)
    for _ in range(20):
        net = random_level1([f"t{i}" for i in range(12)], rng.randrange(10 ** 6), 0.6)
        assert equivalent(parse_enewick(write_enewick(net)), net)


def test_rejects_unwritable_label():
    net = random_level1(["ok", "no spaces"], seed=0, gall_probability=0.0)
    with pytest.raises(ValueError):
        write_enewick(net)


def test_triplet_format_round_trip(fig_sixteen):
    system = triplets(fig_sixteen)
    again = parse_triplets(format_triplets(system))
    assert again.triplets == system.triplets


def test_cluster_format_round_trip(fig_eleven):
    system = softwired_clusters(fig_eleven)
    again = parse_clusters(format_clusters(system))
    assert again.clusters == system.clusters


def test_format_errors():
    with pytest.raises(ValueError):
        parse_triplets("a,b,c\n")
    with pytest.raises(ValueError):
        parse_clusters("a,,b\n")


def test_golden_files_match_package_constants(fig_sixteen, fig_eleven):
    from conftest import DATA
    from level1kit.corpus import ELEVEN_CLUSTERS, SIXTEEN_TRIPLETS

    trip = parse_triplets((DATA / "fig_sixteen.trip").read_text())
    assert trip.triplets == SIXTEEN_TRIPLETS.triplets
    clus = parse_clusters((DATA / "fig_eleven.clus").read_text())
    assert clus.clusters == ELEVEN_CLUSTERS.clusters
    assert equivalent(parse_enewick((DATA / "fig_sixteen.nwk").read_text()), fig_sixteen)
    assert equivalent(parse_enewick((DATA / "fig_eleven.nwk").read_text()), fig_eleven)
    assert triplets(fig_sixteen).triplets == trip.triplets
    assert softwired_clusters(fig_eleven).clusters == clus.clusters
