"""Induced triplet and cluster systems of a network."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator

from ._cleanup import WorkGraph
from .errors import TooFewLeaves, UnknownTaxon
from .network import Network

__all__ = [
    "Triplet",
    "TripletSystem",
    "ClusterSystem",
    "displayed_trees",
    "hardwired_clusters",
    "softwired_clusters",
    "triplets",
    "consistent",
    "displays_clusters",
]


@dataclass(frozen=True, order=True)
class Triplet:
    """A rooted triplet ``ab|c``: the pair {a, b} below a vertex strictly
    below the root, with outlier c."""

    pair: tuple[str, str]
    outlier: str

    def __post_init__(self):
        a, b = self.pair
        if a > b:
            object.__setattr__(self, "pair", (b, a))
        if len({*self.pair, self.outlier}) != 3:
            raise ValueError(f"triplet taxa must be distinct: {self.pair}|{self.outlier}")

    @classmethod
    def of(cls, a: str, b: str, c: str) -> "Triplet":
        return cls(pair=(a, b), outlier=c)

    @property
    def taxa(self) -> frozenset[str]:
        return frozenset((*self.pair, self.outlier))

    def __str__(self) -> str:
        return f"{self.pair[0]},{self.pair[1]}|{self.outlier}"


@dataclass(frozen=True)
class TripletSystem:
    triplets: frozenset[Triplet]
    taxa: frozenset[str]

    @classmethod
    def of(cls, items: Iterable[Triplet], taxa: Iterable[str] | None = None) -> "TripletSystem":
        ts = frozenset(items)
        universe = frozenset(taxa) if taxa is not None else frozenset(
            x for t in ts for x in t.taxa)
        return cls(triplets=ts, taxa=universe)

    def __contains__(self, t: Triplet) -> bool:
        return t in self.triplets

    def __iter__(self) -> Iterator[Triplet]:
        return iter(sorted(self.triplets))

    def __len__(self) -> int:
        return len(self.triplets)

    def union(self, other: "TripletSystem") -> "TripletSystem":
        return TripletSystem(self.triplets | other.triplets, self.taxa | other.taxa)

    def on_trio(self, trio: frozenset[str]) -> tuple[Triplet, ...]:
        return tuple(t for t in sorted(self.triplets) if t.taxa == trio)

    def issubset(self, other: "TripletSystem") -> bool:
        return self.triplets <= other.triplets


@dataclass(frozen=True)
class ClusterSystem:
    clusters: frozenset[frozenset[str]]
    universe: frozenset[str]

    @classmethod
    def of(cls, items: Iterable[Iterable[str]], universe: Iterable[str] | None = None) -> "ClusterSystem":
        cs = frozenset(frozenset(c) for c in items)
        if any(not c for c in cs):
            raise ValueError("clusters must be non-empty")
        uni = frozenset(universe) if universe is not None else frozenset(
            x for c in cs for x in c)
        return cls(clusters=cs, universe=uni)

    def __contains__(self, c: frozenset[str]) -> bool:
        return frozenset(c) in self.clusters

    def __iter__(self) -> Iterator[frozenset[str]]:
        return iter(sorted(self.clusters, key=lambda c: (len(c), sorted(c))))

    def __len__(self) -> int:
        return len(self.clusters)

    def without_universe(self) -> "ClusterSystem":
        return ClusterSystem(self.clusters - {self.universe}, self.universe)

    def issubset(self, other: "ClusterSystem") -> bool:
        return self.clusters <= other.clusters


# ---------------------------------------------------------------------------


def _switched_graphs(net: Network) -> Iterator[WorkGraph]:
    """One cleaned-up graph per way of keeping a single in-arc at every hybrid."""
    choices = []
    for gall in net._galls:
        h = gall.hybrid
        choices.append([(p, h) for p in net.parents[h]])
    for combo in product(*choices):
        wg = WorkGraph.from_network(net)
        for arc in combo:
            wg.remove_arc(*arc)
        yield wg.run()


def displayed_trees(net: Network) -> list[Network]:
    """All trees displayed by the network, deduplicated up to equivalence."""
    seen: dict[bytes, Network] = {}
    for wg in _switched_graphs(net):
        tree = wg.to_network()
        seen.setdefault(tree.canonical_form, tree)
    return [seen[k] for k in sorted(seen)]


def hardwired_clusters(net: Network) -> ClusterSystem:
    """The clusters below each vertex of the network itself."""
    return ClusterSystem(frozenset(net.clusters_below.values()), net.taxa)


def softwired_clusters(net: Network) -> ClusterSystem:
    """The union of the hardwired clusters of every displayed tree."""
    acc: set[frozenset[str]] = set()
    for wg in _switched_graphs(net):
        acc |= wg.cluster_sets()
    return ClusterSystem(frozenset(acc), net.taxa)


def _trio_triplets(net: Network, trio: tuple[str, str, str]) -> tuple[Triplet, ...]:
    """The one or two triplets the network induces on a 3-set of taxa."""
    wg = WorkGraph.from_network(net, drop=frozenset(net.taxa) - frozenset(trio))
    wg.run()
    hybs = wg.hybrid_vertices()
    root = next(v for v in wg.children if not wg.parents[v])
    if hybs:
        h = hybs[0]
        hl = wg.labels[wg.children[h][0]]
        if h in wg.children[root]:
            # Both remaining leaves sit on one side of the 4-cycle; the
            # lower one joins both induced pairs.
            a = next(v for v in wg.children[root] if v != h)
            upper = wg.labels[next(v for v in wg.children[a] if v in wg.labels)]
            b = next(v for v in wg.children[a] if v not in wg.labels)
            lower = wg.labels[next(v for v in wg.children[b] if v in wg.labels)]
            return (Triplet.of(upper, lower, hl), Triplet.of(lower, hl, upper))
        o1, o2 = sorted(set(trio) - {hl})
        return (Triplet.of(hl, o1, o2), Triplet.of(hl, o2, o1))
    c1, c2 = wg.children[root]
    outlier_v, cherry_v = (c1, c2) if c1 in wg.labels else (c2, c1)
    a, b = (wg.labels[w] for w in wg.children[cherry_v])
    return (Triplet.of(a, b, wg.labels[outlier_v]),)


def triplets(net: Network) -> TripletSystem:
    """All rooted triplets consistent with the network.

    Consistency on each 3-set is decided on the restriction of the network
    to those three leaves.
    """
    if net.n < 3:
        raise TooFewLeaves("triplet system needs at least 3 leaves")
    acc: set[Triplet] = set()
    for trio in combinations(sorted(net.taxa), 3):
        acc.update(_trio_triplets(net, trio))
    return TripletSystem(frozenset(acc), net.taxa)


def consistent(net: Network, t: Triplet) -> bool:
    """Whether the triplet is consistent with the network."""
    for x in t.taxa:
        if x not in net.taxa:
            raise UnknownTaxon(x)
    trio = tuple(sorted(t.taxa))
    return t in _trio_triplets(net, trio)


def displays_clusters(net: Network, system: ClusterSystem) -> bool:
    """Whether every cluster of the system is a softwired cluster of the network."""
    for x in system.universe:
        if x not in net.taxa:
            raise UnknownTaxon(x)
    return system.clusters <= softwired_clusters(net).clusters
