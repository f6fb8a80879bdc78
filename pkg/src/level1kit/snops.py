"""SN-sets, the Cut partition, restriction and the Collapse construction."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable

from ._cleanup import WorkGraph
from .errors import BadRepresentative, NotAPartition, TooFewTaxa, UnknownTaxon
from .network import Network, validate
from .systems import Triplet, TripletSystem

__all__ = [
    "Partition",
    "CollapseResult",
    "is_sn_set",
    "sn_closure",
    "maximal_sn_sets",
    "cut_partition",
    "compatible",
    "restrict",
    "collapse",
    "projected_triplets",
]


@dataclass(frozen=True)
class Partition:
    blocks: frozenset[frozenset[str]]
    universe: frozenset[str]

    def block_of(self, taxon: str) -> frozenset[str]:
        for b in self.blocks:
            if taxon in b:
                return b
        raise UnknownTaxon(taxon)

    def __iter__(self):
        return iter(sorted(self.blocks, key=lambda b: sorted(b)))

    def __len__(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class CollapseResult:
    collapsed: Network
    representative_of: dict[frozenset[str], str]
    pendant: dict[str, Network | None]


def is_sn_set(system: TripletSystem, candidate: Iterable[str]) -> bool:
    """No triplet ``xy|z`` of the system has x, z inside the set and y outside."""
    s = frozenset(candidate)
    for t in system.triplets:
        if t.outlier in s:
            p, q = t.pair
            if (p in s) != (q in s):
                return False
    return True


def sn_closure(system: TripletSystem, seed: Iterable[str]) -> frozenset[str]:
    """The least SN-superset of the seed."""
    s = set(seed)
    changed = True
    while changed:
        changed = False
        for t in system.triplets:
            if t.outlier in s:
                p, q = t.pair
                pin, qin = p in s, q in s
                if pin and not qin:
                    s.add(q)
                    changed = True
                elif qin and not pin:
                    s.add(p)
                    changed = True
    return frozenset(s)


def maximal_sn_sets(system: TripletSystem) -> Partition:
    """The maximal non-trivial SN-sets of the system.

    Candidates are grown from singletons by closing pairs under violating
    triplets.  Raises :class:`NotAPartition` when the maximal sets fail to
    partition the taxa, which signals a system that is not induced by a
    level-1 network.
    """
    taxa = system.taxa
    candidates: set[frozenset[str]] = {frozenset((x,)) for x in taxa}
    for a, b in combinations(sorted(taxa), 2):
        closed = sn_closure(system, (a, b))
        if closed != taxa:
            candidates.add(closed)
    maximal = [c for c in candidates if not any(c < d for d in candidates)]
    covered: set[str] = set()
    for block in maximal:
        if block & covered:
            raise NotAPartition(f"overlapping maximal SN-sets near {sorted(block)}")
        covered |= block
    if covered != taxa:
        raise NotAPartition(f"maximal SN-sets miss {sorted(taxa - covered)}")
    return Partition(frozenset(maximal), taxa)


def cut_partition(net: Network) -> Partition:
    """Blocks are the clusters below the highest cut arcs of the network."""
    all_cut = net._trivial_cut + net._nontrivial_cut
    below = _descendants(net)
    heads = [v for (_, v) in all_cut]
    blocks = []
    for (u, v) in all_cut:
        if any(u in below[v2] for (u2, v2) in all_cut if (u2, v2) != (u, v)):
            continue
        blocks.append(net.clusters_below[v])
    assert heads, "a network on >= 2 leaves has cut arcs"
    return Partition(frozenset(blocks), net.taxa)


def _descendants(net: Network) -> dict[int, frozenset[int]]:
    out: dict[int, frozenset[int]] = {}
    for v in reversed(net._topological_order()):
        acc = {v}
        for w in net.children[v]:
            acc |= out[w]
        out[v] = frozenset(acc)
    return out


def compatible(a: Iterable[str], b: Iterable[str]) -> bool:
    """Two clusters are compatible when nested or disjoint."""
    sa, sb = frozenset(a), frozenset(b)
    inter = sa & sb
    return inter in (frozenset(), sa, sb)


def restrict(net: Network, keep: Iterable[str]) -> Network:
    """The restriction of the network to a subset of its taxa."""
    kept = frozenset(keep)
    for x in sorted(kept - net.taxa):
        raise UnknownTaxon(x)
    if len(kept) < 2:
        raise TooFewTaxa("restriction needs at least two taxa")
    if kept == net.taxa:
        return net
    wg = WorkGraph.from_network(net, drop=net.taxa - kept)
    return wg.run().to_network()


def collapse(net: Network, choose: Callable[[frozenset[str]], str] | None = None) -> CollapseResult:
    """Replace each pendant subnetwork below a highest cut arc by a
    representative taxon; the result is simple or a tree on two leaves."""
    part = cut_partition(net)
    pick = choose if choose is not None else min
    reps: dict[frozenset[str], str] = {}
    for block in part.blocks:
        rep = pick(block)
        if rep not in block:
            raise BadRepresentative(block, rep)
        reps[block] = rep

    below = _descendants(net)
    all_cut = net._trivial_cut + net._nontrivial_cut
    highest = [(u, v) for (u, v) in all_cut
               if not any(u in below[v2] for (u2, v2) in all_cut if (u2, v2) != (u, v))]

    removed: set[int] = set()
    new_labels: dict[int, str] = {}
    pendants: dict[str, Network | None] = {}
    for (u, v) in highest:
        block = net.clusters_below[v]
        rep = reps[block]
        if len(block) == 1:
            pendants[rep] = None
            new_labels[v] = rep
            continue
        sub_vertices = below[v]
        removed |= sub_vertices - {v}
        sub_arcs = [(a, b) for (a, b) in net.arcs if a in sub_vertices and b in sub_vertices]
        sub_labels = {w: net.leaf_labels[w] for w in sub_vertices if w in net.leaf_labels}
        pendants[rep] = validate(sub_arcs, sub_labels)
        new_labels[v] = rep

    collapsed_arcs = [(a, b) for (a, b) in net.arcs
                      if a not in removed and b not in removed]
    collapsed = validate(collapsed_arcs, new_labels)
    return CollapseResult(collapsed=collapsed, representative_of=reps, pendant=pendants)


def projected_triplets(system: TripletSystem, partition: Partition,
                       representative_of: dict[frozenset[str], str]) -> TripletSystem:
    """Project a triplet system onto block representatives: a projected
    triplet exists whenever some system triplet touches three distinct
    blocks."""
    block_of = {x: b for b in partition.blocks for x in b}
    reps = frozenset(representative_of.values())
    acc: set[Triplet] = set()
    for t in system.triplets:
        p, q = t.pair
        bp, bq, bo = block_of[p], block_of[q], block_of[t.outlier]
        if bp is not bq and bp is not bo and bq is not bo:
            acc.add(Triplet.of(representative_of[bp], representative_of[bq],
                               representative_of[bo]))
    return TripletSystem(frozenset(acc), reps)
