"""Defining systems for simple networks and brute-force uniqueness checks.

A :class:`Universe` indexes every network on a taxon set (at most six taxa)
by its induced triplet and softwired cluster systems, stored as bit masks,
so that "is this system contained in that network's system" becomes a
vectorized subset test over the whole universe.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Literal

import numpy as np

from ._cleanup import WorkGraph
from .enewick import parse_enewick, write_enewick
from .enumeration import EnumSpec, enumerate_level1
from .errors import LabelSetMismatch, NotSimple, TooFewLeaves, UniverseTooLarge
from .network import Network, classify, galls
from .snops import restrict
from .systems import (
    ClusterSystem,
    Triplet,
    TripletSystem,
    _switched_graphs,
    _trio_triplets,
    triplets,
)

__all__ = [
    "DefinitionReport",
    "Universe",
    "get_universe",
    "defining_triplets_simple",
    "defining_clusters_simple",
    "check_defines",
    "check_encoded",
]

MAX_UNIVERSE_TAXA = 6

SystemKind = Literal["triplets", "clusters"]


@dataclass(frozen=True)
class DefinitionReport:
    target: Network
    system_kind: SystemKind
    system: TripletSystem | ClusterSystem
    consistent_networks: tuple[Network, ...]
    survivor_count: int
    defines: bool


class Universe:
    """All networks on a fixed taxon set, indexed by induced systems."""

    def __init__(self, taxa: tuple[str, ...]):
        if len(taxa) > MAX_UNIVERSE_TAXA:
            raise UniverseTooLarge(f"universe capped at {MAX_UNIVERSE_TAXA} taxa")
        self.taxa = tuple(sorted(taxa))
        self.n = len(self.taxa)
        self._taxon_pos = {t: i for i, t in enumerate(self.taxa)}
        self._trio_rank = {trio: r for r, trio in
                           enumerate(combinations(range(self.n), 3))}

        forms: list[bytes] = []
        enwk: list[str] = []
        tri: list[int] = []
        clu: list[int] = []
        stats: list[tuple[int, ...]] = []
        nets: list[Network] = []
        keep_nets = self.n <= 5
        for net in enumerate_level1(EnumSpec(self.taxa)):
            forms.append(net.canonical_form)
            enwk.append(write_enewick(net))
            tri.append(self._triplet_mask_of(net) if self.n >= 3 else 0)
            clu.append(self._cluster_mask_of(net))
            cls = classify(net)
            gs = galls(net)
            three_out = cls.g > 0 and all(len(g.outgoing_arcs) == 3 for g in gs)
            stats.append((cls.g, cls.c, cls.num_vertices, cls.num_arcs,
                          cls.is_tree, cls.is_simple, cls.is_saturated,
                          cls.is_four_outwards, three_out))
            if keep_nets:
                nets.append(net)

        self.forms = forms
        self.index = {f: i for i, f in enumerate(forms)}
        self.enwk = enwk
        self.tri = np.array(tri, dtype=np.uint64)
        self.clu = np.array(clu, dtype=np.uint64)
        arr = np.array(stats, dtype=np.int64)
        self.g = arr[:, 0]
        self.c = arr[:, 1]
        self.num_vertices = arr[:, 2]
        self.num_arcs = arr[:, 3]
        self.is_tree = arr[:, 4].astype(bool)
        self.is_simple = arr[:, 5].astype(bool)
        self.is_saturated = arr[:, 6].astype(bool)
        self.is_four_outwards = arr[:, 7].astype(bool)
        self.all_galls_three_out = arr[:, 8].astype(bool)
        self.s_minus = np.array([bin(m).count("1") - 1 for m in clu], dtype=np.int64)
        self._nets = nets if keep_nets else None

    def __len__(self) -> int:
        return len(self.forms)

    # -- bit indexing --------------------------------------------------------

    def triplet_bit(self, t: Triplet) -> int:
        pos = sorted(self._taxon_pos[x] for x in t.taxa)
        out = self._taxon_pos[t.outlier]
        return 3 * self._trio_rank[tuple(pos)] + pos.index(out)

    def triplet_mask(self, system: TripletSystem) -> int:
        mask = 0
        for t in system.triplets:
            mask |= 1 << self.triplet_bit(t)
        return mask

    def cluster_bit(self, cluster: frozenset[str]) -> int:
        bits = 0
        for x in cluster:
            bits |= 1 << self._taxon_pos[x]
        return bits - 1

    def cluster_mask(self, system: ClusterSystem) -> int:
        mask = 0
        for c in system.clusters:
            mask |= 1 << self.cluster_bit(c)
        return mask

    def _triplet_mask_of(self, net: Network) -> int:
        mask = 0
        for trio in combinations(self.taxa, 3):
            for t in _trio_triplets(net, trio):
                mask |= 1 << self.triplet_bit(t)
        return mask

    def _cluster_mask_of(self, net: Network) -> int:
        mask = 0
        for wg in _switched_graphs(net):
            for cluster in wg.cluster_sets():
                mask |= 1 << self.cluster_bit(cluster)
        return mask

    # -- queries --------------------------------------------------------------

    def masks(self, kind: SystemKind) -> np.ndarray:
        return self.tri if kind == "triplets" else self.clu

    def supersets(self, kind: SystemKind, mask: int) -> np.ndarray:
        arr = self.masks(kind)
        m = np.uint64(mask)
        return (arr & m) == m

    def equal_mask_count(self, kind: SystemKind, mask: int) -> int:
        return int((self.masks(kind) == np.uint64(mask)).sum())

    def row_of(self, net: Network) -> int:
        try:
            return self.index[net.canonical_form]
        except KeyError:
            raise LabelSetMismatch("network is not a member of this universe") from None

    def network_at(self, i: int) -> Network:
        if self._nets is not None:
            return self._nets[i]
        return parse_enewick(self.enwk[i])


@lru_cache(maxsize=None)
def _universe_cached(taxa: tuple[str, ...]) -> Universe:
    return Universe(taxa)


def get_universe(taxa) -> Universe:
    """The (cached) universe over a taxon set of at most six taxa."""
    return _universe_cached(tuple(sorted(taxa)))


# ---------------------------------------------------------------------------
# defining systems for simple networks


def _simple_layout(net: Network) -> tuple[list[str | None], int]:
    """Label the leaves of a simple network around its cycle.

    Returns a 1-based list ``xs`` with ``xs[1]`` the hybrid leaf, then the
    remaining leaves consecutively around the cycle, plus the length of the
    shorter (second) side.  The longer side is always labelled first, so the
    layout is mirror-normalized.
    """
    cls = classify(net)
    if not cls.is_simple:
        raise NotSimple("operation requires a simple network")
    if net.n < 4:
        raise TooFewLeaves("need a simple network on at least 4 leaves")
    gall = net._galls[0]
    side_a_v, side_b_v = gall.sides()

    def leaf_seq(side):
        return [net.leaf_labels[net._pendant_head(u)] for u in side]

    a, b = leaf_seq(side_a_v), leaf_seq(side_b_v)
    if len(a) < len(b) or (len(a) == len(b) and a > b):
        a, b = b, a
    hyb = net.leaf_labels[net.children[gall.hybrid][0]]
    xs: list[str | None] = [None, hyb, *reversed(a), *b]
    return xs, len(b)


def defining_triplets_simple(net: Network) -> TripletSystem:
    """A triplet system of size at most 2n-1 that pins the simple network
    down inside the space of all level-1 networks on its taxa.

    Built inductively: the four-leaf base keeps the full induced system;
    each further leaf adds two triplets chosen by the position of the root
    on the cycle.
    """
    xs, blen = _simple_layout(net)
    n = net.n
    if n == 4:
        return triplets(net)
    x1, xn, xn1 = xs[1], xs[n], xs[n - 1]
    base = defining_triplets_simple(restrict(net, net.taxa - {xn}))
    if blen == 0:
        extra = {Triplet.of(xn1, xn, x1), Triplet.of(x1, xn1, xn)}
    elif blen == 1:
        extra = {Triplet.of(xn, x1, xn1), Triplet.of(x1, xn1, xn)}
    else:
        extra = {Triplet.of(xn1, xn, x1), Triplet.of(xn, x1, xn1)}
    return TripletSystem(base.triplets | extra, net.taxa)


def defining_clusters_simple(net: Network) -> ClusterSystem:
    """A cluster system of size at most n that pins the simple network down,
    chosen by the position of the root on the cycle."""
    xs, blen = _simple_layout(net)
    n = net.n
    i = n + 1 - blen
    sets: list[frozenset[str]] = []
    if blen == 0:
        sets += [frozenset(xs[1:j + 1]) for j in range(2, n)]
        sets.append(frozenset(xs[2:n + 1]))
    elif blen == 1:
        sets += [frozenset(xs[2:j + 1]) for j in range(3, n)]
        sets += [frozenset((xs[1], xs[2])), frozenset((xs[1], xs[n])),
                 frozenset((xs[1], xs[2], xs[3]))]
    else:
        sets += [frozenset(xs[2:j + 1]) for j in range(3, i)]
        sets += [frozenset(xs[j:n + 1]) for j in range(i, n)]
        sets += [frozenset((xs[1], xs[2])), frozenset((xs[1], xs[n])),
                 frozenset((xs[1], xs[n], xs[n - 1]))]
    return ClusterSystem(frozenset(sets), net.taxa)


# ---------------------------------------------------------------------------
# brute-force uniqueness checks


def check_defines(system: TripletSystem | ClusterSystem, kind: SystemKind,
                  target: Network, *, collect_survivors: bool = True) -> DefinitionReport:
    """Scan the full universe on the target's taxa for networks whose induced
    system contains the given one; the system defines the target when the
    target is the only survivor."""
    taxa = target.taxa
    sys_taxa = system.taxa if kind == "triplets" else system.universe
    if frozenset(sys_taxa) != taxa:
        raise LabelSetMismatch("system and target must share one taxon set")
    uni = get_universe(tuple(taxa))
    mask = uni.triplet_mask(system) if kind == "triplets" else uni.cluster_mask(system)
    hits = uni.supersets(kind, mask)
    count = int(hits.sum())
    row = uni.row_of(target)
    defines = count == 1 and bool(hits[row])
    survivors: tuple[Network, ...] = ()
    if collect_survivors:
        survivors = tuple(uni.network_at(i) for i in np.flatnonzero(hits))
    return DefinitionReport(
        target=target,
        system_kind=kind,
        system=system,
        consistent_networks=survivors,
        survivor_count=count,
        defines=defines,
    )


def check_encoded(target: Network, kind: SystemKind) -> bool:
    """Whether the target is the unique network on its taxa with exactly its
    induced system."""
    uni = get_universe(tuple(target.taxa))
    row = uni.row_of(target)
    mask = int(uni.masks(kind)[row])
    return uni.equal_mask_count(kind, mask) == 1
