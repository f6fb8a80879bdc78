"""Independent brute-force oracles used only by the tests.

Everything here deliberately avoids the package's own algorithms: graph
structure goes through networkx, isomorphism through backtracking search,
triplet consistency through explicit path enumeration, and enumeration
completeness through a raw degree-sequence graph search.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations, product

import networkx as nx

from level1kit.network import Network, validate
from level1kit.systems import Triplet


def undirected(net: Network) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(net.vertices)
    g.add_edges_from(net.arcs)
    return g


def nx_gall_vertex_sets(net: Network) -> set[frozenset[int]]:
    return {frozenset(c) for c in nx.biconnected_components(undirected(net)) if len(c) > 2}


def nx_bridge_arcs(net: Network) -> set[tuple[int, int]]:
    bridges = {frozenset(e) for e in nx.bridges(undirected(net))}
    return {(t, h) for (t, h) in net.arcs if frozenset((t, h)) in bridges}


def isomorphic_fixing_leaves(a: Network, b: Network) -> bool:
    """Exhaustive search for a graph isomorphism that is the identity on taxa."""
    if a.taxa != b.taxa or a.num_vertices != b.num_vertices or a.num_arcs != b.num_arcs:
        return False

    def prof(net, v):
        return (len(net.parents[v]), len(net.children[v]))

    if Counter(prof(a, v) for v in a.vertices) != Counter(prof(b, v) for v in b.vertices):
        return False
    mapping = {a.leaf_of[t]: b.leaf_of[t] for t in a.taxa}
    internals_a = [v for v in a.vertices if v not in a.leaf_labels]
    internals_b = [v for v in b.vertices if v not in b.leaf_labels]
    arcs_b = set(b.arcs)

    def extend(i: int, used: set[int]) -> bool:
        if i == len(internals_a):
            return all((mapping[t], mapping[h]) in arcs_b for (t, h) in a.arcs)
        v = internals_a[i]
        for w in internals_b:
            if w in used or prof(a, v) != prof(b, w):
                continue
            ok = all((mapping[p], w) in arcs_b for p in a.parents[v] if p in mapping) and \
                all((w, mapping[c]) in arcs_b for c in a.children[v] if c in mapping)
            if not ok:
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1, used):
                return True
            del mapping[v]
            used.remove(w)
        return False

    return extend(0, set(mapping.values()))


def consistent_by_paths(net: Network, t: Triplet) -> bool:
    """Triplet consistency via explicit internally-disjoint path search:
    distinct v, w with paths v->outlier, v->w, w->pair[0], w->pair[1] where
    two paths may share a vertex only if it is an endpoint of both."""
    g = nx.DiGraph()
    g.add_nodes_from(net.vertices)
    g.add_edges_from(net.arcs)
    la, lb = (net.leaf_of[x] for x in t.pair)
    lc = net.leaf_of[t.outlier]

    def paths(u, x):
        if u == x:
            return [[u]]
        return [list(p) for p in nx.all_simple_paths(g, u, x)]

    def jointly_disjoint(chosen) -> bool:
        for p, q in combinations(chosen, 2):
            for s in set(p) & set(q):
                if s not in (p[0], p[-1]) or s not in (q[0], q[-1]):
                    return False
        return True

    for v in net.vertices:
        pvc = paths(v, lc)
        if not pvc:
            continue
        for w in net.vertices:
            if w == v:
                continue
            pvw = paths(v, w)
            if not pvw:
                continue
            pwa = paths(w, la)
            pwb = paths(w, lb)
            if not pwa or not pwb:
                continue
            for combo in product(pvc, pvw, pwa, pwb):
                if jointly_disjoint(combo):
                    return True
    return False


def tree_triplets(net: Network) -> set[Triplet]:
    """Triplets of a tree read off from last common ancestors."""
    below = net.clusters_below
    out: set[Triplet] = set()
    for v in net.vertices:
        if v in net.leaf_labels:
            continue
        c1, c2 = net.children[v]
        rest = net.taxa - below[v]
        for a in below[c1]:
            for b in below[c2]:
                for c in rest:
                    out.add(Triplet.of(a, b, c))
    return out


def brute_force_level1_forms(taxa: tuple[str, ...]) -> set[bytes]:
    """Canonical forms of every valid network on the taxa, found by raw
    search over degree sequences and parent assignments."""
    n = len(taxa)
    labels_sorted = sorted(taxa)
    forms: set[bytes] = set()
    for g in range((n - 1) // 2 + 1):
        nv = 2 * n - 1 + 2 * g
        for hybrid_ids in combinations(range(1, nv), g):
            hybrids = set(hybrid_ids)
            rest = [i for i in range(1, nv) if i not in hybrids]
            for leaf_ids in combinations(rest, n):
                leaves = set(leaf_ids)
                need = [0] * nv
                cap = [0] * nv
                cap[0] = 2
                for i in range(1, nv):
                    if i in hybrids:
                        need[i], cap[i] = 2, 1
                    elif i in leaves:
                        need[i], cap[i] = 1, 0
                    else:
                        need[i], cap[i] = 1, 2
                demand_after = [0] * (nv + 1)
                for i in range(nv - 1, 0, -1):
                    demand_after[i] = demand_after[i + 1] + need[i]
                labels = dict(zip(sorted(leaves), labels_sorted))
                _assign(1, nv, need, cap[:], demand_after, [], labels, forms)
    return forms


def _assign(v, nv, need, cap, demand_after, arcs, labels, forms):
    if v == nv:
        try:
            net = validate(arcs, labels)
        except Exception:
            return
        forms.add(net.canonical_form)
        return
    options = [p for p in range(v) if cap[p] > 0]
    for parents in combinations(options, need[v]):
        for p in parents:
            cap[p] -= 1
        unused = sum(cap[p] for p in range(v + 1))
        if unused <= demand_after[v + 1]:
            _assign(v + 1, nv, need, cap, demand_after,
                    arcs + [(p, v) for p in parents], labels, forms)
        for p in parents:
            cap[p] += 1
