"""Rooted binary level-1 networks: validation, structure, canonical forms.

A :class:`Network` is immutable once built by :func:`validate`; every
operation in the package is a pure function over such values.  Vertex ids
are opaque dense integers assigned at validation, so all observable
behaviour depends only on the labelled structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Mapping

from .errors import (
    DegreeViolation,
    DuplicateLabel,
    LabelingError,
    LabelSetMismatch,
    LevelExceeded,
    MalformedGraph,
    MultipleRoots,
    NotAcyclic,
    NotProper,
    ShortCycle,
)

__all__ = [
    "Network",
    "Gall",
    "Classification",
    "BoundsReport",
    "validate",
    "galls",
    "cut_arcs",
    "classify",
    "vertex_arc_bounds",
    "canonical_form",
    "equivalent",
]


# ---------------------------------------------------------------------------
# canonical encoding primitives (shared with the enumeration recipes)

def _enc_leaf(label: str) -> bytes:
    raw = label.encode("utf-8")
    return b"L%d:%s" % (len(raw), raw)


def _enc_split(a: bytes, b: bytes) -> bytes:
    lo, hi = (a, b) if a <= b else (b, a)
    return b"T(" + lo + b"," + hi + b")"


def _enc_gall(side_a: tuple[bytes, ...], side_b: tuple[bytes, ...], hybrid: bytes) -> bytes:
    # Orientation: the lexicographically smaller side sequence comes first,
    # comparing element-wise with shorter-prefix-first tie break.
    lo, hi = (side_a, side_b) if side_a <= side_b else (side_b, side_a)
    return b"G(" + b",".join(lo) + b";" + b",".join(hi) + b"|" + hybrid + b")"


@dataclass(frozen=True)
class Gall:
    """A non-trivial biconnected component with its arc directions restored.

    ``cycle_vertices`` starts at the unique source vertex of the component
    (the gall root), runs down one side to the hybrid vertex and back up the
    other side.  ``outgoing_arcs`` are the arcs leaving the cycle.
    """

    cycle_vertices: tuple[int, ...]
    hybrid: int
    outgoing_arcs: tuple[tuple[int, int], ...]

    @property
    def root(self) -> int:
        return self.cycle_vertices[0]

    def sides(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """The two interior vertex sequences, each ordered root -> hybrid."""
        cv = self.cycle_vertices
        i = cv.index(self.hybrid)
        return cv[1:i], tuple(reversed(cv[i + 1:]))


@dataclass(frozen=True)
class Classification:
    is_tree: bool
    is_proper: bool
    is_simple: bool
    is_saturated: bool
    is_four_outwards: bool
    n: int
    num_vertices: int
    num_arcs: int
    g: int
    c: int


@dataclass(frozen=True)
class BoundsReport:
    n: int
    num_vertices: int
    num_arcs: int
    g: int
    lower_ok: bool
    upper_ok: bool
    vertex_identity_ok: bool
    arc_identity_ok: bool

    @property
    def ok(self) -> bool:
        return self.lower_ok and self.upper_ok and self.vertex_identity_ok and self.arc_identity_ok


class Network:
    """A validated rooted binary level-1 network on at least two taxa."""

    def __init__(self, *, _token=None, arcs, children, parents, leaf_labels, root,
                 galls, trivial_cut_arcs, nontrivial_cut_arcs):
        if _token is not _CONSTRUCT:
            raise TypeError("use validate() to build a Network")
        self.arcs: tuple[tuple[int, int], ...] = arcs
        self.children: dict[int, tuple[int, ...]] = children
        self.parents: dict[int, tuple[int, ...]] = parents
        self.leaf_labels: dict[int, str] = leaf_labels
        self.root: int = root
        self._galls: tuple[Gall, ...] = galls
        self._trivial_cut: tuple[tuple[int, int], ...] = trivial_cut_arcs
        self._nontrivial_cut: tuple[tuple[int, int], ...] = nontrivial_cut_arcs
        self._gall_by_root = {g.root: g for g in galls}
        self._cycle_arcs = frozenset(
            a for g in galls for a in _cycle_arc_set(g, children)
        )

    # -- basic structure ----------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.children)

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)

    @property
    def vertices(self) -> range:
        return range(self.num_vertices)

    @cached_property
    def taxa(self) -> frozenset[str]:
        return frozenset(self.leaf_labels.values())

    @property
    def n(self) -> int:
        return len(self.leaf_labels)

    @cached_property
    def leaves(self) -> tuple[int, ...]:
        return tuple(sorted(self.leaf_labels))

    @cached_property
    def leaf_of(self) -> dict[str, int]:
        return {name: v for v, name in self.leaf_labels.items()}

    @cached_property
    def hybrids(self) -> tuple[int, ...]:
        return tuple(v for v in self.vertices if len(self.parents[v]) == 2)

    def is_leaf(self, v: int) -> bool:
        return v in self.leaf_labels

    @cached_property
    def clusters_below(self) -> dict[int, frozenset[str]]:
        """Taxa below each vertex (a leaf maps to its own singleton)."""
        order = self._topological_order()
        out: dict[int, frozenset[str]] = {}
        for v in reversed(order):
            if v in self.leaf_labels:
                out[v] = frozenset((self.leaf_labels[v],))
            else:
                acc: set[str] = set()
                for w in self.children[v]:
                    acc |= out[w]
                out[v] = frozenset(acc)
        return out

    def _topological_order(self) -> list[int]:
        indeg = {v: len(self.parents[v]) for v in self.vertices}
        order = [self.root]
        for v in order:
            for w in self.children[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    order.append(w)
        return order

    # -- equality is leaf-label-fixing isomorphism --------------------------

    @cached_property
    def canonical_form(self) -> bytes:
        memo: dict[int, bytes] = {}
        return self._encode_pendant(self.root, memo)

    def _encode_pendant(self, v: int, memo: dict[int, bytes]) -> bytes:
        got = memo.get(v)
        if got is not None:
            return got
        if v in self.leaf_labels:
            enc = _enc_leaf(self.leaf_labels[v])
        else:
            gall = self._gall_by_root.get(v)
            if gall is not None:
                side_a, side_b = gall.sides()
                fa = tuple(self._encode_pendant(self._pendant_head(u), memo) for u in side_a)
                fb = tuple(self._encode_pendant(self._pendant_head(u), memo) for u in side_b)
                hyb = self._encode_pendant(self.children[gall.hybrid][0], memo)
                enc = _enc_gall(fa, fb, hyb)
            else:
                c1, c2 = self.children[v]
                enc = _enc_split(self._encode_pendant(c1, memo), self._encode_pendant(c2, memo))
        memo[v] = enc
        return enc

    def _pendant_head(self, u: int) -> int:
        for w in self.children[u]:
            if (u, w) not in self._cycle_arcs:
                return w
        raise AssertionError(f"cycle vertex {u} has no pendant arc")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Network):
            return NotImplemented
        return self.canonical_form == other.canonical_form

    def __hash__(self) -> int:
        return hash(self.canonical_form)

    def __repr__(self) -> str:
        return (f"<Network n={self.n} V={self.num_vertices} A={self.num_arcs} "
                f"g={len(self._galls)}>")


_CONSTRUCT = object()


def _cycle_arc_set(gall: Gall, children: Mapping[int, tuple[int, ...]]) -> set[tuple[int, int]]:
    cv = set(gall.cycle_vertices)
    return {(u, w) for u in cv for w in children[u] if w in cv}


# ---------------------------------------------------------------------------
# validation


def validate(arcs: Iterable[tuple[Hashable, Hashable]],
             leaf_labels: Mapping[Hashable, str],
             vertices: Iterable[Hashable] = ()) -> Network:
    """Build a :class:`Network` from raw collections, or raise the first
    violated structural requirement.

    Args:
        arcs: directed (tail, head) pairs over arbitrary hashable ids.
        leaf_labels: mapping from the out-degree-0 vertices to taxon names.
        vertices: optional extra vertex collection; endpoints of ``arcs``
            and keys of ``leaf_labels`` are always included.

    Raises:
        MalformedGraph, NotAcyclic, MultipleRoots, DegreeViolation,
        DuplicateLabel, LabelingError, LevelExceeded, ShortCycle.
    """
    raw_arcs = list(arcs)
    verts: list[Hashable] = []
    seen: set[Hashable] = set()

    def note(v):
        if v not in seen:
            seen.add(v)
            verts.append(v)

    for t, h in raw_arcs:
        note(t)
        note(h)
    for v in vertices:
        note(v)
    for v in leaf_labels:
        note(v)
    if not verts:
        raise MalformedGraph("graph has no vertices")

    idx = {v: i for i, v in enumerate(verts)}
    nv = len(verts)
    children: list[list[int]] = [[] for _ in range(nv)]
    parents: list[list[int]] = [[] for _ in range(nv)]
    arc_seen: set[tuple[int, int]] = set()
    for t, h in raw_arcs:
        ti, hi = idx[t], idx[h]
        if ti == hi:
            raise NotAcyclic(f"self-loop at {t!r}")
        if (ti, hi) in arc_seen:
            raise ShortCycle((t, h))
        if (hi, ti) in arc_seen:
            raise NotAcyclic(f"antiparallel arcs between {t!r} and {h!r}")
        arc_seen.add((ti, hi))
        children[ti].append(hi)
        parents[hi].append(ti)

    sources = [i for i in range(nv) if not parents[i]]
    if not sources:
        raise NotAcyclic("every vertex has an incoming arc")
    if len(sources) > 1:
        raise MultipleRoots([verts[i] for i in sources])
    root = sources[0]

    # Kahn's algorithm; leftovers witness a directed cycle.
    indeg = [len(parents[i]) for i in range(nv)]
    order = [root]
    for v in order:
        for w in children[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                order.append(w)
    if len(order) != nv:
        raise NotAcyclic("directed cycle among " +
                         repr([verts[i] for i in range(nv) if i not in set(order)]))

    for i in range(nv):
        din, dout = len(parents[i]), len(children[i])
        if i == root:
            if dout != 2:
                raise DegreeViolation(verts[i], din, dout)
        elif (din, dout) not in ((1, 0), (1, 2), (2, 1)):
            raise DegreeViolation(verts[i], din, dout)

    leaf_ids = [i for i in range(nv) if not children[i]]
    raw_labels = {idx[v]: name for v, name in leaf_labels.items()}
    missing = [verts[i] for i in leaf_ids if i not in raw_labels]
    if missing:
        raise LabelingError(f"unlabelled leaves: {missing!r}")
    extra = [verts[i] for i in raw_labels if children[i]]
    if extra:
        raise LabelingError(f"labels on non-leaf vertices: {extra!r}")
    names_seen: set[str] = set()
    for i in leaf_ids:
        name = raw_labels[i]
        if name in names_seen:
            raise DuplicateLabel(name)
        names_seen.add(name)

    undirected = [sorted(set(children[i]) | set(parents[i])) for i in range(nv)]
    comps = _biconnected_edge_components(undirected, nv)

    gall_list: list[Gall] = []
    bridge_edges: set[frozenset[int]] = set()
    for comp in comps:
        if len(comp) == 1:
            bridge_edges.add(frozenset(comp[0]))
            continue
        comp_vertices = {v for e in comp for v in e}
        comp_hybrids = [v for v in comp_vertices if len(parents[v]) == 2]
        if len(comp_hybrids) != 1:
            raise LevelExceeded([verts[v] for v in sorted(comp_vertices)])
        if len(comp_vertices) < 4:
            raise ShortCycle([verts[v] for v in sorted(comp_vertices)])
        assert len(comp) == len(comp_vertices), "level-1 component must be a cycle"
        gall_list.append(_make_gall(comp_vertices, comp_hybrids[0], children, parents))

    # Renumber densely in topological order for determinism.
    renum = {old: new for new, old in enumerate(order)}
    new_children = {renum[v]: tuple(sorted(renum[w] for w in children[v])) for v in range(nv)}
    new_parents = {renum[v]: tuple(sorted(renum[w] for w in parents[v])) for v in range(nv)}
    new_labels = {renum[v]: raw_labels[v] for v in leaf_ids}
    new_arcs = tuple(sorted((renum[t], renum[h]) for (t, h) in arc_seen))
    new_galls = tuple(
        Gall(
            cycle_vertices=tuple(renum[v] for v in g.cycle_vertices),
            hybrid=renum[g.hybrid],
            outgoing_arcs=tuple(sorted((renum[t], renum[h]) for t, h in g.outgoing_arcs)),
        )
        for g in gall_list
    )
    trivial, nontrivial = [], []
    for e in bridge_edges:
        u, w = tuple(e)
        t, h = (u, w) if w in children[u] else (w, u)
        (trivial if not children[h] else nontrivial).append((renum[t], renum[h]))

    return Network(
        _token=_CONSTRUCT,
        arcs=new_arcs,
        children=new_children,
        parents=new_parents,
        leaf_labels=new_labels,
        root=renum[root],
        galls=new_galls,
        trivial_cut_arcs=tuple(sorted(trivial)),
        nontrivial_cut_arcs=tuple(sorted(nontrivial)),
    )


def _make_gall(comp_vertices: set[int], hybrid: int,
               children: list[list[int]], parents: list[list[int]]) -> Gall:
    sources = [v for v in comp_vertices
               if sum(1 for w in children[v] if w in comp_vertices) == 2]
    assert len(sources) == 1, "gall must have a unique source vertex"
    groot = sources[0]
    first, second = sorted(w for w in children[groot] if w in comp_vertices)

    def walk(start: int) -> list[int]:
        path = []
        v = start
        while v != hybrid:
            path.append(v)
            nxt = [w for w in children[v] if w in comp_vertices]
            assert len(nxt) == 1
            v = nxt[0]
        return path

    side_a = walk(first)
    side_b = walk(second)
    cycle = (groot, *side_a, hybrid, *reversed(side_b))
    outgoing = tuple(
        (u, w) for u in cycle for w in children[u] if w not in comp_vertices
    )
    assert len(outgoing) == len(cycle) - 1
    return Gall(cycle_vertices=cycle, hybrid=hybrid, outgoing_arcs=outgoing)


def _biconnected_edge_components(adj: list[list[int]], nv: int) -> list[list[tuple[int, int]]]:
    """Edge lists of the biconnected components of a simple undirected graph."""
    disc = [0] * nv
    low = [0] * nv
    comps: list[list[tuple[int, int]]] = []
    time = 1
    for start in range(nv):
        if disc[start]:
            continue
        disc[start] = low[start] = time
        time += 1
        stack = [(start, -1, iter(adj[start]))]
        estack: list[tuple[int, int]] = []
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w]:
                    if disc[w] < disc[v]:
                        estack.append((v, w))
                        if disc[w] < low[v]:
                            low[v] = disc[w]
                else:
                    estack.append((v, w))
                    disc[w] = low[w] = time
                    time += 1
                    stack.append((w, v, iter(adj[w])))
                    advanced = True
                    break
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    comp = []
                    while estack:
                        e = estack.pop()
                        comp.append(e)
                        if e == (u, v):
                            break
                    comps.append(comp)
    return comps


# ---------------------------------------------------------------------------
# structural operations


def galls(net: Network) -> list[Gall]:
    """The galls of the network, one per non-trivial biconnected component."""
    return list(net._galls)


def cut_arcs(net: Network) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """The bridge arcs of the underlying graph, split into (trivial, non-trivial)."""
    return list(net._trivial_cut), list(net._nontrivial_cut)


def classify(net: Network) -> Classification:
    g = len(net._galls)
    c = len(net._nontrivial_cut)
    cycle_vertices = {v for gl in net._galls for v in gl.cycle_vertices}
    is_simple = g == 1 and all(
        any(p in cycle_vertices for p in net.parents[leaf]) for leaf in net.leaves
    )
    incidence: dict[int, int] = {}
    for t, h in net._trivial_cut + net._nontrivial_cut:
        incidence[t] = incidence.get(t, 0) + 1
        incidence[h] = incidence.get(h, 0) + 1
    is_saturated = all(k <= 1 for k in incidence.values())
    is_four_outwards = all(len(gl.cycle_vertices) >= 5 for gl in net._galls)
    return Classification(
        is_tree=g == 0,
        is_proper=g >= 1,
        is_simple=is_simple,
        is_saturated=is_saturated,
        is_four_outwards=is_four_outwards,
        n=net.n,
        num_vertices=net.num_vertices,
        num_arcs=net.num_arcs,
        g=g,
        c=c,
    )


def vertex_arc_bounds(net: Network) -> BoundsReport:
    """Check the vertex/arc count bounds and exact identities for proper networks."""
    g = len(net._galls)
    if g == 0:
        raise NotProper("network is a tree")
    n, nv, na = net.n, net.num_vertices, net.num_arcs
    lower_ok = (2 * n + 1 <= nv) and (2 * n + 1 <= na)
    upper_ok = (nv <= 3 * n - 2) and (2 * na <= 7 * (n - 1))
    return BoundsReport(
        n=n,
        num_vertices=nv,
        num_arcs=na,
        g=g,
        lower_ok=lower_ok,
        upper_ok=upper_ok,
        vertex_identity_ok=nv == 2 * n - 1 + 2 * g,
        arc_identity_ok=na == 2 * n + 3 * g - 2,
    )


def canonical_form(net: Network) -> bytes:
    """A byte string equal across two networks iff they are equivalent."""
    return net.canonical_form


def equivalent(a: Network, b: Network) -> bool:
    """Leaf-label-fixing isomorphism, decided via canonical forms."""
    if a.taxa != b.taxa:
        raise LabelSetMismatch(f"{sorted(a.taxa)} vs {sorted(b.taxa)}")
    return a.canonical_form == b.canonical_form
