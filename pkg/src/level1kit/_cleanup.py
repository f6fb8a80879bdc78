"""Graph surgery shared by restriction and displayed-tree computation.

A :class:`WorkGraph` is a small mutable DAG on integer vertices with a set
of protected labelled leaves.  :meth:`run` applies the five cleaning
operations until none applies:

  (i)   suppress vertices with in-degree and out-degree one,
  (ii)  delete unlabelled vertices with out-degree zero,
  (iii) collapse multi-arcs into a single arc,
  (iv)  dissolve a gall left with exactly two outgoing cut arcs,
  (v)   delete vertices with in-degree zero and out-degree one.

The result is order-independent; :meth:`run_random` applies the rules in a
randomised order and exists so tests can check that confluence claim.
"""

from __future__ import annotations

import random
from collections import deque
from typing import TYPE_CHECKING

from .network import Network, validate

if TYPE_CHECKING:  # pragma: no cover
    pass


class WorkGraph:
    __slots__ = ("children", "parents", "labels")

    def __init__(self, children: dict[int, list[int]], parents: dict[int, list[int]],
                 labels: dict[int, str]):
        self.children = children
        self.parents = parents
        self.labels = labels

    @classmethod
    def from_network(cls, net: Network, drop: frozenset[str] = frozenset()) -> "WorkGraph":
        drop_ids = {net.leaf_of[t] for t in drop}
        children = {v: [w for w in net.children[v] if w not in drop_ids]
                    for v in net.vertices if v not in drop_ids}
        parents = {v: list(net.parents[v]) for v in net.vertices if v not in drop_ids}
        labels = {v: lab for v, lab in net.leaf_labels.items() if v not in drop_ids}
        return cls(children, parents, labels)

    # -- primitive edits ----------------------------------------------------

    def remove_arc(self, u: int, w: int) -> None:
        self.children[u].remove(w)
        self.parents[w].remove(u)

    def add_arc(self, u: int, w: int) -> None:
        self.children[u].append(w)
        self.parents[w].append(u)

    def drop(self, v: int) -> None:
        for p in list(self.parents[v]):
            self.children[p].remove(v)
        for c in list(self.children[v]):
            self.parents[c].remove(v)
        del self.children[v]
        del self.parents[v]
        self.labels.pop(v, None)

    # -- the cleaning rules -------------------------------------------------

    def _apply_at(self, v: int, queue: deque[int]) -> bool:
        ch = self.children.get(v)
        if ch is None:
            return False
        if len(set(ch)) != len(ch):
            keep: list[int] = []
            for w in ch:
                if w in keep:
                    self.parents[w].remove(v)
                    queue.append(w)
                else:
                    keep.append(w)
            self.children[v] = keep
            queue.append(v)
            return True
        pa = self.parents[v]
        if not ch and v not in self.labels:
            affected = list(pa)
            self.drop(v)
            queue.extend(affected)
            return True
        if len(pa) == 1 and len(ch) == 1:
            p, c = pa[0], ch[0]
            self.drop(v)
            self.add_arc(p, c)
            queue.append(p)
            queue.append(c)
            return True
        if not pa and len(ch) == 1:
            c = ch[0]
            self.drop(v)
            queue.append(c)
            return True
        return False

    def _find_two_out_gall(self):
        # A gall with exactly two outgoing cut arcs is, once the other rules
        # are exhausted, a triangle r -> u -> w, r -> w whose pendant arcs
        # hang off u and w; r is the unique vertex with children u and w.
        for r in sorted(self.children):
            ch = self.children[r]
            if len(ch) != 2 or ch[0] == ch[1]:
                continue
            for u, w in ((ch[0], ch[1]), (ch[1], ch[0])):
                if w not in self.children.get(u, ()):
                    continue
                if self.parents[u] != [r]:
                    continue
                if sorted(self.parents[w]) != sorted([r, u]):
                    continue
                if len(self.children[u]) != 2 or len(self.children[w]) != 1:
                    continue
                return r, u, w
        return None

    def _dissolve(self, r: int, u: int, w: int) -> tuple[int, int]:
        p = next(x for x in self.children[u] if x != w)
        q = self.children[w][0]
        self.drop(u)
        self.drop(w)
        self.add_arc(r, p)
        self.add_arc(r, q)
        return p, q

    def run(self) -> "WorkGraph":
        queue = deque(sorted(self.children))
        while True:
            while queue:
                self._apply_at(queue.popleft(), queue)
            found = self._find_two_out_gall()
            if found is None:
                return self
            r, u, w = found
            p, q = self._dissolve(r, u, w)
            queue.extend((r, p, q))

    def run_random(self, rng: random.Random) -> "WorkGraph":
        while True:
            sites = self._applicable_sites()
            if not sites:
                return self
            kind, args = sites[rng.randrange(len(sites))]
            if kind == "local":
                self._apply_at(args, deque())
            else:
                self._dissolve(*args)

    def _applicable_sites(self):
        sites = []
        for v in sorted(self.children):
            ch = self.children[v]
            pa = self.parents[v]
            if (len(set(ch)) != len(ch)
                    or (not ch and v not in self.labels)
                    or (len(pa) == 1 and len(ch) == 1)
                    or (not pa and len(ch) == 1)):
                sites.append(("local", v))
        found = self._find_two_out_gall()
        if found is not None:
            sites.append(("gall", found))
        return sites

    # -- readouts -----------------------------------------------------------

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, w) for u in self.children for w in self.children[u]]

    def to_network(self) -> Network:
        return validate(self.arcs(), dict(self.labels))

    def topological_order(self) -> list[int]:
        indeg = {v: len(self.parents[v]) for v in self.children}
        order = [v for v in sorted(self.children) if indeg[v] == 0]
        for v in order:
            for w in self.children[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    order.append(w)
        return order

    def cluster_sets(self) -> set[frozenset[str]]:
        """Taxa below each vertex of the current graph."""
        below: dict[int, frozenset[str]] = {}
        for v in reversed(self.topological_order()):
            if v in self.labels:
                below[v] = frozenset((self.labels[v],))
            else:
                acc: set[str] = set()
                for w in self.children[v]:
                    acc |= below[w]
                below[v] = frozenset(acc)
        return set(below.values())

    def hybrid_vertices(self) -> list[int]:
        return [v for v in self.children if len(self.parents[v]) == 2]
