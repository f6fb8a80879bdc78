"""Exhaustive and random generation of binary level-1 networks.

Networks are assembled recursively from leaves, splits and galls.  An
assembly recipe is a nested tuple mirroring the pendant decomposition, so
its canonical form can be computed without materializing the graph; the
enumerator deduplicates on those forms while streaming.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import count, permutations, product
from math import comb
from typing import Iterator

from .errors import (
    DuplicateTaxon,
    NotFound,
    ShortCycle,
    TooFewLeaves,
    TooFewTaxa,
    TooManyTaxa,
)
from .network import Network, _enc_gall, _enc_leaf, _enc_split, classify, validate
from .systems import Triplet, triplets

__all__ = [
    "EnumSpec",
    "enumerate_level1",
    "construct_simple",
    "search_prop42_pair",
    "random_level1",
]

FILTERS = ("proper", "simple", "saturated", "four_outwards", "tree")
MAX_EXHAUSTIVE_TAXA = 7


@dataclass(frozen=True)
class EnumSpec:
    taxa: tuple[str, ...]
    filters: frozenset[str] = field(default_factory=frozenset)
    max_count: int | None = None


# ---------------------------------------------------------------------------
# recipes


def _materialize(recipe) -> Network:
    arcs: list[tuple[int, int]] = []
    labels: dict[int, str] = {}
    ids = count()

    def build(r) -> int:
        vid = next(ids)
        kind = r[0]
        if kind == "leaf":
            labels[vid] = r[1]
            return vid
        if kind == "split":
            arcs.append((vid, build(r[1])))
            arcs.append((vid, build(r[2])))
            return vid
        left, right, hyb = r[1], r[2], r[3]
        hv = next(ids)
        for side in (left, right):
            prev = vid
            for block_recipe in side:
                cv = next(ids)
                arcs.append((prev, cv))
                arcs.append((cv, build(block_recipe)))
                prev = cv
            arcs.append((prev, hv))
        arcs.append((hv, build(hyb)))
        return vid

    build(recipe)
    return validate(arcs, labels)


def _subsets_containing(anchor: str, pool: tuple[str, ...]) -> Iterator[frozenset[str]]:
    for bits in range(1 << len(pool)):
        yield frozenset((anchor, *(t for i, t in enumerate(pool) if bits >> i & 1)))


def _nonempty_subsets(items: tuple[str, ...]) -> Iterator[frozenset[str]]:
    for bits in range(1, 1 << len(items)):
        yield frozenset(t for i, t in enumerate(items) if bits >> i & 1)


def _set_partitions(items: tuple[str, ...]) -> Iterator[tuple[frozenset[str], ...]]:
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + (part[i] | {first},) + part[i + 1:]
        yield part + (frozenset((first,)),)


def _assemblies(taxa: frozenset[str]) -> Iterator[tuple[bytes, tuple]]:
    """All (canonical form, recipe) pairs over a taxon set, each structure once."""
    if len(taxa) == 1:
        t, = taxa
        yield _enc_leaf(t), ("leaf", t)
        return
    ordered = tuple(sorted(taxa))
    anchor, pool = ordered[0], ordered[1:]

    for a_side in _subsets_containing(anchor, pool):
        b_side = taxa - a_side
        if not b_side:
            continue
        for fa, ra in _cached_assemblies(a_side):
            for fb, rb in _cached_assemblies(b_side):
                yield _enc_split(fa, fb), ("split", ra, rb)

    if len(taxa) < 3:
        return
    for hyb_block in _nonempty_subsets(ordered):
        rest = taxa - hyb_block
        if len(rest) < 2:
            continue
        rest_ordered = tuple(sorted(rest))
        hyb_options = _cached_assemblies(hyb_block)
        for part in _set_partitions(rest_ordered):
            if len(part) < 2:
                continue
            option_lists = [_cached_assemblies(b) for b in part]
            for order in permutations(range(len(part))):
                for d in range(len(part) + 1):
                    for picks in product(*(option_lists[i] for i in order)):
                        lf = tuple(p[0] for p in picks[:d])
                        rf = tuple(p[0] for p in picks[d:])
                        if lf > rf:
                            continue
                        for fh, rh in hyb_options:
                            recipe = ("gall",
                                      tuple(p[1] for p in picks[:d]),
                                      tuple(p[1] for p in picks[d:]),
                                      rh)
                            yield _enc_gall(lf, rf, fh), recipe


@lru_cache(maxsize=None)
def _cached_assemblies(taxa: frozenset[str]) -> tuple[tuple[bytes, tuple], ...]:
    return tuple(sorted(_assemblies(taxa), key=lambda p: p[0]))


_FILTER_CHECKS = {
    "proper": lambda c: c.is_proper,
    "simple": lambda c: c.is_simple,
    "saturated": lambda c: c.is_saturated,
    "four_outwards": lambda c: c.is_four_outwards,
    "tree": lambda c: c.is_tree,
}


def enumerate_level1(spec: EnumSpec) -> Iterator[Network]:
    """Every binary level-1 network on the given taxa, once up to equivalence.

    Args:
        spec: taxa (2 to 7 names), optional structural filters, optional cap.

    Yields:
        Validated networks, deduplicated by canonical form.
    """
    taxa = tuple(spec.taxa)
    if len(set(taxa)) != len(taxa):
        dup = next(t for t in taxa if taxa.count(t) > 1)
        raise DuplicateTaxon(dup)
    if len(taxa) < 2:
        raise TooFewTaxa("enumeration needs at least two taxa")
    if len(taxa) > MAX_EXHAUSTIVE_TAXA:
        raise TooManyTaxa(f"exhaustive enumeration capped at {MAX_EXHAUSTIVE_TAXA} taxa")
    unknown = set(spec.filters) - set(FILTERS)
    if unknown:
        raise ValueError(f"unknown filters: {sorted(unknown)}")

    checks = [_FILTER_CHECKS[f] for f in sorted(spec.filters)]
    emitted = 0
    seen: set[bytes] = set()
    for form, recipe in _assemblies(frozenset(taxa)):
        if form in seen:
            continue
        seen.add(form)
        net = _materialize(recipe)
        if checks:
            cls = classify(net)
            if not all(chk(cls) for chk in checks):
                continue
        yield net
        emitted += 1
        if spec.max_count is not None and emitted >= spec.max_count:
            return


# ---------------------------------------------------------------------------
# parametric constructors


def construct_simple(hybrid_leaf: str, left: list[str], right: list[str]) -> Network:
    """The simple network whose gall sides carry ``left`` and ``right``
    (each read from the gall root toward the hybrid vertex) and whose hybrid
    vertex is the parent of ``hybrid_leaf``."""
    names = [hybrid_leaf, *left, *right]
    seen: set[str] = set()
    for t in names:
        if t in seen:
            raise DuplicateTaxon(t)
        seen.add(t)
    if len(names) < 3:
        raise ShortCycle(names)
    recipe = ("gall",
              tuple(("leaf", t) for t in left),
              tuple(("leaf", t) for t in right),
              ("leaf", hybrid_leaf))
    return _materialize(recipe)


def _caterpillar(taxa: list[str]):
    recipe = ("leaf", taxa[0])
    for t in taxa[1:]:
        recipe = ("split", recipe, ("leaf", t))
    return recipe


def search_prop42_pair(n: int) -> tuple[Network, Network]:
    """A pair of networks on n taxa with equal leaf, gall and non-trivial
    cut-arc counts whose triplet systems have different sizes.

    The pair places a four-taxon gadget around one gall and a pendant
    caterpillar; the construction is verified against the expected per-3-set
    triplet profile before being returned.
    """
    if n < 6:
        raise TooFewLeaves("the divergence pair needs at least 6 taxa")
    extra = [f"p{i}" for i in range(1, n - 3)]
    cater = _caterpillar(extra)
    gadget1 = ("gall", (("leaf", "a"),), (("leaf", "c"),), ("leaf", "b"))
    n1 = _materialize(("split", gadget1, ("split", ("leaf", "d"), cater)))
    gadget2 = ("gall", (("leaf", "a"),), (("leaf", "c"),), ("split", ("leaf", "b"), cater))
    n2 = _materialize(("split", ("leaf", "d"), gadget2))

    c1, c2 = classify(n1), classify(n2)
    if not (c1.n == c2.n == n and c1.g == c2.g == 1 and c1.c == c2.c):
        raise NotFound("constructed pair has mismatched invariants")

    r1, r2 = triplets(n1), triplets(n2)
    specials1 = {frozenset(("a", "b", "c")): {Triplet.of("b", "c", "a"), Triplet.of("a", "b", "c")}}
    specials2 = {frozenset(("a", "c", x)): {Triplet.of("c", x, "a"), Triplet.of("a", x, "c")}
                 for x in ("b", *extra)}
    for system, specials in ((r1, specials1), (r2, specials2)):
        by_trio: dict[frozenset[str], set[Triplet]] = {}
        for t in system.triplets:
            by_trio.setdefault(t.taxa, set()).add(t)
        for trio, members in by_trio.items():
            want = specials.get(trio)
            if want is None:
                if len(members) != 1:
                    raise NotFound(f"unexpected multi-triplet 3-set {sorted(trio)}")
            elif members != want:
                raise NotFound(f"wrong triplets on {sorted(trio)}")
    if len(r1) != comb(n, 3) + 1 or len(r2) != len(r1) + len(extra):
        raise NotFound("triplet counts do not match the expected profile")
    return n1, n2


def random_level1(taxa: list[str], seed: int, gall_probability: float = 0.5) -> Network:
    """A pseudo-random valid network on the taxa, deterministic per seed."""
    names = sorted(taxa)
    if len(set(names)) != len(names):
        raise DuplicateTaxon(next(t for t in names if names.count(t) > 1))
    if len(names) < 2:
        raise TooFewTaxa("need at least two taxa")
    rng = random.Random(seed)

    def build(pool: list[str]):
        if len(pool) == 1:
            return ("leaf", pool[0])
        if len(pool) >= 3 and rng.random() < gall_probability:
            m = rng.randint(3, len(pool))
            blocks = _random_blocks(pool, m, rng)
            hyb = blocks.pop(rng.randrange(len(blocks)))
            d = rng.randint(0, len(blocks))
            return ("gall",
                    tuple(build(b) for b in blocks[:d]),
                    tuple(build(b) for b in blocks[d:]),
                    build(hyb))
        cut = rng.randint(1, len(pool) - 1)
        shuffled = pool[:]
        rng.shuffle(shuffled)
        return ("split", build(sorted(shuffled[:cut])), build(sorted(shuffled[cut:])))

    return _materialize(build(names))


def _random_blocks(pool: list[str], m: int, rng: random.Random) -> list[list[str]]:
    shuffled = pool[:]
    rng.shuffle(shuffled)
    cuts = sorted(rng.sample(range(1, len(pool)), m - 1))
    bounds = [0, *cuts, len(pool)]
    return [sorted(shuffled[bounds[i]:bounds[i + 1]]) for i in range(m)]
