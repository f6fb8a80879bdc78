"""Verification suites: each exhaustively re-checks one of the package's
combinatorial guarantees over small enumerated universes and reports any
counterexamples.

Suites are exact (zero tolerance).  The subset-lattice SN computation used
by the ``sn-cut`` suite is an independent brute-force oracle for the
fixpoint algorithm in :mod:`level1kit.snops`.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations
from math import comb

import numpy as np

from .corpus import (
    CORPUS_TAXA,
    ELEVEN_CLUSTER_NETWORK,
    ELEVEN_CLUSTERS,
    SIXTEEN_TRIPLET_NETWORK,
    SIXTEEN_TRIPLETS,
)
from .defining import (
    Universe,
    defining_clusters_simple,
    defining_triplets_simple,
    get_universe,
)
from .enewick import write_enewick
from .enumeration import random_level1, search_prop42_pair
from .errors import UnknownSuite
from .network import classify
from .snops import compatible, cut_partition, is_sn_set, maximal_sn_sets
from .systems import softwired_clusters, triplets

__all__ = ["SuiteResult", "VerificationReport", "SUITE_IDS", "run_suite", "run_suites"]


@dataclass
class SuiteResult:
    suite: str
    check: str
    instances: int
    failures: list[str] = field(default_factory=list)
    elapsed_ms: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class VerificationReport:
    max_n: int
    results: list[SuiteResult]

    @property
    def overall_pass(self) -> bool:
        return all(r.passed for r in self.results)

    def to_dict(self) -> dict:
        payload = {
            "max_n": self.max_n,
            "overall_pass": self.overall_pass,
            "suites": [
                {
                    "suite": r.suite,
                    "check": r.check,
                    "instances": r.instances,
                    "failures": list(r.failures),
                    "elapsed_ms": round(r.elapsed_ms, 3),
                    "notes": list(r.notes),
                }
                for r in self.results
            ],
        }
        _validate_report(payload)
        return payload

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _validate_report(payload: dict) -> None:
    import jsonschema

    schema = json.loads(
        resources.files("level1kit").joinpath("data/report_schema.json").read_text()
    )
    jsonschema.validate(payload, schema)


def worker_cap() -> int:
    """Upper bound on worker count from LEVEL1KIT_THREADS (suites currently
    run on a single worker, which respects any cap >= 1)."""
    raw = os.environ.get("LEVEL1KIT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _taxa(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, n + 1))


# ---------------------------------------------------------------------------
# individual suites


def _suite_bounds(max_n: int, random_count: int) -> SuiteResult:
    res = SuiteResult("bounds", "vertex-arc-count-identities", 0)
    for n in range(3, max_n + 1):
        uni = get_universe(_taxa(n))
        proper = np.flatnonzero(uni.g >= 1)
        res.instances += len(proper)
        for i in proper:
            nv, na, g = int(uni.num_vertices[i]), int(uni.num_arcs[i]), int(uni.g[i])
            ok = (nv == 2 * n - 1 + 2 * g and na == 2 * n + 3 * g - 2
                  and 2 * n + 1 <= nv <= 3 * n - 2
                  and 2 * n + 1 <= na and 2 * na <= 7 * (n - 1))
            if n == 3:
                ok = ok and nv == 7 and na == 7
            if not ok:
                res.failures.append(f"n={n} V={nv} A={na} g={g}: {uni.enwk[i]}")
    return res


def _suite_galls(max_n: int, random_count: int) -> SuiteResult:
    res = SuiteResult("galls", "gall-count-bound", 0)
    for n in range(2, max_n + 1):
        uni = get_universe(_taxa(n))
        res.instances += len(uni)
        bound = n - uni.c - 2
        bad = np.flatnonzero(uni.g > bound)
        tight = np.flatnonzero((uni.is_tree | uni.all_galls_three_out) & (uni.g != bound))
        for i in bad:
            res.failures.append(f"n={n} bound violated: {uni.enwk[i]}")
        for i in tight:
            res.failures.append(f"n={n} tightness violated: {uni.enwk[i]}")
    return res


def _suite_clusters_count(max_n: int, random_count: int) -> SuiteResult:
    res = SuiteResult("clusters-count", "softwired-cluster-count-formula", 0)
    for n in range(2, max_n + 1):
        uni = get_universe(_taxa(n))
        res.instances += len(uni)
        bad = np.flatnonzero(uni.s_minus != 3 * n - 4 - uni.c)
        for i in bad:
            res.failures.append(f"n={n}: {uni.enwk[i]}")
    for n in range(7, 13):
        names = [f"t{i}" for i in range(n)]
        for seed in range(random_count):
            net = random_level1(names, seed, 0.5)
            res.instances += 1
            c = classify(net).c
            got = len(softwired_clusters(net).without_universe())
            if got != 3 * n - 4 - c:
                res.failures.append(f"random n={n} seed={seed}: {write_enewick(net)}")
    return res


def _suite_triplet_size(max_n: int, random_count: int) -> SuiteResult:
    res = SuiteResult("triplet-size", "triplet-count-divergence", 0)
    n = 6
    try:
        n1, n2 = search_prop42_pair(n)
    except Exception as exc:  # NotFound means the claim failed
        res.failures.append(f"pair construction failed: {exc}")
        return res
    res.instances = 2
    r1, r2 = len(triplets(n1)), len(triplets(n2))
    c1, c2 = classify(n1), classify(n2)
    if r1 != comb(n, 3) + 1 or r2 != r1 + (n - 4):
        res.failures.append(f"triplet counts {r1},{r2} off profile")
    if not (c1.g == c2.g and c1.c == c2.c and c1.n == c2.n == n):
        res.failures.append("pair invariants differ")
    res.notes.append(f"n=6 witness pair: |R|={r1} vs {r2}; both g={c1.g}, c={c1.c}")
    if max_n >= 5:
        uni = get_universe(_taxa(5))
        counts = np.array([bin(int(m)).count("1") for m in uni.tri])
        groups: dict[tuple[int, int], set[int]] = {}
        for i in range(len(uni)):
            groups.setdefault((int(uni.g[i]), int(uni.c[i])), set()).add(int(counts[i]))
        diverging = sum(1 for sizes in groups.values() if len(sizes) > 1)
        res.notes.append(
            f"n=5 scan: {diverging} of {len(groups)} (g,c) classes already show "
            f"divergent triplet counts")
    return res


def _maximal_sn_lattice(system) -> frozenset[frozenset[str]]:
    taxa = tuple(sorted(system.taxa))
    sn = []
    for bits in range(1 << len(taxa)):
        s = frozenset(t for i, t in enumerate(taxa) if bits >> i & 1)
        if len(s) != len(taxa) and is_sn_set(system, s):
            sn.append(s)
    return frozenset(s for s in sn if s and not any(s < t for t in sn))


def _suite_sn_cut(max_n: int, random_count: int) -> SuiteResult:
    res = SuiteResult("sn-cut", "cut-partition-equals-maximal-sn-sets", 0)
    for n in range(3, min(max_n, 5) + 1):
        uni = get_universe(_taxa(n))
        nets = [uni.network_at(i) for i in range(len(uni))]
        systems = [triplets(net) for net in nets]
        cuts = [frozenset(cut_partition(net).blocks) for net in nets]
        res.instances += len(uni)
        for i, net in enumerate(nets):
            fix = frozenset(maximal_sn_sets(systems[i]).blocks)
            oracle = _maximal_sn_lattice(systems[i])
            if not (cuts[i] == fix == oracle):
                res.failures.append(f"n={n}: {uni.enwk[i]}")
        # Cut-arc head clusters of R-subset pairs are pairwise compatible,
        # and a strictly nested one cannot be a maximal SN-set.
        heads = [
            [net.clusters_below[v] for (_, v) in net._nontrivial_cut]
            for net in nets
        ]
        pairs = _subset_pairs(uni.tri)
        res.instances += len(pairs)
        for i, j in pairs:
            for cl in heads[i]:
                for cl2 in heads[j]:
                    if not compatible(cl, cl2):
                        res.failures.append(
                            f"n={n}: incompatible heads {uni.enwk[i]} vs {uni.enwk[j]}")
                    elif cl < cl2 and cl in cuts[i]:
                        res.failures.append(
                            f"n={n}: nested head still maximal {uni.enwk[i]} vs {uni.enwk[j]}")
    return res


def _subset_pairs(masks: np.ndarray) -> list[tuple[int, int]]:
    """All ordered pairs (i, j), i != j, with masks[i] a subset of masks[j]."""
    out: list[tuple[int, int]] = []
    m = len(masks)
    chunk = 512
    for lo in range(0, m, chunk):
        hi = min(lo + chunk, m)
        block = masks[lo:hi, None]
        sub = (block & masks[None, :]) == block
        for ii, jj in zip(*np.nonzero(sub)):
            i = int(ii) + lo
            j = int(jj)
            if i != j:
                out.append((i, j))
    return out


def _suite_samecut(max_n: int, random_count: int) -> SuiteResult:
    res = SuiteResult("samecut", "cut-partition-preserved-by-triplet-supersets", 0)
    for n in range(3, min(max_n, 5) + 1):
        uni = get_universe(_taxa(n))
        nets = [uni.network_at(i) for i in range(len(uni))]
        cuts = [frozenset(cut_partition(net).blocks) for net in nets]
        pairs = [(i, j) for i, j in _subset_pairs(uni.tri) if uni.is_saturated[i]]
        res.instances += len(pairs)
        for i, j in pairs:
            if cuts[i] != cuts[j]:
                res.failures.append(f"n={n}: {uni.enwk[i]} vs {uni.enwk[j]}")
    return res


def _suite_define_simple(kind: str, max_n: int) -> SuiteResult:
    suite = f"define-{kind}"
    check = ("simple-defining-triplet-systems" if kind == "triplets"
             else "simple-defining-cluster-systems")
    res = SuiteResult(suite, check, 0)
    for n in range(4, max_n + 1):
        uni = get_universe(_taxa(n))
        for i in np.flatnonzero(uni.is_simple):
            net = uni.network_at(int(i))
            res.instances += 1
            if kind == "triplets":
                system = defining_triplets_simple(net)
                size_ok = len(system) <= 2 * n - 1
                mask = uni.triplet_mask(system)
            else:
                system = defining_clusters_simple(net)
                size_ok = len(system) <= n
                mask = uni.cluster_mask(system)
            induced_ok = mask & ~int(uni.masks(kind)[i]) == 0
            hits = uni.supersets(kind, mask)
            defines = int(hits.sum()) == 1 and bool(hits[i])
            if not (size_ok and induced_ok and defines):
                res.failures.append(
                    f"n={n} size_ok={size_ok} induced={induced_ok} "
                    f"defines={defines}: {uni.enwk[i]}")
    return res


def _suite_define_triplets(max_n: int, random_count: int) -> SuiteResult:
    return _suite_define_simple("triplets", max_n)


def _suite_define_clusters(max_n: int, random_count: int) -> SuiteResult:
    return _suite_define_simple("clusters", max_n)


def _suite_saturated(kind: str, max_n: int) -> SuiteResult:
    suite = f"saturated-{'triplet' if kind == 'triplets' else 'cluster'}"
    res = SuiteResult(suite, f"saturated-four-outwards-{kind}-uniqueness", 0)
    for n in range(2, max_n + 1):
        uni = get_universe(_taxa(n))
        targets = np.flatnonzero(uni.is_saturated & uni.is_four_outwards)
        if kind == "triplets" and n < 3:
            continue
        res.instances += len(targets)
        for i in targets:
            hits = uni.supersets(kind, int(uni.masks(kind)[i]))
            if int(hits.sum()) != 1 or not bool(hits[i]):
                res.failures.append(f"n={n} non-unique superset: {uni.enwk[i]}")
    return res


def _suite_saturated_triplet(max_n: int, random_count: int) -> SuiteResult:
    return _suite_saturated("triplets", max_n)


def _suite_saturated_cluster(max_n: int, random_count: int) -> SuiteResult:
    return _suite_saturated("clusters", max_n)


def _suite_counterexamples(max_n: int, random_count: int) -> SuiteResult:
    res = SuiteResult("counterexamples", "non-defining-witness-pairs", 0)
    uni = get_universe(CORPUS_TAXA)

    m16 = np.uint64(uni.triplet_mask(SIXTEEN_TRIPLETS))
    rows16 = np.flatnonzero(uni.tri == m16)
    res.instances += 1
    if len(rows16) != 1:
        res.failures.append(f"16-triplet system matched {len(rows16)} networks")
    elif uni.enwk[int(rows16[0])] != SIXTEEN_TRIPLET_NETWORK:
        res.failures.append("16-triplet network differs from pinned serialization")

    m11 = np.uint64(uni.cluster_mask(ELEVEN_CLUSTERS))
    rows11 = np.flatnonzero(uni.clu == m11)
    res.instances += 1
    if len(rows11) != 1:
        res.failures.append(f"11-cluster system matched {len(rows11)} networks")
    elif uni.enwk[int(rows11[0])] != ELEVEN_CLUSTER_NETWORK:
        res.failures.append("11-cluster network differs from pinned serialization")

    if len(rows16) == 1:
        a = int(rows16[0])
        sub = (uni.tri & uni.tri[a]) == uni.tri
        sub[a] = False
        wit = np.flatnonzero(sub & uni.is_four_outwards)
        res.instances += 1
        if len(wit) == 0:
            res.failures.append("no 4-outwards proper R-subset witness at n=5")
        else:
            res.notes.append(
                f"triplet witness: R({uni.enwk[int(wit[0])]}) is a proper subset of "
                f"R({SIXTEEN_TRIPLET_NETWORK})")

    if len(rows11) == 1:
        b = int(rows11[0])
        sup = (uni.clu & uni.clu[b]) == uni.clu[b]
        sup[b] = False
        wit = np.flatnonzero(sup & uni.is_four_outwards)
        res.instances += 1
        if len(wit) == 0:
            res.failures.append("no 4-outwards S-superset witness at n=5")
        else:
            res.notes.append(
                f"cluster witness: S({ELEVEN_CLUSTER_NETWORK}) is contained in "
                f"S({uni.enwk[int(wit[0])]})")

    defined = 0
    for i in range(len(uni)):
        hits = uni.supersets("triplets", int(uni.tri[i]))
        if int(hits.sum()) == 1:
            defined += 1
    special = int((uni.is_saturated & uni.is_four_outwards).sum())
    res.notes.append(
        f"n=5 data: {defined} of {len(uni)} networks are pinned down by their "
        f"own triplet system; {special} are saturated and 4-outwards")
    return res


_SUITES = {
    "bounds": _suite_bounds,
    "galls": _suite_galls,
    "clusters-count": _suite_clusters_count,
    "triplet-size": _suite_triplet_size,
    "sn-cut": _suite_sn_cut,
    "samecut": _suite_samecut,
    "define-triplets": _suite_define_triplets,
    "define-clusters": _suite_define_clusters,
    "saturated-triplet": _suite_saturated_triplet,
    "saturated-cluster": _suite_saturated_cluster,
    "counterexamples": _suite_counterexamples,
}

SUITE_IDS = tuple(_SUITES)


def run_suite(suite: str, *, max_n: int = 5, random_count: int = 1000) -> SuiteResult:
    """Run one verification suite and report instance counts and failures."""
    fn = _SUITES.get(suite)
    if fn is None:
        raise UnknownSuite(suite)
    start = time.perf_counter()
    result = fn(max_n, random_count)
    result.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return result


def run_suites(suites=None, *, max_n: int = 5, random_count: int = 1000) -> VerificationReport:
    chosen = list(suites) if suites else list(SUITE_IDS)
    results = [run_suite(s, max_n=max_n, random_count=random_count) for s in chosen]
    return VerificationReport(max_n=max_n, results=results)
