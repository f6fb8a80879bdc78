"""Tools for rooted binary level-1 phylogenetic networks.

Core model and structure live in :mod:`level1kit.network`; induced triplet
and cluster systems in :mod:`level1kit.systems`; SN-set and restriction
machinery in :mod:`level1kit.snops`; generation in
:mod:`level1kit.enumeration`; defining-system construction and brute-force
uniqueness checks in :mod:`level1kit.defining`; text formats and the
verification harness in :mod:`level1kit.enewick`, :mod:`level1kit.formats`
and :mod:`level1kit.verify`.
"""

from . import errors
from .defining import (
    DefinitionReport,
    Universe,
    check_defines,
    check_encoded,
    defining_clusters_simple,
    defining_triplets_simple,
    get_universe,
)
from .enewick import parse_enewick, write_enewick
from .enumeration import (
    EnumSpec,
    construct_simple,
    enumerate_level1,
    random_level1,
    search_prop42_pair,
)
from .network import (
    BoundsReport,
    Classification,
    Gall,
    Network,
    canonical_form,
    classify,
    cut_arcs,
    equivalent,
    galls,
    validate,
    vertex_arc_bounds,
)
from .snops import (
    CollapseResult,
    Partition,
    collapse,
    compatible,
    cut_partition,
    is_sn_set,
    maximal_sn_sets,
    projected_triplets,
    restrict,
    sn_closure,
)
from .systems import (
    ClusterSystem,
    Triplet,
    TripletSystem,
    consistent,
    displayed_trees,
    displays_clusters,
    hardwired_clusters,
    softwired_clusters,
    triplets,
)
from .verify import SUITE_IDS, SuiteResult, VerificationReport, run_suite, run_suites

__version__ = "0.1.0"

__all__ = [
    "errors",
    "Network", "Gall", "Classification", "BoundsReport",
    "validate", "galls", "cut_arcs", "classify", "vertex_arc_bounds",
    "canonical_form", "equivalent",
    "Triplet", "TripletSystem", "ClusterSystem",
    "displayed_trees", "hardwired_clusters", "softwired_clusters",
    "triplets", "consistent", "displays_clusters",
    "Partition", "CollapseResult",
    "is_sn_set", "sn_closure", "maximal_sn_sets", "cut_partition",
    "compatible", "restrict", "collapse", "projected_triplets",
    "EnumSpec", "enumerate_level1", "construct_simple",
    "search_prop42_pair", "random_level1",
    "DefinitionReport", "Universe", "get_universe",
    "defining_triplets_simple", "defining_clusters_simple",
    "check_defines", "check_encoded",
    "parse_enewick", "write_enewick",
    "SuiteResult", "VerificationReport", "SUITE_IDS", "run_suite", "run_suites",
    "__version__",
]
