"""Pinned reference networks on {x1..x5} used by the verification harness.

Each network is the unique member of the 5-taxon universe inducing the
listed system; the ``counterexamples`` suite re-establishes that uniqueness
from scratch on every run.
"""

from __future__ import annotations

from .systems import ClusterSystem, Triplet, TripletSystem

CORPUS_TAXA = ("x1", "x2", "x3", "x4", "x5")

# The simple network whose triplet system is the sixteen listed triplets.
SIXTEEN_TRIPLET_NETWORK = "((x1,(x2,(x3)#H1)),(x5,(x4,#H1)));"

SIXTEEN_TRIPLETS = TripletSystem.of(
    [
        Triplet.of("x1", "x2", "x3"),
        Triplet.of("x1", "x2", "x4"),
        Triplet.of("x1", "x2", "x5"),
        Triplet.of("x3", "x4", "x1"),
        Triplet.of("x1", "x3", "x4"),
        Triplet.of("x3", "x5", "x1"),
        Triplet.of("x1", "x3", "x5"),
        Triplet.of("x4", "x5", "x1"),
        Triplet.of("x3", "x4", "x2"),
        Triplet.of("x2", "x3", "x4"),
        Triplet.of("x3", "x5", "x2"),
        Triplet.of("x2", "x3", "x5"),
        Triplet.of("x4", "x5", "x2"),
        Triplet.of("x4", "x5", "x3"),
        Triplet.of("x3", "x4", "x5"),
        Triplet.of("x2", "x3", "x1"),
    ],
    taxa=CORPUS_TAXA,
)

# The network whose softwired cluster system is the eleven listed clusters.
ELEVEN_CLUSTER_NETWORK = "(((x5)#H1,(x2,(x3,(x4,#H1)))),x1);"

ELEVEN_CLUSTERS = ClusterSystem.of(
    [
        {"x1"},
        {"x2"},
        {"x3"},
        {"x4"},
        {"x5"},
        {"x4", "x5"},
        {"x3", "x4"},
        {"x3", "x4", "x5"},
        {"x2", "x3", "x4"},
        {"x2", "x3", "x4", "x5"},
        {"x1", "x2", "x3", "x4", "x5"},
    ],
    universe=CORPUS_TAXA,
)
