"""Line-based text formats for triplet and cluster systems.

Triplets are one ``a,b|c`` per line; clusters are one comma-separated
taxon list per line.  Blank lines and ``#`` comments are skipped.
"""

from __future__ import annotations

from .systems import ClusterSystem, Triplet, TripletSystem

__all__ = ["parse_triplets", "format_triplets", "parse_clusters", "format_clusters"]


def _content_lines(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def parse_triplets(text: str) -> TripletSystem:
    items = []
    for line in _content_lines(text):
        if "|" not in line:
            raise ValueError(f"triplet line needs 'a,b|c': {line!r}")
        pair_part, outlier = line.split("|", 1)
        pair = [p.strip() for p in pair_part.split(",")]
        if len(pair) != 2 or not all(pair) or not outlier.strip():
            raise ValueError(f"triplet line needs 'a,b|c': {line!r}")
        items.append(Triplet.of(pair[0], pair[1], outlier.strip()))
    return TripletSystem.of(items)


def format_triplets(system: TripletSystem) -> str:
    return "".join(f"{t}\n" for t in sorted(system.triplets))


def parse_clusters(text: str) -> ClusterSystem:
    items = []
    for line in _content_lines(text):
        taxa = [p.strip() for p in line.split(",")]
        if not all(taxa):
            raise ValueError(f"bad cluster line: {line!r}")
        items.append(frozenset(taxa))
    return ClusterSystem.of(items)


def format_clusters(system: ClusterSystem) -> str:
    ordered = sorted(system.clusters, key=lambda c: (len(c), sorted(c)))
    return "".join(",".join(sorted(c)) + "\n" for c in ordered)
