"""Extended-Newick reading and writing.

A hybrid vertex is written with a ``#H<k>`` tag occurring exactly twice:
once carrying the pendant subtree (``(...)#H1`` or ``leaf#H1``) and once
bare (``#H1``) at the other attachment point.  Writing is deterministic:
children are ordered by canonical form and each gall is emitted in its
canonical orientation, so equivalent networks serialize to identical text.
"""

from __future__ import annotations

from itertools import count

from .errors import EnewickSyntaxError, HybridTagMismatch
from .network import Network

__all__ = ["parse_enewick", "write_enewick"]

_LABEL_CHARS = frozenset(
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_.+-'"
)


def write_enewick(net: Network) -> str:
    for label in net.leaf_labels.values():
        bad = set(label) - _LABEL_CHARS
        if bad or not label:
            raise ValueError(f"label {label!r} cannot be written unquoted")
    memo: dict[int, bytes] = {}
    tags = count(1)

    def enc(v: int) -> bytes:
        return net._encode_pendant(v, memo)

    def chain(side: tuple[int, ...], occurrence: str) -> str:
        out = occurrence
        for u in reversed(side):
            out = f"({render(net._pendant_head(u))},{out})"
        return out

    def render(v: int) -> str:
        if v in net.leaf_labels:
            return net.leaf_labels[v]
        gall = net._gall_by_root.get(v)
        if gall is None:
            c1, c2 = net.children[v]
            if enc(c2) < enc(c1):
                c1, c2 = c2, c1
            return f"({render(c1)},{render(c2)})"
        k = next(tags)
        side_a, side_b = gall.sides()
        fa = tuple(enc(net._pendant_head(u)) for u in side_a)
        fb = tuple(enc(net._pendant_head(u)) for u in side_b)
        if fb < fa:
            side_a, side_b = side_b, side_a
        loaded = f"({render(net.children[gall.hybrid][0])})#H{k}"
        return f"({chain(side_a, loaded)},{chain(side_b, f'#H{k}')})"

    return render(net.root) + ";"


# ---------------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.arcs: list[tuple[int, int]] = []
        self.labels: dict[int, str] = {}
        self.ids = count()
        # tag -> list of (vertex id, has_subtree)
        self.hybrids: dict[str, list[tuple[int, bool]]] = {}

    def error(self, message: str):
        raise EnewickSyntaxError(self.pos, message)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        if self.pos >= len(self.text):
            self.error("unexpected end of input")
        return self.text[self.pos]

    def take(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def name(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _LABEL_CHARS:
            self.pos += 1
        if self.pos == start:
            self.error("expected a name")
        return self.text[start:self.pos]

    def node(self) -> int:
        ch = self.peek()
        if ch == "(":
            self.take("(")
            children = [self.node()]
            while self.peek() == ",":
                self.take(",")
                children.append(self.node())
            self.take(")")
            label = tag = None
            if self.pos < len(self.text) and self.text[self.pos] in _LABEL_CHARS:
                label = self.name()
            if self.pos < len(self.text) and self.text[self.pos] == "#":
                self.pos += 1
                tag = self.name()
            vid = next(self.ids)
            for c in children:
                self.arcs.append((vid, c))
            if tag is not None:
                self.hybrids.setdefault(tag, []).append((vid, True))
            elif label is not None and not children:
                self.labels[vid] = label
            return vid
        if ch == "#":
            self.pos += 1
            tag = self.name()
            vid = next(self.ids)
            self.hybrids.setdefault(tag, []).append((vid, False))
            return vid
        label = self.name()
        if self.pos < len(self.text) and self.text[self.pos] == "#":
            # "leaf#H1" is shorthand for "(leaf)#H1"
            self.pos += 1
            tag = self.name()
            vid = next(self.ids)
            leaf = next(self.ids)
            self.labels[leaf] = label
            self.arcs.append((vid, leaf))
            self.hybrids.setdefault(tag, []).append((vid, True))
            return vid
        vid = next(self.ids)
        self.labels[vid] = label
        return vid

    def parse(self) -> Network:
        from .network import validate

        root = self.node()
        self.take(";")
        self.skip_ws()
        if self.pos != len(self.text):
            self.error("trailing characters after ';'")

        merged: dict[int, int] = {}
        for tag, occurrences in self.hybrids.items():
            if len(occurrences) != 2:
                raise HybridTagMismatch(tag, f"occurs {len(occurrences)} times, need exactly 2")
            loaded = [v for v, has in occurrences if has]
            if len(loaded) != 1:
                raise HybridTagMismatch(
                    tag, "exactly one occurrence must carry the pendant subtree")
            real = loaded[0]
            for v, has in occurrences:
                if not has:
                    merged[v] = real
        arcs = [(merged.get(t, t), merged.get(h, h)) for (t, h) in self.arcs]
        return validate(arcs, self.labels, vertices=[root])


def parse_enewick(text: str) -> Network:
    """Parse extended Newick text into a validated network."""
    return _Parser(text).parse()
