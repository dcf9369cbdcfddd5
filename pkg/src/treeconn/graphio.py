"""graph6, JSON and DOT serialization.

graph6 is the compact printable encoding used by small-graph corpora: a
vertex-count header followed by the column-major upper triangle of the
adjacency matrix packed six bits per character, each offset by 63. Encoding
is canonical, so parse(emit(g)) == g and emit(parse(line)) == line for valid
lines.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .graphs import Graph


class Graph6Error(ValueError):
    pass


_HEADER = ">>graph6<<"


def _triangle_bits(n: int) -> int:
    return n * (n - 1) // 2


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (optional >>graph6<< header allowed)."""
    text = line.strip()
    if text.startswith(_HEADER):
        text = text[len(_HEADER):]
    if not text:
        raise Graph6Error("empty graph6 line")
    data = [ord(ch) - 63 for ch in text]
    if any(d < 0 or d > 63 for d in data):
        raise Graph6Error(f"invalid graph6 byte in {text!r}")
    if data[0] <= 62:
        n = data[0]
        body = data[1:]
    elif len(data) >= 4 and data[1] <= 62:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    elif len(data) >= 8:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        body = data[8:]
    else:
        raise Graph6Error(f"truncated graph6 size header in {text!r}")
    nbits = _triangle_bits(n)
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(
            f"bad graph6 length: n={n} needs {(nbits + 5) // 6} body bytes, got {len(body)}"
        )
    bits = []
    for d in body:
        bits.extend((d >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("trailing bits nonzero")
    edges = []
    t = 0
    for j in range(1, n):
        for i in range(j):
            if bits[t]:
                edges.append((i, j))
            t += 1
    return Graph(n, edges)


def emit_graph6(g: Graph) -> str:
    """Encode as graph6 (short form for n <= 62, long form above)."""
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n < (1 << 18):
        head = [126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)]
    else:
        raise Graph6Error(f"n={n} too large for this encoder")
    bits = []
    for j in range(1, n):
        aj = g.adj[j]
        for i in range(j):
            bits.append(1 if i in aj else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for t in range(0, len(bits), 6):
        val = 0
        for bit in bits[t : t + 6]:
            val = (val << 1) | bit
        body.append(val + 63)
    return "".join(chr(c) for c in head + body)


@dataclass
class GraphDocument:
    """JSON-interchange form: vertex count, sorted edge list, optional labels."""

    n: int
    edges: list[tuple[int, int]]
    labels: dict[int, str] | None = None

    @classmethod
    def from_graph(cls, g: Graph, labels: dict[int, str] | None = None) -> "GraphDocument":
        return cls(g.n, g.edges(), dict(labels) if labels else None)

    def to_graph(self) -> Graph:
        return Graph(self.n, self.edges)

    def to_json(self) -> str:
        doc: dict = {"n": self.n, "edges": [list(e) for e in self.edges]}
        if self.labels:
            doc["labels"] = {str(v): lab for v, lab in sorted(self.labels.items())}
        return json.dumps(doc, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "GraphDocument":
        doc = json.loads(text)
        if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
            raise ValueError("graph document needs 'n' and 'edges'")
        edges = [tuple(sorted((int(u), int(v)))) for u, v in doc["edges"]]
        labels = None
        if doc.get("labels"):
            labels = {int(v): str(lab) for v, lab in doc["labels"].items()}
        return cls(int(doc["n"]), sorted(edges), labels)


def emit_json(g: Graph, labels: dict[int, str] | None = None) -> str:
    return GraphDocument.from_graph(g, labels).to_json()


def parse_json(text: str) -> tuple[Graph, dict[int, str] | None]:
    doc = GraphDocument.from_json(text)
    return doc.to_graph(), doc.labels


def emit_dot(g: Graph, labels: dict[int, str] | None = None) -> str:
    lines = ["graph G {"]
    for v in range(g.n):
        if labels and v in labels:
            lines.append(f'  {v} [label="{labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_NODE = re.compile(r"^\s*(\d+)\s*(?:\[label=\"([^\"]*)\"\])?\s*;\s*$")
_DOT_EDGE = re.compile(r"^\s*(\d+)\s*--\s*(\d+)\s*;\s*$")


def parse_dot(text: str) -> tuple[Graph, dict[int, str] | None]:
    """Parse the subset of DOT that emit_dot produces."""
    nodes: set[int] = set()
    labels: dict[int, str] = {}
    edges: list[tuple[int, int]] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("graph") or line == "}":
            continue
        m = _DOT_EDGE.match(line)
        if m:
            u, v = int(m.group(1)), int(m.group(2))
            nodes.update((u, v))
            edges.append((u, v))
            continue
        m = _DOT_NODE.match(line)
        if m:
            v = int(m.group(1))
            nodes.add(v)
            if m.group(2) is not None:
                labels[v] = m.group(2)
            continue
        raise ValueError(f"unparseable DOT line: {line!r}")
    n = max(nodes) + 1 if nodes else 0
    return Graph(n, edges), (labels or None)
