"""graph6 and JSON edge-list codecs.

graph6 packs the upper triangle of the adjacency matrix column by column:
for j = 1..n-1 and i = 0..j-1 the next bit is a(i,j).  Bits are grouped in
sixes (padded with zeros), and every 6-bit group g is printed as the ASCII
character chr(g + 63).  The leading vertex count is one character for
n <= 62 and '~' plus three characters for n <= 258047.

The JSON form is ``{"n": int, "edges": [[u, v], ...]}`` with an optional
``"labels"`` list of strings.
"""

from __future__ import annotations

import json

from .errors import GraphFormatError
from .graph import Graph

_HEADER = ">>graph6<<"


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    elif n <= 258047:
        out = ["~", chr((n >> 12) + 63), chr(((n >> 6) & 63) + 63), chr((n & 63) + 63)]
    else:
        raise GraphFormatError(f"graph6 emitter supports n <= 258047, got {n}")
    group = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            group = group << 1 | (1 if g.has_edge(i, j) else 0)
            nbits += 1
            if nbits == 6:
                out.append(chr(group + 63))
                group = 0
                nbits = 0
    if nbits:
        group <<= 6 - nbits
        out.append(chr(group + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):].strip()
    if not s:
        raise GraphFormatError("empty graph6 input")
    vals = []
    for ch in s:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise GraphFormatError(f"invalid graph6 character {ch!r}")
        vals.append(v)
    if vals[0] == 63:
        if len(vals) < 4:
            raise GraphFormatError("truncated graph6 vertex count")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise GraphFormatError(
            f"graph6 bit-length mismatch: n={n} needs {(need + 5) // 6} data "
            f"characters, got {len(body)}"
        )
    bits = 0
    for v in body:
        bits = bits << 6 | v
    pad = len(body) * 6 - need
    if pad and bits & ((1 << pad) - 1):
        raise GraphFormatError("graph6 padding bits must be zero")
    bits >>= pad
    edges = []
    k = need
    for j in range(1, n):
        for i in range(j):
            k -= 1
            if bits >> k & 1:
                edges.append((i, j))
    return Graph(n, edges)


def emit_edge_list_json(g: Graph) -> str:
    doc: dict = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    if g.labels is not None:
        doc["labels"] = list(g.labels)
    return json.dumps(doc)


def parse_edge_list_json(text: str) -> Graph:
    if not text.strip():
        raise GraphFormatError("empty JSON input")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise GraphFormatError('JSON graph needs keys "n" and "edges"')
    n = doc["n"]
    if not isinstance(n, int) or n < 0:
        raise GraphFormatError('"n" must be a nonnegative integer')
    edges = []
    for e in doc["edges"]:
        if not (isinstance(e, (list, tuple)) and len(e) == 2):
            raise GraphFormatError(f"malformed edge entry {e!r}")
        u, v = e
        if not (isinstance(u, int) and isinstance(v, int)):
            raise GraphFormatError(f"edge endpoints must be integers, got {e!r}")
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphFormatError(f"edge ({u},{v}) out of range for n={n}")
        edges.append((u, v))
    labels = doc.get("labels")
    if labels is not None and (
        not isinstance(labels, list)
        or len(labels) != n
        or not all(isinstance(x, str) for x in labels)
    ):
        raise GraphFormatError('"labels" must be a list of n strings')
    return Graph(n, edges, labels=labels)


def parse_graph(text: str) -> Graph:
    """Auto-detect: JSON if the input starts with '{', graph6 otherwise."""
    if text.lstrip().startswith("{"):
        return parse_edge_list_json(text)
    return parse_graph6(text)
