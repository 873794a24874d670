"""Text formats: edge lists, graph6, and the labeled-graph JSON document."""

from __future__ import annotations

import json
import re
from typing import Sequence

from .errors import LengthMismatch, NonSimpleError, ParseError
from .graph import Graph

_N_DIRECTIVE = re.compile(r"^#\s*n\s*=\s*(\d+)\s*$")
GRAPH6_HEADER = ">>graph6<<"


def parse_graph(text: str, format: str = "edge_list") -> Graph:
    if format == "edge_list":
        return parse_edge_list(text)
    if format == "graph6":
        return parse_graph6(text)
    if format == "json":
        return parse_graph_json(text)
    raise ParseError(f"unknown graph format {format!r}")


def detect_format(text: str) -> str:
    stripped = text.strip()
    if stripped.startswith("{"):
        return "json"
    if stripped.startswith(GRAPH6_HEADER):
        return "graph6"
    lines = [ln for ln in stripped.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(lines) == 1 and len(lines[0].split()) == 1 and not lines[0].strip().isdigit():
        return "graph6"
    return "edge_list"


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines (0-indexed); ``#`` starts a comment.

    A ``# n=<count>`` line fixes the vertex count so isolated vertices survive
    a round trip; otherwise the count is one more than the largest index.
    """
    edges = []
    seen = {}
    n_declared = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        m = _N_DIRECTIVE.match(raw.strip())
        if m:
            n_declared = int(m.group(1))
            continue
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two vertex indices, got {len(parts)} field(s)", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError("vertex indices must be non-negative", lineno)
        if u == v:
            raise NonSimpleError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise NonSimpleError(f"duplicate edge {key} (first on line {seen[key]})", lineno)
        seen[key] = lineno
        edges.append((u, v))
    n = 1 + max((max(e) for e in edges), default=-1)
    if n_declared is not None:
        if n_declared < n:
            raise ParseError(f"declared n={n_declared} but vertex {n - 1} appears")
        n = n_declared
    return Graph(n, tuple(edges))


def emit_edge_list(graph: Graph) -> str:
    lines = [f"# n={graph.n}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def _graph6_n(data: bytes) -> tuple[int, int]:
    if not data:
        raise ParseError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated graph6 size field")
        val = 0
        for b in data[2:8]:
            val = (val << 6) | (b - 63)
        return val, 8
    if len(data) < 4:
        raise ParseError("truncated graph6 size field")
    val = 0
    for b in data[1:4]:
        val = (val << 6) | (b - 63)
    return val, 4


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    try:
        data = line.encode("ascii")
    except UnicodeEncodeError:
        raise ParseError("graph6 must be printable ASCII") from None
    if any(b < 63 or b > 126 for b in data):
        raise ParseError("graph6 byte outside the range 63..126")
    n, pos = _graph6_n(data)
    nbits = n * (n - 1) // 2
    body = data[pos:]
    need = (nbits + 5) // 6
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    bits = []
    for b in body:
        val = b - 63
        bits.extend((val >> s) & 1 for s in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, tuple(edges))


def emit_graph6(graph: Graph) -> str:
    n = graph.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    present = set(graph.edges)
    bits = [1 if (i, j) in present else 0 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(val + 63)
    return bytes(head + body).decode("ascii")


def emit_labeled(graph: Graph, labeling: Sequence[int]) -> str:
    """Canonical JSON: ``{"n": int, "edges": [[u, v, label], ...]}`` in edge order."""
    if len(labeling) != graph.m:
        raise LengthMismatch(f"{len(labeling)} labels for {graph.m} edges")
    doc = {"n": graph.n, "edges": [[u, v, int(x)] for (u, v), x in zip(graph.edges, labeling)]}
    return json.dumps(doc)


def labeled_document(graph: Graph, labeling: Sequence[int]) -> dict:
    return json.loads(emit_labeled(graph, labeling))


def parse_labeled(text: str) -> tuple[Graph, list[int]]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    return labeled_from_document(doc)


def labeled_from_document(doc) -> tuple[Graph, list[int]]:
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise ParseError('labeled graph must be an object with "n" and "edges"')
    n = doc["n"]
    if not isinstance(n, int) or n < 0:
        raise ParseError('"n" must be a non-negative integer')
    if not isinstance(doc["edges"], list):
        raise ParseError('"edges" must be a list')
    edges, labels = [], []
    for i, triple in enumerate(doc["edges"]):
        if not (isinstance(triple, list) and len(triple) == 3 and all(isinstance(x, int) for x in triple)):
            raise ParseError(f"edge entry {i} must be [u, v, label] integers")
        u, v, x = triple
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge entry {i} has a vertex outside 0..{n - 1}")
        edges.append((u, v))
        labels.append(x)
    return Graph(n, tuple(edges)), labels


def emit_graph_json(graph: Graph) -> str:
    """Unlabeled JSON: ``{"n": int, "edges": [[u, v], ...]}``."""
    return json.dumps({"n": graph.n, "edges": [[u, v] for u, v in graph.edges]})


def parse_graph_json(text: str) -> Graph:
    """Accept both the unlabeled document and a labeled one (labels are dropped)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if isinstance(doc, dict) and isinstance(doc.get("edges"), list):
        if all(isinstance(t, list) and len(t) == 2 for t in doc["edges"]):
            doc = dict(doc, edges=[list(t) + [0] for t in doc["edges"]])
    return labeled_from_document(doc)[0]


def parse_labels(text: str) -> list[int]:
    """Labels file: a JSON list of integers, or a labeled-graph document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if isinstance(doc, dict):
        return labeled_from_document(doc)[1]
    if isinstance(doc, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in doc):
        return list(doc)
    raise ParseError("labels must be a JSON list of integers")
