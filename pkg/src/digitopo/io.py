"""Graph documents: JSON (primary) and bare edge-list text.

JSON::

    {"name": "C4", "vertices": ["a", "b", "c", "d"],
     "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]],
     "metadata": {...}}

Edge-list text has one ``u v`` edge per line; a line with a single token
declares an isolated vertex; lines starting with ``#`` are comments.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import DigitalTopologyError
from .space import DigitalSpace


class GraphParseError(DigitalTopologyError, ValueError):
    def __init__(self, message, line=None, field=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
        self.line = line
        self.field = field


@dataclass
class GraphDocument:
    name: str
    vertices: list[str]
    edges: list[list[str]]
    metadata: dict = field(default_factory=dict)

    def to_space(self) -> DigitalSpace:
        return DigitalSpace(self.vertices, [tuple(e) for e in self.edges], metadata=self.metadata)

    @classmethod
    def from_space(cls, G: DigitalSpace, name: str = "", metadata: dict | None = None):
        meta = dict(G.metadata)
        meta.update(metadata or {})
        return cls(name, list(G.vertices), [list(e) for e in G.edges()], meta)

    def to_dict(self) -> dict:
        d = {"name": self.name, "vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}
        if self.metadata:
            d["metadata"] = self.metadata
        return d


def _validate(name, vertices, edges, metadata, line_of=None):
    declared = set()
    for v in vertices:
        if not isinstance(v, str) or not v:
            raise GraphParseError(f"vertex names must be nonempty strings, got {v!r}", field="vertices")
        if v in declared:
            raise GraphParseError(f"duplicate vertex {v!r}", field="vertices")
        declared.add(v)
    seen = set()
    for k, e in enumerate(edges):
        line = line_of[k] if line_of else None
        fld = None if line_of else f"edges[{k}]"
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise GraphParseError("an edge must be a 2-element list", line, fld)
        u, v = e
        for w in (u, v):
            if w not in declared:
                raise GraphParseError(f"edge references undeclared vertex {w!r}", line, fld)
        if u == v:
            raise GraphParseError(f"self-loop at {u!r}", line, fld)
        key = frozenset((u, v))
        if key in seen:
            raise GraphParseError(f"duplicate edge {u!r}-{v!r}", line, fld)
        seen.add(key)
    return GraphDocument(name, list(vertices), [list(e) for e in edges], metadata)


def parse_json(text: str) -> GraphDocument:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphParseError(e.msg, line=e.lineno) from None
    if not isinstance(d, dict):
        raise GraphParseError("top level must be an object")
    for key in ("vertices", "edges"):
        if key not in d:
            raise GraphParseError("missing", field=key)
        if not isinstance(d[key], list):
            raise GraphParseError("must be a list", field=key)
    meta = d.get("metadata", {})
    if not isinstance(meta, dict):
        raise GraphParseError("must be an object", field="metadata")
    return _validate(str(d.get("name", "")), d["vertices"], d["edges"], meta)


def parse_edge_list(text: str, name: str = "") -> GraphDocument:
    vertices: list[str] = []
    known = set()
    edges = []
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) > 2:
            raise GraphParseError(f"expected 'u v' or 'u', got {len(toks)} tokens", line=lineno)
        for t in toks:
            if t not in known:
                known.add(t)
                vertices.append(t)
        if len(toks) == 2:
            edges.append(toks)
            lines.append(lineno)
    return _validate(name, vertices, edges, {}, line_of=lines)


def parse_graph(text: str, name: str = "") -> GraphDocument:
    """Parse either format; JSON is recognized by a leading ``{``."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_edge_list(text, name)


def emit_graph(doc: GraphDocument, fmt: str = "json") -> str:
    """Serialize in canonical form: vertices sorted, edges sorted with ``u < v``."""
    vertices = sorted(doc.vertices)
    edges = sorted(sorted(e) for e in doc.edges)
    if fmt == "json":
        d = {"name": doc.name, "vertices": vertices, "edges": edges}
        if doc.metadata:
            d["metadata"] = doc.metadata
        return json.dumps(d, indent=1, sort_keys=True) + "\n"
    if fmt == "text":
        touched = {v for e in edges for v in e}
        out = [f"# {doc.name}"] if doc.name else []
        out += [f"{u} {v}" for u, v in edges]
        out += [v for v in vertices if v not in touched]
        return "\n".join(out) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def read_graph(path: str) -> GraphDocument:
    import sys

    if path == "-":
        text = sys.stdin.read()
        stem = "stdin"
    else:
        with open(path) as fh:
            text = fh.read()
        stem = path.rsplit("/", 1)[-1].rsplit(".", 1)[0]
    doc = parse_graph(text, name=stem)
    if not doc.name:
        doc.name = stem
    return doc
