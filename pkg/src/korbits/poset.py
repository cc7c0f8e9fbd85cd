"""Graded orbit posets with labelled solid and dashed edges."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

SOLID = "solid"
DASHED = "dashed"


@dataclass(frozen=True, order=True)
class Edge:
    src: str
    dst: str
    label: int | None = None
    style: str = SOLID


@dataclass
class ClosurePoset:
    dims: dict[str, int]
    edges: set[Edge] = field(default_factory=set)

    def vertices(self) -> list[str]:
        return sorted(self.dims, key=lambda v: (self.dims[v], v))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges, key=lambda e: (self.dims[e.src], e.src, self.dims[e.dst], e.dst, e.style, e.label or 0))

    def successors(self, v: str, style: str | None = None) -> set[str]:
        return {e.dst for e in self.edges if e.src == v and (style is None or e.style == style)}

    def upset(self, v: str, style: str | None = None) -> set[str]:
        """All w with v <= w using edges of the given style (all styles if None)."""
        adj: dict[str, set[str]] = {}
        for e in self.edges:
            if style is None or e.style == style:
                adj.setdefault(e.src, set()).add(e.dst)
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in adj.get(u, ()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    def closure(self, style: str | None = None) -> dict[str, set[str]]:
        return {v: self.upset(v, style) for v in self.dims}

    def leq(self, a: str, b: str, style: str | None = None) -> bool:
        return b in self.upset(a, style)

    def is_dag(self) -> bool:
        clo = self.closure()
        return all(not (a != b and a in clo[b]) for a in clo for b in clo[a])

    def maximal(self) -> list[str]:
        srcs = {e.src for e in self.edges}
        return [v for v in self.vertices() if v not in srcs]

    def minimal(self, style: str | None = None) -> list[str]:
        dsts = {e.dst for e in self.edges if style is None or e.style == style}
        return [v for v in self.vertices() if v not in dsts]

    def transitive_reduction(self) -> "ClosurePoset":
        keep = set()
        for e in self.edges:
            others = ClosurePoset(self.dims, {f for f in self.edges if (f.src, f.dst) != (e.src, e.dst)})
            if not others.leq(e.src, e.dst):
                keep.add(e)
        # collapse parallel edges, preferring solid
        best: dict[tuple[str, str], Edge] = {}
        for e in sorted(keep, key=lambda e: (e.style != SOLID, e.label or 0)):
            best.setdefault((e.src, e.dst), e)
        return ClosurePoset(dict(self.dims), set(best.values()))

    def to_dot(self, name: str = "orbits") -> str:
        lines = [f'digraph "{name}" {{', "  rankdir=BT;"]
        for v in self.vertices():
            lines.append(f'  "{v}" [label="{v}:{self.dims[v]}"];')
        for e in self.sorted_edges():
            attrs = [f"style={e.style}"]
            if e.label is not None:
                attrs.append(f'label="{e.label}"')
            lines.append(f'  "{e.src}" -> "{e.dst}" [{", ".join(attrs)}];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "vertices": [{"id": v, "dim": self.dims[v]} for v in self.vertices()],
            "edges": [
                {"from": e.src, "to": e.dst, "label": e.label, "style": e.style} for e in self.sorted_edges()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ClosurePoset":
        dims = {d["id"]: d["dim"] for d in data["vertices"]}
        edges = {Edge(e["from"], e["to"], e["label"], e["style"]) for e in data["edges"]}
        return cls(dims, edges)


_NODE = re.compile(r'^\s*"([^"]+)" \[label="([^"]+):(\d+)"\];$')
_EDGE = re.compile(r'^\s*"([^"]+)" -> "([^"]+)" \[style=(\w+)(?:, label="(\d+)")?\];$')


def parse_dot(text: str) -> ClosurePoset:
    """Read back the output of :meth:`ClosurePoset.to_dot`."""
    dims: dict[str, int] = {}
    edges = set()
    for line in text.splitlines():
        m = _NODE.match(line)
        if m:
            dims[m.group(1)] = int(m.group(3))
            continue
        m = _EDGE.match(line)
        if m:
            lab = int(m.group(4)) if m.group(4) else None
            edges.add(Edge(m.group(1), m.group(2), lab, m.group(3)))
    return ClosurePoset(dims, edges)


def isomorphisms(a: ClosurePoset, b: ClosurePoset, labels: bool = True):
    """Yield every dimension-preserving bijection a -> b carrying edges onto edges.

    Edges are compared with their style, and with their label when ``labels``.
    """
    if sorted(a.dims.values()) != sorted(b.dims.values()) or len(a.edges) != len(b.edges):
        return

    def key(e: Edge):
        return (e.style, e.label if labels else None)

    target = {(e.src, e.dst): key(e) for e in b.edges}
    source = {(e.src, e.dst): key(e) for e in a.edges}
    if len(source) != len(a.edges) or len(target) != len(b.edges):
        raise ValueError("parallel edges are not supported")
    order = a.vertices()
    assign: dict[str, str] = {}
    used: set[str] = set()

    def consistent(v: str) -> bool:
        for w in assign:
            if source.get((v, w)) != target.get((assign[v], assign[w])):
                return False
            if source.get((w, v)) != target.get((assign[w], assign[v])):
                return False
        return True

    def rec(i: int):
        if i == len(order):
            yield dict(assign)
            return
        v = order[i]
        for cand in b.vertices():
            if cand in used or b.dims[cand] != a.dims[v]:
                continue
            assign[v] = cand
            used.add(cand)
            if consistent(v):
                yield from rec(i + 1)
            del assign[v]
            used.discard(cand)

    yield from rec(0)
