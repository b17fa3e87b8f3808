"""Arrow-decorated plumbing graphs and their text format.

A graph file looks like::

    # the cone over a smooth plane cubic
    graph L5
    vertex v e=-3 g=1
    arrow v m=3

Directives are ``graph <name>`` (exactly one, first), ``vertex <id> e=<int>
g=<uint>``, ``edge <id> <id>`` and ``arrow <id> m=<int> [family=f|g]``.
``#`` comments run to end of line and blank lines are skipped.
"""
import re
from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field, replace

from plumblink.errors import InvalidGraph, ParseError, UnknownVertex

__all__ = [
    "Vertex",
    "Edge",
    "Arrow",
    "PlumbingMultilink",
    "Diagnostic",
    "FAMILIES",
    "parse_multilink",
    "serialize",
    "intersection_matrix",
    "valence",
    "rupture_vertices",
    "validate",
]

FAMILIES = ("f", "g")


@dataclass(frozen=True)
class Vertex:
    id: str
    euler: int
    genus: int = 0


@dataclass(frozen=True)
class Edge:
    a: str
    b: str

    @property
    def endpoints(self):
        return (self.a, self.b)


@dataclass(frozen=True)
class Arrow:
    attached_to: str
    multiplicity: int
    family: str | None = None


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # "warning" or "error"
    kind: str
    message: str

    def __str__(self):
        return f"{self.severity}: {self.message}"


@dataclass(frozen=True)
class PlumbingMultilink:
    """A plumbing graph with arrows.

    Construction checks what can be checked locally (unique ids, resolvable
    references, nonnegative genus, known family tags).  Global conditions
    (connectedness, no loops, at least one vertex) are reported by
    :func:`validate`; :func:`parse_multilink` enforces them.
    """

    name: str
    vertices: tuple = ()
    edges: tuple = ()
    arrows: tuple = ()
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        index = {}
        for i, v in enumerate(self.vertices):
            if v.id in index:
                raise InvalidGraph(f"duplicate vertex id {v.id!r}")
            if v.genus < 0:
                raise InvalidGraph(f"vertex {v.id!r} has negative genus {v.genus}")
            index[v.id] = i
        for e in self.edges:
            for end in e.endpoints:
                if end not in index:
                    raise UnknownVertex(end)
        for a in self.arrows:
            if a.attached_to not in index:
                raise UnknownVertex(a.attached_to)
            if a.family is not None and a.family not in FAMILIES:
                raise InvalidGraph(f"unknown arrow family {a.family!r}")
        object.__setattr__(self, "_index", index)

    @property
    def ids(self):
        return [v.id for v in self.vertices]

    def __len__(self):
        return len(self.vertices)

    def index(self, vid):
        try:
            return self._index[vid]
        except KeyError:
            raise UnknownVertex(vid) from None

    def vertex(self, vid):
        return self.vertices[self.index(vid)]

    def families(self):
        return {a.family for a in self.arrows if a.family is not None}

    def with_arrows(self, arrows):
        return replace(self, arrows=tuple(arrows))


_TOKEN = r"[^\s#=]+"
_INT = r"-?[0-9]+"
_LINE_RES = {
    "graph": re.compile(rf"graph ({_TOKEN})"),
    "vertex": re.compile(rf"vertex ({_TOKEN}) e=({_INT}) g=({_INT})"),
    "edge": re.compile(rf"edge ({_TOKEN}) ({_TOKEN})"),
    "arrow": re.compile(rf"arrow ({_TOKEN}) m=({_INT})(?: family=(\S+))?"),
}


def _normalize(line):
    return " ".join(line.split("#", 1)[0].split())


def parse_multilink(text):
    """Parse and fully validate a graph file.

    Raises :class:`ParseError` carrying the 1-based line number.  Errors
    about the graph as a whole (no vertices, disconnected) point at the
    ``graph`` line, or line 1 when there is none.
    """
    name = None
    graph_line = 1
    vertices, edges, arrows = [], [], []
    seen = {}
    refs = []  # (line, id) to resolve after all vertices are read

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _normalize(raw)
        if not line:
            continue
        directive = line.split(" ", 1)[0]
        pattern = _LINE_RES.get(directive)
        if pattern is None:
            raise ParseError(lineno, f"unknown directive {directive!r}")
        match = pattern.fullmatch(line)
        if match is None:
            raise ParseError(lineno, f"malformed {directive} line: {raw.strip()!r}")

        if directive == "graph":
            if name is not None:
                raise ParseError(lineno, "second graph line")
            name = match[1]
            graph_line = lineno
            continue
        if name is None:
            raise ParseError(lineno, "graph line must come first")

        if directive == "vertex":
            vid, euler, genus = match[1], int(match[2]), int(match[3])
            if vid in seen:
                raise ParseError(lineno, f"duplicate vertex id {vid!r} (first on line {seen[vid]})")
            if genus < 0:
                raise ParseError(lineno, f"negative genus {genus} on vertex {vid!r}")
            seen[vid] = lineno
            vertices.append(Vertex(vid, euler, genus))
        elif directive == "edge":
            a, b = match[1], match[2]
            if a == b:
                raise ParseError(lineno, f"loop edge at {a!r}")
            refs += [(lineno, a), (lineno, b)]
            edges.append(Edge(a, b))
        else:
            family = match[3]
            if family is not None and family not in FAMILIES:
                raise ParseError(lineno, f"family must be f or g, got {family!r}")
            refs.append((lineno, match[1]))
            arrows.append(Arrow(match[1], int(match[2]), family))

    for lineno, vid in refs:
        if vid not in seen:
            raise ParseError(lineno, f"dangling reference to vertex {vid!r}")
    if not vertices:
        raise ParseError(graph_line, "zero vertices")

    graph = PlumbingMultilink(name, vertices, edges, arrows)
    if not _is_connected(graph):
        raise ParseError(graph_line, "disconnected graph")
    return graph


def serialize(g):
    """Canonical text form; ``parse_multilink(serialize(g)) == g``."""
    lines = [f"graph {g.name}"]
    lines += [f"vertex {v.id} e={v.euler} g={v.genus}" for v in g.vertices]
    lines += [f"edge {e.a} {e.b}" for e in g.edges]
    for a in g.arrows:
        tail = f" family={a.family}" if a.family else ""
        lines.append(f"arrow {a.attached_to} m={a.multiplicity}{tail}")
    return "\n".join(lines) + "\n"


def intersection_matrix(g):
    """Euler numbers on the diagonal, edge counts off it; declaration order."""
    n = len(g.vertices)
    m = [[0] * n for _ in range(n)]
    for i, v in enumerate(g.vertices):
        m[i][i] = v.euler
    for e in g.edges:
        i, j = g.index(e.a), g.index(e.b)
        if i == j:
            raise InvalidGraph(f"loop edge at {e.a!r}")
        m[i][j] += 1
        m[j][i] += 1
    return tuple(tuple(row) for row in m)


def _valences(g):
    counts = Counter()
    for e in g.edges:
        counts[e.a] += 1
        counts[e.b] += 1
    for a in g.arrows:
        counts[a.attached_to] += 1
    return counts


def valence(g, v):
    """Edge endpoints at ``v`` plus arrows at ``v`` (every arrow counts once)."""
    g.index(v)
    return _valences(g)[v]


def rupture_vertices(g):
    """Vertices of positive genus or valence >= 3, arrows counted as edges."""
    counts = _valences(g)
    return frozenset(v.id for v in g.vertices if v.genus > 0 or counts[v.id] >= 3)


def _is_connected(g):
    if not g.vertices:
        return True
    adj = defaultdict(set)
    for e in g.edges:
        adj[e.a].add(e.b)
        adj[e.b].add(e.a)
    start = g.vertices[0].id
    seen = {start}
    queue = deque([start])
    while queue:
        for w in adj[queue.popleft()]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(g.vertices)


def validate(g):
    """Return diagnostics for ``g``; an empty list means clean."""
    out = []
    if not g.vertices:
        out.append(Diagnostic("error", "zero-vertices", "graph has no vertices"))
    for e in g.edges:
        if e.a == e.b:
            out.append(Diagnostic("error", "loop-edge", f"loop edge at {e.a}"))
    if not _is_connected(g):
        out.append(Diagnostic("error", "disconnected", "graph is disconnected"))
    for v in g.vertices:
        if v.euler >= 0:
            out.append(Diagnostic("warning", "nonnegative-euler",
                                  f"vertex {v.id} has Euler number {v.euler} >= 0"))
    for a in g.arrows:
        if a.multiplicity == 0:
            out.append(Diagnostic("warning", "zero-multiplicity-arrow",
                                  f"arrow at {a.attached_to} has multiplicity 0"))
    return out
