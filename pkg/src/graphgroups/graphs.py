"""Finite simple graphs with the constructions used for graph monoids and groups.

Vertices are strings with a fixed total (lexicographic) order, used wherever a
canonical order is needed. The adjacency relation is conceptually reflexive:
``adjacent(v, v)`` reports true, but loops are never stored. Graphs are
immutable values; all operations here are pure functions.
"""

from __future__ import annotations

import itertools
import re

VERTEX_NAME = re.compile(r"[A-Za-z0-9_]+\Z")

_STANDARD = re.compile(
    r"\s*(?:(C4)|(L3)|E\(\s*(\d+)\s*,\s*(\d+)\s*\)"
    r"|complete\(\s*(\d+)\s*\)|cycle\(\s*(\d+)\s*\)|path\(\s*(\d+)\s*\))\s*\Z"
)


class ParseError(ValueError):
    """A graph or word file that violates the text format."""

    def __init__(self, message, filename="<input>", line=None):
        self.filename = filename
        self.line = line
        where = filename if line is None else f"{filename}:{line}"
        super().__init__(f"{where}: {message}")


class Graph:
    """A finite simple graph with string-named vertices.

    Edges are stored as unordered pairs of distinct vertices; ``adjacent``
    treats every vertex as adjacent to itself.
    """

    __slots__ = ("vertices", "_edges", "_adj")

    def __init__(self, vertices, edges=()):
        verts = tuple(sorted(vertices))
        for i in range(1, len(verts)):
            if verts[i] == verts[i - 1]:
                raise ValueError(f"duplicate vertex {verts[i]!r}")
        vset = set(verts)
        adj = {v: set() for v in verts}
        eset = set()
        for e in edges:
            u, v = tuple(e)
            if u not in vset or v not in vset:
                bad = u if u not in vset else v
                raise ValueError(f"edge endpoint {bad!r} is not a vertex")
            if u == v:
                raise ValueError(f"self-loop at {u!r} not allowed")
            eset.add(frozenset((u, v)))
            adj[u].add(v)
            adj[v].add(u)
        self.vertices = verts
        self._edges = frozenset(eset)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}

    # -- basic queries -------------------------------------------------

    def __contains__(self, v):
        return v in self._adj

    def __len__(self):
        return len(self.vertices)

    def adjacent(self, u, v):
        """Reflexive adjacency: true when u == v or {u, v} is an edge."""
        if u not in self._adj or v not in self._adj:
            bad = u if u not in self._adj else v
            raise ValueError(f"unknown vertex {bad!r}")
        return u == v or v in self._adj[u]

    def neighbors(self, v):
        if v not in self._adj:
            raise ValueError(f"unknown vertex {v!r}")
        return self._adj[v]

    def degree(self, v):
        """Number of vertices adjacent to and distinct from v."""
        return len(self.neighbors(v))

    def edges(self):
        """Edges as a sorted tuple of sorted pairs."""
        return tuple(sorted(tuple(sorted(e)) for e in self._edges))

    @property
    def edge_count(self):
        return len(self._edges)

    def non_adjacent_pairs(self):
        """Sorted unordered pairs of distinct non-adjacent vertices."""
        return tuple(
            (u, v)
            for u, v in itertools.combinations(self.vertices, 2)
            if v not in self._adj[u]
        )

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self._edges == other._edges

    def __hash__(self):
        return hash((self.vertices, self._edges))

    def __repr__(self):
        return f"Graph({len(self.vertices)} vertices, {len(self._edges)} edges)"


# -- named graphs ------------------------------------------------------


def standard_graph(name):
    """Build one of the named graphs.

    Recognized names: ``C4``, ``L3``, ``E(i,j)`` (i isolated vertices plus j
    disjoint edges), ``complete(n)``, ``cycle(n)`` (n >= 3) and ``path(n)``
    (path on n vertices). Vertices are named v1, v2, ...
    """
    m = _STANDARD.match(name)
    if m is None:
        raise ValueError(f"unknown standard graph {name!r}")
    c4, l3, ei, ej, kn, cn, pn = m.groups()
    if c4:
        return standard_graph("cycle(4)")
    if l3:
        return standard_graph("path(4)")
    if ei is not None:
        i, j = int(ei), int(ej)
        n = i + 2 * j
        verts = [f"v{k}" for k in range(1, n + 1)]
        edges = [(verts[i + 2 * k], verts[i + 2 * k + 1]) for k in range(j)]
        return Graph(verts, edges)
    if kn is not None:
        n = int(kn)
        verts = [f"v{k}" for k in range(1, n + 1)]
        return Graph(verts, itertools.combinations(verts, 2))
    if cn is not None:
        n = int(cn)
        if n < 3:
            raise ValueError("cycle(n) needs n >= 3")
        verts = [f"v{k}" for k in range(1, n + 1)]
        edges = [(verts[k], verts[(k + 1) % n]) for k in range(n)]
        return Graph(verts, edges)
    n = int(pn)
    verts = [f"v{k}" for k in range(1, n + 1)]
    edges = [(verts[k], verts[k + 1]) for k in range(n - 1)]
    return Graph(verts, edges)


# -- constructions -----------------------------------------------------


def complement(g):
    """Same vertices; distinct u, v adjacent exactly if non-adjacent in g."""
    return Graph(g.vertices, g.non_adjacent_pairs())


def resolve_name_collisions(g, h):
    """Rename h's vertices away from g's, suffixing with underscores.

    Returns ``(renamed_h, renaming)`` where renaming maps old h-names to new
    ones (only the changed names appear).
    """
    taken = set(g.vertices)
    renaming = {}
    for v in h.vertices:
        if v in taken:
            new = v + "_2"
            while new in taken or new in h:
                new += "_"
            renaming[v] = new
            taken.add(new)
        else:
            taken.add(v)
    if not renaming:
        return h, {}
    sub = lambda v: renaming.get(v, v)
    renamed = Graph(
        [sub(v) for v in h.vertices], [(sub(u), sub(v)) for u, v in h.edges()]
    )
    return renamed, renaming


def connected_product(g, h):
    """Disjoint union of g and h plus every cross edge.

    Vertex-name collisions are resolved by renaming h's vertices (see
    ``resolve_name_collisions``).
    """
    h, _ = resolve_name_collisions(g, h)
    cross = itertools.product(g.vertices, h.vertices)
    return Graph(
        g.vertices + h.vertices,
        list(g.edges()) + list(h.edges()) + list(cross),
    )


def co_components(g):
    """Connected components of the complement, as sorted disjoint blocks."""
    remaining = set(g.vertices)
    blocks = []
    while remaining:
        start = min(remaining)
        block = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for u in remaining - block:
                if u not in g.neighbors(v):
                    block.add(u)
                    frontier.append(u)
        remaining -= block
        blocks.append(tuple(sorted(block)))
    return tuple(sorted(blocks))


def induced(g, subset):
    """Subgraph induced by a subset of vertices."""
    sub = set(subset)
    for v in sub:
        if v not in g:
            raise ValueError(f"unknown vertex {v!r}")
    return Graph(sub, [e for e in g.edges() if e[0] in sub and e[1] in sub])


# -- induced-subgraph embedding ---------------------------------------


def find_embedding(pattern, host):
    """Search for an injection of pattern into host preserving adjacency
    and non-adjacency (an induced-subgraph isomorphism witness).

    Returns a dict mapping pattern vertices to host vertices, or None after
    exhaustive backtracking. Pattern vertices are assigned in decreasing
    degree order with degree-based forward pruning; exponential worst case,
    intended for small graphs.
    """
    pverts = sorted(pattern.vertices, key=lambda v: (-pattern.degree(v), v))
    if len(pverts) > len(host.vertices):
        return None
    mapping = {}
    used = set()

    def extend(i):
        if i == len(pverts):
            return True
        p = pverts[i]
        for hvert in host.vertices:
            if hvert in used or host.degree(hvert) < pattern.degree(p):
                continue
            if all(
                pattern.adjacent(p, q) == host.adjacent(hvert, mapping[q])
                for q in pverts[:i]
            ):
                mapping[p] = hvert
                used.add(hvert)
                if extend(i + 1):
                    return True
                del mapping[p]
                used.remove(hvert)
        return False

    return dict(mapping) if extend(0) else None


def clique_number(g):
    """Size of the largest complete induced subgraph (backtracking search)."""
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    best = 0

    def extend(candidates, size):
        nonlocal best
        if size + len(candidates) <= best:
            return
        if not candidates:
            best = max(best, size)
            return
        for i, v in enumerate(candidates):
            extend([u for u in candidates[i + 1 :] if u in g.neighbors(v)], size + 1)

    extend(order, 0)
    return best


# -- text format -------------------------------------------------------


def parse_graph(text, filename="<input>"):
    """Parse the line-oriented graph format.

    One ``vertices a b c`` line (or several) declares the vertex set, then
    zero or more ``edge a b`` lines. ``#`` starts a comment. Duplicate
    vertices, unknown endpoints and self-loops are rejected.
    """
    names = []
    seen = set()
    edges = []
    declared = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "vertices":
            declared = True
            for name in tokens[1:]:
                if not VERTEX_NAME.match(name):
                    raise ParseError(f"bad vertex name {name!r}", filename, lineno)
                if name in seen:
                    raise ParseError(f"duplicate vertex {name!r}", filename, lineno)
                seen.add(name)
                names.append(name)
        elif tokens[0] == "edge":
            if len(tokens) != 3:
                raise ParseError("edge line needs exactly two endpoints", filename, lineno)
            u, v = tokens[1], tokens[2]
            for w in (u, v):
                if w not in seen:
                    raise ParseError(f"unknown vertex {w!r} in edge", filename, lineno)
            if u == v:
                raise ParseError(f"self-loop at {u!r} not allowed", filename, lineno)
            edges.append((u, v))
        else:
            raise ParseError(f"unknown directive {tokens[0]!r}", filename, lineno)
    if not declared:
        raise ParseError("missing 'vertices' line", filename)
    return Graph(names, edges)


def format_graph(g):
    """Render a graph in the text format accepted by ``parse_graph``."""
    lines = ["vertices " + " ".join(g.vertices) if g.vertices else "vertices"]
    lines.extend(f"edge {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
