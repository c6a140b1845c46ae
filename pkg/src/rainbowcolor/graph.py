"""Simple undirected graphs, edge colorings, edge-list I/O and basic predicates."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator, Mapping
from typing import Optional

from .exceptions import ColoringMismatchError, GraphParseError, NotConnectedError

Edge = tuple[int, int]

DISCONNECTED = "disconnected"
WITH_BRIDGES = "connected-with-bridges"
TWO_EDGE_CONNECTED = "two-edge-connected-not-two-connected"
TWO_CONNECTED = "two-connected"


def edge_key(u: int, v: int) -> Edge:
    """Canonical (smaller, larger) form of an unordered vertex pair."""
    return (u, v) if u < v else (v, u)


def path_edges(path: Iterable[int]) -> list[Edge]:
    path = list(path)
    return [edge_key(a, b) for a, b in zip(path, path[1:])]


class Graph:
    """Immutable simple undirected graph.

    Vertex labels are non-negative integers. Graphs read through
    :func:`parse_graph` are dense (``0..n-1``); subgraphs keep the labels of
    their parent so colorings of pieces can be merged back without remapping.

    Parameters
    ----------
    edges : iterable of pairs
        Unordered vertex pairs. Duplicates collapse; self-loops raise.
    vertices : iterable of int, optional
        Extra (possibly isolated) vertices.
    """

    __slots__ = ("_vertices", "_edges", "_adj", "_edge_set", "_hash")

    def __init__(self, edges: Iterable[tuple[int, int]] = (), vertices: Optional[Iterable[int]] = None):
        adj: dict[int, set[int]] = {}
        edge_set: set[Edge] = set()
        for v in vertices or ():
            _check_vertex(v)
            adj.setdefault(v, set())
        for u, v in edges:
            _check_vertex(u)
            _check_vertex(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}: graphs must be simple")
            edge_set.add(edge_key(u, v))
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        self._vertices = tuple(sorted(adj))
        self._adj = {v: tuple(sorted(adj[v])) for v in self._vertices}
        self._edges = tuple(sorted(edge_set))
        self._edge_set = frozenset(edge_set)
        self._hash = None

    @classmethod
    def from_adjacency(cls, adjacency: Mapping[int, Iterable[int]]) -> "Graph":
        return cls(((u, v) for u, nbrs in adjacency.items() for v in nbrs), vertices=adjacency)

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self._edge_set

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(self._vertices)

    def __len__(self) -> int:
        return len(self._vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, self._edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def is_dense(self) -> bool:
        return self._vertices == tuple(range(self.n))

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        keep = set(vertices)
        return Graph((e for e in self._edges if e[0] in keep and e[1] in keep), vertices=keep)

    def edge_subgraph(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        edges = [edge_key(u, v) for u, v in edges]
        missing = [e for e in edges if e not in self._edge_set]
        if missing:
            raise ValueError(f"edges not in graph: {missing[:3]}")
        return Graph(edges)

    def without_vertex(self, v: int) -> "Graph":
        return self.induced_subgraph(u for u in self._vertices if u != v)

    def without_edge(self, u: int, v: int) -> "Graph":
        e = edge_key(u, v)
        return Graph((f for f in self._edges if f != e), vertices=self._vertices)

    def relabeled(self) -> tuple["Graph", dict[int, int]]:
        """Dense copy of the graph plus the old-to-new label map (order preserving)."""
        mapping = {v: i for i, v in enumerate(self._vertices)}
        g = Graph(((mapping[u], mapping[v]) for u, v in self._edges), vertices=range(self.n))
        return g, mapping


def _check_vertex(v) -> None:
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise ValueError(f"vertex ids must be non-negative integers, got {v!r}")


class EdgeColoring(Mapping):
    """Total map from the edges of a graph to color ids ``0..k-1``.

    Behaves as a read-only mapping keyed by canonical edges; lookups also
    accept the pair in either orientation.
    """

    __slots__ = ("graph", "_colors", "_palette")

    def __init__(self, graph: Graph, colors: Mapping[tuple[int, int], int]):
        assignment = {}
        for (u, v), c in colors.items():
            if isinstance(c, bool) or not isinstance(c, int) or c < 0:
                raise ValueError(f"color ids must be non-negative integers, got {c!r}")
            assignment[edge_key(u, v)] = c
        extra = set(assignment) - set(graph.edges)
        missing = set(graph.edges) - set(assignment)
        if extra or missing:
            raise ColoringMismatchError(
                f"coloring/graph mismatch: {len(missing)} uncolored edge(s), {len(extra)} edge(s) not in graph"
            )
        palette = frozenset(assignment.values())
        if palette != frozenset(range(len(palette))):
            raise ValueError(f"color ids must be dense 0..k-1, got {sorted(palette)}")
        self.graph = graph
        self._colors = {e: assignment[e] for e in graph.edges}
        self._palette = len(palette)

    @classmethod
    def normalized(cls, graph: Graph, colors: Mapping[tuple[int, int], int]) -> "EdgeColoring":
        """Build a coloring after squeezing arbitrary ids to ``0..k-1`` (order preserving)."""
        used = sorted(set(colors.values()))
        remap = {c: i for i, c in enumerate(used)}
        return cls(graph, {e: remap[c] for e, c in colors.items()})

    def __getitem__(self, e: tuple[int, int]) -> int:
        return self._colors[edge_key(*e)]

    def __iter__(self) -> Iterator[Edge]:
        return iter(self._colors)

    def __len__(self) -> int:
        return len(self._colors)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.graph == other.graph and self._colors == other._colors

    __hash__ = None

    def __repr__(self) -> str:
        return f"EdgeColoring(n={self.graph.n}, m={self.graph.m}, k={self._palette})"

    @property
    def palette_size(self) -> int:
        return self._palette

    def color(self, u: int, v: int) -> int:
        return self._colors[edge_key(u, v)]

    def colors_on(self, path: Iterable[int]) -> list[int]:
        """Colors along a vertex path, in order (the multiset ``c(P)``)."""
        return [self._colors[e] for e in path_edges(path)]

    def colors_in(self, subgraph: Graph) -> set[int]:
        return {self._colors[e] for e in subgraph.edges}

    def as_dict(self) -> dict[Edge, int]:
        return dict(self._colors)


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document into a dense graph.

    One ``u v`` pair per line; blank lines and ``#`` comments are skipped.
    Vertex ids are renumbered to ``0..n-1`` in numeric order and repeated
    edges collapse to one.
    """
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            if not all(t.isdigit() for t in tokens):
                raise ValueError
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphParseError(f"malformed vertex id in {line!r}", lineno) from None
        if u == v:
            raise GraphParseError(f"self-loop {u} {v} (graphs must be simple)", lineno)
        pairs.append((u, v))
    if not pairs:
        raise GraphParseError("document contains no edges")
    labels = sorted({x for p in pairs for x in p})
    index = {x: i for i, x in enumerate(labels)}
    return Graph(((index[u], index[v]) for u, v in pairs), vertices=range(len(labels)))


def format_edge_list(g: Graph, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"# n={g.n} m={g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, coloring: Optional[EdgeColoring] = None, name: str = "G") -> str:
    """Render as an undirected DOT graph; colored edges get ``color="cN"`` and label N."""
    out = [f"graph {name} {{"]
    for v in g.vertices:
        if g.degree(v) == 0:
            out.append(f"  {v};")
    for u, v in g.edges:
        if coloring is None:
            out.append(f"  {u} -- {v};")
        else:
            c = coloring.color(u, v)
            out.append(f'  {u} -- {v} [color="c{c}", label="{c}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return len(bfs_distances(g, g.vertices[0])) == g.n


def diameter(g: Graph) -> int:
    """Largest shortest-path distance over all vertex pairs (BFS from every vertex)."""
    if not is_connected(g):
        raise NotConnectedError("diameter is undefined for a disconnected graph")
    return max(max(bfs_distances(g, v).values()) for v in g.vertices)


def biconnected_edge_blocks(g: Graph) -> list[list[Edge]]:
    """Edge sets of the blocks of ``g`` via the iterative lowpoint DFS.

    Isolated vertices produce no block. Blocks appear in the order the DFS
    closes them.
    """
    depth: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[list[Edge]] = []
    for root in g.vertices:
        if root in depth:
            continue
        depth[root] = low[root] = 0
        edge_stack: list[Edge] = []
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            parent, grand, children = stack[-1]
            child = next(children, None)
            if child is None:
                stack.pop()
                if grand != -1:
                    low[grand] = min(low[grand], low[parent])
                    if low[parent] >= depth[grand]:
                        block = []
                        target = edge_key(grand, parent)
                        while True:
                            e = edge_stack.pop()
                            block.append(e)
                            if e == target:
                                break
                        blocks.append(sorted(block))
                continue
            if child == grand:
                continue
            if child in depth:
                if depth[child] < depth[parent]:
                    edge_stack.append(edge_key(parent, child))
                    low[parent] = min(low[parent], depth[child])
            else:
                depth[child] = low[child] = depth[parent] + 1
                edge_stack.append(edge_key(parent, child))
                stack.append((child, parent, iter(g.neighbors(child))))
    return blocks


def cut_vertices_and_bridges(g: Graph) -> tuple[set[int], set[Edge]]:
    seen: dict[int, int] = {}
    bridges = set()
    for block in biconnected_edge_blocks(g):
        if len(block) == 1:
            bridges.add(block[0])
        for v in {x for e in block for x in e}:
            seen[v] = seen.get(v, 0) + 1
    return {v for v, count in seen.items() if count > 1}, bridges


def structure_class(g: Graph) -> str:
    """One of ``disconnected``, ``connected-with-bridges``,
    ``two-edge-connected-not-two-connected`` or ``two-connected``."""
    if not is_connected(g):
        return DISCONNECTED
    cuts, bridges = cut_vertices_and_bridges(g)
    if bridges or g.n < 3:
        return WITH_BRIDGES if g.n >= 2 else TWO_EDGE_CONNECTED
    if cuts:
        return TWO_EDGE_CONNECTED
    return TWO_CONNECTED


def is_two_connected(g: Graph) -> bool:
    return structure_class(g) == TWO_CONNECTED
