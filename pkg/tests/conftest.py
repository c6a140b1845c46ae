"""Shared graph builders and brute-force reference implementations.

The references here deliberately avoid the package's search code: they
enumerate simple paths or whole colorings directly so they can serve as
independent oracles.
"""

import itertools

import pytest

from rainbowcolor.graph import Graph, is_connected


def cycle(n, start=0):
    return Graph((start + i, start + (i + 1) % n) for i in range(n))


def complete(n):
    return Graph(itertools.combinations(range(n), 2))


def path_graph(n):
    return Graph((i, i + 1) for i in range(n - 1))


def theta(*lengths):
    """Internally disjoint hub-to-hub paths of the given lengths; hubs are 0 and 1."""
    edges, nxt = [], 2
    for ell in lengths:
        inner = list(range(nxt, nxt + ell - 1))
        nxt += ell - 1
        p = [0] + inner + [1]
        edges.extend(zip(p, p[1:]))
    return Graph(edges)


PAW = Graph([(0, 1), (1, 2), (2, 0), (2, 3)])
BOWTIE = Graph([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])


def all_simple_paths(g, u, v):
    """Every simple u-v path, by plain depth-first enumeration."""
    out = []
    stack = [(u, [u])]
    while stack:
        x, p = stack.pop()
        if x == v:
            out.append(p)
            continue
        for w in g.neighbors(x):
            if w not in p:
                stack.append((w, p + [w]))
    return out


def naive_rainbow_pairs(g, colors):
    """Set of pairs (u, v), u < v, joined by a rainbow path; every simple path is enumerated."""
    ok = set()
    for u in g.vertices:
        stack = [(u, (u,), ())]
        while stack:
            x, p, cs = stack.pop()
            if len(set(cs)) == len(cs) and x > u:
                ok.add((u, x))
            for w in g.neighbors(x):
                if w not in p:
                    stack.append((w, p + (w,), cs + (colors[(min(x, w), max(x, w))],)))
    return ok


def naive_is_rainbow(g, colors):
    want = {(u, v) for u, v in itertools.combinations(g.vertices, 2)}
    return want <= naive_rainbow_pairs(g, colors)


def naive_rc(g):
    """Smallest k for which some k^m assignment is rainbow (no symmetry breaking)."""
    if g.n == 1:
        return 0
    for k in range(1, g.m + 1):
        for assignment in itertools.product(range(k), repeat=g.m):
            if naive_is_rainbow(g, dict(zip(g.edges, assignment))):
                return k
    raise AssertionError("unreachable: m distinct colors always work")


def naive_class(g):
    """Structure class straight from the definitions, by deleting vertices and edges."""
    if not is_connected(g):
        return "disconnected"
    bridge = any(not is_connected(g.without_edge(u, v)) for u, v in g.edges)
    if g.n >= 2 and bridge:
        return "connected-with-bridges"
    cut = any(g.n > 2 and not is_connected(g.without_vertex(v)) for v in g.vertices)
    if g.n < 3 or cut:
        return "two-edge-connected-not-two-connected"
    return "two-connected"


def longest_cycle_length_through(g, v0):
    """Brute force over vertex permutations."""
    best = 0
    others = [v for v in g.vertices if v != v0]
    for size in range(2, len(others) + 1):
        for perm in itertools.permutations(others, size):
            seq = (v0,) + perm
            if all(g.has_edge(a, b) for a, b in zip(seq, seq[1:] + (v0,))):
                best = max(best, size + 1)
                break
    return best


@pytest.fixture(scope="session")
def atlas():
    """All graphs on 1..7 vertices (networkx graph atlas) as package graphs."""
    nx = pytest.importorskip("networkx")
    return [Graph(G.edges(), vertices=G.nodes()) for G in nx.graph_atlas_g()[1:]]


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
