"""Exact rainbow connection number by exhaustive search.

Colorings are enumerated up to relabeling of colors: edge ``i`` may only use a
color already used by edges ``0..i-1`` or the next unused one. Partial
colorings are pruned with a relaxation: treat uncolored edges as colorless
and ask whether every pair is still joined by a path whose colored edges are
distinct. Any completion's rainbow path passes that test, so a failing
partial coloring has no rainbow completion.
"""

from __future__ import annotations

from collections import deque
from typing import Optional

from .exceptions import NotConnectedError, SizeLimitError
from .graph import Edge, EdgeColoring, Graph, diameter, edge_key, is_connected
from .verify import _search

#: Default cap on the number of edges :func:`exact_rc` accepts.
MAX_EXACT_EDGES = 16


def _edge_order(g: Graph) -> list[Edge]:
    """Edges in breadth-first discovery order from the smallest vertex."""
    order: list[Edge] = []
    seen_e: set = set()
    seen_v = {g.vertices[0]}
    queue = deque([g.vertices[0]])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            e = edge_key(u, w)
            if e not in seen_e:
                seen_e.add(e)
                order.append(e)
            if w not in seen_v:
                seen_v.add(w)
                queue.append(w)
    return order


def _all_pairs_ok(g: Graph, bits: dict) -> bool:
    vertices = g.vertices
    for i, u in enumerate(vertices[:-1]):
        later = set(vertices[i + 1:])
        first, _ = _search(g, bits, u, targets=later)
        if not later <= first.keys():
            return False
    return True


def _reserved_color(g: Graph, bits: dict, root: int, k: int) -> Optional[int]:
    for x in range(k):
        first, _ = _search(g, bits, root, 1 << x, targets=set(g.vertices))
        if len(first) == g.n:
            return x
    return None


def search_coloring(g: Graph, k: int, root: Optional[int] = None):
    """Find a rainbow coloring of ``g`` with at most ``k`` colors.

    With ``root`` given, additionally require a color ``x`` such that every
    vertex reaches ``root`` by a rainbow path avoiding ``x``. Returns
    ``(coloring, x)`` (``x`` is None without a root) or None when no such
    coloring exists.
    """
    if g.m == 0:
        return (EdgeColoring(g, {}), None) if root is None else None
    edges = _edge_order(g)
    m = len(edges)
    bits = {e: 0 for e in edges}
    assignment = [0] * m

    def solve(i: int, used: int):
        if not _all_pairs_ok(g, bits):
            return None
        if i == m:
            if root is None:
                return None, used
            x = _reserved_color(g, bits, root, used)
            return None if x is None else (x, used)
        for col in range(min(used + 1, k)):
            assignment[i] = col
            bits[edges[i]] = 1 << col
            found = solve(i + 1, max(used, col + 1))
            if found is not None:
                return found
        bits[edges[i]] = 0
        return None

    found = solve(0, 0)
    if found is None:
        return None
    x, _ = found
    return EdgeColoring(g, dict(zip(edges, assignment))), x


def exact_rc_certificate(g: Graph, cap: Optional[int] = None,
                         max_edges: int = MAX_EXACT_EDGES) -> tuple[int, EdgeColoring]:
    """Smallest ``k`` admitting a rainbow ``k``-coloring, with a coloring that attains it.

    The search starts at the diameter (a lower bound) and stops at
    ``min(cap, m)``; ``m`` distinct colors always work.
    """
    if not is_connected(g):
        raise NotConnectedError("rainbow connection number is undefined for a disconnected graph")
    if g.m > max_edges:
        raise SizeLimitError(f"exact search is exponential; {g.m} edges exceeds the limit of {max_edges}")
    if g.n == 1:
        return 0, EdgeColoring(g, {})
    top = g.m if cap is None else min(cap, g.m)
    for k in range(diameter(g), top + 1):
        found = search_coloring(g, k)
        if found is not None:
            c = found[0]
            if c.palette_size == k:
                return k, c
            raise AssertionError("search returned fewer colors than a smaller k already refuted")
    raise SizeLimitError(f"no rainbow coloring with at most cap={cap} colors")


def exact_rc(g: Graph, cap: Optional[int] = None, max_edges: int = MAX_EXACT_EDGES) -> int:
    """Rainbow connection number of ``g`` (exponential search; small graphs only)."""
    return exact_rc_certificate(g, cap=cap, max_edges=max_edges)[0]
