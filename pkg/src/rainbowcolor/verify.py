"""Rainbow-connectivity checks.

All searches run over states ``(vertex, set of colors used so far)`` and never
extend a walk with a color it already used. A rainbow walk can always be
shortcut to a rainbow path, so exploring walks is exact; a state is dropped
when the same vertex was already reached with a subset of its colors.
Breadth-first order makes the first arrival at each vertex a shortest rainbow
path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .exceptions import ColoringMismatchError
from .graph import EdgeColoring, Graph, edge_key


@dataclass
class RainbowReport:
    """Outcome of :func:`verify_rainbow`.

    ``witness`` is the lexicographically least pair with no rainbow path when
    the verdict is false. ``paths`` maps each pair ``(u, v)`` with ``u < v``
    to a shortest rainbow path when requested.
    """

    verdict: bool
    colors_used: int
    witness: Optional[tuple[int, int]] = None
    paths: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.verdict

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "colors_used": self.colors_used, "witness": self.witness}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        return out


def _check_cover(g: Graph, c: EdgeColoring) -> None:
    if set(c) != set(g.edges):
        raise ColoringMismatchError("coloring does not cover exactly the edges of the graph")


def _edge_bits(c: EdgeColoring) -> dict:
    return {e: 1 << col for e, col in c.items()}


def _search(g: Graph, bits: dict, source: int, start_mask: int = 0, max_len: Optional[int] = None,
            targets: Optional[set] = None):
    """Breadth-first rainbow search from ``source``.

    Returns ``(first, parent)``: ``first[v]`` is the state of the first (hence
    shortest) arrival at ``v``; ``parent`` links states back to the source.
    Colors in ``start_mask`` are forbidden. Stops early once every vertex of
    ``targets`` has been reached.
    """
    start = (source, start_mask)
    first = {source: start}
    parent = {start: None}
    seen = {source: [start_mask]}
    frontier = [start]
    remaining = set(targets) - {source} if targets is not None else None
    depth = 0
    while frontier and (max_len is None or depth < max_len):
        if remaining is not None and not remaining:
            break
        nxt = []
        for state in frontier:
            v, mask = state
            for w in g.neighbors(v):
                b = bits[edge_key(v, w)]
                if mask & b:
                    continue
                nm = mask | b
                masks = seen.setdefault(w, [])
                if any(m & nm == m for m in masks):
                    continue
                masks.append(nm)
                new = (w, nm)
                parent[new] = state
                if w not in first:
                    first[w] = new
                    if remaining is not None:
                        remaining.discard(w)
                nxt.append(new)
        frontier = nxt
        depth += 1
    return first, parent


def _trace(parent: dict, state) -> tuple[int, ...]:
    out = []
    while state is not None:
        out.append(state[0])
        state = parent[state]
    return tuple(reversed(out))


def rainbow_path(g: Graph, c: EdgeColoring, u: int, v: int, avoid: Iterable[int] = (),
                 max_len: Optional[int] = None) -> Optional[tuple[int, ...]]:
    """Shortest rainbow ``u``-``v`` path using none of the colors in ``avoid``, or None."""
    start = 0
    for col in avoid:
        start |= 1 << col
    first, parent = _search(g, _edge_bits(c), u, start, max_len=max_len, targets={v})
    if v not in first:
        return None
    return _trace(parent, first[v])


def verify_rainbow(g: Graph, c: EdgeColoring, with_paths: bool = False) -> RainbowReport:
    """Decide whether every vertex pair of ``g`` is joined by a rainbow path under ``c``."""
    _check_cover(g, c)
    bits = _edge_bits(c)
    paths = {}
    for u in g.vertices:
        later = {v for v in g.vertices if v > u}
        if not later:
            break
        first, parent = _search(g, bits, u, targets=later)
        missing = sorted(later - set(first))
        if missing:
            return RainbowReport(False, c.palette_size, witness=(u, missing[0]))
        if with_paths:
            for v in sorted(later):
                paths[(u, v)] = _trace(parent, first[v])
    return RainbowReport(True, c.palette_size, paths=paths)


def is_rainbow_connected(g: Graph, c: EdgeColoring) -> bool:
    return verify_rainbow(g, c).verdict


def reaches_root_avoiding(g: Graph, c: EdgeColoring, root: int, reserved: int) -> bool:
    """True iff every vertex has a rainbow path to ``root`` that avoids color ``reserved``."""
    first, _ = _search(g, _edge_bits(c), root, 1 << reserved, targets=set(g.vertices))
    return len(first) == g.n


def verify_lemma3_property(g: Graph, res) -> bool:
    """Check the reserved-color property of a :class:`~rainbowcolor.coloring.Lemma3Result`."""
    _check_cover(g, res.coloring)
    return reaches_root_avoiding(g, res.coloring, res.root, res.reserved_color)


def find_incomplete_rainbow_path(g: Graph, c: EdgeColoring, u: int, v: int) -> Optional[tuple[int, ...]]:
    """A rainbow ``u``-``v`` path with fewer edges than the palette size, or None."""
    k = c.palette_size
    if k == 0:
        return None
    return rainbow_path(g, c, u, v, max_len=k - 1)


def is_incomplete_coloring(g: Graph, c: EdgeColoring) -> bool:
    """True iff each vertex has at most one partner reachable only by complete rainbow paths."""
    report = verify_rainbow(g, c)
    if not report.verdict:
        raise ValueError(f"coloring is not rainbow (no rainbow path for pair {report.witness})")
    k = c.palette_size
    bits = _edge_bits(c)
    for u in g.vertices:
        first, _ = _search(g, bits, u, max_len=k - 1)
        if g.n - len(first) > 1:
            return False
    return True
