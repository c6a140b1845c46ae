"""Block decomposition, block ordering and nonincreasing ear decomposition."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .exceptions import ConstructionError, NotConnectedError, NotTwoConnectedError, SizeLimitError
from .graph import Edge, Graph, biconnected_edge_blocks, edge_key, is_connected, is_two_connected, path_edges

#: Largest order accepted by :func:`ear_decomposition`; the longest-cycle and
#: longest-ear searches are exhaustive.
MAX_EAR_ORDER = 24


@dataclass(frozen=True)
class Block:
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def is_even(self) -> bool:
        return self.order % 2 == 0

    def graph(self) -> Graph:
        return Graph(self.edges)


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks of a connected graph, sorted by vertex tuple.

    ``q`` is the number of blocks and ``r`` the number of blocks of even order.
    """

    graph: Graph
    blocks: tuple[Block, ...]
    cut_vertices: frozenset

    @property
    def q(self) -> int:
        return len(self.blocks)

    @property
    def r(self) -> int:
        return sum(b.is_even for b in self.blocks)

    def blocks_at(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b.vertices]

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "r": self.r,
            "blocks": [list(b.vertices) for b in self.blocks],
            "cut_vertices": sorted(self.cut_vertices),
        }


@dataclass(frozen=True)
class BlockOrdering:
    """Blocks in attachment order.

    Each entry is ``(block_index, attachment)``; the attachment of every entry
    after the first is the single vertex the block shares with the union of
    the blocks listed before it.
    """

    decomposition: BlockDecomposition
    sequence: tuple[tuple[int, Optional[int]], ...]

    def __iter__(self):
        return iter(self.sequence)

    def __len__(self):
        return len(self.sequence)

    def blocks(self) -> list[Block]:
        return [self.decomposition.blocks[i] for i, _ in self.sequence]

    def to_json(self) -> list[dict]:
        return [{"block": i, "attachment": a} for i, a in self.sequence]


def block_decomposition(g: Graph) -> BlockDecomposition:
    if g.n < 2:
        raise ValueError("block decomposition needs at least two vertices")
    if not is_connected(g):
        raise NotConnectedError("block decomposition needs a connected graph")
    blocks = []
    for edges in biconnected_edge_blocks(g):
        vertices = tuple(sorted({x for e in edges for x in e}))
        blocks.append(Block(vertices, tuple(sorted(edges))))
    blocks.sort(key=lambda b: b.vertices)
    count: dict[int, int] = {}
    for b in blocks:
        for v in b.vertices:
            count[v] = count.get(v, 0) + 1
    cuts = frozenset(v for v, c in count.items() if c > 1)
    return BlockDecomposition(g, tuple(blocks), cuts)


def block_ordering(d: BlockDecomposition) -> BlockOrdering:
    """Breadth-first walk of the block-cut tree.

    The root is the first even block when there is one, otherwise block 0.
    """
    root = next((i for i, b in enumerate(d.blocks) if b.is_even), 0)
    seen = {root}
    sequence: list[tuple[int, Optional[int]]] = [(root, None)]
    queue = deque([root])
    while queue:
        i = queue.popleft()
        for v in d.blocks[i].vertices:
            if v not in d.cut_vertices:
                continue
            for j in d.blocks_at(v):
                if j not in seen:
                    seen.add(j)
                    sequence.append((j, v))
                    queue.append(j)
    return BlockOrdering(d, tuple(sequence))


@dataclass(frozen=True)
class EarDecomposition:
    """Initial cycle through ``root`` followed by ears of nonincreasing length.

    ``initial_cycle`` lists the cycle's vertices once, starting at ``root``;
    each ear is a vertex path whose end vertices lie in the earlier pieces.
    """

    graph: Graph
    root: int
    initial_cycle: tuple[int, ...]
    ears: tuple[tuple[int, ...], ...]
    _prefix_cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def lengths(self) -> list[int]:
        return [len(p) - 1 for p in self.ears]

    def cycle_edges(self) -> list[Edge]:
        c = self.initial_cycle
        return path_edges(c + (c[0],))

    def prefix_graph(self, i: int) -> Graph:
        """``G_i``: the initial cycle plus the first ``i`` ears."""
        if i not in self._prefix_cache:
            edges = self.cycle_edges()
            for ear in self.ears[:i]:
                edges.extend(path_edges(ear))
            self._prefix_cache[i] = Graph(edges)
        return self._prefix_cache[i]

    def to_json(self) -> dict:
        return {
            "root": self.root,
            "initial_cycle": list(self.initial_cycle),
            "ears": [list(p) for p in self.ears],
            "lengths": self.lengths,
        }


def ear_decomposition(g: Graph, v0: int, max_order: int = MAX_EAR_ORDER) -> EarDecomposition:
    """Nonincreasing ear decomposition whose initial cycle is a longest cycle through ``v0``.

    Ears are taken greedily, always a longest ear of the current subgraph.
    Ties go to the lexicographically smallest vertex sequence. Both searches
    are exhaustive, so inputs above ``max_order`` vertices are refused.
    """
    if v0 not in g:
        raise ValueError(f"vertex {v0} is not in the graph")
    if g.n > max_order:
        raise SizeLimitError(f"ear decomposition is exhaustive; order {g.n} exceeds limit {max_order}")
    if not is_two_connected(g):
        raise NotTwoConnectedError("ear decomposition needs a 2-connected graph")
    return _ear_decomposition(g, v0)


@lru_cache(maxsize=4096)
def _ear_decomposition(g: Graph, v0: int) -> EarDecomposition:
    cycle = longest_cycle_through(g, v0)
    inside = set(cycle)
    used = set(path_edges(cycle + (cycle[0],)))
    ears = []
    while len(used) < g.m:
        ear = _longest_ear(g, inside, used)
        if ears and len(ear) > len(ears[-1]):
            raise ConstructionError(
                f"greedy ear decomposition increased: ear {ears[-1]} (length {len(ears[-1]) - 1}) "
                f"followed by {ear} (length {len(ear) - 1})"
            )
        ears.append(ear)
        inside.update(ear)
        used.update(path_edges(ear))
    return EarDecomposition(g, v0, cycle, tuple(ears))


def longest_cycle_through(g: Graph, v0: int) -> tuple[int, ...]:
    """Longest cycle containing ``v0``, lexicographically smallest among ties.

    The cycle is returned as a vertex sequence starting at ``v0``.
    """
    n = g.n
    best: list[int] = []
    path = [v0]
    on_path = {v0}

    def reachable_bound(u: int) -> int:
        # vertices still reachable from u avoiding the path: an upper bound on extension
        seen = {u}
        queue = [u]
        while queue:
            x = queue.pop()
            for y in g.neighbors(x):
                if y not in seen and y not in on_path:
                    seen.add(y)
                    queue.append(y)
        return len(seen) - 1

    def extend(u: int) -> bool:
        nonlocal best
        if len(path) >= 3 and g.has_edge(u, v0) and len(path) > len(best):
            best = list(path)
            if len(best) == n:
                return True
        if best and len(path) + reachable_bound(u) <= len(best):
            return False
        for w in g.neighbors(u):
            if w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            done = extend(w)
            path.pop()
            on_path.discard(w)
            if done:
                return True
        return False

    extend(v0)
    if not best:
        raise NotTwoConnectedError(f"no cycle through vertex {v0}")
    return tuple(best)


def _longest_ear(g: Graph, inside: set, used: set) -> tuple[int, ...]:
    outside_count = g.n - len(inside)
    best: Optional[tuple[int, ...]] = None
    limit = outside_count + 1

    for a in sorted(inside):
        path = [a]
        on_path = {a}
        stack = [iter(w for w in g.neighbors(a) if w not in inside)]
        while stack:
            w = next(stack[-1], None)
            if w is None:
                stack.pop()
                on_path.discard(path.pop())
                continue
            if w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            for b in g.neighbors(w):
                if b in inside and b != a:
                    cand = tuple(path) + (b,)
                    if best is None or len(cand) > len(best) or (
                        len(cand) == len(best) and min(cand, cand[::-1]) < best
                    ):
                        best = min(cand, cand[::-1])
            if best is not None and len(best) - 1 == limit and best[0] <= a:
                return best
            stack.append(iter(x for x in g.neighbors(w) if x not in inside))
    if best is not None:
        return best
    for e in g.edges:
        if e not in used:
            return e
    raise ConstructionError("no ear found although edges remain")


def is_nonincreasing(d: EarDecomposition) -> bool:
    lengths = d.lengths
    return all(a >= b for a, b in zip(lengths, lengths[1:]))


def covers_graph(d: EarDecomposition) -> bool:
    pieces = [edge_key(*e) for e in d.cycle_edges()]
    for ear in d.ears:
        pieces.extend(path_edges(ear))
    return len(pieces) == len(set(pieces)) and set(pieces) == set(d.graph.edges)
