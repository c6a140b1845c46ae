"""Tight example families and random corpora."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .exceptions import ParameterError
from .graph import Graph, diameter


@dataclass(frozen=True)
class Figure1Params:
    """Block count ``q``, even-block count ``r`` and order ``n`` of a chain that meets the cut-vertex bound."""

    q: int
    r: int
    n: int

    @property
    def big_cycle(self) -> int:
        return self.n - 2 * self.q + self.r + 2

    def validate(self) -> None:
        q, r, n = self.q, self.r, self.n
        if q < 2:
            raise ParameterError(f"need q >= 2 blocks, got {q}")
        if not 0 <= r <= q - 1:
            raise ParameterError(f"need 0 <= r <= q - 1, got r={r}, q={q}")
        if (n + r) % 2 == 0:
            raise ParameterError(f"n + r must be odd, got n={n}, r={r}")
        if self.big_cycle < 3:
            raise ParameterError(f"cycle order n - 2q + r + 2 = {self.big_cycle} is below 3")


BlockSpec = Union[str, tuple]


def _cycle_edges(vertices: Sequence[int]) -> list[tuple[int, int]]:
    return [(vertices[i], vertices[(i + 1) % len(vertices)]) for i in range(len(vertices))]


def _parse_descriptor(desc: BlockSpec) -> tuple[str, int]:
    if isinstance(desc, tuple):
        kind, size = desc
    else:
        text = desc.strip().lower()
        if text == "k2":
            return "k2", 2
        match = re.fullmatch(r"(cycle|clique)\(?(\d+)\)?", text) or re.fullmatch(r"(c|k)(\d+)", text)
        if not match:
            raise ParameterError(f"invalid block descriptor {desc!r}")
        kind, size = match.group(1), int(match.group(2))
        kind = {"c": "cycle", "k": "clique"}.get(kind, kind)
        if kind == "clique" and size == 2:
            return "k2", 2
    if kind == "k2":
        return "k2", 2
    if kind not in ("cycle", "clique") or not isinstance(size, int) or size < 3:
        raise ParameterError(f"invalid block descriptor {desc!r}: need cycle(m)/clique(m) with m >= 3, or k2")
    return kind, size


def block_chain(blocks: Iterable[BlockSpec]) -> Graph:
    """Chain blocks so that consecutive blocks share exactly one vertex.

    Descriptors are ``"k2"``, ``"cycle(m)"``/``"cycleM"``/``"cM"`` and
    ``"clique(m)"``/``"kM"``, or ``(kind, m)`` tuples. Each block enters at
    its vertex 0 and hands over at the vertex farthest from it (the
    antipode on a cycle), so diameters add up along the chain.
    """
    specs = [_parse_descriptor(b) for b in blocks]
    if not specs:
        raise ParameterError("block chain needs at least one block")
    edges = []
    entry = 0
    nxt = 1
    for kind, size in specs:
        local = [entry] + list(range(nxt, nxt + size - 1))
        nxt += size - 1
        if kind == "k2":
            edges.append((local[0], local[1]))
            entry = local[1]
        elif kind == "cycle":
            edges.extend(_cycle_edges(local))
            entry = local[size // 2]
        else:
            edges.extend((local[i], local[j]) for i in range(size) for j in range(i + 1, size))
            entry = local[1]
    return Graph(edges, vertices=range(nxt))


def figure1_graph(p: Figure1Params) -> Graph:
    """``r`` copies of ``K2``, then ``q - r - 1`` triangles, then one odd cycle ``C_{n-2q+r+2}``.

    The diameter is asserted to equal ``(n + r - 1) / 2``.
    """
    p.validate()
    spec = ["k2"] * p.r + [("cycle", 3)] * (p.q - p.r - 1) + [("cycle", p.big_cycle)]
    g = block_chain(spec)
    expected = (p.n + p.r - 1) // 2
    if g.n != p.n or diameter(g) != expected:
        raise AssertionError(f"figure1 construction broke: n={g.n}, diameter={diameter(g)}, want {p.n}, {expected}")
    return g


def figure2_graph(k: int, variant: int) -> Graph:
    """Bridgeless chain of order ``3k + variant`` whose diameter meets the 2-edge-connected bound.

    * variant 1: ``k`` copies of ``C4``;
    * variant 2: ``C3``, ``k - 1`` copies of ``C4``, ``C3``;
    * variant 3: ``k`` copies of ``C4`` then ``C3``.

    Diameters are ``2k``, ``2k`` and ``2k + 1``; order and diameter are
    asserted after construction.
    """
    if not isinstance(k, int) or k < 1:
        raise ParameterError(f"need k >= 1, got {k}")
    if variant == 1:
        spec = [("cycle", 4)] * k
    elif variant == 2:
        spec = [("cycle", 3)] + [("cycle", 4)] * (k - 1) + [("cycle", 3)]
    elif variant == 3:
        spec = [("cycle", 4)] * k + [("cycle", 3)]
    else:
        raise ParameterError(f"variant must be 1, 2 or 3, got {variant}")
    g = block_chain(spec)
    want_d = 2 * k + (1 if variant == 3 else 0)
    if g.n != 3 * k + variant or diameter(g) != want_d:
        raise AssertionError(f"figure2 construction broke: n={g.n}, diameter={diameter(g)}")
    return g


def random_two_connected(n: int, extra_ears: int, seed: int) -> Graph:
    """Random cycle plus ``extra_ears`` random ears that use up the remaining vertices.

    Each ear joins two distinct existing vertices (a chord when it has no
    internal vertex), so the result is 2-connected with ``n + extra_ears``
    edges. The vertices left after the cycle are split at random among the
    ears. Deterministic for a given seed.
    """
    if n < 3:
        raise ParameterError(f"need n >= 3, got {n}")
    if extra_ears < 0:
        raise ParameterError("extra_ears must be non-negative")
    if n + extra_ears > n * (n - 1) // 2:
        raise ParameterError(f"{extra_ears} ears on {n} vertices need more edges than K{n} has")
    rng = random.Random(seed)
    for _ in range(200):
        g = _try_ears(n, extra_ears, rng)
        if g is not None:
            return g
    raise ParameterError(f"could not place {extra_ears} ears on {n} vertices")


def _try_ears(n: int, extra_ears: int, rng: random.Random):
    cycle_len = rng.randint(3, n) if extra_ears else n
    budget = n - cycle_len
    cuts = sorted(rng.randint(0, budget) for _ in range(extra_ears - 1))
    shares = [b - a for a, b in zip([0] + cuts, cuts + [budget])] if extra_ears else []
    order = list(range(n))
    rng.shuffle(order)
    present = order[:cycle_len]
    edges = {tuple(sorted(e)) for e in _cycle_edges(present)}
    pool = order[cycle_len:]
    for share in shares:
        inner, pool = pool[:share], pool[share:]
        for _ in range(50):
            a, b = rng.sample(present, 2)
            if inner or (min(a, b), max(a, b)) not in edges:
                break
        else:
            return None
        path = [a] + inner + [b]
        edges.update((min(x, y), max(x, y)) for x, y in zip(path, path[1:]))
        present = present + inner
    return Graph(edges, vertices=range(n))


def random_block_chain(rng: random.Random, max_order: int,
                       kinds: Sequence[BlockSpec] = ("k2", "c3", "c4", "c5", "k4")) -> Graph:
    """Random tree of blocks: each new block is glued at a random existing vertex."""
    specs = [_parse_descriptor(k) for k in kinds]
    edges: list[tuple[int, int]] = []
    n = 1
    blocks = 0
    while True:
        options = [s for s in specs if n + s[1] - 1 <= max_order]
        if not options or (blocks >= 2 and rng.random() < 0.25):
            break
        kind, size = rng.choice(options)
        entry = rng.randrange(n)
        local = [entry] + list(range(n, n + size - 1))
        n += size - 1
        if kind == "k2":
            edges.append((local[0], local[1]))
        elif kind == "cycle":
            edges.extend(_cycle_edges(local))
        else:
            edges.extend((local[i], local[j]) for i in range(size) for j in range(i + 1, size))
        blocks += 1
    return Graph(edges, vertices=range(n))
