"""Rainbow edge-colorings that meet the block-count bounds.

Three constructions are provided:

* :func:`two_connected_coloring` -- at most ``ceil(n/2)`` colors on a
  2-connected graph;
* :func:`lemma3_coloring` -- exactly ``ceil(n/2)`` colors on a 2-connected
  graph of odd order, with a *reserved* color ``x`` such that every vertex
  reaches a chosen root along a rainbow path avoiding ``x``;
* :func:`theorem1_coloring` -- at most ``(n + r - 1) / 2`` colors on a
  connected graph with cut vertices, ``r`` being the number of even blocks.

Every construction grows a coloring ear by ear (or block by block) and is
verified before it is returned. The 2-connected constructions fall back to an
exhaustive search when verification fails; the fallback is recorded in the
optional ``notes`` list.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from .decompose import block_decomposition, block_ordering, ear_decomposition
from .exceptions import ConstructionError, NotConnectedError, NotTwoConnectedError, ParameterError
from .graph import Edge, EdgeColoring, Graph, edge_key, is_connected, is_two_connected, path_edges
from .verify import find_incomplete_rainbow_path, reaches_root_avoiding, verify_rainbow

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Lemma3Result:
    """A ``ceil(n/2)``-coloring plus the color every vertex can avoid on its way to ``root``."""

    coloring: EdgeColoring
    reserved_color: int
    root: int


def ceil_half(n: int) -> int:
    return (n + 1) // 2


# ---------------------------------------------------------------------------
# ear patterns


def color_odd_cycle(cycle: Sequence[int]) -> EdgeColoring:
    """Color an odd cycle ``v0 v1 ... v2k`` with ``k + 1`` colors.

    Edge ``v(i-1) v(i)`` gets color ``i - 1`` for ``i <= k + 1`` and color
    ``i - k - 2`` afterwards, so the sequence around the cycle reads
    ``0, 1, ..., k, 0, 1, ..., k - 1``. The last color ``k`` is the one every
    vertex can avoid on a rainbow path to ``v0``.
    """
    cycle = list(cycle)
    if len(cycle) < 3 or len(cycle) % 2 == 0:
        raise ValueError(f"expected an odd cycle of length >= 3, got length {len(cycle)}")
    if len(set(cycle)) != len(cycle):
        raise ValueError("cycle repeats a vertex")
    k = (len(cycle) - 1) // 2
    closed = cycle + [cycle[0]]
    colors = {}
    for i in range(1, 2 * k + 2):
        colors[edge_key(closed[i - 1], closed[i])] = i - 1 if i <= k + 1 else i - k - 2
    return EdgeColoring(Graph(colors), colors)


def color_even_cycle(cycle: Sequence[int]) -> EdgeColoring:
    """Antipodal coloring of an even cycle: edges ``i`` and ``i + n/2`` share color ``i``."""
    cycle = list(cycle)
    if len(cycle) < 4 or len(cycle) % 2:
        raise ValueError(f"expected an even cycle of length >= 4, got length {len(cycle)}")
    half = len(cycle) // 2
    closed = cycle + [cycle[0]]
    colors = {edge_key(closed[i], closed[i + 1]): i % half for i in range(len(cycle))}
    return EdgeColoring(Graph(colors), colors)


def _check_ear(base: EdgeColoring, ear: Sequence[int]) -> None:
    g = base.graph
    if len(ear) < 2:
        raise ValueError("an ear needs at least one edge")
    if ear[0] not in g or ear[-1] not in g or ear[0] == ear[-1]:
        raise ValueError("ear endpoints must be two distinct vertices of the colored graph")
    inner = ear[1:-1]
    if any(v in g for v in inner) or len(set(inner)) != len(inner):
        raise ValueError("ear internal vertices must be new and distinct")
    if len(ear) == 2 and g.has_edge(ear[0], ear[1]):
        raise ValueError(f"edge {tuple(ear)} is already colored")


def _attach(base: EdgeColoring, ear: Sequence[int], ear_colors: Sequence[int]) -> EdgeColoring:
    colors = base.as_dict()
    colors.update(zip(path_edges(ear), ear_colors))
    return EdgeColoring(Graph(colors), colors)


def odd_ear_colors(length: int, fresh: int, reuse: int) -> list[int]:
    s = (length - 1) // 2
    ys = list(range(fresh, fresh + s))
    return ys + [reuse] + ys


def even_ear_colors(length: int, fresh: int, middle: int) -> list[int]:
    s = length // 2
    xs = list(range(fresh, fresh + s))
    return xs + [middle] + xs[:-1]


def anchored_even_ear_colors(length: int, fresh: int, reserved: int, filler: int) -> list[int]:
    s = length // 2
    ys = list(range(fresh, fresh + s - 1))
    return [reserved] + ys + [filler] + ys


def extend_over_odd_ear(base: EdgeColoring, ear: Sequence[int], reuse: int) -> EdgeColoring:
    """Add an ear of odd length ``2s + 1`` using ``s`` new colors.

    The first ``s`` edges get new colors ``y1..ys``, the middle edge gets
    ``reuse`` and the last ``s`` edges repeat ``y1..ys``. A single edge just
    gets ``reuse``.
    """
    ear = list(ear)
    _check_ear(base, ear)
    length = len(ear) - 1
    if length % 2 == 0:
        raise ValueError(f"ear length {length} is even; use extend_over_even_ear")
    if not 0 <= reuse < base.palette_size:
        raise ValueError(f"reuse color {reuse} does not appear in the base coloring")
    return _attach(base, ear, odd_ear_colors(length, base.palette_size, reuse))


def extend_over_even_ear(base: EdgeColoring, ear: Sequence[int], avoid_path_color: int) -> EdgeColoring:
    """Add an ear of even length ``2s`` using ``s`` new colors.

    Edges read ``x1..xs, x', x1..x(s-1)`` from ``ear[0]``, with ``x'`` =
    ``avoid_path_color``. For the root property of :func:`lemma3_coloring`
    the root must reach ``ear[-1]`` along a rainbow path that misses ``x'``;
    :func:`splice_even_ear` picks such a color and orientation.
    """
    ear = list(ear)
    _check_ear(base, ear)
    length = len(ear) - 1
    if length % 2:
        raise ValueError(f"ear length {length} is odd; use extend_over_odd_ear")
    if not 0 <= avoid_path_color < base.palette_size:
        raise ValueError(f"color {avoid_path_color} does not appear in the base coloring")
    return _attach(base, ear, even_ear_colors(length, base.palette_size, avoid_path_color))


def extend_over_even_ear_anchored(base: EdgeColoring, ear: Sequence[int], reserved: int,
                                  filler: int) -> EdgeColoring:
    """Add an ear of even length ``2s`` using only ``s - 1`` new colors.

    Needs every vertex of the base graph to reach ``ear[0]`` by a rainbow path
    avoiding ``reserved``. Edges read ``reserved, y1..y(s-1), filler,
    y1..y(s-1)``; ``filler`` may be any existing color. This is what keeps an
    even ear on an odd-order graph within ``ceil(n/2)`` colors.
    """
    ear = list(ear)
    _check_ear(base, ear)
    length = len(ear) - 1
    if length % 2:
        raise ValueError(f"ear length {length} is odd")
    k = base.palette_size
    if not (0 <= reserved < k and 0 <= filler < k):
        raise ValueError("reserved and filler colors must appear in the base coloring")
    return _attach(base, ear, anchored_even_ear_colors(length, k, reserved, filler))


def splice_even_ear(base: EdgeColoring, ear: Sequence[int], root: int,
                    budget: Optional[int] = None) -> tuple[EdgeColoring, int]:
    """Attach an even ear so that the root property holds with the ear's last new color reserved.

    Looks for an incomplete rainbow path from ``root`` to either endpoint of
    the ear, orients the ear so that path ends at ``ear[-1]`` and uses a color
    missing from it as ``x'``. When the base palette is below ``budget`` a
    brand-new color serves as ``x'`` and any rainbow path will do.

    Returns the extended coloring and the reserved color ``xs``.
    """
    ear = list(ear)
    k = base.palette_size
    s = (len(ear) - 1) // 2
    g = base.graph
    if budget is not None and k < budget:
        colors = base.as_dict()
        colors.update(zip(path_edges(ear), even_ear_colors(len(ear) - 1, k, k + s)))
        return EdgeColoring(Graph(colors), colors), k + s - 1
    for end, oriented in ((ear[-1], ear), (ear[0], ear[::-1])):
        path = find_incomplete_rainbow_path(g, base, root, end)
        if path is not None:
            on_path = set(base.colors_on(path))
            x_prime = min(c for c in range(k) if c not in on_path)
            return extend_over_even_ear(base, oriented, x_prime), k + s - 1
    raise ConstructionError(
        f"no incomplete rainbow path from root {root} to ear endpoints {ear[0]}, {ear[-1]}"
    )


# ---------------------------------------------------------------------------
# helpers on raw color dicts


def pad_palette(colors: dict, target: int) -> dict:
    """Recolor edges with new colors until ``target`` colors are used.

    Only edges whose color class has at least two members are touched, so no
    color disappears. A fresh, unique color can never break a rainbow path,
    so rainbow connectivity and the root property both survive.
    """
    colors = dict(colors)
    k = len(set(colors.values()))
    while k < target:
        classes: dict[int, list] = {}
        for e in sorted(colors):
            classes.setdefault(colors[e], []).append(e)
        shared = [c for c in sorted(classes) if len(classes[c]) > 1]
        if not shared:
            raise ConstructionError(f"cannot pad palette {k} to {target}: every color class is a single edge")
        colors[classes[shared[0]][-1]] = k
        k += 1
    return colors


def _require_two_connected(g: Graph) -> None:
    if g.n < 3 or not is_two_connected(g):
        raise NotTwoConnectedError("graph must be 2-connected with at least 3 vertices")


def _odd_ears(c: EdgeColoring, ears, reuse: int = 0) -> EdgeColoring:
    for ear in ears:
        c = extend_over_odd_ear(c, ear, reuse)
    return c


# ---------------------------------------------------------------------------
# 2-connected graphs


def _even_order_raw(g: Graph, notes) -> EdgeColoring:
    d = ear_decomposition(g, g.vertices[0])
    lengths = d.lengths
    even = [i for i, ell in enumerate(lengths) if ell % 2 == 0]
    if not even:
        c = color_even_cycle(d.initial_cycle)
        return _odd_ears(c, d.ears)
    t = even[-1]
    ear = d.ears[t]
    # everything before the last even ear has odd order
    res = lemma3_coloring(d.prefix_graph(t), ear[0], notes=notes)
    base, x = res.coloring, res.reserved_color
    filler = 0 if x != 0 else 1
    c = extend_over_even_ear_anchored(base, ear, x, filler)
    return _odd_ears(c, d.ears[t + 1:])


def _lemma3_raw(g: Graph, v0: int, notes) -> tuple[EdgeColoring, int]:
    d = ear_decomposition(g, v0)
    lengths = d.lengths
    even = [i for i, ell in enumerate(lengths) if ell % 2 == 0]
    if not even:
        base = color_odd_cycle(d.initial_cycle)
        reserved = base.palette_size - 1
        return _odd_ears(base, d.ears), reserved
    t = even[-1]
    twos_before = [i for i in range(t) if lengths[i] == 2]
    if len(twos_before) >= 2:
        h = twos_before[0]
        base = two_connected_coloring(d.prefix_graph(h), notes=notes)
        k = base.palette_size
        colors = base.as_dict()
        for a, v, b in d.ears[h:t + 1]:
            colors[edge_key(a, v)] = k
            colors[edge_key(v, b)] = k + 1
        c = EdgeColoring(Graph(colors), colors)
        return _odd_ears(c, d.ears[t + 1:]), k + 1
    h_graph = d.prefix_graph(t)
    base = two_connected_coloring(h_graph, notes=notes)
    c, reserved = splice_even_ear(base, d.ears[t], v0, budget=h_graph.n // 2)
    return _odd_ears(c, d.ears[t + 1:]), reserved


def lemma3_coloring(g: Graph, v0: int, notes: Optional[list] = None) -> Lemma3Result:
    """Rainbow ``ceil(n/2)``-coloring of an odd-order 2-connected graph with a reserved color.

    Every vertex reaches ``v0`` along a rainbow path avoiding the reserved
    color. Dispatch follows the ear decomposition rooted at ``v0``: all ears
    odd; the last even ear spliced through an incomplete rainbow path; or
    several length-2 ears sharing two new colors.
    """
    _require_two_connected(g)
    if g.n % 2 == 0:
        raise ValueError(f"lemma3_coloring needs odd order, got n={g.n}")
    if v0 not in g:
        raise ValueError(f"root {v0} is not a vertex of the graph")
    target = ceil_half(g.n)
    try:
        c, reserved = _lemma3_raw(g, v0, notes)
        if c.palette_size > target:
            raise ConstructionError(f"construction used {c.palette_size} > {target} colors")
        c = EdgeColoring(g, pad_palette(c.as_dict(), target))
        if not (verify_rainbow(g, c).verdict and reaches_root_avoiding(g, c, v0, reserved)):
            raise ConstructionError("constructed coloring failed verification")
        return Lemma3Result(c, reserved, v0)
    except ConstructionError as exc:
        log.warning("lemma3 construction failed on n=%d m=%d root=%d (%s); searching", g.n, g.m, v0, exc)
        if notes is not None:
            notes.append(f"fallback: lemma3 n={g.n} m={g.m} root={v0}: {exc}")
    from .exact import search_coloring

    found = search_coloring(g, target, root=v0)
    if found is None:
        raise ConstructionError(f"no rainbow {target}-coloring with a reserved color exists for root {v0}")
    c, reserved = found
    c = EdgeColoring(g, pad_palette(c.as_dict(), target))
    return Lemma3Result(c, reserved, v0)


def two_connected_coloring(g: Graph, notes: Optional[list] = None) -> EdgeColoring:
    """Rainbow coloring of a 2-connected graph with at most ``ceil(n/2)`` colors.

    Odd orders reuse :func:`lemma3_coloring`. Even orders color the initial
    cycle antipodally when every ear is odd; otherwise the part before the
    last even ear (odd order) gets a reserved-color coloring rooted at that
    ear's endpoint and the ear costs one color less than usual.
    """
    _require_two_connected(g)
    target = ceil_half(g.n)
    if g.n % 2:
        return lemma3_coloring(g, g.vertices[0], notes=notes).coloring
    try:
        c = _even_order_raw(g, notes)
        if c.palette_size > target:
            raise ConstructionError(f"construction used {c.palette_size} > {target} colors")
        c = EdgeColoring(g, c.as_dict())
        if not verify_rainbow(g, c).verdict:
            raise ConstructionError("constructed coloring failed verification")
        return c
    except ConstructionError as exc:
        log.warning("2-connected construction failed on n=%d m=%d (%s); searching", g.n, g.m, exc)
        if notes is not None:
            notes.append(f"fallback: two_connected n={g.n} m={g.m}: {exc}")
    from .exact import search_coloring

    found = search_coloring(g, target)
    if found is None:
        raise ConstructionError(f"no rainbow coloring with {target} colors found; the bound would be violated")
    return found[0]


# ---------------------------------------------------------------------------
# graphs with cut vertices


def _block_coloring(block: Graph, notes) -> dict:
    """Colors ``0..n/2-1`` on an even block (``K2`` included)."""
    if block.m == 1:
        return {block.edges[0]: 0}
    c = two_connected_coloring(block, notes=notes)
    return pad_palette(c.as_dict(), block.n // 2)


def theorem1_coloring(g: Graph, notes: Optional[list] = None) -> EdgeColoring:
    """Rainbow coloring of a graph with cut vertices using exactly ``sum(floor(n_i/2))`` colors.

    That sum equals ``(n + r - 1) / 2``. Blocks are added in
    :func:`~rainbowcolor.decompose.block_ordering` order. Even blocks bring
    all-new colors. An odd block gets a reserved-color coloring rooted at its
    attachment vertex whose reserved color is replaced by color 0 of the
    earlier union. Without even blocks, the first two (odd) blocks instead
    swap their reserved colors for a color of the other block.
    """
    if not is_connected(g):
        raise NotConnectedError("theorem1_coloring needs a connected graph")
    d = block_decomposition(g)
    if d.q < 2:
        raise ParameterError("graph has a single block; use two_connected_coloring")
    order = block_ordering(d)
    blocks = order.blocks()
    attach = [a for _, a in order.sequence]
    colors: dict[Edge, int] = {}
    nxt = 0

    def add_fresh(local: dict) -> None:
        nonlocal nxt
        remap = {c: nxt + i for i, c in enumerate(sorted(set(local.values())))}
        for e, c in local.items():
            colors[e] = remap[c]
        nxt += len(remap)

    def add_odd(block, root: int, replacement: Optional[int] = None) -> tuple[dict, int]:
        nonlocal nxt
        res = lemma3_coloring(block.graph(), root, notes=notes)
        remap = {}
        for c in range(res.coloring.palette_size):
            if c != res.reserved_color:
                remap[c] = nxt
                nxt += 1
        if replacement is not None:
            remap[res.reserved_color] = replacement
        return {e: remap.get(c) for e, c in res.coloring.items()}, res.reserved_color

    if d.r >= 1:
        add_fresh(_block_coloring(blocks[0].graph(), notes))
        start = 1
    else:
        b1, b2, v1 = blocks[0], blocks[1], attach[1]
        local1, _ = add_odd(b1, v1)
        local2, _ = add_odd(b2, v1)
        x1 = min(c for c in local1.values() if c is not None)
        x2 = min(c for c in local2.values() if c is not None)
        colors.update({e: x2 if c is None else c for e, c in local1.items()})
        colors.update({e: x1 if c is None else c for e, c in local2.items()})
        start = 2
    for block, v in zip(blocks[start:], attach[start:]):
        if block.is_even:
            add_fresh(_block_coloring(block.graph(), notes))
        else:
            local, _ = add_odd(block, v, replacement=0)
            colors.update(local)
    c = EdgeColoring(g, colors)
    report = verify_rainbow(g, c)
    if not report.verdict:
        raise ConstructionError(f"block construction is not rainbow; witness pair {report.witness}")
    return c


def theorem1_bound(n: int, r: int) -> int:
    """``(n + r - 1) / 2`` for a connected graph with ``r`` even blocks (always an integer)."""
    if (n + r - 1) % 2:
        raise ValueError(f"n + r must be odd for a connected graph, got n={n}, r={r}")
    return (n + r - 1) // 2


def theorem2_bound(n: int) -> int:
    """Upper bound for 2-edge-connected graphs of order ``n``: ``2k`` or ``2k + 1``.

    ``n = 3k + 1`` or ``3k + 2`` gives ``2k``; ``n = 3k + 3`` gives ``2k + 1``.
    Equal to ``floor((2n - 2) / 3)``. The bound is derived through the
    cut-vertex bound, and the 5-cycle (a single block, ``rc = 3``) exceeds
    it, so it should only be relied on for graphs with a cut vertex or with
    ``n != 5``.
    """
    if n < 3:
        raise ValueError(f"theorem2_bound needs n >= 3, got {n}")
    k, rem = divmod(n - 1, 3)
    if rem == 2:
        return 2 * k + 1
    return 2 * k


# ---------------------------------------------------------------------------
# dispatch


@dataclass
class ColoringOutcome:
    coloring: EdgeColoring
    bound: int
    bound_kind: str
    r: int
    verified: bool
    notes: list

    def to_json(self) -> dict:
        return coloring_to_json(self.coloring, self.bound, self.bound_kind, self.r, self.verified)


STRATEGIES = ("auto", "two-connected", "theorem1")


def color_graph(g: Graph, strategy: str = "auto") -> ColoringOutcome:
    """Pick the construction for ``g`` and return the verified coloring with its bound.

    ``auto`` uses the block construction when ``g`` has a cut vertex and the
    2-connected construction otherwise. Graphs on one or two vertices get the
    empty coloring or a single color.
    """
    if strategy not in STRATEGIES:
        raise ParameterError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    if not is_connected(g):
        raise NotConnectedError("graph is disconnected")
    notes: list = []
    if g.n <= 2:
        if strategy == "two-connected":
            raise ParameterError("graph is not 2-connected")
        c = EdgeColoring(g, {e: 0 for e in g.edges})
        return ColoringOutcome(c, g.m, "theorem1", 1 if g.n == 2 else 0, True, notes)
    d = block_decomposition(g)
    if strategy == "auto":
        strategy = "theorem1" if d.q >= 2 else "two-connected"
    if strategy == "theorem1":
        if d.q < 2:
            raise ParameterError("theorem1 strategy needs a graph with a cut vertex")
        c = theorem1_coloring(g, notes=notes)
        bound, kind = theorem1_bound(g.n, d.r), "theorem1"
    else:
        if d.q != 1:
            raise ParameterError("two-connected strategy needs a 2-connected graph")
        c = two_connected_coloring(g, notes=notes)
        bound, kind = ceil_half(g.n), "two_connected"
    verified = verify_rainbow(g, c).verdict
    if not verified or c.palette_size > bound:
        raise ConstructionError(f"{kind} coloring failed: verified={verified}, k={c.palette_size}, bound={bound}")
    return ColoringOutcome(c, bound, kind, d.r, verified, notes)


def coloring_to_json(c: EdgeColoring, bound: Optional[int] = None, bound_kind: Optional[str] = None,
                     r: Optional[int] = None, verified: Optional[bool] = None) -> dict:
    return {
        "k": c.palette_size,
        "edges": [{"u": u, "v": v, "color": col} for (u, v), col in c.items()],
        "bound": bound,
        "bound_kind": bound_kind,
        "r": r,
        "verified": verified,
    }


def coloring_from_json(g: Graph, payload: dict) -> EdgeColoring:
    """Read the ``edges`` list of a coloring document; color ids are squeezed to ``0..k-1``."""
    try:
        colors = {edge_key(int(item["u"]), int(item["v"])): int(item["color"]) for item in payload["edges"]}
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed coloring document: {exc}") from None
    return EdgeColoring.normalized(g, colors)
