"""Rhombic tilings of the 2m-gon and the tiling H-description of Lusztig polytopes.

The tiling is purely combinatorial.  A vertex is a subset of the labels
[1, m]; the edge with label t starting at vertex V joins V to V | {t}; the
2m-gon's left boundary is the chain {} -> {1} -> {1,2} -> ... -> [m].
Reading a reduced word letter by letter replaces two consecutive border
edges (labels s < t, read upward) by the opposite sides of a new rhombic
tile with label pair {s, t}; tiles correspond to positive roots via
{s, t} <-> alpha_{s, t-1}.

On top of the tiling: strips (the m-1 tiles carrying a fixed label),
peeling partial orders for each of the 2m boundary windows, dual Reineke
s-crossings with their strip sequences, and the resulting inequality
system for the Lusztig polytope of the word.

No planar coordinates are stored; the optional SVG renderer assigns them
for pictures only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .polytope import HPolytope, PointSet, lattice_points_auto
from .roots import (
    Root,
    ik_word,
    num_roots,
    positive_roots,
    root_enumeration,
    root_index,
)


class PeelStallError(RuntimeError):
    """Peeling found no tile meeting the current border in exactly two edges."""


class Edge(NamedTuple):
    id: int
    label: int
    bottom: frozenset[int]

    @property
    def top(self) -> frozenset[int]:
        return self.bottom | {self.label}


@dataclass(frozen=True)
class Tile:
    id: int
    s: int  # smaller label
    t: int  # larger label
    lower: tuple[Edge, Edge]  # border edges consumed, bottom then top
    upper: tuple[Edge, Edge]  # border edges created, bottom then top
    root: Root

    @property
    def labels(self) -> tuple[int, int]:
        return (self.s, self.t)

    @property
    def all_edges(self) -> tuple[Edge, Edge, Edge, Edge]:
        return self.lower + self.upper

    def other_label(self, a: int) -> int:
        if a == self.s:
            return self.t
        if a == self.t:
            return self.s
        raise ValueError(f"tile {self.labels} does not carry label {a}")


@dataclass
class Tiling:
    n: int
    m: int
    word: tuple[int, ...]
    tiles: tuple[Tile, ...]
    edges: tuple[Edge, ...]
    left_boundary: tuple[Edge, ...]   # L_1 .. L_m, bottom to top
    right_boundary: tuple[Edge, ...]  # R_1 .. R_m, top to bottom of the final border
    borders: tuple[tuple[Edge, ...], ...]  # B^(0) .. B^(N), each bottom to top
    incidence: dict[Edge, tuple[Tile, ...]] = field(repr=False)

    def tile_for_root(self, r: Root) -> Tile:
        return self._by_root[r]

    def __post_init__(self) -> None:
        self._by_root = {tile.root: tile for tile in self.tiles}
        nbrs: dict[int, set[int]] = {tile.id: set() for tile in self.tiles}
        for inc in self.incidence.values():
            for a in inc:
                for b in inc:
                    if a.id != b.id:
                        nbrs[a.id].add(b.id)
        self.neighbors = {
            tid: tuple(self.tiles[j] for j in sorted(ids)) for tid, ids in nbrs.items()
        }


class Strip(NamedTuple):
    t: int
    tiles: tuple[Tile, ...]


@dataclass(frozen=True)
class PeelOrder:
    s: int
    layer: dict[int, int]  # tile id -> layer (1-based)
    num_layers: int

    def ascending(self, a: Tile, b: Tile) -> bool:
        return self.layer[a.id] < self.layer[b.id]


@dataclass(frozen=True)
class DualCrossing:
    tiles: tuple[Tile, ...]
    s: int
    strip_sequence: tuple[int, ...]
    # per tile: the strip label it is entered / left through; equal entries
    # mean an interior tile of that strip, distinct entries a turning tile
    entering_leaving: tuple[tuple[int, int], ...]

    def is_comb(self) -> bool:
        return self.strip_sequence == (self.s, self.s + 1)


def build_tiling(word: Sequence[int], n: int | None = None) -> Tiling:
    """Fold a reduced word into a rhombic tiling of the 2m-gon.

    Letter a replaces the border edges at heights a-1 and a (labels s < t)
    by the opposite sides of the tile {s, t}; the recorded root is
    alpha_{s, t-1}, matching the word's root enumeration step for step.
    """
    word = tuple(word)
    if n is None:
        n = max(word, default=0)
    enum = root_enumeration(word, n)  # raises on a non-reduced word
    m = n + 1
    ids = iter(range(10 ** 9))
    left = tuple(
        Edge(next(ids), i, frozenset(range(1, i))) for i in range(1, m + 1)
    )
    border: list[Edge] = list(left)
    borders = [tuple(border)]
    all_edges: list[Edge] = list(left)
    created = {(e.bottom, e.label) for e in left}
    tiles: list[Tile] = []
    for a, root in zip(word, enum):
        lo, hi = border[a - 1], border[a]
        if lo.label >= hi.label or hi.bottom != lo.top:
            raise ValueError(
                f"border inconsistent at letter {a} of {word}: "
                f"{lo.label} above {hi.label}"
            )
        s, t, V = lo.label, hi.label, lo.bottom
        assert root == Root(s, t - 1)
        up_bottom = Edge(next(ids), t, V)
        up_top = Edge(next(ids), s, V | {t})
        for e in (up_bottom, up_top):
            key = (e.bottom, e.label)
            if key in created:  # each geometric edge may be created only once
                raise AssertionError(f"edge {key} created twice (word {word})")
            created.add(key)
            all_edges.append(e)
        tiles.append(
            Tile(
                id=len(tiles),
                s=s,
                t=t,
                lower=(lo, hi),
                upper=(up_bottom, up_top),
                root=root,
            )
        )
        border[a - 1], border[a] = up_bottom, up_top
        borders.append(tuple(border))

    right = tuple(reversed(border))
    assert [e.label for e in right] == list(range(1, m + 1))

    inc: dict[Edge, list[Tile]] = {e: [] for e in all_edges}
    for tile in tiles:
        for e in tile.all_edges:
            inc[e].append(tile)
    assert all(len(v) <= 2 for v in inc.values())

    return Tiling(
        n=n,
        m=m,
        word=word,
        tiles=tuple(tiles),
        edges=tuple(all_edges),
        left_boundary=left,
        right_boundary=right,
        borders=tuple(borders),
        incidence={e: tuple(v) for e, v in inc.items()},
    )


def strip(T: Tiling, t: int) -> Strip:
    """The m-1 tiles carrying label t, chained from the left boundary."""
    if not 1 <= t <= T.m:
        raise ValueError(f"label {t} out of range [1, {T.m}]")
    e = T.left_boundary[t - 1]
    chain: list[Tile] = []
    prev: Tile | None = None
    while True:
        nxt = [x for x in T.incidence[e] if x is not prev]
        if not nxt:
            break
        (tile,) = nxt
        chain.append(tile)
        (e,) = [d for d in tile.all_edges if d.label == t and d != e]
        prev = tile
    if len(chain) != T.m - 1:
        raise RuntimeError(f"strip {t} has {len(chain)} tiles, expected {T.m - 1}")
    return Strip(t, tuple(chain))


def boundary_cycle(T: Tiling) -> list[Edge]:
    """b_1 .. b_{2m}: the left boundary bottom-up, then the right boundary."""
    return list(T.left_boundary) + list(T.right_boundary)


def peel_order(T: Tiling, s: int) -> PeelOrder:
    """Iterated peeling from the boundary window b_{m+s+1} .. b_{2m+s}.

    Layer 1 is every tile meeting the window in exactly two of its four
    edges; peeling swaps those edges for the tiles' other two and repeats.
    All tiles of a layer are peeled simultaneously.
    """
    m = T.m
    if not 1 <= s <= 2 * m:
        raise ValueError(f"peel index {s} out of range [1, {2 * m}]")
    cyc = boundary_cycle(T)
    B = {cyc[(m + s + j - 1) % (2 * m)] for j in range(1, m + 1)}
    layer: dict[int, int] = {}
    remaining = set(range(len(T.tiles)))
    level = 0
    while remaining:
        level += 1
        ready = [
            tid
            for tid in sorted(remaining)
            if sum(1 for e in T.tiles[tid].all_edges if e in B) == 2
        ]
        if not ready:
            raise PeelStallError(
                f"peeling stalled at layer {level}, s={s}, word {T.word}"
            )
        for tid in ready:
            tile = T.tiles[tid]
            for e in tile.all_edges:
                if e in B:
                    B.discard(e)
                else:
                    B.add(e)
            layer[tid] = level
            remaining.discard(tid)
    return PeelOrder(s=s, layer=layer, num_layers=level)


def _assemble_crossing(
    T: Tiling, s: int, tiles: tuple[Tile, ...]
) -> DualCrossing | None:
    """Attach strip bookkeeping to a candidate tile sequence.

    The label of the shared edge between consecutive tiles says which strip
    the sequence is travelling in at that moment; a tile entered and left
    through the same label a must carry a (interior tile of strip a), and a
    tile switching labels must be exactly the turning tile {a, b}.  A
    sequence violating either is not a crossing.
    """
    between = [s]
    for g1, g2 in zip(tiles, tiles[1:]):
        shared = set(g1.all_edges) & set(g2.all_edges)
        assert len(shared) == 1, "adjacent tiles must share exactly one edge"
        between.append(shared.pop().label)
    between.append(s + 1)

    roles: list[tuple[int, int]] = []
    for tile, enter, leave in zip(tiles, between, between[1:]):
        if enter == leave:
            if enter not in tile.labels:
                return None
        elif {enter, leave} != set(tile.labels):
            return None
        roles.append((enter, leave))

    seq = [between[0]]
    for x in between[1:]:
        if x != seq[-1]:
            seq.append(x)
    return DualCrossing(
        tiles=tiles, s=s, strip_sequence=tuple(seq), entering_leaving=tuple(roles)
    )


def dual_crossings(T: Tiling, s: int) -> list[DualCrossing]:
    """All dual s-crossings: peel-ascending neighbour sequences from the last
    tile of strip s to the last tile of strip s+1, with a consistent strip
    sequence."""
    if not 1 <= s <= T.n:
        raise ValueError(f"need 1 <= s <= {T.n}, got {s}")
    po = peel_order(T, T.m + s)
    start = strip(T, s).tiles[-1]
    end = strip(T, s + 1).tiles[-1]
    out: list[DualCrossing] = []

    def rec(path: list[Tile]) -> None:
        cur = path[-1]
        if cur.id == end.id:
            cr = _assemble_crossing(T, s, tuple(path))
            if cr is not None:
                out.append(cr)
            return
        for nb in T.neighbors[cur.id]:
            if po.ascending(cur, nb):
                path.append(nb)
                rec(path)
                path.pop()

    rec([start])
    return out


def reineke_filter(crossings: list[DualCrossing]) -> list[DualCrossing]:
    """Keep the crossings whose interior strip tiles point the right way.

    An interior tile of strip a with other label b must satisfy: a > b when
    b <= s, and a < b when b >= s+1.  Turning tiles are unconstrained, so
    the dual s-comb always survives.
    """
    kept: list[DualCrossing] = []
    for cr in crossings:
        ok = True
        for tile, (enter, leave) in zip(cr.tiles, cr.entering_leaving):
            if enter != leave:
                continue
            a = enter
            b = tile.other_label(a)
            if b <= cr.s:
                ok = a > b
            else:
                ok = a < b
            if not ok:
                break
        if ok:
            kept.append(cr)
    return kept


def crossing_functional(
    T: Tiling, s: int, cr: DualCrossing
) -> tuple[tuple[int, ...], list[dict]]:
    """Coefficient vector (canonical root order) of the crossing's inequality.

    epsilon_s of a tile {a, b} is +1 iff a <= s < s+1 <= b.  Coefficients:
    +1 on tiles with epsilon +1, -1 on non-turning tiles with epsilon -1,
    0 on turning tiles with epsilon -1.
    """
    idx = root_index(T.n)
    coeffs = [0] * num_roots(T.n)
    structure: list[dict] = []
    for tile, (enter, leave) in zip(cr.tiles, cr.entering_leaving):
        eps = 1 if (tile.s <= s and tile.t >= s + 1) else -1
        turning = enter != leave
        c = 1 if eps == 1 else (0 if turning else -1)
        coeffs[idx[tile.root]] = c
        structure.append(
            {
                "labels": tile.labels,
                "root": tuple(tile.root),
                "epsilon": eps,
                "turning": turning,
                "coeff": c,
            }
        )
    return tuple(coeffs), structure


def lusztig_hrep(word: Sequence[int], lam: Sequence[int], n: int | None = None) -> HPolytope:
    """The inequality system of the word's Lusztig polytope.

    One row per (s, filtered dual s-crossing) with rhs lambda_s, s in [1, n];
    rows repeated with identical coefficients and rhs are kept once.
    """
    word = tuple(word)
    if n is None:
        n = max(word, default=0)
    lam = tuple(int(v) for v in lam)
    if len(lam) != n:
        raise ValueError(f"weight has {len(lam)} entries, expected {n}")
    if any(v < 0 for v in lam):
        raise ValueError(f"weight must be dominant: {lam}")
    T = build_tiling(word, n)
    rows: list[tuple[tuple[int, ...], int]] = []
    seen: set[tuple] = set()
    for s in range(1, n + 1):
        for cr in reineke_filter(dual_crossings(T, s)):
            coeffs, _ = crossing_functional(T, s, cr)
            key = (coeffs, lam[s - 1])
            if key not in seen:
                seen.add(key)
                rows.append(key)
    return HPolytope(dim=num_roots(n), rows=tuple(rows), nonneg=True)


def lusztig_points(
    word: Sequence[int], lam: Sequence[int], n: int | None = None
) -> PointSet:
    """Lattice points of the word's Lusztig polytope.

    Unlike the FFLV system, the rows here can have negative coefficients, so
    sum(lam) is only a first guess at the box; enumeration escalates it if a
    point ever touches an uncapped face of the box.
    """
    return lattice_points_auto(lusztig_hrep(word, lam, n), max(sum(lam), 0))


def check_rectangle_support(n: int, k: int, r: int) -> bool:
    """Do all points of the i^k Lusztig polytope at r*omega_k vanish outside
    the k-rectangle {alpha_{i,j} : i <= k <= j}?

    Cross-checked positionally: that rectangle must be exactly the head (the
    first k(n-k+1) roots) of the i^k enumeration.
    """
    if not (1 <= k <= n and r >= 0):
        raise ValueError(f"bad arguments n={n}, k={k}, r={r}")
    roots = positive_roots(n)
    rect = {rt for rt in roots if rt.i <= k <= rt.j}
    head = set(root_enumeration(ik_word(n, k), n)[: k * (n - k + 1)])
    if head != rect:
        return False
    lam = tuple(r if t == k else 0 for t in range(1, n + 1))
    pts = lusztig_points(ik_word(n, k), lam, n)
    outside = [d for d, rt in enumerate(roots) if rt not in rect]
    return all(all(p[d] == 0 for d in outside) for p in pts)


# ---------------------------------------------------------------------------
# serialization / rendering


def tiling_to_json(T: Tiling) -> dict:
    strips = {t: [tile.id for tile in strip(T, t).tiles] for t in range(1, T.m + 1)}
    peels = {
        s: {tid: lv for tid, lv in sorted(peel_order(T, s).layer.items())}
        for s in range(1, 2 * T.m + 1)
    }
    return {
        "n": T.n,
        "m": T.m,
        "word": list(T.word),
        "tiles": [
            {
                "id": tile.id,
                "labels": list(tile.labels),
                "root": list(tile.root),
                "lower": [e.id for e in tile.lower],
                "upper": [e.id for e in tile.upper],
            }
            for tile in T.tiles
        ],
        "edges": [
            {"id": e.id, "label": e.label, "bottom": sorted(e.bottom)}
            for e in T.edges
        ],
        "strips": strips,
        "peel_layers": peels,
    }


_PALETTE = ("#e6a3a3", "#a3c6e6", "#a8d8b0", "#e6cfa3", "#cdb0e0", "#d5b8a6")


def tiling_to_svg(T: Tiling, scale: float = 60.0) -> str:
    """A picture of the tiling; coordinates exist only in this function.

    Vertex V (a label subset) sits at the subset sum of unit vectors
    u_t = (cos theta_t, sin theta_t), theta_t = pi - pi t / (m+1); this
    renders the 2m-gon with the left boundary going up the left side.
    """
    m = T.m
    unit = {
        t: (math.cos(math.pi - math.pi * t / (m + 1)),
            math.sin(math.pi - math.pi * t / (m + 1)))
        for t in range(1, m + 1)
    }

    def pos(V: frozenset[int]) -> tuple[float, float]:
        return (sum(unit[t][0] for t in V), sum(unit[t][1] for t in V))

    corners_of = []
    for tile in T.tiles:
        V = tile.lower[0].bottom
        a, b = tile.s, tile.t
        corners_of.append(
            (tile, [pos(V),
                    pos(V | {a}),
                    pos(V | {a, b}),
                    pos(V | {b})])
        )
    xs = [x for _, cs in corners_of for x, _ in cs]
    ys = [y for _, cs in corners_of for _, y in cs]
    pad = 0.4
    x0, y0 = min(xs) - pad, min(ys) - pad
    w, h = max(xs) - x0 + pad, max(ys) - y0 + pad

    def fmt(p: tuple[float, float]) -> str:
        # y flipped so "up" in the construction is up on screen
        return f"{(p[0] - x0) * scale:.2f},{(h - (p[1] - y0)) * scale:.2f}"

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{w * scale:.0f}" height="{h * scale:.0f}">'
    ]
    for tile, cs in corners_of:
        fill = _PALETTE[(tile.s + tile.t) % len(_PALETTE)]
        pts = " ".join(fmt(c) for c in cs)
        parts.append(
            f'<polygon points="{pts}" fill="{fill}" stroke="black" '
            f'stroke-width="1"/>'
        )
        cx = sum(c[0] for c in cs) / 4
        cy = sum(c[1] for c in cs) / 4
        parts.append(
            f'<text x="{(cx - x0) * scale:.2f}" y="{(h - (cy - y0)) * scale:.2f}" '
            f'font-size="{scale / 5:.0f}" text-anchor="middle">'
            f"{tile.s},{tile.t}</text>"
        )
    parts.append("</svg>")
    return "\n".join(parts)
