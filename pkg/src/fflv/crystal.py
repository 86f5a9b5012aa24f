"""Crystal structures on FFLV lattice points.

Four layers:

* candidate moves and the multi-edge graph PB_n(lambda) they form;
* the explicit sl_3 crystals B^>(a, b) and B^<(a, b) built from clipped
  path families, plus their critical points;
* two validators -- a reconstructed Stembridge-style local-axiom check and
  the normative isomorphism check against an independent tensor-word
  oracle crystal;
* a search over edge selections from PB_n(lambda) (greedy by a
  sigma-preference, or exhaustive with budgeted backtracking) hunting for
  the conjectured n! crystal structures.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, NamedTuple, Sequence

from .fflv import fflv_points, weyl_dim
from .polytope import PointSet
from .roots import Root, num_roots, root_index, weight_mu, weight_of_point

Point = tuple[int, ...]
EdgeT = tuple[Point, int, Point]  # (source, color, target)


class BudgetExceeded(RuntimeError):
    pass


class CandidateEdge(NamedTuple):
    source: Point
    a: int              # color
    k: int              # which word's operator produced the move
    target: Point
    pivot: int | None   # the j (a<k) or i (a>k) of the moved box; None on a=k


@dataclass(frozen=True)
class CrystalGraph:
    n: int
    lam: tuple[int, ...]
    vertices: PointSet
    edges: frozenset[EdgeT]
    # optional explicit weights (used when vertices are not lattice points,
    # e.g. the oracle's words); default is the content of the point
    weights: dict[Point, tuple[int, ...]] | None = field(
        default=None, compare=False, repr=False
    )

    def weight_of(self, v: Point) -> tuple[int, ...]:
        if self.weights is not None:
            return self.weights[v]
        return weight_of_point(self.lam, v)

    def out_map(self) -> dict[tuple[Point, int], list[Point]]:
        out: dict[tuple[Point, int], list[Point]] = {}
        for u, a, v in sorted(self.edges):
            out.setdefault((u, a), []).append(v)
        return out

    def in_map(self) -> dict[tuple[Point, int], list[Point]]:
        inc: dict[tuple[Point, int], list[Point]] = {}
        for u, a, v in sorted(self.edges):
            inc.setdefault((v, a), []).append(u)
        return inc

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "lambda": list(self.lam),
            "vertices": self.vertices.to_json(),
            "edges": [
                {"source": list(u), "color": a, "target": list(v)}
                for u, a, v in sorted(self.edges)
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CrystalGraph":
        return cls(
            n=obj["n"],
            lam=tuple(obj["lambda"]),
            vertices=PointSet.from_json(obj["vertices"]),
            edges=frozenset(
                (tuple(e["source"]), e["color"], tuple(e["target"]))
                for e in obj["edges"]
            ),
        )


DOT_COLORS = ("red", "blue", "green", "orange", "purple", "brown")


def crystal_to_dot(G: CrystalGraph) -> str:
    lines = ["digraph crystal {"]
    for v in G.vertices:
        lines.append(f'  "{",".join(map(str, v))}";')
    for u, a, v in sorted(G.edges):
        color = DOT_COLORS[(a - 1) % len(DOT_COLORS)]
        lines.append(
            f'  "{",".join(map(str, u))}" -> "{",".join(map(str, v))}" '
            f'[color={color}, label={a}];'
        )
    lines.append("}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# candidate moves and PB_n(lambda)


def candidate_edges(n: int, lam: Sequence[int], x: Sequence[int]) -> list[CandidateEdge]:
    """All feasible lowering moves f_{a,k} at the point x, for every a and k.

    Which single k (and which j or i) the canonical-basis structure actually
    selects is decided downstream; this emits every move that stays inside
    FFLV_n(lambda)_Z.
    """
    lam = tuple(lam)
    x = tuple(x)
    pts = fflv_points(n, lam)
    if x not in pts:
        raise ValueError(f"{x} is not a lattice point of the polytope")
    idx = root_index(n)
    out: list[CandidateEdge] = []

    def shifted(minus: Root | None, plus: Root) -> Point:
        y = list(x)
        if minus is not None:
            y[idx[minus]] -= 1
        y[idx[plus]] += 1
        return tuple(y)

    for a in range(1, n + 1):
        for k in range(1, n + 1):
            if a < k:
                for j in range(k, n + 1):
                    if x[idx[Root(a + 1, j)]] >= 1:
                        y = shifted(Root(a + 1, j), Root(a, j))
                        if y in pts:
                            out.append(CandidateEdge(x, a, k, y, j))
            elif a > k:
                for i in range(1, k + 1):
                    if x[idx[Root(i, a - 1)]] >= 1:
                        y = shifted(Root(i, a - 1), Root(i, a))
                        if y in pts:
                            out.append(CandidateEdge(x, a, k, y, i))
            else:
                y = shifted(None, Root(k, k))
                if y in pts:
                    out.append(CandidateEdge(x, a, k, y, None))
    return out


def pb_graph(n: int, lam: Sequence[int]) -> CrystalGraph:
    """The union of all candidate moves; usually not a crystal (multi-edges)."""
    lam = tuple(lam)
    pts = fflv_points(n, lam)
    edges = set()
    for x in pts:
        for ce in candidate_edges(n, lam, x):
            edges.add((ce.source, ce.a, ce.target))
    return CrystalGraph(n=n, lam=lam, vertices=pts, edges=frozenset(edges))


def candidate_map(n: int, lam: Sequence[int]) -> dict[tuple[Point, int], list[CandidateEdge]]:
    """Candidates grouped by (vertex, color), in deterministic order."""
    out: dict[tuple[Point, int], list[CandidateEdge]] = {}
    for x in fflv_points(n, lam):
        for a in range(1, n + 1):
            out[(x, a)] = []
    for x in fflv_points(n, lam):
        for ce in candidate_edges(n, lam, x):
            out[(ce.source, ce.a)].append(ce)
    return out


# ---------------------------------------------------------------------------
# the tensor-word oracle crystal


class WordCrystal:
    """The highest-weight crystal realized on words by the signature rule.

    Independent of everything polytopal: vertices are words over [1, m],
    the highest word stacks column words 1..k (lambda_k copies each, k
    descending), and f_a / e_a act by the usual bracket cancellation --
    letters a count '+', letters a+1 count '-', a '-' cancels the nearest
    surviving '+' to its left; f_a flips the leftmost surviving '+',
    e_a the rightmost surviving '-'.
    """

    def __init__(self, n: int, lam: Sequence[int]):
        self.n = n
        self.m = n + 1
        self.lam = tuple(lam)
        hw: list[int] = []
        for k in range(n, 0, -1):
            hw.extend(list(range(1, k + 1)) * self.lam[k - 1])
        self.highest: tuple[int, ...] = tuple(hw)
        self.vertices: set[tuple[int, ...]] = set()
        self._f: dict[tuple[tuple[int, ...], int], tuple[int, ...]] = {}
        self._e: dict[tuple[tuple[int, ...], int], tuple[int, ...]] = {}
        self._close()

    def _signature(self, word: tuple[int, ...], a: int) -> tuple[list[int], list[int]]:
        plus: list[int] = []
        minus: list[int] = []
        for pos, c in enumerate(word):
            if c == a:
                plus.append(pos)
            elif c == a + 1:
                if plus:
                    plus.pop()
                else:
                    minus.append(pos)
        return plus, minus

    def f(self, word: tuple[int, ...], a: int) -> tuple[int, ...] | None:
        plus, _ = self._signature(word, a)
        if not plus:
            return None
        out = list(word)
        out[plus[0]] = a + 1
        return tuple(out)

    def e(self, word: tuple[int, ...], a: int) -> tuple[int, ...] | None:
        _, minus = self._signature(word, a)
        if not minus:
            return None
        out = list(word)
        out[minus[-1]] = a
        return tuple(out)

    def eps(self, word: tuple[int, ...], a: int) -> int:
        return len(self._signature(word, a)[1])

    def phi(self, word: tuple[int, ...], a: int) -> int:
        return len(self._signature(word, a)[0])

    def content(self, word: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(word.count(i) for i in range(1, self.m + 1))

    def _close(self) -> None:
        queue = [self.highest]
        self.vertices.add(self.highest)
        while queue:
            w = queue.pop()
            for a in range(1, self.n + 1):
                for op, table in ((self.f, self._f), (self.e, self._e)):
                    w2 = op(w, a)
                    if w2 is None:
                        continue
                    table[(w, a)] = w2
                    if w2 not in self.vertices:
                        self.vertices.add(w2)
                        queue.append(w2)

    def export_graph(self) -> CrystalGraph:
        """The f-edges as a CrystalGraph on word vertices."""
        edges = frozenset(
            (w, a, w2) for (w, a), w2 in self._f.items()
        )
        weights = {w: self.content(w) for w in self.vertices}
        return CrystalGraph(
            n=self.n,
            lam=self.lam,
            vertices=PointSet(sorted(self.vertices)),
            edges=edges,
            weights=weights,
        )


def word_oracle(n: int, lam: Sequence[int]) -> WordCrystal:
    return WordCrystal(n, lam)


# ---------------------------------------------------------------------------
# validators


def _pairing(wt: Sequence[int], a: int) -> int:
    return wt[a - 1] - wt[a]


def check_local_axioms(G: CrystalGraph) -> dict:
    """Stembridge-style local check; returns {"passed": bool, "violations": [...]}.

    (i)   per color: at most one in- and one out-edge per vertex, no
          monochromatic cycles;
    (ii)  every edge lowers the content by e_a - e_{a+1}, and the
          edge-following string statistics satisfy
          phi_a - eps_a = <wt, alpha_a^vee> everywhere;
    (iii) distant colors (|a-b| >= 2): raising/lowering one color leaves the
          other's statistics unchanged, and defined pairs commute;
    (iv)  adjacent colors: for e_a defined, (d eps_b, d phi_b) is (1,0) or
          (0,-1); two raisings with both eps-deltas 0-free commute, with
          both deltas 1 they satisfy the degenerate braid relation; dual
          statements for lowering with phi as the driver.

    Every violation carries its witness vertex.  The isomorphism check
    against the word oracle stays the normative criterion; this one exists
    to localize failures.
    """
    violations: list[dict] = []

    def flag(axiom: str, vertex, detail: str) -> None:
        violations.append({"axiom": axiom, "vertex": vertex, "detail": detail})

    colors = list(range(1, G.n + 1))
    f: dict[tuple[Point, int], Point] = {}
    e: dict[tuple[Point, int], Point] = {}
    for (u, a), targets in G.out_map().items():
        if len(targets) > 1:
            flag("partial-function", u, f"{len(targets)} outgoing color-{a} edges")
        else:
            f[(u, a)] = targets[0]
    for (v, a), sources in G.in_map().items():
        if len(sources) > 1:
            flag("partial-function", v, f"{len(sources)} incoming color-{a} edges")
        else:
            e[(v, a)] = sources[0]
    if violations:
        return {"passed": False, "violations": violations}

    verts = list(G.vertices)
    for a in colors:
        for v in verts:
            cur, steps = v, 0
            while (cur, a) in f:
                cur = f[(cur, a)]
                steps += 1
                if steps > len(verts):
                    flag("acyclic", v, f"color-{a} cycle")
                    return {"passed": False, "violations": violations}

    def eps(v: Point, a: int) -> int:
        d = 0
        while (v, a) in e:
            v = e[(v, a)]
            d += 1
        return d

    def phi(v: Point, a: int) -> int:
        d = 0
        while (v, a) in f:
            v = f[(v, a)]
            d += 1
        return d

    for u, a, v in sorted(G.edges):
        drop = [x - y for x, y in zip(G.weight_of(u), G.weight_of(v))]
        want = [0] * (G.n + 1)
        want[a - 1], want[a] = 1, -1
        if drop != want:
            flag("weight-step", u, f"color-{a} edge changes weight by {drop}")
    for v in verts:
        wt = G.weight_of(v)
        for a in colors:
            if phi(v, a) - eps(v, a) != _pairing(wt, a):
                flag(
                    "weight-string",
                    v,
                    f"phi-eps={phi(v, a) - eps(v, a)} but <wt,a{a}^>={_pairing(wt, a)}",
                )
    if violations:
        return {"passed": False, "violations": violations}

    for a, b in itertools.combinations(colors, 2):
        if b - a >= 2:
            for v in verts:
                for op, name in ((e, "e"), (f, "f")):
                    if (v, a) in op:
                        w = op[(v, a)]
                        if eps(w, b) != eps(v, b) or phi(w, b) != phi(v, b):
                            flag("distant-strings", v, f"{name}_{a} moves color-{b} stats")
                for op in (e, f):
                    if (v, a) in op and (v, b) in op:
                        if op.get((op[(v, a)], b)) != op.get((op[(v, b)], a)):
                            flag("distant-commute", v, f"colors {a},{b}")
        else:
            for x, y in ((a, b), (b, a)):
                for v in verts:
                    if (v, x) in e:
                        w = e[(v, x)]
                        d = (eps(w, y) - eps(v, y), phi(w, y) - phi(v, y))
                        if d not in {(1, 0), (0, -1)}:
                            flag("adjacent-raise-delta", v, f"e_{x} gives {d} on color {y}")
                    if (v, x) in f:
                        w = f[(v, x)]
                        d = (eps(w, y) - eps(v, y), phi(w, y) - phi(v, y))
                        if d not in {(-1, 0), (0, 1)}:
                            flag("adjacent-lower-delta", v, f"f_{x} gives {d} on color {y}")
            for v in verts:
                if (v, a) in e and (v, b) in e:
                    d1 = eps(e[(v, a)], b) - eps(v, b)
                    d2 = eps(e[(v, b)], a) - eps(v, a)
                    if d1 == 0 or d2 == 0:
                        if e.get((e[(v, a)], b)) != e.get((e[(v, b)], a)):
                            flag("adjacent-commute", v, f"e_{a} e_{b}")
                    elif d1 == 1 and d2 == 1:
                        left = _apply_chain(e, v, (a, b, b, a))
                        right = _apply_chain(e, v, (b, a, a, b))
                        if left is None or left != right:
                            flag("adjacent-braid", v, f"e_{a} e_{b} braid")
                if (v, a) in f and (v, b) in f:
                    d1 = phi(f[(v, a)], b) - phi(v, b)
                    d2 = phi(f[(v, b)], a) - phi(v, a)
                    if d1 == 0 or d2 == 0:
                        if f.get((f[(v, a)], b)) != f.get((f[(v, b)], a)):
                            flag("adjacent-commute", v, f"f_{a} f_{b}")
                    elif d1 == 1 and d2 == 1:
                        left = _apply_chain(f, v, (a, b, b, a))
                        right = _apply_chain(f, v, (b, a, a, b))
                        if left is None or left != right:
                            flag("adjacent-braid", v, f"f_{a} f_{b} braid")

    return {"passed": not violations, "violations": violations}


def _apply_chain(op: dict, v: Point, colors: Iterable[int]) -> Point | None:
    for a in colors:
        if (v, a) not in op:
            return None
        v = op[(v, a)]
    return v


def oracle_iso_report(G: CrystalGraph, lam: Sequence[int]) -> tuple[bool, str]:
    """Deterministic traversal pairing G with the word oracle for lambda."""
    lam = tuple(lam)
    W = word_oracle(G.n, lam)
    out = G.out_map()
    inc = G.in_map()
    if any(len(v) != 1 for v in out.values()) or any(len(v) != 1 for v in inc.values()):
        return False, "multi-edges: not a partial permutation per color"
    sources = [v for v in G.vertices if not any((v, a) in inc for a in range(1, G.n + 1))]
    if len(sources) != 1:
        return False, f"{len(sources)} sources, expected 1"
    src = sources[0]
    if G.weight_of(src) != W.content(W.highest):
        return False, f"source weight {G.weight_of(src)} != highest weight"
    pair: dict[Point, tuple[int, ...]] = {src: W.highest}
    used: set[tuple[int, ...]] = {W.highest}
    queue = [src]
    while queue:
        v = queue.pop()
        w = pair[v]
        for a in range(1, G.n + 1):
            gv = out.get((v, a), [None])[0]
            gw = W.f(w, a)
            if (gv is None) != (gw is None):
                return False, f"color-{a} edge mismatch at {v} / word {w}"
            if gv is None:
                continue
            if gv in pair:
                if pair[gv] != gw:
                    return False, f"inconsistent pairing at {gv}"
            else:
                if gw in used:
                    return False, f"two vertices map to word {gw}"
                if G.weight_of(gv) != W.content(gw):
                    return False, f"weight mismatch at {gv}"
                pair[gv] = gw
                used.add(gw)
                queue.append(gv)
    if len(pair) != len(G.vertices):
        return False, f"only {len(pair)} of {len(G.vertices)} vertices reached"
    if len(pair) != len(W.vertices):
        return False, f"oracle has {len(W.vertices)} vertices, matched {len(pair)}"
    return True, ""


def check_oracle_iso(G: CrystalGraph, lam: Sequence[int]) -> bool:
    return oracle_iso_report(G, lam)[0]


# ---------------------------------------------------------------------------
# the explicit sl3 crystals

UP1 = (1, 0, 0)
UP2 = (0, 0, 1)
DIAG_SKY = (0, 1, -1)     # -e2 + e12
DIAG_GROUND = (-1, 1, 0)  # -e1 + e12


def _walk(start: Point, moves: Iterable[Point]) -> list[Point]:
    path = [start]
    for mv in moves:
        path.append(tuple(x + d for x, d in zip(path[-1], mv)))
    return path


def _translate(path: list[Point], shift: Point, t: int) -> list[Point]:
    return [tuple(x + t * d for x, d in zip(p, shift)) for p in path]


class _EdgeCollector:
    def __init__(self, inside: set[Point]):
        self.inside = inside
        self.edges: set[EdgeT] = set()
        self.out: dict[tuple[Point, int], Point] = {}
        self.inc: dict[tuple[Point, int], Point] = {}

    def add_path(self, color: int, path: list[Point]) -> None:
        for u, v in zip(path, path[1:]):
            if u not in self.inside or v not in self.inside:
                continue
            if (u, color, v) in self.edges:
                continue
            if (u, color) in self.out and self.out[(u, color)] != v:
                raise RuntimeError(
                    f"two color-{color} paths leave {u}: {self.out[(u, color)]} and {v}"
                )
            if (v, color) in self.inc and self.inc[(v, color)] != u:
                raise RuntimeError(
                    f"two color-{color} paths enter {v}: {self.inc[(v, color)]} and {u}"
                )
            self.edges.add((u, color, v))
            self.out[(u, color)] = v
            self.inc[(v, color)] = u


def sl3_bgt(a: int, b: int) -> CrystalGraph:
    """B^>(a, b): ''sky'' color-1 paths and ''ground'' color-2 paths, clipped.

    Coordinates are (x_{alpha_1}, x_{alpha_1+alpha_2}, x_{alpha_2}).  Each
    family is a fixed path shape plus all its translations; an edge is kept
    iff both endpoints are lattice points of FFLV_2(a w_1 + b w_2).
    """
    if a < 1 or b < 1:
        raise ValueError("need a, b >= 1")
    pts = fflv_points(2, (a, b))
    col = _EdgeCollector(set(pts))
    span = a + b + 1
    tail = a + b + 2
    for mu in range(b + 1):
        base = _walk((0, 0, mu), [UP1] * a + [DIAG_SKY] * mu)
        for t in range(span + 1):
            col.add_path(1, _translate(base, (-1, 1, 0), t))
    for mu in range(a + 1):
        base = _walk((mu, 0, 0), [DIAG_GROUND] * mu + [UP2] * tail)
        for t in range(span + 1):
            col.add_path(2, _translate(base, (1, 0, 1), t))
    for j in range(1, b + 1):
        base = _walk((a, j, 0), [DIAG_GROUND] * a + [UP2] * tail)
        for t in range(span + 1):
            col.add_path(2, _translate(base, (1, 0, 1), t))
    return CrystalGraph(n=2, lam=(a, b), vertices=pts, edges=frozenset(col.edges))


def sl3_blt(a: int, b: int) -> CrystalGraph:
    """B^<(a, b): the mirrored construction (sky moves first for color 1,
    wall paths for color 2)."""
    if a < 1 or b < 1:
        raise ValueError("need a, b >= 1")
    pts = fflv_points(2, (a, b))
    col = _EdgeCollector(set(pts))
    span = a + b + 1
    for mu in range(b + 1):
        base = _walk((0, 0, mu), [DIAG_SKY] * mu + [UP1] * a)
        for t in range(span + 1):
            col.add_path(1, _translate(base, (1, 0, 1), t))
    for j in range(1, span + 1):
        base = _walk((0, j, b), [DIAG_SKY] * b + [UP1] * a)
        for t in range(span + 1):
            col.add_path(1, _translate(base, (1, 0, 1), t))
    for mu in range(a + 1):
        base = _walk((mu, 0, 0), [UP2] * b + [DIAG_GROUND] * mu)
        for t in range(span + 1):
            col.add_path(2, _translate(base, (0, 1, -1), t))
    return CrystalGraph(n=2, lam=(a, b), vertices=pts, edges=frozenset(col.edges))


def critical_points(a: int, b: int) -> PointSet:
    """Lattice points of FFLV_2(a w_1 + b w_2) on the wall x_{alpha_1} = x_{alpha_2}."""
    if a < 0 or b < 0:
        raise ValueError("need a, b >= 0")
    pts = [p for p in fflv_points(2, (a, b)) if p[0] == p[2]]
    return PointSet(pts, dim=3)


# ---------------------------------------------------------------------------
# conjecture search


@dataclass
class SearchResult:
    graphs: list[CrystalGraph]
    complete: bool
    mode: str
    nodes: int          # backtracking nodes visited
    selections: int     # full selections assembled and validated
    budget: int


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.nodes = 0

    def tick(self, amount: int = 1) -> None:
        self.nodes += amount
        if self.nodes > self.limit:
            raise BudgetExceeded


def _color_selections(
    n: int,
    lam: tuple[int, ...],
    pts: PointSet,
    a: int,
    cand: dict[tuple[Point, int], list[CandidateEdge]],
    budget: _Budget,
) -> list[dict[Point, Point | None]]:
    """All ways to pick <=1 outgoing color-a candidate per vertex that are
    consistent with some decomposition into strings.

    Vertices are processed by descending <wt, alpha_a^vee>, so each vertex's
    incoming edge is settled before the vertex itself: a vertex with string
    position (eps, phi) must take an outgoing edge iff phi > 0, and
    phi = pairing + eps can never be negative.
    """
    pairing = {v: _pairing(weight_of_point(lam, v), a) for v in pts}
    verts = sorted(pts, key=lambda v: (-pairing[v], v))
    results: list[dict[Point, Point | None]] = []
    choice: dict[Point, Point | None] = {}
    eps: dict[Point, int] = {}
    taken: set[Point] = set()

    def rec(i: int) -> None:
        budget.tick()
        if i == len(verts):
            results.append(dict(choice))
            return
        v = verts[i]
        ev = eps.get(v, 0)
        phi = pairing[v] + ev
        if phi < 0:
            return
        if phi == 0:
            choice[v] = None
            rec(i + 1)
            del choice[v]
            return
        for ce in cand[(v, a)]:
            t = ce.target
            if t in taken:
                continue
            taken.add(t)
            eps[t] = ev + 1
            choice[v] = t
            rec(i + 1)
            del choice[v]
            del eps[t]
            taken.discard(t)

    rec(0)
    return results


def _greedy_color_choice(
    n: int,
    lam: tuple[int, ...],
    pts: PointSet,
    a: int,
    cand: dict[tuple[Point, int], list[CandidateEdge]],
    sigma_pos: dict[int, int],
) -> dict[Point, Point | None] | None:
    """One deterministic color-a selection, or None on a dead end."""
    pairing = {v: _pairing(weight_of_point(lam, v), a) for v in pts}
    verts = sorted(pts, key=lambda v: (-pairing[v], v))
    choice: dict[Point, Point | None] = {}
    eps: dict[Point, int] = {}
    taken: set[Point] = set()
    for v in verts:
        ev = eps.get(v, 0)
        phi = pairing[v] + ev
        if phi < 0:
            return None
        if phi == 0:
            choice[v] = None
            continue
        free = [ce for ce in cand[(v, a)] if ce.target not in taken]
        if not free:
            return None
        best = min(
            free,
            key=lambda ce: (sigma_pos[ce.k], ce.pivot if ce.pivot is not None else 0),
        )
        choice[v] = best.target
        taken.add(best.target)
        eps[best.target] = ev + 1
    return choice


def _graph_from_choices(
    n: int, lam: tuple[int, ...], pts: PointSet, per_color: Sequence[dict]
) -> CrystalGraph:
    edges = set()
    for a, choice in enumerate(per_color, start=1):
        for v, t in choice.items():
            if t is not None:
                edges.add((v, a, t))
    return CrystalGraph(n=n, lam=lam, vertices=pts, edges=frozenset(edges))


def conjecture_search(
    n: int,
    lam: Sequence[int],
    sigma: Sequence[int] | None = None,
    mode: str = "exhaustive",
    budget: int = 10_000_000,
) -> SearchResult:
    """Hunt for crystal structures among selections from PB_n(lambda).

    exhaustive: enumerate per-color string decompositions, combine, keep the
    combinations that pass the local axioms and the oracle isomorphism;
    deduplicate by edge set.  greedy: walk the same string discipline but
    never backtrack -- at each vertex that must emit an edge, take the
    candidate whose k comes first in sigma (then the smallest pivot);
    the single selection is validated the same way.
    """
    lam = tuple(lam)
    if sigma is None:
        sigma = tuple(range(1, n + 1))
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"sigma must be a permutation of [1, {n}]")
    if mode not in ("greedy", "exhaustive"):
        raise ValueError(f"unknown mode {mode!r}")
    pts = fflv_points(n, lam)
    cand = candidate_map(n, lam)
    sigma_pos = {k: i for i, k in enumerate(sigma)}

    if mode == "greedy":
        choices = []
        for a in range(1, n + 1):
            choice = _greedy_color_choice(n, lam, pts, a, cand, sigma_pos)
            if choice is None:
                return SearchResult(
                    graphs=[], complete=True, mode="greedy",
                    nodes=0, selections=0, budget=budget,
                )
            choices.append(choice)
        g = _graph_from_choices(n, lam, pts, choices)
        ok = check_local_axioms(g)["passed"] and check_oracle_iso(g, lam)
        return SearchResult(
            graphs=[g] if ok else [],
            complete=True,
            mode="greedy",
            nodes=0,
            selections=1,
            budget=budget,
        )

    tracker = _Budget(budget)
    complete = True
    graphs: list[CrystalGraph] = []
    seen: set[frozenset[EdgeT]] = set()
    selections = 0
    try:
        per_color = [
            _color_selections(n, lam, pts, a, cand, tracker)
            for a in range(1, n + 1)
        ]
        for combo in itertools.product(*per_color):
            tracker.tick()
            selections += 1
            g = _graph_from_choices(n, lam, pts, combo)
            if g.edges in seen:
                continue
            if not check_local_axioms(g)["passed"]:
                continue
            if not check_oracle_iso(g, lam):
                continue
            seen.add(g.edges)
            graphs.append(g)
    except BudgetExceeded:
        complete = False
    graphs.sort(key=lambda g: sorted(g.edges))
    return SearchResult(
        graphs=graphs,
        complete=complete,
        mode="exhaustive",
        nodes=tracker.nodes,
        selections=selections,
        budget=budget,
    )


def fixed_k_check(n: int, k: int, r: int) -> bool:
    """Does restricting every color to its fixed-k move recover B(r w_k)?

    With r = 1 the feasible move is unique at each vertex and the graph is
    forced; for r >= 2 uniqueness genuinely fails (two j's can be feasible
    at one vertex), so the check falls back to searching the fixed-k
    selections for one valid crystal.
    """
    if not (1 <= k <= n and r >= 1):
        raise ValueError(f"bad arguments n={n}, k={k}, r={r}")
    lam = tuple(r if t == k else 0 for t in range(1, n + 1))
    pts = fflv_points(n, lam)
    cand = {
        key: [ce for ce in ces if ce.k == k]
        for key, ces in candidate_map(n, lam).items()
    }
    if all(len(ces) <= 1 for ces in cand.values()):
        edges = frozenset(
            (ces[0].source, ces[0].a, ces[0].target)
            for ces in cand.values()
            if ces
        )
        g = CrystalGraph(n=n, lam=lam, vertices=pts, edges=edges)
        return check_local_axioms(g)["passed"] and check_oracle_iso(g, lam)
    tracker = _Budget(10_000_000)
    per_color = [
        _color_selections(n, lam, pts, a, cand, tracker) for a in range(1, n + 1)
    ]
    for combo in itertools.product(*per_color):
        g = _graph_from_choices(n, lam, pts, combo)
        if check_local_axioms(g)["passed"] and check_oracle_iso(g, lam):
            return True
    return False
