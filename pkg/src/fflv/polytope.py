"""Exact integer H-polytope machinery.

An ``HPolytope`` is a list of rows ``coeffs . x <= rhs`` over Z^N, usually
with the implicit constraint x >= 0.  ``lattice_points`` enumerates the
integer points inside a caller-supplied box by depth-first assignment with
interval propagation; everything downstream (Minkowski sums, support
functions, membership) works on the resulting ``PointSet``.

All arithmetic is exact: Python integers only, no floats, no epsilons.
"""

from __future__ import annotations

import json
import warnings
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Point = tuple[int, ...]
RowT = tuple[tuple[int, ...], int]


class BoxEscalationWarning(UserWarning):
    """Some enumerated point touches the box on a coordinate no single row caps.

    The reported set may then be an artifact of the box rather than of the
    polytope; re-run with a larger box (``lattice_points_auto`` does this)."""


@dataclass(frozen=True)
class HPolytope:
    dim: int
    rows: tuple[RowT, ...]
    nonneg: bool = True

    @classmethod
    def make(
        cls,
        dim: int,
        rows: Iterable[tuple[Sequence[int], int]],
        nonneg: bool = True,
    ) -> "HPolytope":
        norm = []
        for coeffs, rhs in rows:
            coeffs = tuple(int(c) for c in coeffs)
            if len(coeffs) != dim:
                raise ValueError(f"row has {len(coeffs)} coefficients, dim is {dim}")
            norm.append((coeffs, int(rhs)))
        return cls(dim=dim, rows=tuple(norm), nonneg=nonneg)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "nonneg": self.nonneg,
            "rows": [{"a": list(a), "b": b} for a, b in self.rows],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "HPolytope":
        return cls.make(
            dim=obj["dim"],
            rows=[(row["a"], row["b"]) for row in obj["rows"]],
            nonneg=obj["nonneg"],
        )


class PointSet:
    """A deduplicated set of integer points, stored sorted.

    Sorted storage gives deterministic iteration order everywhere a report
    or a JSON dump walks the set; membership is binary search.
    """

    __slots__ = ("dim", "_pts")

    def __init__(self, points: Iterable[Sequence[int]], dim: int | None = None):
        pts = sorted({tuple(int(v) for v in p) for p in points})
        if pts:
            d = len(pts[0])
            if any(len(p) != d for p in pts):
                raise ValueError("points of mixed dimension")
            if dim is not None and dim != d:
                raise ValueError(f"points have dimension {d}, expected {dim}")
            dim = d
        elif dim is None:
            raise ValueError("empty PointSet needs an explicit dim")
        self.dim = dim
        self._pts: tuple[Point, ...] = tuple(pts)

    def __len__(self) -> int:
        return len(self._pts)

    def __iter__(self) -> Iterator[Point]:
        return iter(self._pts)

    def __contains__(self, p: Sequence[int]) -> bool:
        q = tuple(p)
        i = bisect_left(self._pts, q)
        return i < len(self._pts) and self._pts[i] == q

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.dim == other.dim and self._pts == other._pts

    def __hash__(self) -> int:
        return hash((self.dim, self._pts))

    def __repr__(self) -> str:
        return f"PointSet({len(self._pts)} points, dim={self.dim})"

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self._pts]

    @classmethod
    def from_json(cls, arr: list, dim: int | None = None) -> "PointSet":
        return cls(arr, dim=dim)

    def dumps(self) -> str:
        """Canonical JSON text (used for byte-stable CLI output)."""
        return json.dumps(self.to_json(), separators=(",", ":"))


def contains(P: HPolytope, x: Sequence[int]) -> bool:
    x = tuple(x)
    if len(x) != P.dim:
        raise ValueError(f"point has dimension {len(x)}, polytope has {P.dim}")
    if P.nonneg and any(v < 0 for v in x):
        return False
    return all(
        sum(c * v for c, v in zip(a, x)) <= b for a, b in P.rows
    )


def _capped_coords(P: HPolytope, box_bound: int) -> set[int]:
    """Coordinates d such that some single row already forces x_d <= box_bound.

    Only rows with all coefficients >= 0 qualify (with x >= 0 they give
    c * x_d <= rhs on the nose)."""
    capped: set[int] = set()
    for a, b in P.rows:
        if all(c >= 0 for c in a):
            for d, c in enumerate(a):
                if c > 0 and b // c <= box_bound:
                    capped.add(d)
    return capped


def lattice_points(P: HPolytope, box_bound: int) -> PointSet:
    """All integer points of P inside [0, box_bound]^dim.

    Depth-first over coordinates; at each level the feasible interval for
    x_d is propagated from every row using coefficient signs and the
    worst-case contribution of the still-free suffix.  Warns with
    ``BoxEscalationWarning`` when a returned point touches the box on a
    coordinate that no single row caps, since the true polytope may then
    extend beyond the box.
    """
    if box_bound < 0:
        raise ValueError("box_bound must be >= 0")
    if not P.nonneg:
        raise ValueError("enumeration needs the implicit x >= 0 constraints")
    N = P.dim
    coeffs = [a for a, _ in P.rows]
    R = len(coeffs)
    # suffix_min[r][d] = least possible value of sum_{i>=d} a_i x_i over the box
    suffix_min = []
    for a in coeffs:
        sm = [0] * (N + 1)
        for d in range(N - 1, -1, -1):
            sm[d] = sm[d + 1] + min(a[d], 0) * box_bound
        suffix_min.append(sm)

    out: list[Point] = []
    x = [0] * N

    def rec(d: int, budget: list[int]) -> None:
        if d == N:
            out.append(tuple(x))
            return
        lo, hi = 0, box_bound
        for r in range(R):
            c = coeffs[r][d]
            slack = budget[r] - suffix_min[r][d + 1]
            if c > 0:
                hi = min(hi, slack // c)
            elif c < 0:
                if slack < 0:
                    lo = max(lo, -(slack // -c))  # ceil(-slack / -c)
            elif slack < 0:
                return
        for v in range(lo, hi + 1):
            x[d] = v
            rec(d + 1, [budget[r] - coeffs[r][d] * v for r in range(R)])

    rec(0, [b for _, b in P.rows])
    result = PointSet(out, dim=N)

    capped = _capped_coords(P, box_bound)
    loose = {
        d
        for p in result
        for d in range(N)
        if p[d] == box_bound and d not in capped
    }
    if loose:
        warnings.warn(
            BoxEscalationWarning(
                f"points touch the box (size {box_bound}) on uncapped "
                f"coordinates {sorted(loose)}; result may be truncated"
            ),
            stacklevel=2,
        )
    return result


def lattice_points_auto(P: HPolytope, box_bound: int, max_rounds: int = 8) -> PointSet:
    """``lattice_points`` with automatic box escalation.

    Doubles the box (box <- 2*box + 1) while the enumeration warns that a
    point touches it on an uncapped coordinate; gives up after
    ``max_rounds`` and lets the final warning propagate.
    """
    box = box_bound
    for round_no in range(max_rounds):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            result = lattice_points(P, box)
        escalate = [w for w in caught if issubclass(w.category, BoxEscalationWarning)]
        for w in caught:
            if not issubclass(w.category, BoxEscalationWarning):
                warnings.warn_explicit(w.message, w.category, w.filename, w.lineno)
        if not escalate:
            return result
        box = 2 * box + 1
    return lattice_points(P, box)


def sumset(A: PointSet, B: PointSet) -> PointSet:
    """Minkowski sum {a + b : a in A, b in B}, deduplicated."""
    if A.dim != B.dim:
        raise ValueError(f"dimension mismatch: {A.dim} vs {B.dim}")
    return PointSet(
        (tuple(u + v for u, v in zip(a, b)) for a in A for b in B), dim=A.dim
    )


def support(A: PointSet, d: Sequence[int]) -> int:
    """Support function: max over a in A of d . a."""
    if len(A) == 0:
        raise ValueError("support of an empty set")
    d = tuple(d)
    if len(d) != A.dim:
        raise ValueError("direction has wrong dimension")
    return max(sum(c * v for c, v in zip(d, a)) for a in A)
