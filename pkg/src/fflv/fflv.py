"""FFLV polytopes: Dyck paths, H-description, fundamental points, Weyl dimension.

Coordinates live in Z^{Delta_+} with the canonical (i, j)-lex root order of
``fflv.roots``.  The polytope FFLV_n(lambda) is cut out by one inequality per
Dyck path p: sum of the coordinates along p is at most lambda_i + ... +
lambda_j, where the path runs from alpha_{i,i} to alpha_{j,j}.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

from .polytope import HPolytope, PointSet, lattice_points
from .roots import Root, fundamental_weight, num_roots, root_index, weight_mu


class DyckPath(NamedTuple):
    roots: tuple[Root, ...]
    i: int
    j: int


class FundamentalPoint(NamedTuple):
    subset: tuple[int, ...]
    point: tuple[int, ...]


def _check_dominant(n: int, lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(int(v) for v in lam)
    if len(lam) != n:
        raise ValueError(f"weight has {len(lam)} entries, expected {n}")
    if any(v < 0 for v in lam):
        raise ValueError(f"weight must be dominant (all entries >= 0): {lam}")
    return lam


def dyck_paths(n: int) -> list[DyckPath]:
    """All Dyck paths, grouped by (i, j) with i <= j.

    A path from alpha_{i,i} to alpha_{j,j} moves alpha_{s,t} -> alpha_{s+1,t}
    (when s+1 <= t) or alpha_{s,t} -> alpha_{s,t+1} (when t+1 <= j); since t
    never decreases, restricting t <= j loses nothing.
    """
    out: list[DyckPath] = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            stack: list[tuple[Root, ...]] = [(Root(i, i),)]
            while stack:
                path = stack.pop()
                s, t = path[-1]
                if (s, t) == (j, j):
                    out.append(DyckPath(path, i, j))
                    continue
                if t + 1 <= j:
                    stack.append(path + (Root(s, t + 1),))
                if s + 1 <= t:
                    stack.append(path + (Root(s + 1, t),))
    return out


def fflv_hrep(n: int, lam: Sequence[int]) -> HPolytope:
    """One 0/1 row per Dyck path; rhs is the partial sum lambda_i+...+lambda_j."""
    lam = _check_dominant(n, lam)
    idx = root_index(n)
    N = num_roots(n)
    rows = []
    for path in dyck_paths(n):
        coeffs = [0] * N
        for r in path.roots:
            coeffs[idx[r]] = 1
        rows.append((tuple(coeffs), sum(lam[path.i - 1 : path.j])))
    return HPolytope(dim=N, rows=tuple(rows), nonneg=True)


def fflv_points(n: int, lam: Sequence[int]) -> PointSet:
    """The lattice points FFLV_n(lambda)_Z.

    The box sum(lambda) is exact here: every single coordinate x_{i,j} is
    itself the support of a Dyck path, so no coordinate can exceed its rhs.
    """
    lam = _check_dominant(n, lam)
    return lattice_points(fflv_hrep(n, lam), sum(lam))


def fundamental_points(n: int, k: int) -> list[FundamentalPoint]:
    """The explicit points p_{j_1...j_k} of FFLV_n(omega_k), one per k-subset.

    For a subset J = {j_1 < ... < j_k} of [m]: let s = #{j in J : j <= k}
    and p_1 < ... < p_{k-s} be [k] \\ J; the point has value 1 exactly at the
    roots alpha_{p_r, j_{k-r+1} - 1}.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    from itertools import combinations

    idx = root_index(n)
    N = num_roots(n)
    out: list[FundamentalPoint] = []
    for J in combinations(range(1, n + 2), k):
        ps = [p for p in range(1, k + 1) if p not in J]
        x = [0] * N
        for r, p in enumerate(ps, start=1):
            x[idx[Root(p, J[k - r] - 1)]] = 1
        out.append(FundamentalPoint(J, tuple(x)))
    return out


def weyl_dim(n: int, lam: Sequence[int]) -> int:
    """dim V(lambda) by the Weyl formula, in exact arithmetic."""
    lam = _check_dominant(n, lam)
    mu = weight_mu(lam)
    m = n + 1
    total = Fraction(1)
    for i in range(m):
        for j in range(i + 1, m):
            total *= Fraction(mu[i] - mu[j] + j - i, j - i)
    assert total.denominator == 1
    return total.numerator


def omega(n: int, k: int) -> tuple[int, ...]:
    """The fundamental weight omega_k as a lambda-vector."""
    return fundamental_weight(n, k)
