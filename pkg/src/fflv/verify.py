"""Replayable verification of the package's headline claims.

Each ``verify_*`` function checks one claim for one parameter set and
returns a :class:`VerificationReport`; a failing report always carries at
least one concrete witness.  ``run_suite`` replays a whole sweep, by
default the one shipped in ``data/sweep_default.json``.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from importlib import resources
from math import comb
from typing import Sequence

from .fflv import fflv_hrep, fflv_points, fundamental_points, weyl_dim
from .polytope import PointSet, contains, sumset
from .roots import Root, all_reduced_words, ik_word, num_roots, root_index
from .tiling import (
    build_tiling,
    crossing_functional,
    dual_crossings,
    lusztig_points,
    reineke_filter,
)

MAX_WITNESSES = 5


@dataclass
class VerificationReport:
    claim: str
    params: dict
    passed: bool
    witnesses: list = field(default_factory=list)
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "params": self.params,
            "passed": self.passed,
            "witnesses": self.witnesses,
            "seconds": round(self.seconds, 6),
        }

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = ", ".join(f"{k}={v}" for k, v in self.params.items())
        line = f"[{status}] {self.claim}({params})  {self.seconds:.2f}s"
        if not self.passed and self.witnesses:
            line += f"  witness: {self.witnesses[0]}"
        return line


def _omega_vector(n: int, k: int, r: int = 1) -> tuple[int, ...]:
    return tuple(r if t == k else 0 for t in range(1, n + 1))


def verify_main(
    n: int,
    lam: Sequence[int],
    summand_override: dict[int, PointSet] | None = None,
) -> VerificationReport:
    """Minkowski decomposition: the FFLV lattice points are exactly the sum
    of the Lusztig lattice points of the words i_k, weighted by lambda.

    ``summand_override`` swaps out individual summands (k -> replacement
    point set); it exists so that fault injection can demonstrate the
    check actually bites.
    """
    t0 = time.perf_counter()
    lam = tuple(lam)
    dim = num_roots(n)
    witnesses: list = []
    F = fflv_points(n, lam)
    total = PointSet([(0,) * dim], dim=dim)
    for k in range(1, n + 1):
        if lam[k - 1] == 0:
            continue
        S = lusztig_points(ik_word(n, k), _omega_vector(n, k, lam[k - 1]))
        if summand_override and k in summand_override:
            S = summand_override[k]
        total = sumset(total, S)

    hrep = fflv_hrep(n, lam)
    for p in total:
        if p not in F:
            inside = contains(hrep, p)
            witnesses.append(
                {
                    "point": list(p),
                    "reason": "in Minkowski sum, not an FFLV lattice point"
                    + ("" if inside else " (violates the H-description)"),
                }
            )
            if len(witnesses) >= MAX_WITNESSES:
                break
    if len(witnesses) < MAX_WITNESSES:
        for p in F:
            if p not in total:
                witnesses.append(
                    {"point": list(p), "reason": "FFLV lattice point missing from sum"}
                )
                if len(witnesses) >= MAX_WITNESSES:
                    break

    return VerificationReport(
        claim="main",
        params={"n": n, "lam": list(lam)},
        passed=not witnesses and total == F,
        witnesses=witnesses,
        seconds=time.perf_counter() - t0,
    )


def verify_fundamental(n: int, k: int, r: int) -> VerificationReport:
    """FFLV and i_k-Lusztig agree on r*w_k; for r = 1 both coincide with the
    explicitly indexed points, C(n+1, k) of them."""
    t0 = time.perf_counter()
    lam = _omega_vector(n, k, r)
    witnesses: list = []
    F = fflv_points(n, lam)
    L = lusztig_points(ik_word(n, k), lam)
    for p in F:
        if p not in L:
            witnesses.append({"point": list(p), "reason": "FFLV only"})
    for p in L:
        if p not in F:
            witnesses.append({"point": list(p), "reason": "Lusztig only"})
    if r == 1:
        explicit = PointSet([fp.point for fp in fundamental_points(n, k)])
        if explicit != F:
            diff = set(explicit) ^ set(F)
            witnesses.append(
                {
                    "point": list(sorted(diff)[0]),
                    "reason": "explicit fundamental points differ",
                }
            )
        if len(F) != comb(n + 1, k):
            witnesses.append(
                {"count": len(F), "reason": f"expected C({n + 1},{k}) = {comb(n + 1, k)}"}
            )
    return VerificationReport(
        claim="fundamental",
        params={"n": n, "k": k, "r": r},
        passed=not witnesses,
        witnesses=witnesses[:MAX_WITNESSES],
        seconds=time.perf_counter() - t0,
    )


def verify_word_counts(n: int, lam: Sequence[int]) -> VerificationReport:
    """Every reduced word's Lusztig polytope holds weyl_dim(lambda) lattice
    points.  Exhaustive over words, so desk scale only (n <= 3)."""
    if n > 3:
        raise ValueError("word-exhaustive check is desk scale: n <= 3")
    t0 = time.perf_counter()
    lam = tuple(lam)
    expected = weyl_dim(n, lam)
    witnesses: list = []
    for word in all_reduced_words(n):
        count = len(lusztig_points(word, lam))
        if count != expected:
            witnesses.append(
                {"word": list(word), "count": count, "expected": expected}
            )
            if len(witnesses) >= MAX_WITNESSES:
                break
    return VerificationReport(
        claim="words",
        params={"n": n, "lam": list(lam)},
        passed=not witnesses,
        witnesses=witnesses,
        seconds=time.perf_counter() - t0,
    )


def _grid_path_supports(n: int, k: int) -> set[frozenset[Root]]:
    """Supports of monotone staircase paths (1, k) -> (k, n) inside the
    rectangle [1, k] x [k, n]."""
    out: set[frozenset[Root]] = set()
    stack: list[list[tuple[int, int]]] = [[(1, k)]]
    while stack:
        path = stack.pop()
        s, t = path[-1]
        if (s, t) == (k, n):
            out.add(frozenset(Root(i, j) for i, j in path))
            continue
        if s + 1 <= k:
            stack.append(path + [(s + 1, t)])
        if t + 1 <= n:
            stack.append(path + [(s, t + 1)])
    return out


def verify_dyck_correspondence(n: int, k: int) -> VerificationReport:
    """The s = k rows of the i_k-Lusztig system, restricted to the rectangle
    {alpha_{i,j} : i <= k <= j}, pick out precisely the staircase paths:

    * no row has a negative coefficient inside the rectangle;
    * every restricted support sits inside some path support;
    * the maximal restricted supports are exactly the path supports,
      C(n-1, k-1) of them;
    * the Reineke filter discards nothing at s = k.
    """
    t0 = time.perf_counter()
    witnesses: list = []
    word = ik_word(n, k)
    T = build_tiling(word)
    idx = root_index(n)
    roots = sorted(idx, key=idx.get)
    rect = {r for r in roots if r.i <= k <= r.j}

    crossings = dual_crossings(T, k)
    kept = reineke_filter(crossings)
    if len(kept) != len(crossings):
        witnesses.append(
            {"reason": f"Reineke filter dropped {len(crossings) - len(kept)} crossings at s={k}"}
        )

    restricted: set[frozenset[Root]] = set()
    for cr in kept:
        coeffs, _ = crossing_functional(T, k, cr)
        bad = [
            str(r)
            for r, c in zip(roots, coeffs)
            if c < 0 and r in rect
        ]
        if bad:
            witnesses.append(
                {"reason": f"negative coefficient inside the rectangle at {bad[0]}"}
            )
        restricted.add(
            frozenset(r for r, c in zip(roots, coeffs) if c > 0 and r in rect)
        )

    paths = _grid_path_supports(n, k)
    maximal = {
        s for s in restricted if not any(s < other for other in restricted)
    }
    if len(paths) != comb(n - 1, k - 1):
        witnesses.append(
            {"reason": f"{len(paths)} paths, expected C({n - 1},{k - 1})"}
        )
    for s in restricted:
        if not any(s <= p for p in paths):
            witnesses.append(
                {"reason": "restricted support outside every path",
                 "support": sorted(map(str, s))}
            )
            break
    for s in maximal - paths:
        witnesses.append(
            {"reason": "maximal support is not a path", "support": sorted(map(str, s))}
        )
        break
    for p in paths - maximal:
        witnesses.append(
            {"reason": "path not realized as a maximal support",
             "support": sorted(map(str, p))}
        )
        break

    return VerificationReport(
        claim="dyck",
        params={"n": n, "k": k},
        passed=not witnesses,
        witnesses=witnesses[:MAX_WITNESSES],
        seconds=time.perf_counter() - t0,
    )


def generate_default_sweep() -> dict:
    """The shipped sweep, built in code so a checkout without the cached
    JSON behaves identically."""

    def weights(n: int, total: int) -> list[list[int]]:
        out = [
            list(lam)
            for lam in itertools.product(range(total + 1), repeat=n)
            if sum(lam) <= total
        ]
        out.sort(key=lambda l: (sum(l), l))
        return out

    return {
        "main": [[2, lam] for lam in weights(2, 3)]
        + [[3, lam] for lam in weights(3, 3)]
        + [[4, lam] for lam in weights(4, 2)],
        "fundamental": [
            [n, k, r]
            for n in (1, 2, 3, 4)
            for k in range(1, n + 1)
            for r in (1, 2, 3)
        ],
        "words": [[2, lam] for lam in weights(2, 2)]
        + [[3, lam] for lam in weights(3, 2)],
        "dyck": [[n, k] for n in (1, 2, 3, 4) for k in range(1, n + 1)],
    }


def default_sweep() -> dict:
    path = resources.files("fflv").joinpath("data/sweep_default.json")
    try:
        return json.loads(path.read_text())
    except FileNotFoundError:
        return generate_default_sweep()


def _valid_case(kind: str, case) -> bool:
    if not isinstance(case, (list, tuple)):
        return False
    if kind in ("main", "words"):
        return (
            len(case) == 2
            and isinstance(case[0], int)
            and isinstance(case[1], (list, tuple))
            and all(isinstance(v, int) for v in case[1])
        )
    arity = 3 if kind == "fundamental" else 2
    return len(case) == arity and all(isinstance(v, int) for v in case)


def run_suite(config: dict | None = None, kinds: Sequence[str] | None = None) -> list[VerificationReport]:
    """Replay a sweep of claims.  ``config`` maps claim names to parameter
    lists (default: the shipped sweep); ``kinds`` restricts which claims run.

    A hand-edited config is validated up front: unknown kinds and cases of
    the wrong shape raise ``ValueError`` instead of failing mid-sweep, and a
    ``kinds`` filter naming nothing in the config is an error rather than a
    silently empty (vacuously green) run.
    """
    if config is None:
        config = default_sweep()
    if not isinstance(config, dict):
        raise ValueError("suite config must map claim kinds to case lists")
    if kinds is not None:
        bad = sorted(set(kinds) - set(config))
        if bad:
            raise ValueError(f"unknown suite kind(s): {', '.join(bad)}")
    reports: list[VerificationReport] = []
    for kind in config:
        if kind not in ("main", "fundamental", "words", "dyck"):
            raise ValueError(f"unknown claim kind {kind!r}")
        if kinds is not None and kind not in kinds:
            continue
        for case in config[kind]:
            if not _valid_case(kind, case):
                raise ValueError(f"malformed {kind} case {case!r}")
            if kind == "main":
                n, lam = case
                reports.append(verify_main(n, lam))
            elif kind == "fundamental":
                n, k, r = case
                reports.append(verify_fundamental(n, k, r))
            elif kind == "words":
                n, lam = case
                reports.append(verify_word_counts(n, lam))
            else:
                n, k = case
                reports.append(verify_dyck_correspondence(n, k))
    return reports
