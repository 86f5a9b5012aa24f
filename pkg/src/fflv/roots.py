"""Type A_n root-system bookkeeping.

Positive roots alpha_{i,j} = alpha_i + ... + alpha_j are indexed by pairs
1 <= i <= j <= n and always listed in one canonical order, lexicographic by
(i, j); every coordinate vector elsewhere in the package is indexed this way.

A reduced word for the longest element w0 of S_m (m = n+1) is a tuple of
letters in [1, n] of length N = n(n+1)/2 such that every letter swaps an
ascent of the running permutation.  Each reduced word induces an enumeration
of the positive roots; the special words ``ik_word(n, k)`` enumerate the
roots containing k first.
"""

from __future__ import annotations

import random
from typing import NamedTuple, Sequence

Word = tuple[int, ...]


class Root(NamedTuple):
    i: int
    j: int

    @property
    def height(self) -> int:
        return self.j - self.i + 1

    def __str__(self) -> str:
        return f"a[{self.i},{self.j}]"


def num_roots(n: int) -> int:
    return n * (n + 1) // 2


def positive_roots(n: int) -> list[Root]:
    """All alpha_{i,j} for 1 <= i <= j <= n, lexicographic by (i, j)."""
    if n < 1:
        raise ValueError("rank must be >= 1")
    return [Root(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]


def root_index(n: int) -> dict[Root, int]:
    """Position of every root in the canonical order."""
    return {r: p for p, r in enumerate(positive_roots(n))}


def is_reduced(word: Sequence[int], n: int | None = None) -> bool:
    """True iff ``word`` is a reduced expression for the longest element.

    Multiplies the word into a one-line permutation, insisting that every
    letter swaps an ascent (otherwise the length would drop).  After N
    ascent swaps the permutation is automatically the longest one; the final
    comparison is kept as a cheap sanity net.
    """
    word = tuple(word)
    if n is None:
        n = max(word, default=0)
    if n < 1 or any(not 1 <= a <= n for a in word):
        return False
    if len(word) != num_roots(n):
        return False
    m = n + 1
    perm = list(range(1, m + 1))
    for a in word:
        if perm[a - 1] > perm[a]:
            return False
        perm[a - 1], perm[a] = perm[a], perm[a - 1]
    return perm == list(range(m, 0, -1))


def lexmin_word(n: int) -> Word:
    """(1, 2,1, 3,2,1, ..., n,...,1) - the lexicographically minimal word."""
    out: list[int] = []
    for r in range(1, n + 1):
        out.extend(range(r, 0, -1))
    return tuple(out)


def lexmax_word(n: int) -> Word:
    """(n, n-1,n, ..., 1,...,n) - the lexicographically maximal word."""
    out: list[int] = []
    for r in range(n, 0, -1):
        out.extend(range(r, n + 1))
    return tuple(out)


def ik_word(n: int, k: int) -> Word:
    """The special reduced word i^k, concatenation of three factors.

    The first factor (k(n-k+1) letters, blocks (t, t-1, ..., t-k+1) for
    t = k..n) makes the induced enumeration list exactly the roots whose
    interval contains k, column by column; the remaining two factors finish
    w0 without ever touching those roots again.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    out: list[int] = []
    for t in range(k, n + 1):
        out.extend(range(t, t - k, -1))
    for c in range(1, k):
        out.extend(range(n, n - k + c, -1))
    for length in range(n - k, 0, -1):
        out.extend(range(1, length + 1))
    return tuple(out)


def root_enumeration(word: Sequence[int], n: int | None = None) -> list[Root]:
    """The positive roots in the order induced by a reduced word.

    At step k with letter a the running one-line permutation has an ascent
    lo < hi at positions (a, a+1); the step records alpha_{lo, hi-1} and
    swaps the entries.
    """
    word = tuple(word)
    if n is None:
        n = max(word, default=0)
    if not is_reduced(word, n):
        raise ValueError(f"not a reduced word for the longest element: {word}")
    perm = list(range(1, n + 2))
    out: list[Root] = []
    for a in word:
        lo, hi = perm[a - 1], perm[a]
        out.append(Root(lo, hi - 1))
        perm[a - 1], perm[a] = hi, lo
    return out


def all_reduced_words(n: int) -> list[Word]:
    """Every reduced word for the longest element of S_{n+1}, sorted.

    Exhaustive walk over ascent swaps; 2 words at n=2, 16 at n=3.  Intended
    for small n only.
    """
    m = n + 1
    target = tuple(range(m, 0, -1))
    out: list[Word] = []
    stack: list[tuple[tuple[int, ...], Word]] = [(tuple(range(1, m + 1)), ())]
    while stack:
        perm, acc = stack.pop()
        if perm == target:
            out.append(acc)
            continue
        for i in range(m - 1):
            if perm[i] < perm[i + 1]:
                nxt = list(perm)
                nxt[i], nxt[i + 1] = nxt[i + 1], nxt[i]
                stack.append((tuple(nxt), acc + (i + 1,)))
    return sorted(out)


def random_reduced_word(n: int, rng: random.Random) -> Word:
    """A reduced word sampled by a random ascent walk (not uniform)."""
    m = n + 1
    perm = list(range(1, m + 1))
    acc: list[int] = []
    for _ in range(num_roots(n)):
        i = rng.choice([p for p in range(m - 1) if perm[p] < perm[p + 1]])
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        acc.append(i + 1)
    return tuple(acc)


def cmp_oplex(a: Sequence[int], b: Sequence[int]) -> int:
    """Opposite-lexicographic comparison: +1 if a > b, -1 if b > a, 0 if equal.

    At the leftmost index where the vectors differ, the smaller entry wins.
    """
    if len(a) != len(b):
        raise ValueError("length mismatch")
    for x, y in zip(a, b):
        if x != y:
            return 1 if x < y else -1
    return 0


def cmp_roplex(a: Sequence[int], b: Sequence[int]) -> int:
    """Right-opposite-lexicographic comparison; the same rule applied at the
    rightmost differing index."""
    if len(a) != len(b):
        raise ValueError("length mismatch")
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return 1 if x < y else -1
    return 0


def fundamental_weight(n: int, k: int) -> tuple[int, ...]:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    return tuple(1 if t == k else 0 for t in range(1, n + 1))


def weight_mu(lam: Sequence[int]) -> tuple[int, ...]:
    """Partition presentation (mu_1 >= ... >= mu_m = 0), mu_i = lam_i+...+lam_n."""
    n = len(lam)
    mu = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        mu[i] = mu[i + 1] + lam[i]
    return tuple(mu)


def weight_of_point(lam: Sequence[int], x: Sequence[int]) -> tuple[int, ...]:
    """Content vector in Z^m of the point x (indexed by the canonical roots).

    Each unit of x_{i,j} subtracts e_i - e_{j+1} from mu, i.e. moves one box
    from row i to row j+1.
    """
    n = len(lam)
    if len(x) != num_roots(n):
        raise ValueError("point has wrong dimension for this weight")
    wt = list(weight_mu(lam))
    for r, v in zip(positive_roots(n), x):
        if v:
            wt[r.i - 1] -= v
            wt[r.j] += v
    return tuple(wt)
