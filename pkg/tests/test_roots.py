"""Root order, reduced words, and weights."""

import random

from fflv.roots import (
    Root,
    all_reduced_words,
    cmp_oplex,
    cmp_roplex,
    fundamental_weight,
    ik_word,
    is_reduced,
    lexmax_word,
    lexmin_word,
    num_roots,
    positive_roots,
    random_reduced_word,
    root_enumeration,
    root_index,
    weight_mu,
    weight_of_point,
)

import oracles


def test_positive_roots_small():
    assert positive_roots(1) == [Root(1, 1)]
    assert positive_roots(2) == [Root(1, 1), Root(1, 2), Root(2, 2)]
    assert positive_roots(3) == [
        Root(1, 1), Root(1, 2), Root(1, 3),
        Root(2, 2), Root(2, 3), Root(3, 3),
    ]


def test_positive_roots_shape():
    for n in range(1, 7):
        roots = positive_roots(n)
        assert len(roots) == num_roots(n) == n * (n + 1) // 2
        assert roots == sorted(roots)  # canonical order is (i, j) lex
        assert all(1 <= r.i <= r.j <= n for r in roots)
        idx = root_index(n)
        assert [idx[r] for r in roots] == list(range(len(roots)))


def test_root_height():
    assert Root(1, 1).height == 1
    assert Root(2, 5).height == 4


def test_is_reduced():
    assert is_reduced((1, 2, 1), 2)
    assert is_reduced((2, 1, 2), 2)
    assert not is_reduced((1, 1, 2), 2)
    assert not is_reduced((1, 2), 2)       # too short
    assert not is_reduced((1, 2, 1, 1), 2)
    assert not is_reduced((1, 2, 3), 2)    # letter out of range
    assert is_reduced((1,), 1)


def test_special_words_frozen():
    assert lexmin_word(1) == (1,)
    assert lexmin_word(2) == (1, 2, 1)
    assert lexmin_word(3) == (1, 2, 1, 3, 2, 1)
    assert lexmax_word(2) == (2, 1, 2)
    assert lexmax_word(3) == (3, 2, 3, 1, 2, 3)
    assert ik_word(3, 1) == (1, 2, 3, 1, 2, 1)
    assert ik_word(3, 2) == (2, 1, 3, 2, 3, 1)
    assert ik_word(3, 3) == (3, 2, 1, 3, 2, 3)


def test_special_words_are_reduced():
    for n in range(1, 7):
        assert is_reduced(lexmin_word(n), n)
        assert is_reduced(lexmax_word(n), n)
        for k in range(1, n + 1):
            assert is_reduced(ik_word(n, k), n)
    # i^1 is the lex-minimal word up to the block order
    assert sorted(ik_word(4, 1)) == sorted(lexmin_word(4))


def test_ik_word_rejects_bad_k():
    for n, k in [(3, 0), (3, 4), (2, -1)]:
        try:
            ik_word(n, k)
        except ValueError:
            pass
        else:
            raise AssertionError(f"ik_word({n}, {k}) should have raised")


def test_root_enumeration_frozen():
    assert root_enumeration(lexmin_word(2)) == [Root(1, 1), Root(1, 2), Root(2, 2)]
    # i^2 at n=3 lists the roots containing 2 first, column by column
    assert root_enumeration(ik_word(3, 2)) == [
        Root(2, 2), Root(1, 2), Root(2, 3), Root(1, 3), Root(1, 1), Root(3, 3),
    ]


def test_root_enumeration_is_bijection():
    for n in (2, 3):
        for word in all_reduced_words(n):
            enum = root_enumeration(word, n)
            assert sorted(enum) == positive_roots(n)


def test_root_enumeration_rejects_non_reduced():
    try:
        root_enumeration((1, 1, 2), 2)
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError on a non-reduced word")


def test_ik_head_is_the_k_rectangle():
    """The first k(n-k+1) roots of the i^k enumeration are exactly the roots
    whose interval [i, j] contains k, listed column by column with i
    descending inside each column."""
    for n in range(1, 6):
        for k in range(1, n + 1):
            enum = root_enumeration(ik_word(n, k), n)
            head = enum[: k * (n - k + 1)]
            expected = [
                Root(p, q)
                for q in range(k, n + 1)
                for p in range(k, 0, -1)
            ]
            assert head == expected
            assert all(r.i <= k <= r.j for r in head)
            assert all(not (r.i <= k <= r.j) for r in enum[len(head):])


def test_all_reduced_words_matches_oracle():
    for n in (1, 2, 3):
        assert all_reduced_words(n) == oracles.all_reduced_words_recursive(n + 1)
    assert len(all_reduced_words(3)) == 16


def test_random_reduced_word():
    rng = random.Random(20260822)
    for n in (2, 3, 4, 5):
        for _ in range(30):
            w = random_reduced_word(n, rng)
            assert is_reduced(w, n)


def test_cmp_oplex_frozen():
    # at the leftmost difference the SMALLER entry wins
    assert cmp_oplex((0, 2), (1, 0)) == 1
    assert cmp_oplex((1, 0), (0, 2)) == -1
    assert cmp_oplex((1, 1), (1, 1)) == 0
    assert cmp_oplex((1, 0, 5), (1, 2, 0)) == 1


def test_cmp_roplex_frozen():
    assert cmp_roplex((5, 0), (0, 1)) == 1
    assert cmp_roplex((0, 1), (5, 0)) == -1
    assert cmp_roplex((2, 2), (2, 2)) == 0
    assert cmp_roplex((0, 1, 1), (9, 0, 1)) == -1


def test_cmp_orders_are_total_orders():
    rng = random.Random(7)
    vecs = [tuple(rng.randrange(4) for _ in range(5)) for _ in range(40)]
    for cmp in (cmp_oplex, cmp_roplex):
        for a in vecs:
            assert cmp(a, a) == 0
            for b in vecs:
                assert cmp(a, b) == -cmp(b, a)  # antisymmetry
                assert (cmp(a, b) == 0) == (a == b)
        # transitivity via consistency with a sort key: descending in these
        # orders is ascending in the plain (or reversed) lex order
        key = {cmp_oplex: lambda v: v, cmp_roplex: lambda v: tuple(reversed(v))}[cmp]
        ranked = sorted(vecs, key=key)
        for a, b in zip(ranked, ranked[1:]):
            assert cmp(a, b) >= 0


def test_weight_mu():
    assert weight_mu((1, 1)) == (2, 1, 0)
    assert weight_mu((2, 0, 1)) == (3, 1, 1, 0)
    assert weight_mu(()) == (0,)


def test_fundamental_weight():
    assert fundamental_weight(3, 2) == (0, 1, 0)
    assert fundamental_weight(1, 1) == (1,)


def test_weight_of_point_frozen():
    # n=2, lambda=(1,1): the point with a single box at alpha_11 has
    # content (1, 2, 0)
    assert weight_of_point((1, 1), (1, 0, 0)) == (1, 2, 0)
    assert weight_of_point((1, 1), (0, 0, 0)) == (2, 1, 0)
    # a box at alpha_12 moves a unit from row 1 to row 3
    assert weight_of_point((1, 1), (0, 1, 0)) == (1, 1, 1)


def test_weight_of_point_content_is_conserved():
    rng = random.Random(11)
    for _ in range(50):
        n = rng.randrange(1, 5)
        lam = tuple(rng.randrange(3) for _ in range(n))
        x = tuple(rng.randrange(3) for _ in range(num_roots(n)))
        wt = weight_of_point(lam, x)
        assert sum(wt) == sum(weight_mu(lam))
