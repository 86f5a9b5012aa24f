"""Tilings, strips, peeling, dual crossings, and the Lusztig H-description.

The small frozen cases ((1,2,1), (2,1,2), i^2 at n=3) were worked out by
hand; they pin every orientation convention in the module.
"""

import random
from itertools import combinations

from fflv.fflv import fflv_points, omega, weyl_dim
from fflv.roots import (
    Root,
    all_reduced_words,
    ik_word,
    lexmax_word,
    lexmin_word,
    num_roots,
    positive_roots,
    random_reduced_word,
    root_index,
)
from fflv.tiling import (
    PeelStallError,
    build_tiling,
    check_rectangle_support,
    crossing_functional,
    dual_crossings,
    lusztig_hrep,
    lusztig_points,
    peel_order,
    reineke_filter,
    strip,
    tiling_to_json,
    tiling_to_svg,
)

import oracles


fs = frozenset


def edge_keys(edges):
    return {(e.bottom, e.label) for e in edges}


def test_build_121_frozen():
    T = build_tiling((1, 2, 1))
    assert [t.labels for t in T.tiles] == [(1, 2), (1, 3), (2, 3)]
    t1, t2, t3 = T.tiles
    assert edge_keys(t1.lower) == {(fs(), 1), (fs({1}), 2)}
    assert edge_keys(t1.upper) == {(fs(), 2), (fs({2}), 1)}
    assert edge_keys(t2.lower) == {(fs({2}), 1), (fs({1, 2}), 3)}
    assert edge_keys(t2.upper) == {(fs({2}), 3), (fs({2, 3}), 1)}
    assert edge_keys(t3.lower) == {(fs(), 2), (fs({2}), 3)}
    assert edge_keys(t3.upper) == {(fs(), 3), (fs({3}), 2)}
    assert [e.label for e in T.right_boundary] == [1, 2, 3]
    assert T.right_boundary[0].bottom == fs({2, 3})


def test_build_212_frozen():
    T = build_tiling((2, 1, 2))
    assert [t.labels for t in T.tiles] == [(2, 3), (1, 3), (1, 2)]
    u1, u2, u3 = T.tiles
    assert edge_keys(u1.upper) == {(fs({1}), 3), (fs({1, 3}), 2)}
    assert edge_keys(u2.upper) == {(fs(), 3), (fs({3}), 1)}
    assert edge_keys(u3.lower) == {(fs({3}), 1), (fs({1, 3}), 2)}
    assert edge_keys(u3.upper) == {(fs({3}), 2), (fs({2, 3}), 1)}


def test_build_tiling_n3_label_pairs():
    for word in (lexmin_word(3), lexmax_word(3)):
        T = build_tiling(word)
        assert sorted(t.labels for t in T.tiles) == [
            (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
        ]


def test_tile_root_bijection():
    for word in all_reduced_words(3):
        T = build_tiling(word)
        assert {t.root for t in T.tiles} == set(positive_roots(3))
        for t in T.tiles:
            assert t.root == Root(t.s, t.t - 1)
            assert T.tile_for_root(t.root) is t


def test_build_tiling_rejects_non_reduced():
    try:
        build_tiling((1, 1, 2))
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")


def test_borders_evolve_two_edges_at_a_time():
    for word in [lexmin_word(3), (2, 1, 3, 2, 3, 1)]:
        T = build_tiling(word)
        assert len(T.borders) == len(word) + 1
        for b0, b1 in zip(T.borders, T.borders[1:]):
            assert len(set(b0) - set(b1)) == 2
            assert len(set(b1) - set(b0)) == 2
        for b in T.borders:
            assert sorted(e.label for e in b) == list(range(1, T.m + 1))


def test_strip_frozen_lexmin3():
    T = build_tiling(lexmin_word(3))
    s1 = strip(T, 1)
    assert [t.labels for t in s1.tiles] == [(1, 2), (1, 3), (1, 4)]


def test_strips_structure():
    for word in all_reduced_words(3):
        T = build_tiling(word)
        strips = {t: strip(T, t) for t in range(1, T.m + 1)}
        for t, st in strips.items():
            assert len(st.tiles) == T.m - 1
            assert all(t in tile.labels for tile in st.tiles)
        for t, u in combinations(range(1, T.m + 1), 2):
            common = set(x.id for x in strips[t].tiles) & set(
                x.id for x in strips[u].tiles
            )
            assert len(common) == 1
            (cid,) = common
            assert T.tiles[cid].labels == (t, u)


def test_peel_frozen_121():
    T = build_tiling((1, 2, 1))
    po = peel_order(T, 4)
    assert po.layer == {1: 1, 0: 2, 2: 3}  # T2 first, then T1, then T3


def test_peel_frozen_212():
    T = build_tiling((2, 1, 2))
    po = peel_order(T, 5)
    assert po.layer == {2: 1, 0: 2, 1: 3}  # U3, U1, U2


def test_peel_from_right_boundary_n2():
    # with the window equal to the right boundary, layer 1 is the unique
    # tile meeting it in two edges
    T = build_tiling(lexmin_word(2))
    po = peel_order(T, 2 * T.m)
    first = [tid for tid, lv in po.layer.items() if lv == 1]
    assert first == [2]  # the {2,3} tile


def test_peel_never_stalls_small():
    for n in (2, 3):
        for word in all_reduced_words(n):
            T = build_tiling(word)
            for s in range(1, 2 * T.m + 1):
                po = peel_order(T, s)
                assert sorted(po.layer) == list(range(len(T.tiles)))
                assert max(po.layer.values()) == po.num_layers


def test_peel_random_words():
    rng = random.Random(424242)
    for n, reps in [(4, 10), (5, 6)]:
        for _ in range(reps):
            word = random_reduced_word(n, rng)
            T = build_tiling(word)
            for s in range(1, 2 * T.m + 1):
                peel_order(T, s)  # raises PeelStallError on failure


def test_dual_crossings_frozen_121():
    T = build_tiling((1, 2, 1))
    g1 = dual_crossings(T, 1)
    by_seq = {cr.strip_sequence: cr for cr in g1}
    assert set(by_seq) == {(1, 3, 2), (1, 2)}
    assert [t.labels for t in by_seq[(1, 3, 2)].tiles] == [(1, 3), (2, 3)]
    assert [t.labels for t in by_seq[(1, 2)].tiles] == [(1, 3), (1, 2), (2, 3)]
    # x12 <= lam_1 and x11 + x12 - x22 <= lam_1, in canonical order
    fns = {crossing_functional(T, 1, cr)[0] for cr in g1}
    assert fns == {(0, 1, 0), (1, 1, -1)}

    g2 = dual_crossings(T, 2)
    assert len(g2) == 1 and g2[0].tiles[0].labels == (2, 3)
    assert crossing_functional(T, 2, g2[0])[0] == (0, 0, 1)
    assert reineke_filter(g1) == g1 and reineke_filter(g2) == g2


def test_dual_crossings_frozen_212():
    T = build_tiling((2, 1, 2))
    g1 = dual_crossings(T, 1)
    assert len(g1) == 1 and g1[0].strip_sequence == (1, 2)
    assert crossing_functional(T, 1, g1[0])[0] == (1, 0, 0)
    g2 = reineke_filter(dual_crossings(T, 2))
    fns = {crossing_functional(T, 2, cr)[0] for cr in g2}
    assert fns == {(0, 1, 0), (-1, 1, 1)}
    seqs = {cr.strip_sequence for cr in g2}
    assert seqs == {(2, 1, 3), (2, 3)}


def test_dual_crossings_frozen_ik2_n3():
    # coordinates: x11,x12,x13,x22,x23,x33
    T = build_tiling(ik_word(3, 2))
    g2 = dual_crossings(T, 2)
    assert reineke_filter(g2) == g2  # Reineke removes nothing at s=k
    fns = {crossing_functional(T, 2, cr)[0] for cr in g2}
    assert fns == {
        (-1, 1, 0, 1, 1, -1),
        (-1, 1, 1, 0, 1, -1),
        (-1, 0, 1, 0, 1, 0),
        (0, 1, 1, 0, 0, -1),
        (0, 0, 1, 0, 0, 0),
    }
    assert {crossing_functional(T, 1, cr)[0] for cr in dual_crossings(T, 1)} == {
        (1, 0, 0, 0, 0, 0)
    }
    assert {crossing_functional(T, 3, cr)[0] for cr in dual_crossings(T, 3)} == {
        (0, 0, 0, 0, 0, 1)
    }


def test_comb_exists_everywhere():
    for word in all_reduced_words(3):
        T = build_tiling(word)
        for s in range(1, 4):
            combs = [cr for cr in dual_crossings(T, s) if cr.is_comb()]
            assert len(combs) == 1
            assert combs[0] in reineke_filter(dual_crossings(T, s))


def test_crossing_coefficients_in_range():
    rng = random.Random(3)
    words = list(all_reduced_words(3)) + [random_reduced_word(4, rng) for _ in range(5)]
    for word in words:
        n = max(word)
        T = build_tiling(word)
        for s in range(1, n + 1):
            for cr in dual_crossings(T, s):
                coeffs, structure = crossing_functional(T, s, cr)
                assert set(coeffs) <= {-1, 0, 1}
                assert cr.strip_sequence[0] == s
                assert cr.strip_sequence[-1] == s + 1
                for item in structure:
                    if item["epsilon"] == 1:
                        assert item["coeff"] == 1


def test_crossings_contained_in_comb_outside_rectangle():
    """For the word i^k at s=k, tiles a crossing uses outside the
    k-rectangle are a subset of the comb's out-of-rectangle tiles."""
    for n in (2, 3, 4):
        for k in range(1, n + 1):
            T = build_tiling(ik_word(n, k))
            crs = dual_crossings(T, k)
            (comb,) = [cr for cr in crs if cr.is_comb()]
            comb_out = {
                t.id for t in comb.tiles if not (t.s <= k and t.t >= k + 1)
            }
            for cr in crs:
                out = {t.id for t in cr.tiles if not (t.s <= k and t.t >= k + 1)}
                assert out <= comb_out


def test_restricted_functionals_are_dyck_supports():
    """At s=k on i^k, each row restricted to the rectangle is 0/1 and lies on
    some maximal monotone path through the rectangle."""
    for n in (2, 3, 4):
        for k in range(1, n + 1):
            T = build_tiling(ik_word(n, k))
            idx = root_index(n)
            rect = [r for r in positive_roots(n) if r.i <= k <= r.j]
            paths = oracles.grid_path_supports(k, n)
            for cr in reineke_filter(dual_crossings(T, k)):
                coeffs, _ = crossing_functional(T, k, cr)
                restr = {(r.i, r.j) for r in rect if coeffs[idx[r]] != 0}
                assert all(coeffs[idx[r]] == 1 for r in rect if coeffs[idx[r]])
                assert any(restr <= p for p in paths)


def test_lusztig_hrep_frozen_points():
    pts = lusztig_points((1, 2, 1), (1, 0))
    assert set(pts) == {(0, 0, 0), (1, 0, 0), (0, 1, 0)}
    assert len(lusztig_points(ik_word(3, 2), omega(3, 2))) == 6
    assert list(lusztig_points((1, 2, 1), (0, 0))) == [(0, 0, 0)]


def test_lusztig_hrep_shape():
    P = lusztig_hrep((1, 2, 1), (3, 5))
    assert set(P.rows) == {
        ((0, 1, 0), 3),
        ((1, 1, -1), 3),
        ((0, 0, 1), 5),
    }
    assert P.dim == num_roots(2)


def test_lusztig_counts_small():
    for word in all_reduced_words(2):
        for lam in [(1, 0), (0, 1), (1, 1), (2, 0)]:
            assert len(lusztig_points(word, lam)) == weyl_dim(2, lam)
    for word in [lexmin_word(3), lexmax_word(3), ik_word(3, 2)]:
        for lam in [(1, 0, 0), (0, 1, 0), (1, 0, 1), (0, 2, 0)]:
            assert len(lusztig_points(word, lam)) == weyl_dim(3, lam)


def test_ik_lusztig_equals_fflv_on_its_weight():
    # for lambda supported on k, the i^k system carves out the same lattice
    # points as the Dyck-path system
    for n in (2, 3):
        for k in range(1, n + 1):
            for r in (1, 2):
                lam = tuple(r if t == k else 0 for t in range(1, n + 1))
                assert lusztig_points(ik_word(n, k), lam) == fflv_points(n, lam)


def test_check_rectangle_support():
    assert check_rectangle_support(2, 1, 1)
    assert check_rectangle_support(3, 2, 1)
    assert check_rectangle_support(3, 1, 0)
    for n in (2, 3):
        for k in range(1, n + 1):
            for r in (0, 1, 2):
                assert check_rectangle_support(n, k, r)


def test_tiling_json_and_svg():
    T = build_tiling(lexmin_word(3))
    doc = tiling_to_json(T)
    assert doc["n"] == 3 and doc["m"] == 4
    assert len(doc["tiles"]) == 6
    assert sorted(doc["strips"]) == [1, 2, 3, 4]
    assert all(len(v) == 3 for v in doc["strips"].values())
    assert set(doc["peel_layers"]) == set(range(1, 9))
    svg = tiling_to_svg(T)
    assert svg.startswith("<svg") and svg.count("<polygon") == 6
    assert svg == tiling_to_svg(build_tiling(lexmin_word(3)))  # deterministic
