from fflv.polytope import PointSet
from fflv.tiling import lusztig_points
from fflv.roots import ik_word
from fflv.verify import (
    default_sweep,
    generate_default_sweep,
    run_suite,
    verify_dyck_correspondence,
    verify_fundamental,
    verify_word_counts,
    verify_main,
)


def test_verify_main_small_cases():
    for n, lam in ((2, (1, 1)), (2, (2, 1)), (2, (0, 2)), (3, (1, 1, 1))):
        report = verify_main(n, lam)
        assert report.passed, (n, lam, report.witnesses)
        assert not report.witnesses
        assert report.seconds >= 0


def test_verify_main_zero_weight():
    assert verify_main(3, (0, 0, 0)).passed


def test_verify_main_detects_missing_points():
    # drop one point from the w_1 summand: the sum goes incomplete
    good = lusztig_points(ik_word(2, 1), (1, 0))
    broken = PointSet([p for p in good if p != (0, 1, 0)], dim=3)
    report = verify_main(2, (1, 1), summand_override={1: broken})
    assert not report.passed
    assert report.witnesses
    assert any("missing from sum" in w["reason"] for w in report.witnesses)


def test_verify_main_detects_excess_points():
    good = lusztig_points(ik_word(2, 1), (1, 0))
    fat = PointSet(list(good) + [(5, 0, 0)], dim=3)
    report = verify_main(2, (1, 1), summand_override={1: fat})
    assert not report.passed
    assert any("not an FFLV lattice point" in w["reason"] for w in report.witnesses)


def test_verify_fundamental_sweep():
    for n in (1, 2, 3):
        for k in range(1, n + 1):
            for r in (1, 2):
                report = verify_fundamental(n, k, r)
                assert report.passed, (n, k, r, report.witnesses)


def test_verify_word_counts():
    assert verify_word_counts(2, (2, 1)).passed
    assert verify_word_counts(3, (1, 1, 0)).passed
    try:
        verify_word_counts(4, (1, 0, 0, 0))
    except ValueError:
        pass
    else:
        assert False, "expected ValueError for n > 3"


def test_verify_dyck_all_small():
    for n in (1, 2, 3, 4):
        for k in range(1, n + 1):
            report = verify_dyck_correspondence(n, k)
            assert report.passed, (n, k, report.witnesses)


def test_default_sweep_shape():
    config = default_sweep()
    assert set(config) == {"main", "fundamental", "words", "dyck"}
    assert [2, [1, 1]] in config["main"]
    assert [4, 4, 3] in config["fundamental"]
    # the cached JSON (when present) must not drift from the generator
    assert config == generate_default_sweep()


def test_run_suite_custom_config():
    config = {
        "main": [[2, [1, 1]]],
        "fundamental": [[2, 1, 1]],
        "words": [[2, [1, 0]]],
        "dyck": [[3, 2]],
    }
    reports = run_suite(config)
    assert [r.claim for r in reports] == ["main", "fundamental", "words", "dyck"]
    assert all(r.passed for r in reports)
    for r in reports:
        obj = r.to_json()
        assert set(obj) == {"claim", "params", "passed", "witnesses", "seconds"}
    reports = run_suite(config, kinds=["dyck"])
    assert [r.claim for r in reports] == ["dyck"]


def test_run_suite_rejects_malformed_config():
    # A hand-edited sweep file should fail loudly, not crash mid-sweep or
    # produce a vacuously green run.
    for bad in (
        [[2, [1, 1]]],                              # top level not a dict
        {"mian": [[2, [1, 1]]]},                    # typo in the kind name
        {"main": [{"n": 2, "lam": [1, 1]}]},        # case is an object, not a pair
        {"main": [[2, [1, 1], 3]]},                 # wrong arity
        {"fundamental": [[2, 1, "1"]]},             # non-integer parameter
    ):
        try:
            run_suite(bad)
        except ValueError:
            pass
        else:
            assert False, f"expected ValueError for {bad!r}"
    try:
        run_suite({"main": []}, kinds=["words"])
    except ValueError:
        pass
    else:
        assert False, "expected ValueError for a kinds filter naming nothing"


def test_report_str_has_status():
    line = str(verify_main(2, (1, 0)))
    assert line.startswith("[PASS] main(")
