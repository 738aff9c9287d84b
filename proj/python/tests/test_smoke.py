import os
import pathlib

import pytest

import curvemul as cm

CORPUS = pathlib.Path(os.environ.get("CURVEMUL_CORPUS", pathlib.Path(__file__).resolve().parents[2] / "corpus"))


def test_multiply_examples():
    assert cm.multiply((1, 0), (0, 1)).as_tuple() == (1, 1)
    assert cm.multiply((0, 1), (1, 0)).as_tuple() == (1, -1)
    assert (cm.TorusClass(1, 0) * cm.TorusClass(2, 0)).as_tuple() == (3, 0)
    assert cm.normalize(-1, 2) == cm.TorusClass(1, -2)


def test_non_associative():
    e1, e2, d = cm.TorusClass(1, 0), cm.TorusClass(0, 1), cm.TorusClass(1, 1)
    assert ((e1 * e2) * d).as_tuple() == (2, 2)
    assert (e1 * (e2 * d)).as_tuple() == (2, 0)


def test_twist_and_profile():
    assert cm.dehn_twist((1, 0), (0, 1)).as_tuple() == (1, 1)
    assert cm.dehn_twist((1, 0), (0, 1), negative=True).as_tuple() == (1, -1)
    assert cm.convexity_profile((1, 0), (0, 1), (1, 2), -2, 2) == [5, 3, 1, 1, 3]
    assert cm.intersection((2, 0), (0, 3)) == 6
    assert cm.signed_power_multiply((1, 0), -1, (0, 1)).as_tuple() == (1, -1)


def test_errors_carry_codes():
    with pytest.raises(cm.CurvemulError) as info:
        cm.TorusClass(0, 0)
    assert info.value.code == "InvalidClass"
    with pytest.raises(cm.CurvemulError) as info:
        cm.power((1, 0), 0)
    assert info.value.code == "InvalidExponent"


def test_scene_resolution():
    grid = cm.torus_grid_scene(1, 0, 0, 1)
    assert cm.validate(grid)["genus"] == 1
    out = cm.census(cm.resolve(grid, "A", "B"))
    assert [(c, k.as_tuple(), t) for c, k, t in out] == [("(A*B)", (1, 1), False)]
    flipped = cm.census(cm.resolve(grid, "A", "B", flipped=True))
    assert flipped[0][1].as_tuple() == (1, -1)
    two = cm.parallel_copies(grid, "A", 2)
    assert cm.crossing_count(two, "A", "B") == 2


def test_corpus_scenes():
    bigon = cm.load_scene(CORPUS / "bigon_control.json")
    assert cm.find_bigons(bigon, "A", "B") == 2
    with pytest.raises(cm.CurvemulError) as info:
        cm.resolve(bigon, "A", "B")
    assert info.value.code == "BigonPresent"
    g2 = cm.load_scene(CORPUS / "genus2_filling_pair.json")
    assert cm.validate(g2)["genus"] == 2
    assert cm.isomorphic(cm.scene_from_text(g2.to_text()), g2)


def test_dt():
    f = cm.load_dt(CORPUS / "dt" / "genus2.json")
    f.validate()
    x = f.coords
    assert cm.dt_curve_intersection(x, 1) == x.m[0]
    y = cm.twist_multiply(x, [1, -2, 3])
    assert cm.solve_twists(y, x) == [1, -2, 3]
    assert cm.dt_dehn_twist(x, 1).t[0] == x.t[0] + x.m[0]
    with pytest.raises(cm.CurvemulError) as info:
        cm.dt_curve_intersection(x, 9)
    assert info.value.code == "UnknownCurveIndex"


def test_verify_report():
    report = cm.verify(["theorem1", "dt"], theorem1_bound=2, dt_trials=20, seed=3)
    assert report["passed"] is True
    assert [s["suite"] for s in report["suites"]] == ["theorem1", "dt"]
    assert "theorem1" in cm.suite_names()
