import math

import pytest

import oriented.experiments as ex
from oriented.errors import NoCrossover
from oriented.experiments import (LEMMA3_COLUMNS, chord_angle, lemma3_sweep, q3_search,
                                  remark_crossover, remark_hull)
from oriented.geometry import Point, min_enclosing_circle
from oriented.segment import Objective, smallest_segment


@pytest.fixture(scope="module")
def sweep():
    return lemma3_sweep()


def test_sweep_rows(sweep):
    assert len(sweep.rows) == 321
    assert all(len(r) == len(LEMMA3_COLUMNS) for r in sweep.rows)
    deg, ua, up, ra, rp, ta, tp = sweep.rows[0]
    assert (deg, ua, up) == (0.0, 0.0, 0.0)
    assert ra == pytest.approx(1.0) and rp == pytest.approx(1.0)
    assert ta == pytest.approx(math.pi) and tp == pytest.approx(math.pi)


def test_sweep_onsets_ordered(sweep):
    assert sweep.onset_area is not None and sweep.onset_perimeter is not None
    assert sweep.onset_perimeter > sweep.onset_area
    # first-order prediction: ~25.03 and ~47.47 degrees, resolved to the 0.25 step
    assert sweep.onset_area == pytest.approx(25.25)
    assert sweep.onset_perimeter == pytest.approx(47.5)


def test_sweep_gap(sweep):
    assert sweep.max_gap > 1e-4
    s = sweep.summary()
    assert s["max_abs_u_diff"] == sweep.max_gap
    assert 0 < s["max_abs_u_diff_at_deg"] <= 80


def test_sweep_rejects_bad_step():
    with pytest.raises(ValueError):
        lemma3_sweep(0, 10, 0)
    with pytest.raises(ValueError):
        lemma3_sweep(0, 10, 20)


def test_remark_family_endpoints():
    assert remark_hull(0.0).n == 33
    assert remark_hull(1.0).n == 64
    for lam in (0.0, 0.3, 1.0):
        assert min_enclosing_circle(remark_hull(lam)).radius == pytest.approx(1.0)


@pytest.fixture(scope="module")
def crossover():
    return remark_crossover(steps=8)


def test_remark_signs(crossover):
    lam0, semi0, circ0 = crossover.rows[0]
    lam1, semi1, circ1 = crossover.rows[-1]
    assert (lam0, lam1) == (0.0, 1.0)
    assert semi0 < circ0
    assert circ1 < semi1


def test_remark_crossover(crossover):
    assert 0.0 < crossover.lam_star < 1.0
    assert abs(crossover.gap_at_star) < 1e-6
    assert len(crossover.rows) == 9


def test_remark_steps_validated():
    with pytest.raises(ValueError):
        remark_crossover(steps=7)


def test_no_crossover_is_reported(monkeypatch):
    monkeypatch.setattr(ex, "_area_gap", lambda lam: (1.0, 0.5, 0.5))
    with pytest.raises(NoCrossover):
        ex.remark_crossover(steps=8)


def test_chord_angle():
    assert chord_angle(Point(0, 1), Point(0, -1)) == 0.0
    assert chord_angle(Point(0, 1), Point(1, 0)) == pytest.approx(math.pi / 2)


def test_square_has_no_inclination(square):
    a = smallest_segment(square, Objective.AREA)
    p = smallest_segment(square, Objective.PERIMETER)
    assert chord_angle(a.container.chord_normal, p.container.chord_normal) == pytest.approx(0, abs=1e-12)


def test_q3_schema_small():
    d = q3_search(3, seed=1).to_dict()
    assert set(d) == {"samples", "seed", "max_angle", "witness", "differing_edges"}
    assert d["max_angle"] >= 0
    assert (d["witness"] is None) == (d["max_angle"] == 0)


def test_q3_witness_is_oracle_verified():
    f = q3_search(40, seed=7)
    assert f.max_angle > 1.0
    w = f.witness
    assert w["verified"]
    assert w["edge_area"] != w["edge_perimeter"]
    assert abs(w["oracle_angle"] - w["angle"]) <= 1e-2
    assert any(d["angle"] == f.max_angle for d in f.differing)


def test_q3_rejects_zero_samples():
    with pytest.raises(ValueError):
        q3_search(0, seed=0)
