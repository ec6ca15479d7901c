import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from knotsurgery.errors import InfeasibleConstantsError
from knotsurgery.kirby_ledger import (
    STAGES,
    GridSpec,
    TheoremConstants,
    build_ledger,
    constants_document,
    crossing_constants,
    crossings_bound,
    disks,
    first_violation,
    fit_constants,
    load_constants,
    pair_count,
    reduce_poly,
    strand_constants,
    strands_bound,
    theorem_bound,
)
from knotsurgery.levine import LevineParams

twists = st.lists(st.integers(-12, 12), min_size=1, max_size=8).map(LevineParams)
frozen = load_constants()


def test_pair_count():
    assert [pair_count(x) for x in (-2, -1, 0, 1, 2)] == [5, 3, 0, 1, 3]


def test_regression_values_for_3_3():
    p = LevineParams((3, 3))
    led = build_ledger(p)
    assert led.totals == (30, 176, 376)
    assert led.bound_total == 582
    assert strands_bound(p) == 196
    assert crossings_bound(p) == 444
    assert theorem_bound(p, frozen) == 2456


def test_csv_layout():
    rows = build_ledger(LevineParams((3, 3))).to_csv().splitlines()
    assert rows[0] == "stage,disks,strands,crossings"
    assert rows[-1] == "TOTAL,30,176,376"
    assert len(rows) == len(STAGES) + 2


def test_zero_box_stage_is_empty():
    row = build_ledger(LevineParams((0,))).stage("twist boxes")
    assert (row.disks, row.strands, row.crossings) == (0, 0, 0)


def test_shape_constants():
    assert strand_constants() == (8, 10, 16, 72)
    assert crossing_constants() == (8, 14, 4, 22, 144)
    assert frozen == TheoremConstants(278, 28, 4)


@given(twists)
def test_disk_formula(p):
    assert disks(p) == 2 * (2 * p.d + 1 + sum(pair_count(x) for x in p.c))
    assert disks(p) <= 6 * p.d + 4 * p.abs_sum + 2
    assert build_ledger(p).disks_total == disks(p)


@given(twists)
def test_shape_bounds_dominate(p):
    led = build_ledger(p)
    assert led.strands_total <= strands_bound(p)
    assert led.crossings_total <= crossings_bound(p)
    assert led.bound_total <= theorem_bound(p, frozen)


@given(st.lists(st.integers(0, 10), min_size=1, max_size=6), st.integers(0, 5), st.data())
def test_bound_monotone_in_nonnegative_twists(c, bump, data):
    i = data.draw(st.integers(0, len(c) - 1))
    bigger = list(c)
    bigger[i] += bump
    assert build_ledger(LevineParams(c)).bound_total <= build_ledger(LevineParams(bigger)).bound_total


def test_bound_is_not_monotone_for_mixed_signs():
    # the squared writhe term can shrink as a positive twist grows
    a = build_ledger(LevineParams((1, -10))).bound_total
    b = build_ledger(LevineParams((2, -10))).bound_total
    assert b < a


def test_grid_parse_and_environments():
    g = GridSpec.parse("d<=2,|c|<=1")
    assert str(g) == "d<=2,|c|<=1"
    envs = {tuple(sorted(e.items())) for e in g.environments()}
    direct = {tuple(sorted(e.items())) for e in
              ({"1": 1, "d": p.d, "d2": p.d ** 2, "d3": p.d ** 3, "S": p.abs_sum,
                "P": sum(pair_count(x) for x in p.c), "absD": abs(p.d - p.signed_sum),
                "D2": (p.d - p.signed_sum) ** 2} for p in g.params())}
    assert envs == direct
    with pytest.raises(ValueError):
        GridSpec.parse("d<=2")


def test_fit_constants_and_out_of_sample():
    k = fit_constants(GridSpec(5, 6))
    assert k == frozen
    assert first_violation(k, GridSpec(8, 12)) is None
    assert fit_constants([LevineParams((1,))]) == frozen


def test_small_constants_are_caught():
    assert first_violation(TheoremConstants(1, 1, 1), GridSpec(2, 2)) is not None


def test_reduce_rejects_negative_terms():
    with pytest.raises(InfeasibleConstantsError):
        reduce_poly({"d": -1}, {"d3"})
    with pytest.raises(InfeasibleConstantsError):
        reduce_poly({"d3": 1}, {"d2"})


def test_constants_document_roundtrip(tmp_path):
    doc = constants_document(frozen, "d<=5,|c|<=6")
    data = json.loads(doc)
    assert data["grid"] == "d<=5,|c|<=6"
    path = tmp_path / "k.json"
    path.write_text(doc)
    assert load_constants(str(path)) == frozen


def test_constants_must_be_positive():
    with pytest.raises(ValueError):
        TheoremConstants(0, 1, 1)
