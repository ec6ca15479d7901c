import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotsurgery.errors import ParamsError
from knotsurgery.foxcalc import fox_alexander
from knotsurgery.laurent import LaurentPoly
from knotsurgery.levine import (
    LevineParams,
    alexander_closed,
    alexander_raw,
    c_zero,
    distinct_polynomials,
    generate_diagram,
)

twists = st.lists(st.integers(-6, 6), min_size=1, max_size=6)
centrals = st.sampled_from([-1, 1])


def test_example_polynomial():
    p = LevineParams((2, 3), -1)
    assert alexander_closed(p) == LaurentPoly({-2: 3, -1: 2, 0: -11, 1: 2, 2: 3})
    assert c_zero(p) == -11


def test_trefoil_and_figure_eight_members():
    assert alexander_closed(LevineParams((1,), 1)) == LaurentPoly({-1: 1, 0: -1, 1: 1})
    assert alexander_closed(LevineParams((1,), -1)) == LaurentPoly({-1: 1, 0: -3, 1: 1})


def test_parse():
    assert LevineParams.parse("2,3", "-1") == LevineParams((2, 3), -1)
    assert LevineParams.parse("-1", "+1") == LevineParams((-1,), 1)
    assert LevineParams((2, 3)).to_json() == '{"c":[2,3],"central":-1}'


@pytest.mark.parametrize("c,central", [("", "-1"), ("1,a", "-1"), ("1", "0"), ("1", "x")])
def test_bad_params(c, central):
    with pytest.raises(ParamsError):
        LevineParams.parse(c, central)


def test_require_nonzero():
    with pytest.raises(ParamsError):
        LevineParams((1, 0)).require_nonzero()


@given(twists, centrals)
def test_value_at_one_is_the_central_twist(c, central):
    assert alexander_raw(LevineParams(c, central)).eval_at_one() == central


@given(twists, centrals)
def test_closed_form_is_symmetric(c, central):
    assert alexander_closed(LevineParams(c, central)).is_symmetric()


@given(twists.filter(lambda c: c[-1] != 0), centrals)
def test_degree_is_d(c, central):
    assert alexander_closed(LevineParams(c, central)).max_degree == len(c)


def test_distinct_polynomials():
    ps = [LevineParams(c) for c in [(1, 1), (2, -1), (-1, 3), (1, 2)]]
    assert distinct_polynomials(ps)
    # a trailing zero would drop the degree, so it is refused
    with pytest.raises(ParamsError):
        distinct_polynomials([LevineParams((1, 0))])


@pytest.mark.parametrize("c", [(1,), (-2,), (1, 1), (2, -1), (0, 1), (1, 0, -1), (-1, 2, 1),
                               (0, 0, 2), (1, -1, 1, -1)])
@pytest.mark.parametrize("central", [-1, 1])
def test_diagram_oracle_matches_closed_form(c, central):
    p = LevineParams(c, central)
    assert fox_alexander(generate_diagram(p)) == alexander_closed(p)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-2, 2), min_size=1, max_size=3), centrals)
def test_diagram_oracle_random(c, central):
    p = LevineParams(c, central)
    assert fox_alexander(generate_diagram(p)) == alexander_closed(p)


def test_diagram_size_grows_with_twists():
    small = generate_diagram(LevineParams((1, 1))).crossing_count
    big = generate_diagram(LevineParams((1, 4))).crossing_count
    assert big > small
