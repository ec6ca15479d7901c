import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotsurgery.errors import (
    InvalidSeifertMatrixError,
    MalformedDiagramError,
)
from knotsurgery.foxcalc import (
    UNKNOT,
    det_bareiss,
    det_cofactor,
    det_laurent,
    det_permutation,
    fox_alexander,
    parse_diagram,
    seifert_alexander,
)
from knotsurgery.laurent import LaurentPoly
from knotsurgery.tangle import braid_closure

TREFOIL = LaurentPoly({-1: 1, 0: -1, 1: 1})
FIGURE_EIGHT = LaurentPoly({-1: 1, 0: -3, 1: 1})
TREFOIL_PD = "X[-1](1,3,2,3)\nX[-1](2,1,3,1)\nX[-1](3,2,1,2)\n"


def test_trefoil_from_text():
    assert fox_alexander(parse_diagram(TREFOIL_PD)) == TREFOIL


def test_text_roundtrip():
    pd = braid_closure([1, -2, 1, -2], 3)
    assert parse_diagram(pd.to_text()) == pd
    assert parse_diagram(UNKNOT.to_text()) == UNKNOT


@pytest.mark.parametrize("word,strands,expected", [
    ([1, 1, 1], 2, TREFOIL),
    ([-1, -1, -1], 2, TREFOIL),
    ([1, -2, 1, -2], 3, FIGURE_EIGHT),
    ([1, 1, 1, 1, 1], 2, LaurentPoly({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1})),
    ([1, 2], 3, LaurentPoly({0: 1})),
])
def test_braid_closures(word, strands, expected):
    assert fox_alexander(braid_closure(word, strands)) == expected


def test_unknot():
    assert fox_alexander(UNKNOT) == LaurentPoly({0: 1})


def test_minor_choice_does_not_matter():
    pd = braid_closure([1, -2, 1, -2], 3)
    values = {fox_alexander(pd, r, c) for r in range(4) for c in range(4)}
    assert values == {FIGURE_EIGHT}


def test_seifert_matrices():
    assert seifert_alexander([[-1, 1], [0, -1]]) == TREFOIL
    assert seifert_alexander([[-1, 1], [0, 1]]) == FIGURE_EIGHT
    assert seifert_alexander([]) == LaurentPoly({0: 1})


@pytest.mark.parametrize("V", [[[1, 0, 0]], [[1]], [[0, 0], [0, 0]]])
def test_bad_seifert_matrices(V):
    with pytest.raises(InvalidSeifertMatrixError):
        seifert_alexander(V)


@pytest.mark.parametrize("text,line", [
    ("X[+1](1,2,3\n", 1),
    ("X[+1](1,2,2,2)\n\nX[+2](2,1,1,1)\n", 3),
    ("X[+1](1,2,2,3)\n", 1),
])
def test_malformed_diagrams_report_a_line(text, line):
    with pytest.raises(MalformedDiagramError) as err:
        parse_diagram(text)
    assert err.value.line == line


def test_two_component_diagram_rejected():
    # Hopf link as a 2-braid closure has two components
    with pytest.raises(MalformedDiagramError):
        braid_closure([1, 1], 2)


entries = st.dictionaries(st.integers(-2, 2), st.integers(-3, 3), max_size=3).map(LaurentPoly)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(entries, min_size=n, max_size=n),
                                                      min_size=n, max_size=n)))
def test_determinant_methods_agree(M):
    want = det_permutation(M)
    assert det_cofactor(M) == want
    assert det_bareiss(M) == want
    assert det_laurent(M) == want


@settings(max_examples=30, deadline=None)
@given(st.lists(st.sampled_from([1, -1, 2, -2]), min_size=1, max_size=8))
def test_oracle_value_at_one_and_symmetry(word):
    # only some closures are knots; the rest are rejected as links
    try:
        pd = braid_closure(word, 3)
    except MalformedDiagramError:
        return
    poly = fox_alexander(pd)
    assert abs(fox_alexander(pd, raw=True).eval_at_one()) == 1
    assert poly.is_symmetric()
