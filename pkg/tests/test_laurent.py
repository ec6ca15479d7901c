import pytest
from hypothesis import given
from hypothesis import strategies as st

from knotsurgery.laurent import ONE, ZERO, LaurentPoly, canonicalize, involute

coeff_maps = st.dictionaries(st.integers(-6, 6), st.integers(-9, 9), max_size=6)
polys = coeff_maps.map(LaurentPoly)
nonzero = polys.filter(lambda p: not p.is_zero())


def test_zero_coefficients_are_dropped():
    p = LaurentPoly({0: 0, 2: 3, -1: 0})
    assert p.coeffs == {2: 3}
    assert LaurentPoly({1: 0}) == ZERO


def test_json_roundtrip_and_key_order():
    p = LaurentPoly({-2: 3, -1: 2, 0: -11, 1: 2, 2: 3})
    assert p.to_json() == '{"-2":3,"-1":2,"0":-11,"1":2,"2":3}'
    assert LaurentPoly.from_json(p.to_json()) == p


def test_str():
    assert str(LaurentPoly({1: 1, 0: -1, -1: 1})) == "t - 1 + t^-1"
    assert str(ZERO) == "0"


def test_canonicalize_centres_and_fixes_sign():
    p = LaurentPoly({3: -1, 4: 1, 5: -1})
    assert p.canonicalize() == LaurentPoly({-1: 1, 0: -1, 1: 1})
    with pytest.raises(ValueError):
        ZERO.canonicalize()


def test_exact_division():
    a = LaurentPoly({0: 1, 1: -1})
    b = LaurentPoly({-1: 2, 2: 5})
    assert (a * b).exact_div(a) == b
    with pytest.raises(ArithmeticError):
        LaurentPoly({0: 1, 1: 1}).exact_div(LaurentPoly({0: 2}))


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == ZERO
    assert a * ONE == a


@given(polys, polys)
def test_eval_at_one_is_a_ring_map(a, b):
    assert (a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one()
    assert (a + b).eval_at_one() == a.eval_at_one() + b.eval_at_one()


@given(nonzero, st.integers(-5, 5), st.sampled_from([1, -1]))
def test_canonical_form_is_unit_invariant(p, k, s):
    assert canonicalize(p.shift(k) * s) == canonicalize(p)


@given(nonzero)
def test_canonicalize_idempotent(p):
    assert p.canonicalize().canonicalize() == p.canonicalize()


@given(polys)
def test_involute_is_an_involution(p):
    assert involute(involute(p)) == p


@given(polys)
def test_symmetrized_polynomial_is_symmetric(p):
    q = p * p.involute()
    if not q.is_zero():
        assert q.canonicalize().is_symmetric()
