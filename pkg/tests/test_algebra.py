import pytest
from hypothesis import given
from hypothesis import strategies as st

from permotzkin.algebra import MultiPoly, P, Q, S, T, binomial, q_integer
from permotzkin.permutations import depth, iter_group

exponents = st.tuples(*[st.integers(min_value=0, max_value=3)] * 4)
polys = st.dictionaries(exponents, st.integers(min_value=-5, max_value=5), max_size=6).map(
    MultiPoly
)


def test_additive_inverse_cancels():
    assert ((S * T) + (-(S * T))).is_zero()
    assert (S * T) - (S * T) == MultiPoly.zero()


def test_addition_merges_like_terms():
    assert (1 + Q) + (Q + Q**2) == 1 + 2 * Q + Q**2


def test_addition_of_initial_derangement_polys():
    # the signed derangement polynomials for sizes two and three
    f2 = -(S * T)
    f3 = S * (1 + S) * T**2
    assert f2 + f3 == -(S * T) + S * T**2 + S**2 * T**2


def test_square_of_one_minus_st():
    assert (1 - S * T) * (1 - S * T) == 1 - 2 * S * T + S**2 * T**2


def test_multiplication_by_zero():
    assert (Q + P * T) * MultiPoly.zero() == 0


def test_monomial_product():
    assert (S * T) * Q == MultiPoly.monomial((1, 0, 1, 1))


@pytest.mark.parametrize(
    "k, expected",
    [(0, MultiPoly.zero()), (1, MultiPoly.one()), (3, 1 + Q + Q**2)],
)
def test_q_integer_values(k, expected):
    assert q_integer(k) == expected


def test_q_integer_rejects_negative():
    with pytest.raises(ValueError):
        q_integer(-1)


@given(st.integers(min_value=0, max_value=10), st.integers(min_value=0, max_value=10))
def test_q_integer_splitting(a, b):
    assert q_integer(a + b) == q_integer(a) + Q**a * q_integer(b)


def test_substitute_full_evaluation():
    poly = 1 - 2 * S * T + S**2 * T**2
    assert poly.substitute({"s": 1, "t": 1}) == 0


def test_substitute_sign_flip():
    assert (Q**3 * P * S * T**2).substitute({"q": -1}) == -(P * S * T**2)


def test_substitute_depth_distribution_at_minus_one():
    # independent oracle: enumerate S_3 and read off the depth distribution
    dist = MultiPoly.zero()
    for perm in iter_group(3):
        dist = dist + T ** depth(perm)
    assert dist == 1 + 2 * T + 3 * T**2
    assert dist.substitute({"t": -1}) == 2


@given(polys)
def test_substitute_empty_assignment_is_identity(poly):
    assert poly.substitute({}) == poly


def test_substitute_rejects_unknown_variable():
    with pytest.raises(ValueError):
        MultiPoly.one().substitute({"z": 1})


@pytest.mark.parametrize("n, k, expected", [(4, 2, 6), (0, 0, 1), (3, 1, 3), (2, 5, 0)])
def test_binomial_values(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_rejects_negative():
    with pytest.raises(ValueError):
        binomial(-1, 0)


@given(polys, polys)
def test_addition_commutes(a, b):
    assert a + b == b + a


@given(polys, polys)
def test_multiplication_commutes(a, b):
    assert a * b == b * a


@given(polys, polys, polys)
def test_associativity_and_distributivity(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys)
def test_no_zero_coefficients_survive(poly):
    assert all(coeff != 0 for coeff in poly.terms().values())
    assert poly + (-poly) == MultiPoly.zero()


def test_rendering_canonical_order():
    assert str(S * T**4 - 2 * S**2 * T**3) == "-2*s^2*t^3 + s*t^4"
    assert str(MultiPoly.zero()) == "0"
    assert str(MultiPoly.constant(-3)) == "-3"
    assert str(q_integer(3)) == "q^2 + q + 1"
    assert str(-(S * T)) == "-s*t"


def test_constant_value():
    assert MultiPoly.constant(7).constant_value() == 7
    assert MultiPoly.zero().constant_value() == 0
    with pytest.raises(ValueError):
        (Q + 1).constant_value()


def test_split_by_exponent_layers():
    poly = S * T + 3 * S**2 * T - T**2
    layers = poly.split_by_exponent("t")
    assert layers[1] == S + 3 * S**2
    assert layers[2] == MultiPoly.constant(-1)
    assert set(layers) == {1, 2}
