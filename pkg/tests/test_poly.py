import pytest
from hypothesis import given, settings, strategies as st

from skewschubert.poly import Poly, parse_poly

exps = st.lists(st.integers(0, 3), min_size=0, max_size=4).map(tuple)
polys = st.dictionaries(exps, st.integers(-5, 5), max_size=6).map(Poly)


def evaluate(f: Poly, point):
    total = 0
    for e, c in f.items():
        term = c
        for i, a in enumerate(e):
            term *= point[i] ** a
        total += term
    return total


def test_zero_terms_dropped():
    f = Poly({(1,): 2, (1, 0): -2, (0, 1): 3})
    assert f == Poly({(0, 1): 3})
    assert not (Poly.var(1) - Poly.var(1))


def test_parse_and_format_round_trip():
    f = parse_poly("3*x1^2*x2 - x3 + 2")
    assert f.coeff((2, 1)) == 3 and f.coeff((0, 0, 1)) == -1 and f.coeff(()) == 2
    assert parse_poly(f.format()) == f
    with pytest.raises(ValueError):
        parse_poly("3*y1")


@settings(max_examples=100, deadline=None)
@given(polys, polys, polys)
def test_ring_laws(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f - f == Poly()
    assert parse_poly(f.format()) == f


@settings(max_examples=100, deadline=None)
@given(polys, polys, st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_product_evaluates(f, g, point):
    assert evaluate(f * g, point) == evaluate(f, point) * evaluate(g, point)


@settings(max_examples=100, deadline=None)
@given(polys, st.integers(1, 3), st.lists(st.integers(-4, 4), min_size=4, max_size=4))
def test_divided_difference(f, i, point):
    # (x_i - x_{i+1}) * d_i f = f - s_i f
    lhs = (Poly.var(i) - Poly.var(i + 1)) * f.divided_difference(i)
    assert lhs == f - f.swap(i)
    assert f.swap(i).swap(i) == f


def test_divided_difference_examples():
    assert Poly.var(1).divided_difference(1) == Poly.const(1)
    assert Poly.monomial((2, 1)).divided_difference(1) == Poly.monomial((1, 1))
    assert Poly.var(3).divided_difference(1) == Poly()


def test_homogeneous_part_and_degree():
    f = parse_poly("x1^2 + x2 + 1")
    assert f.degree() == 2
    assert f.homogeneous_part(1) == Poly.var(2)
    assert not f.is_homogeneous()
