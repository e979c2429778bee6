import itertools
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from skewschubert.poly import Poly
from skewschubert.symfunc import (
    SymFunction,
    as_partition,
    comultiply,
    compositions,
    contains,
    count_reverse_lr,
    e_poly,
    h_poly,
    h_to_schur,
    kostka,
    lr_coefficient,
    partitions,
    schur_coefficients,
    schur_poly,
    schur_product,
    skew_kostka,
    skew_schur,
    ssyt,
)


def brute_ssyt(lam, mu, n):
    """All fillings of lam/mu with entries 1..n, rows weakly and columns strictly increasing."""
    cells = [(r, c) for r in range(len(lam)) for c in range(mu[r] if r < len(mu) else 0, lam[r])]
    for vals in itertools.product(range(1, n + 1), repeat=len(cells)):
        t = dict(zip(cells, vals))
        if all(t[(r, c)] <= t.get((r, c + 1), n + 1) for r, c in cells) and all(
            (r + 1, c) not in t or t[(r, c)] < t[(r + 1, c)] for r, c in cells
        ):
            yield t


def brute_schur(lam, n):
    terms = Counter()
    for t in brute_ssyt(lam, (), n):
        e = [0] * n
        for v in t.values():
            e[v - 1] += 1
        terms[tuple(e)] += 1
    return Poly(terms)


def brute_kostka(lam, content):
    n = len(content)
    count = 0
    for t in brute_ssyt(lam, (), n):
        c = Counter(t.values())
        if all(c[i + 1] == content[i] for i in range(n)):
            count += 1
    return count


@pytest.mark.parametrize("lam", [(1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2), (2, 1, 1), (3, 2)])
@pytest.mark.parametrize("n", [2, 3])
def test_schur_poly_matches_tableaux(lam, n):
    assert schur_poly(as_partition(lam), n) == brute_schur(lam, n)


def test_h_and_e_polys():
    assert h_poly(2, 2) == Poly({(2,): 1, (1, 1): 1, (0, 2): 1})
    assert e_poly(2, 3) == Poly({(1, 1): 1, (1, 0, 1): 1, (0, 1, 1): 1})
    assert e_poly(3, 2) == Poly()
    assert h_poly(0, 4) == Poly.const(1)


def test_partitions():
    assert [len(list(partitions(n))) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert len(list(compositions(5))) == 16
    assert as_partition((3, 1, 0)) == (3, 1)
    with pytest.raises(ValueError):
        as_partition((1, 2))


@pytest.mark.parametrize(
    "alpha, expect",
    [
        ((3,), {(3,): 1}),
        ((1, 1), {(2,): 1, (1, 1): 1}),
        ((2, 1), {(3,): 1, (2, 1): 1}),
    ],
)
def test_h_to_schur_examples(alpha, expect):
    assert h_to_schur(SymFunction.h(alpha)) == SymFunction("schur", expect)


@pytest.mark.parametrize("size", range(1, 6))
def test_h_to_schur_by_monomials(size):
    n = size
    for alpha in compositions(size):
        direct = Poly.const(1)
        for a in alpha:
            direct = direct * h_poly(a, n)
        via = Poly()
        for lam, c in h_to_schur(SymFunction.h(alpha)).coeffs.items():
            via = via + schur_poly(lam, n) * c
        assert via == direct


def test_kostka_examples():
    for lam in partitions(4):
        assert kostka(lam, lam) == 1
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((2, 1), (1, 2)) == kostka((2, 1), (2, 1))


@pytest.mark.parametrize("size", range(1, 5))
def test_kostka_brute_force(size):
    for lam in partitions(size):
        for alpha in compositions(size):
            assert kostka(lam, alpha) == brute_kostka(lam, alpha)


def test_skew_kostka_and_ssyt():
    assert skew_kostka((2, 1), (1,), (1, 1)) == 2
    assert len(list(ssyt((2, 1), (), (2, 1)))) == kostka((2, 1), (2, 1))
    assert skew_kostka((2, 1), (1,), (2,)) == 1


def test_lr_examples():
    assert lr_coefficient((3, 1), (3, 1), ()) == 1
    assert lr_coefficient((2, 1), (1,), (1, 1)) == 1
    assert lr_coefficient((2, 2), (2,), (1, 1)) == 0
    assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2


@pytest.mark.parametrize("size", range(2, 7))
def test_product_two_ways(size):
    # s_mu s_nu expanded through many-variable polynomials
    for k in range(1, size):
        for mu in partitions(k):
            for nu in partitions(size - k):
                n = size
                direct = schur_coefficients(schur_poly(mu, n) * schur_poly(nu, n), n)
                for lam in partitions(size):
                    assert lr_coefficient(lam, mu, nu) == direct.get(lam, 0)
                assert schur_product(mu, nu) == direct


def test_comultiply():
    assert comultiply(SymFunction.h(())) == {((), ()): 1}
    assert comultiply(SymFunction.h((2,))) == {((2,), ()): 1, ((1,), (1,)): 1, ((), (2,)): 1}
    assert sum(comultiply(SymFunction.h((1, 1))).values()) == 4


@pytest.mark.parametrize("alpha", [(1, 2), (2, 2), (3, 1, 1), (1, 1, 1, 1)])
def test_coassociative(alpha):
    left = Counter()
    for (a, b), c in comultiply(SymFunction.h(alpha)).items():
        for (x, y), d in comultiply(SymFunction.h(a)).items():
            left[(x, y, b)] += c * d
    right = Counter()
    for (a, b), c in comultiply(SymFunction.h(alpha)).items():
        for (x, y), d in comultiply(SymFunction.h(b)).items():
            right[(a, x, y)] += c * d
    assert left == right


def test_reverse_lr_examples():
    assert count_reverse_lr((2, 1), (2, 1), ()) == 1
    assert count_reverse_lr((2, 1), (1,), (1, 1)) == 1
    with pytest.raises(ValueError):
        count_reverse_lr((1,), (2,), ())


@pytest.mark.parametrize("size", range(0, 6))
def test_reverse_lr_matches_lr(size):
    for lam in partitions(size):
        for s in range(size + 1):
            for mu in partitions(s):
                if contains(lam, mu):
                    for nu in partitions(size - s):
                        assert count_reverse_lr(lam, mu, nu) == lr_coefficient(lam, mu, nu)


def test_skew_schur():
    assert skew_schur((2, 1), (1,)) == SymFunction("schur", {(2,): 1, (1, 1): 1})
    assert skew_schur((2,), ()) == SymFunction.schur((2,))


@settings(max_examples=50, deadline=None)
@given(st.dictionaries(st.sampled_from([(1,), (2,), (1, 1), (2, 1), (3,)]), st.integers(-3, 3), max_size=3))
def test_symfunction_json_and_bases(coeffs):
    f = SymFunction("schur", coeffs)
    assert SymFunction.from_json(f.to_json()) == f
    assert 0 not in f.coeffs.values()
    h = SymFunction("h", coeffs)
    assert h == h_to_schur(h)
    assert (h * h) == h_to_schur(h) * h_to_schur(h)


def test_symfunction_str():
    assert str(SymFunction("schur", {(2, 1): 1, (3,): 2})) == "2*s[3] + s[2,1]"
    assert str(SymFunction("schur", {})) == "0"
