import itertools

import pytest
from hypothesis import given, settings, strategies as st

from skewschubert.order import weak_interval
from skewschubert.perm import Permutation, all_perms, omega0, parse_perm, transposition
from skewschubert.poset import pi_composition, poset_symfunc, skew_coefficient
from skewschubert.stanley import (
    descent_composition,
    exchange_rows,
    format_word,
    inward_slide,
    is_reduced,
    outward_slide,
    parse_word,
    reduced_words,
    segments,
    select_row,
    select_row_by_counts,
    stanley_coefficient,
    stanley_function,
    tableau_of_word,
    theta,
    theta_domain,
    theta_row,
    two_row_tableau,
    word_permutation,
    word_tableau,
)
from skewschubert.symfunc import SymFunction, partitions

P = parse_perm


def product_of_simple(word):
    # s_{w_m} ... s_{w_1}, built letter by letter on the left
    w = Permutation()
    for a in word:
        w = transposition(a, a + 1) * w
    return w


def brute_reduced_words(w: Permutation):
    n = max(w.n, 2)
    return sorted(word for word in itertools.product(range(1, n), repeat=w.length) if product_of_simple(word) == w)


def test_reduced_word_examples():
    assert reduced_words(P("321")) == [(1, 2, 1), (2, 1, 2)]
    assert reduced_words(Permutation()) == [()]
    assert len(reduced_words(omega0(4))) == 16
    assert is_reduced((1, 2, 1)) and not is_reduced((1, 1))


@pytest.mark.parametrize("w", all_perms(4))
def test_reduced_words_brute_force(w):
    assert sorted(reduced_words(w)) == brute_reduced_words(w)
    for word in reduced_words(w):
        assert word_permutation(word) == w


def test_word_formatting():
    word, blocks = parse_word("5.345.236.1235")
    assert word == (5, 3, 4, 5, 2, 3, 6, 1, 2, 3, 5) and blocks == (1, 3, 3, 4)
    assert format_word(word, blocks) == "5.345.236.1235"
    assert descent_composition(word) == blocks
    assert segments(word, blocks)[2] == (2, 3, 6)


def test_tableau_examples():
    t = tableau_of_word((2, 1, 2))
    assert t.shape() == ((2, 1), ())
    assert t.is_tableau()
    # bottom row 1 sits under top row 12 only after a shift
    assert tableau_of_word((1, 2, 1)).shape() == ((2, 2), (1,))
    with pytest.raises(ValueError):
        word_tableau((3,), (2, 1, 2))


@pytest.mark.parametrize("w", [w for w in all_perms(4) if not w.is_identity()])
def test_tableaux_are_tableaux(w):
    for rho in reduced_words(w):
        t = tableau_of_word(rho)
        assert t.is_tableau()
        assert t.word() == rho


def test_stanley_examples():
    assert stanley_function(P("321")) == SymFunction.schur((2, 1))
    assert stanley_coefficient(P("321"), (2, 1)) == 1
    assert stanley_coefficient(P("321"), (3,)) == 0
    assert stanley_function(P("21")) == SymFunction.schur((1,))
    assert stanley_function(P("2143")) == SymFunction.schur((2,)) + SymFunction.schur((1, 1))


@pytest.mark.parametrize("w", [w for w in all_perms(4) if not w.is_identity()])
def test_stanley_matches_weak_interval(w):
    assert stanley_function(w) == poset_symfunc(weak_interval(Permutation(), w))
    for lam in partitions(w.length):
        assert stanley_coefficient(w, lam) == skew_coefficient(weak_interval(Permutation(), w), lam)


def test_stanley_of_disjoint_product():
    # 21 and 3412 on disjoint letters {1, 2} and {3, 4, 5, 6}
    u, v = P("21"), P("3412")
    shifted = Permutation([1, 2] + [x + 2 for x in v.values(4)])
    assert stanley_function(u * shifted) == stanley_function(u) * stanley_function(v)


def test_slide_example():
    t = two_row_tableau((3, 4, 5, 2, 3, 6), 3, 3)
    assert (t.y, t.top, t.bottom) == (1, (3, 4, 5), (2, 3, 6))
    s = inward_slide(t)
    assert (s.y, s.top, s.bottom) == (0, (3, 4), (2, 3, 5, 6))
    assert word_permutation(s.word()) == word_permutation(t.word())
    assert outward_slide(s) == t


def _two_block_words(n):
    """(rho, q, p) with rho reduced in S_n and its two blocks increasing."""
    out = []
    for w in all_perms(n):
        for rho in reduced_words(w):
            for q in range(len(rho) + 1):
                try:
                    two_row_tableau(rho, q, len(rho) - q)
                except ValueError:
                    continue
                out.append((rho, q, len(rho) - q))
    return out


TWO_BLOCK = _two_block_words(5)


def test_slides_round_trip():
    checked = 0
    for rho, q, p in TWO_BLOCK:
        t = two_row_tableau(rho, q, p)
        if t.y > 0:
            s = inward_slide(t)
            assert s.is_tableau() and word_permutation(s.word()) == word_permutation(rho)
            assert outward_slide(s) == t
            checked += 1
    assert checked > 50


@pytest.mark.parametrize("variant", ["full", "offbyone"])
def test_exchange_rows_bijective(variant):
    images = {}
    for rho, q, p in TWO_BLOCK:
        try:
            out = exchange_rows(rho, q, p, variant)
        except ValueError:
            continue
        assert is_reduced(out) and word_permutation(out) == word_permutation(rho)
        new_q = p if variant == "full" else p + 1
        key = (out, new_q)
        assert key not in images
        images[key] = (rho, q)
        if variant == "full":
            assert exchange_rows(out, p, q, "full") == rho
        else:
            # the reverse move of the off-by-one exchange also shifts lengths by one
            assert exchange_rows(out, p + 1, q - 1, "offbyone") == rho


def test_theta_example():
    word, blocks = parse_word("5.345.236.1235")
    lam, pi = (4, 3, 3, 1), (1, 2, 3, 4)
    assert word_permutation(word) == P("4371625")
    assert pi_composition(lam, pi) == blocks
    assert theta_row(pi, word, lam) == 2
    new_pi, new_word = theta(pi, word, lam)
    assert new_pi == (1, 3, 2, 4)
    assert format_word(new_word, pi_composition(lam, new_pi)) == "5.3456.23.1235"
    assert theta_row(new_pi, new_word, lam) == 2
    assert theta(new_pi, new_word, lam) == (pi, word)


def _theta_cases():
    out = []
    for w in all_perms(4):
        if w.is_identity():
            continue
        for lam in partitions(w.length):
            out.append((w, lam))
    return out


@pytest.mark.parametrize("w, lam", _theta_cases())
def test_theta_involution(w, lam):
    identity = tuple(range(1, len(lam) + 1))
    fixed = 0
    for pi, rho in theta_domain(w, lam):
        image = theta(pi, rho, lam)
        assert theta(*image, lam) == (pi, rho)
        if image == (pi, rho):
            fixed += 1
            assert pi == identity
            assert word_tableau(pi_composition(lam, pi), rho).is_partition_shape()
        else:
            assert abs(Permutation(pi).length - Permutation(image[0]).length) == 1
    assert fixed == stanley_coefficient(w, lam)


@pytest.mark.parametrize("w, lam", _theta_cases())
def test_row_selectors_agree(w, lam):
    for pi, rho in theta_domain(w, lam):
        t = word_tableau(pi_composition(lam, pi), rho)
        if not t.is_partition_shape():
            assert select_row(t) == select_row_by_counts(t)


@settings(max_examples=30, deadline=None)
@given(st.permutations([1, 2, 3, 4, 5]))
def test_stanley_degree(values):
    w = Permutation(values)
    f = stanley_function(w)
    assert all(sum(lam) == w.length for lam in f.coeffs)
    assert sum(f.coeffs.values()) >= (1 if w.length else 0)
