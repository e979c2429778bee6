import itertools

import pytest
from hypothesis import given, settings, strategies as st

from skewschubert.order import canonical_u, zeta_size
from skewschubert.perm import (
    Permutation,
    all_perms,
    compress,
    cyclic_shift,
    decreasing_cycle,
    grassmannian,
    increasing_cycle,
    irreducible_factorization,
    omega0,
    omega0_conjugate,
    parse_perm,
    shape_embed,
    shape_equivalent,
    shape_of_grassmannian,
    special_cycles,
    transposition,
    up_down_fix,
)
from skewschubert.symfunc import partitions


def perms(max_n=6):
    return st.integers(0, max_n).flatmap(lambda n: st.permutations(list(range(1, n + 1)))).map(Permutation)


def test_identity_is_empty():
    assert Permutation().oneline == ()
    assert Permutation([1, 2, 3]) == Permutation()
    assert Permutation([2, 1, 3]).oneline == (2, 1)
    assert Permutation([3, 1, 2])(7) == 7


def test_rejects_non_permutation():
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])
    with pytest.raises(ValueError):
        parse_perm("25342")


@pytest.mark.parametrize(
    "text, oneline",
    [
        ("2,5,3,4,1", (2, 5, 3, 4, 1)),
        ("25341", (2, 5, 3, 4, 1)),
        ("(4,3,2)", (1, 4, 2, 3)),
        ("(1,2)(3,4)", (2, 1, 4, 3)),
        ("1", ()),
        ("", ()),
    ],
)
def test_parse(text, oneline):
    assert parse_perm(text).oneline == oneline


@pytest.mark.parametrize("w, length", [("1", 0), ("4321", 6), ("13542", 4)])
def test_length(w, length):
    assert parse_perm(w).length == length


@pytest.mark.parametrize("w, des", [("1", set()), ("1432", {2, 3})])
def test_descents(w, des):
    assert parse_perm(w).descents == des


def test_grassmannian_examples():
    assert grassmannian((), 3) == Permutation()
    assert grassmannian((2, 1), 2) == parse_perm("2413")
    for m in range(1, 4):
        for k in range(1, 4):
            assert grassmannian((m,), k) == parse_perm("(" + ",".join(map(str, range(k + m, k - 1, -1))) + ")")
    with pytest.raises(ValueError):
        grassmannian((1, 1, 1), 2)


@pytest.mark.parametrize("size", range(0, 7))
def test_grassmannian_round_trip(size):
    for lam in partitions(size):
        for k in range(max(len(lam), 1), 5):
            w = grassmannian(lam, k)
            assert w.descents <= {k}
            assert shape_of_grassmannian(w, k) == lam
            if lam:
                assert w.descents == {k}
                assert w.length == size


def test_special_cycles():
    assert special_cycles(1, 1) == (transposition(1, 2), transposition(1, 2))
    assert increasing_cycle(2, 2) == parse_perm("1423")
    assert decreasing_cycle(2, 2) == parse_perm("231")
    assert decreasing_cycle(2, 2) == grassmannian((1, 1), 2)
    with pytest.raises(ValueError):
        decreasing_cycle(3, 2)


def test_shape_embed_examples():
    z = parse_perm("(3,2,1)")
    assert shape_embed(z, [1, 2, 3, 4]) == z
    assert shape_embed(transposition(1, 2), [3, 7]) == parse_perm("(3,7)")
    assert shape_embed(z, [2, 4, 5]) == parse_perm("(5,4,2)")
    with pytest.raises(ValueError):
        shape_embed(z, [2, 4])


def test_shape_equivalent_examples():
    a = parse_perm("(4,3,2)")
    assert shape_equivalent(a, a)
    assert shape_equivalent(a, parse_perm("(9,7,5)"))
    assert not shape_equivalent(increasing_cycle(2, 1), decreasing_cycle(2, 2))


@settings(max_examples=60, deadline=None)
@given(perms(5), st.lists(st.integers(1, 12), min_size=5, max_size=5, unique=True))
def test_shape_embed_is_equivalent(z, pos):
    assert shape_equivalent(shape_embed(z, sorted(pos)), z)
    assert compress(shape_embed(z, sorted(pos))) == compress(z)


def test_up_down_fix_examples():
    assert up_down_fix(Permutation(), 3) == (frozenset(), frozenset(), frozenset({1, 2, 3}))
    up, down, _ = up_down_fix(parse_perm("(4,3,2)"))
    assert (up, down) == ({2}, {3, 4})
    up, down, _ = up_down_fix(parse_perm("231"))
    assert (up, down) == ({1, 2}, {3})


def test_factorization_examples():
    assert irreducible_factorization(Permutation()) == []
    assert irreducible_factorization(parse_perm("(1,2)(3,4)")) == [parse_perm("(1,2)"), parse_perm("(3,4)")]
    assert irreducible_factorization(parse_perm("(1,3)(2,4)")) == [parse_perm("(1,3)(2,4)")]


def _blocks_cross(a, b):
    return any(
        (x < y < z < t) and ((x in a and z in a and y in b and t in b) or (x in b and z in b and y in a and t in a))
        for x, y, z, t in itertools.combinations(sorted(a | b), 4)
    )


@pytest.mark.parametrize("n", [4, 5])
def test_factorization_properties(n):
    for z in all_perms(n):
        factors = irreducible_factorization(z)
        prod = Permutation()
        for f in factors:
            prod = prod * f
        assert prod == z
        for f, g in itertools.combinations(factors, 2):
            assert f * g == g * f
            assert not _blocks_cross(set(f.support), set(g.support))
        assert sum(zeta_size(f) for f in factors) == zeta_size(z)


@settings(max_examples=80, deadline=None)
@given(perms(6), st.integers(1, 6), st.integers(1, 6))
def test_transposition_changes_length_by_odd(w, a, b):
    if a == b:
        return
    assert (w * transposition(a, b)).length % 2 != w.length % 2


def test_cyclic_shift():
    assert cyclic_shift(Permutation(), 4) == Permutation()
    eta = parse_perm("1243")
    c = parse_perm("2341")
    assert cyclic_shift(eta, 4) == c * eta * c.inverse()
    # brute-force conjugation: c eta c^-1 sends c(i) to c(eta(i))
    expect = [0] * 4
    for i in range(1, 5):
        expect[c(i) - 1] = c(eta(i))
    assert cyclic_shift(eta, 4) == Permutation(expect)
    w = eta
    for _ in range(4):
        w = cyclic_shift(w, 4)
    assert w == eta
    with pytest.raises(ValueError):
        cyclic_shift(parse_perm("12354"), 4)


def test_omega0_conjugate():
    assert omega0_conjugate(omega0(4), 4) == omega0(4)
    assert omega0_conjugate(Permutation(), 4) == Permutation()
    assert omega0_conjugate(parse_perm("1432"), 4) == parse_perm("3214")
    for w in all_perms(4):
        assert omega0_conjugate(w, 4) == omega0(4) * w * omega0(4)


@settings(max_examples=80, deadline=None)
@given(perms(6), perms(6))
def test_group_laws(u, v):
    assert (u * v).inverse() == v.inverse() * u.inverse()
    assert (u * v)(3) == u(v(3))
    assert parse_perm(u.to_text()) == u
    assert u.swap_values(1, 2) == transposition(1, 2) * u
    assert u.swap_positions(1, 2) == u * transposition(1, 2)
    assert Permutation.from_code(u.code()) == u


def test_canonical_u_for_cycles():
    for m in range(1, 4):
        for k in range(1, 4):
            z = increasing_cycle(m, k)
            u, kk = canonical_u(z)
            assert (z * u).descents <= {kk}
