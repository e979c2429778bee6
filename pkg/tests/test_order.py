import json
import random

import pytest

from skewschubert.order import (
    IntervalSpec,
    bruhat_covers,
    canonical_u,
    interval,
    k_bruhat_covers,
    k_bruhat_leq,
    kbruhat_interval,
    prec_interval,
    prec_leq,
    prec_leq_bruteforce,
    weak_covers,
    weak_interval,
    weak_leq,
    young_interval,
    zeta_size,
)
from skewschubert.perm import (
    Permutation,
    all_perms,
    grassmannian,
    increasing_cycle,
    omega0,
    parse_perm,
    shape_embed,
    transposition,
)
from skewschubert.poset import is_isomorphic, maximal_chains
from skewschubert.symfunc import contains, partitions_in_box

P = parse_perm


def brute_k_covers(u, k, n):
    out = []
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            w = transposition(a, b) * u
            ia, ib = u.inverse()(a), u.inverse()(b)
            if w.length == u.length + 1 and ia <= k < ib:
                out.append((w, b))
    return sorted(out, key=lambda t: (t[1], t[0]))


def test_k_bruhat_leq_examples():
    u = P("13542")
    assert k_bruhat_leq(u, u, 2)
    assert k_bruhat_leq(P("13542"), P("25431"), 2)
    assert not k_bruhat_leq(Permutation(), P("321"), 1)


def test_k_covers_examples():
    assert k_bruhat_covers(Permutation(), 1) == [(P("21"), 2)]
    assert k_bruhat_covers(P("321"), 1, bound=3) == []
    assert k_bruhat_covers(P("4312"), 2, bound=4) == []


@pytest.mark.parametrize("n", [3, 4, 5])
def test_k_covers_brute_force(n):
    for u in all_perms(n):
        for k in range(1, n):
            assert k_bruhat_covers(u, k, bound=n) == brute_k_covers(u, k, n)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_k_bruhat_leq_is_chain_reachability(k):
    perms = all_perms(5)
    for u in perms:
        reach = {u}
        layer = [u]
        while layer:
            nxt = []
            for v in layer:
                for w, _ in k_bruhat_covers(v, k, bound=5):
                    if w not in reach:
                        reach.add(w)
                        nxt.append(w)
            layer = nxt
        for w in perms:
            assert k_bruhat_leq(u, w, k) == (w in reach), (u, w, k)


def test_prec_leq_examples():
    z = P("(4,3,2)")
    assert prec_leq(Permutation(), z)
    assert prec_leq(z, z)
    assert prec_leq(P("(2,3)"), z) == prec_leq_bruteforce(P("(2,3)"), z)
    # relative order inside up(zeta) matters beyond the monotone conditions
    assert not prec_leq(P("132"), P("2143"))


def test_prec_leq_brute_force_s4():
    perms = all_perms(4)
    for eta in perms:
        for zeta in perms:
            assert prec_leq(eta, zeta) == prec_leq_bruteforce(eta, zeta), (eta, zeta)


def test_prec_leq_via_canonical_u():
    for zeta in all_perms(4):
        u, k = canonical_u(zeta)
        for eta in all_perms(4):
            via_u = k == 0 and eta == zeta or k > 0 and k_bruhat_leq(u, eta * u, k) and k_bruhat_leq(eta * u, zeta * u, k)
            assert prec_leq(eta, zeta) == bool(via_u)


def test_canonical_u():
    assert canonical_u(Permutation()) == (Permutation(), 0)
    u, k = canonical_u(P("(4,3,2)"))
    assert k == 1
    for zeta in all_perms(5):
        if zeta.is_identity():
            continue
        u, k = canonical_u(zeta)
        assert k_bruhat_leq(u, zeta * u, k)
        assert (zeta * u).descents <= {k}
    for m in range(1, 4):
        for k in range(1, 4):
            u, kk = canonical_u(increasing_cycle(m, k))
            assert (increasing_cycle(m, k) * u).descents == {kk}


def test_zeta_size_independent_of_u():
    for zeta in all_perms(4):
        if zeta.is_identity():
            continue
        for u in all_perms(5):
            for k in range(1, 5):
                if k_bruhat_leq(u, zeta * u, k):
                    assert (zeta * u).length - u.length == zeta_size(zeta)


def test_interval_examples():
    u = P("2413")
    triv = kbruhat_interval(u, u, 2)
    assert len(triv) == 1 and not triv.edges
    for m in range(1, 4):
        for k in range(1, 3):
            chain = prec_interval(Permutation(), increasing_cycle(m, k))
            assert maximal_chains(chain) == [tuple(range(k + 1, k + m + 1))]
    assert len(maximal_chains(young_interval((), (2, 1)))) == 2
    with pytest.raises(ValueError):
        kbruhat_interval(P("21"), P("12"), 1)
    with pytest.raises(ValueError):
        young_interval((2,), (1, 1))


def test_interval_labels():
    p = kbruhat_interval(P("13542"), P("25431"), 2)
    for a, b, lab in p.edges:
        t = b * a.inverse()
        assert t == transposition(min(t.support), lab) and lab == max(t.support)
    q = weak_interval(Permutation(), P("3412"))
    for a, b, lab in q.edges:
        assert b * a.inverse() == transposition(lab, lab + 1)
    y = young_interval((1,), (3, 2))
    for mu, lam, lab in y.edges:
        i = next(i for i in range(len(lam)) if i >= len(mu) or lam[i] != mu[i])
        assert lab == lam[i] - (i + 1)


def test_interval_spec_json():
    text = '{"kind":"kBruhat","k":2,"bottom":"1,3,5,4,2","top":"2,5,4,3,1"}'
    spec = IntervalSpec.from_json(text)
    assert spec == IntervalSpec("kBruhat", P("13542"), P("25431"), 2)
    assert IntervalSpec.from_json(json.dumps(spec.to_json())) == spec
    assert interval(spec).height == 3
    young = IntervalSpec.from_json({"kind": "Young", "bottom": [1], "top": [2, 1]})
    assert interval(young).height == 2
    with pytest.raises(ValueError):
        IntervalSpec("Bogus", None, None)


def test_bruhat_covers():
    assert bruhat_covers(omega0(4), 4) == []
    assert bruhat_covers(Permutation(), 3) == sorted([P("213"), P("132")])
    w = P("1432")
    brute = sorted(
        {w * transposition(i, j) for i in range(1, 5) for j in range(i + 1, 5) if (w * transposition(i, j)).length == w.length + 1}
    )
    assert bruhat_covers(w, 4) == brute


def test_weak_order():
    w = P("3412")
    for v in all_perms(4):
        assert weak_leq(v, w) == (v in weak_interval(Permutation(), w).rank)
    assert weak_covers(Permutation(), 3) == [(P("213"), 1), (P("132"), 2)]


def test_order1_isomorphism():
    rng = random.Random(7)
    perms = all_perms(5)
    done = 0
    while done < 25:
        u, k = rng.choice(perms), rng.randint(1, 4)
        tops = [w for w in perms if w.length > u.length and k_bruhat_leq(u, w, k)]
        if not tops:
            continue
        w = rng.choice(tops)
        zeta = w * u.inverse()
        pos = sorted(rng.sample(range(1, 9), zeta.n))
        eta = shape_embed(zeta, pos)
        y, l = canonical_u(eta)
        z = eta * y
        left, right = kbruhat_interval(u, w, k), kbruhat_interval(y, z, l)
        mapping = {v: shape_embed(v * u.inverse(), pos) * y for v in left.rank}
        assert is_isomorphic(left, right, mapping)
        done += 1


def test_young_is_grassmannian_interval():
    k = 3
    for lam in partitions_in_box(3, 3):
        for mu in partitions_in_box(3, 3):
            if contains(lam, mu):
                left = young_interval(mu, lam)
                right = kbruhat_interval(grassmannian(mu, k), grassmannian(lam, k), k)
                assert is_isomorphic(left, right)
                for (a, b, l1), (c, d, l2) in zip(sorted(left.edges, key=lambda e: e[2]), sorted(right.edges, key=lambda e: e[2])):
                    assert l2 - l1 == k + 1
