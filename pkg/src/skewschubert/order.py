"""The k-Bruhat order, the order on S_infinity induced by it, Young's lattice and
the left weak order, each turned into labelled posets on demand.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .perm import Permutation, parse_perm, up_down_fix
from .poset import LabeledPoset
from .symfunc import Partition, as_partition, contains

__all__ = [
    "k_bruhat_leq",
    "k_bruhat_covers",
    "bruhat_covers",
    "prec_leq",
    "prec_leq_bruteforce",
    "canonical_u",
    "zeta_size",
    "weak_leq",
    "weak_covers",
    "young_covers",
    "kbruhat_interval",
    "prec_interval",
    "young_interval",
    "weak_interval",
    "IntervalSpec",
    "interval",
]


def k_bruhat_leq(u: Permutation, w: Permutation, k: int) -> bool:
    """Decide u <=_k w by the two positional conditions."""
    n = max(u.n, w.n, k) + 1
    U = [0] + [u(i) for i in range(1, n + 1)]
    W = [0] + [w(i) for i in range(1, n + 1)]
    for a in range(1, n + 1):
        if a <= k:
            if U[a] > W[a]:
                return False
        elif U[a] < W[a]:
            return False
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if U[a] < U[b] and W[a] > W[b] and not (a <= k < b):
                return False
    return True


def _position_covers(u: Permutation, pairs: Iterable[tuple[int, int]]) -> list[tuple[Permutation, int]]:
    out = []
    for i, j in pairs:
        lo, hi = u(i), u(j)
        if lo > hi:
            continue
        if any(lo < u(m) < hi for m in range(i + 1, j)):
            continue
        out.append((u.swap_positions(i, j), hi))
    return out


def k_bruhat_covers(u: Permutation, k: int, bound: int | None = None) -> list[tuple[Permutation, int]]:
    """Covers u -> w in the k-Bruhat order, each with its label b where wu^-1 = (a, b), a < b.

    Positions beyond max(n, k) + 1 never give new covers; ``bound`` caps the
    positions used, which restricts to covers inside S_bound.
    """
    top = max(u.n, k) + 1 if bound is None else bound
    pairs = ((i, j) for i in range(1, min(k, top) + 1) for j in range(k + 1, top + 1))
    out = _position_covers(u, pairs)
    return sorted(out, key=lambda t: (t[1], t[0]))


def bruhat_covers(w: Permutation, n: int) -> list[Permutation]:
    """Bruhat covers of w inside S_n."""
    if w.n > n:
        raise ValueError(f"{w} is not in S_{n}")
    pairs = ((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))
    return sorted(v for v, _ in _position_covers(w, pairs))


def canonical_u(zeta: Permutation) -> tuple[Permutation, int]:
    """A pair (u, k) with u <=_k zeta*u and zeta*u Grassmannian with descent k."""
    if zeta.is_identity():
        return Permutation(), 0
    n = zeta.n
    up = sorted((a for a in range(1, n + 1) if a < zeta(a)), key=zeta)
    rest = sorted((b for b in range(1, n + 1) if b >= zeta(b)), key=zeta)
    return Permutation(up + rest), len(up)


def zeta_size(zeta: Permutation) -> int:
    """|zeta| = l(zeta u) - l(u) for the canonical u."""
    u, _ = canonical_u(zeta)
    return (zeta * u).length - u.length


def prec_leq(eta: Permutation, zeta: Permutation) -> bool:
    """Decide eta <= zeta in the order induced from the k-Bruhat orders, without using u."""
    n = max(eta.n, zeta.n)
    up, down, fix = up_down_fix(zeta, n)
    if any(eta(c) != c for c in fix):
        return False
    # eta moves each point weakly towards its image under zeta
    if any(not a <= eta(a) <= zeta(a) for a in up):
        return False
    if any(not b >= eta(b) >= zeta(b) for b in down):
        return False
    for group in (sorted(up), sorted(down)):
        for i, a in enumerate(group):
            for b in group[i + 1 :]:
                if zeta(a) < zeta(b) and not eta(a) < eta(b):
                    return False
    return True


def prec_leq_bruteforce(eta: Permutation, zeta: Permutation) -> bool:
    """eta <= zeta iff u <=_k eta u <=_k zeta u for some u, k (searched in S_{n+1})."""
    from .perm import all_perms

    n = max(eta.n, zeta.n) + 1
    for u in all_perms(n):
        for k in range(1, n + 1):
            if k_bruhat_leq(u, eta * u, k) and k_bruhat_leq(eta * u, zeta * u, k):
                return True
    return False


def weak_leq(u: Permutation, w: Permutation) -> bool:
    """u <= w in the left weak order: l(w u^-1) + l(u) = l(w)."""
    return (w * u.inverse()).length + u.length == w.length


def weak_covers(u: Permutation, bound: int) -> list[tuple[Permutation, int]]:
    """Left weak covers s_i u of u with i < bound, labelled by i."""
    inv = u.inverse()
    return [(u.swap_values(i, i + 1), i) for i in range(1, bound) if inv(i) < inv(i + 1)]


def young_covers(mu: Partition, limit: Partition) -> list[tuple[Partition, int]]:
    """Partitions covering mu inside ``limit``; the cover adding a box in row i has label lam_i - i."""
    mu = list(mu)
    out = []
    for i in range(len(limit)):
        cur = mu[i] if i < len(mu) else 0
        above = (mu[i - 1] if i - 1 < len(mu) else 0) if i > 0 else None
        if cur + 1 > limit[i] or (above is not None and cur + 1 > above):
            continue
        new = mu[:i] + [cur + 1] + mu[i + 1 :] if i < len(mu) else mu + [1]
        out.append((tuple(new), cur + 1 - (i + 1)))
    return out


def _build(
    bottom: Hashable,
    top: Hashable,
    covers: Callable[[Hashable], Iterable[tuple[Hashable, int]]],
    below_top: Callable[[Hashable], bool],
    node: Callable[[Hashable], Hashable] = lambda v: v,
) -> LabeledPoset:
    ranks = {bottom: 0}
    layer = [bottom]
    edges = []
    while layer:
        nxt = []
        for v in layer:
            for w, lab in covers(v):
                if not below_top(w):
                    continue
                if w not in ranks:
                    ranks[w] = ranks[v] + 1
                    nxt.append(w)
                edges.append((v, w, lab))
        layer = nxt
    if top not in ranks:
        raise ValueError(f"{bottom} is not below {top}")
    return LabeledPoset(
        {node(v): r for v, r in ranks.items()},
        [(node(a), node(b), lab) for a, b, lab in edges],
        node(bottom),
        node(top),
    )


def kbruhat_interval(u: Permutation, w: Permutation, k: int) -> LabeledPoset:
    if not k_bruhat_leq(u, w, k) or w.length < u.length:
        raise ValueError(f"{u} is not below {w} in the {k}-Bruhat order")
    bound = max(u.n, w.n, k) + 1
    return _build(u, w, lambda v: k_bruhat_covers(v, k, bound), lambda v: k_bruhat_leq(v, w, k))


def prec_interval(eta: Permutation, zeta: Permutation) -> LabeledPoset:
    """[eta, zeta] with nodes the permutations themselves, built inside [u, zeta u]_k."""
    if not prec_leq(eta, zeta):
        raise ValueError(f"{eta} is not below {zeta}")
    u, k = canonical_u(zeta)
    if k == 0:
        return LabeledPoset({Permutation(): 0}, [], Permutation(), Permutation())
    uinv = u.inverse()
    w = zeta * u
    bound = max(u.n, w.n, k) + 1
    return _build(
        eta * u,
        w,
        lambda v: k_bruhat_covers(v, k, bound),
        lambda v: k_bruhat_leq(v, w, k),
        node=lambda v: v * uinv,
    )


def young_interval(mu: Sequence[int], lam: Sequence[int]) -> LabeledPoset:
    mu, lam = as_partition(mu), as_partition(lam)
    if not contains(lam, mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    return _build(mu, lam, lambda v: young_covers(v, lam), lambda v: True)


def weak_interval(u: Permutation, w: Permutation) -> LabeledPoset:
    if not weak_leq(u, w):
        raise ValueError(f"{u} is not below {w} in the weak order")
    bound = max(u.n, w.n)
    return _build(u, w, lambda v: weak_covers(v, bound), lambda v: weak_leq(v, w))


# -- interval descriptions -------------------------------------------------

KINDS = ("kBruhat", "PrecOrder", "Young", "Weak")


@dataclass(frozen=True)
class IntervalSpec:
    kind: str
    bottom: object
    top: object
    k: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown interval kind {self.kind!r}; expected one of {KINDS}")
        if self.kind == "kBruhat" and (self.k is None or self.k < 1):
            raise ValueError("a kBruhat interval needs k >= 1")

    @classmethod
    def from_json(cls, data: Mapping | str) -> IntervalSpec:
        if isinstance(data, str):
            data = json.loads(data)
        kind = data["kind"]
        if kind == "Young":
            bottom = as_partition(_parts(data["bottom"]))
            top = as_partition(_parts(data["top"]))
        else:
            bottom, top = parse_perm(str(data["bottom"])), parse_perm(str(data["top"]))
        return cls(kind, bottom, top, data.get("k"))

    def to_json(self) -> dict:
        if self.kind == "Young":
            out = {"kind": self.kind, "bottom": list(self.bottom), "top": list(self.top)}
        else:
            out = {"kind": self.kind, "bottom": self.bottom.to_text(), "top": self.top.to_text()}
        if self.k is not None:
            out["k"] = self.k
        return out


def _parts(value) -> list[int]:
    if isinstance(value, str):
        return [int(p) for p in value.replace(",", " ").split()]
    return [int(p) for p in value]


def interval(spec: IntervalSpec) -> LabeledPoset:
    if spec.kind == "kBruhat":
        return kbruhat_interval(spec.bottom, spec.top, spec.k)
    if spec.kind == "PrecOrder":
        return prec_interval(spec.bottom, spec.top)
    if spec.kind == "Young":
        return young_interval(spec.bottom, spec.top)
    return weak_interval(spec.bottom, spec.top)
