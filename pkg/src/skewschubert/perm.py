"""Permutations of the positive integers with finite support.

A :class:`Permutation` is stored in one-line notation of minimal length, so
the identity is the empty tuple and ``2,1`` and ``2,1,3`` are the same value.
Composition follows function composition: ``(u * v)(i) == u(v(i))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations as _iter_permutations
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation",
    "parse_perm",
    "all_perms",
    "length",
    "descents",
    "grassmannian",
    "shape_of_grassmannian",
    "special_cycles",
    "increasing_cycle",
    "decreasing_cycle",
    "shape_embed",
    "compress",
    "shape_equivalent",
    "up_down_fix",
    "cycles_crossing",
    "crossing_graph",
    "irreducible_factorization",
    "cyclic_shift",
    "omega0",
    "omega0_conjugate",
    "transposition",
]


def _normalize(values: Sequence[int]) -> tuple[int, ...]:
    vals = list(values)
    while vals and vals[-1] == len(vals):
        vals.pop()
    return tuple(vals)


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of {1, 2, ...} fixing all but finitely many points."""

    oneline: tuple[int, ...]

    def __init__(self, values: Iterable[int] = ()):
        vals = tuple(int(v) for v in values)
        if sorted(vals) != list(range(1, len(vals) + 1)):
            raise ValueError(f"not a permutation of 1..{len(vals)}: {vals}")
        object.__setattr__(self, "oneline", _normalize(vals))

    @classmethod
    def identity(cls) -> Permutation:
        return cls(())

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]]) -> Permutation:
        """Build from cycles, ``(a1, ..., ar)`` meaning a1 -> a2 -> ... -> ar -> a1."""
        cycles = [tuple(c) for c in cycles]
        n = max((max(c) for c in cycles if c), default=0)
        img = list(range(1, n + 1))
        seen: set[int] = set()
        for c in cycles:
            if len(set(c)) != len(c) or seen & set(c):
                raise ValueError(f"cycles are not disjoint: {cycles}")
            seen |= set(c)
            for a, b in zip(c, c[1:] + c[:1]):
                img[a - 1] = b
        return cls(img)

    @classmethod
    def from_code(cls, code: Sequence[int]) -> Permutation:
        """The permutation whose Lehmer code is ``code``."""
        n = len(code) + (max(code) if code else 0) + 1
        avail = list(range(1, n + 1))
        out = []
        for c in code:
            if c < 0 or c >= len(avail):
                raise ValueError(f"invalid code {code}")
            out.append(avail.pop(c))
        return cls(out + avail)

    # -- basic access -------------------------------------------------------

    @property
    def n(self) -> int:
        """Smallest n with this permutation in S_n (0 for the identity)."""
        return len(self.oneline)

    def __call__(self, i: int) -> int:
        if 1 <= i <= len(self.oneline):
            return self.oneline[i - 1]
        return i

    def __len__(self) -> int:
        return len(self.oneline)

    def __iter__(self) -> Iterator[int]:
        return iter(self.oneline)

    def values(self, n: int) -> tuple[int, ...]:
        """One-line notation padded to length ``n``."""
        if n < self.n:
            raise ValueError(f"{self} is not in S_{n}")
        return self.oneline + tuple(range(self.n + 1, n + 1))

    def __mul__(self, other: Permutation) -> Permutation:
        n = max(self.n, other.n)
        return Permutation(self(other(i)) for i in range(1, n + 1))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self.oneline, 1):
            inv[v - 1] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return not self.oneline

    @cached_property
    def length(self) -> int:
        w = self.oneline
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

    @property
    def descents(self) -> frozenset[int]:
        w = self.oneline
        return frozenset(j for j in range(1, len(w)) if w[j - 1] > w[j])

    def code(self) -> tuple[int, ...]:
        w = self.oneline
        c = [sum(1 for j in range(i + 1, len(w)) if w[j] < w[i]) for i in range(len(w))]
        while c and c[-1] == 0:
            c.pop()
        return tuple(c)

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its least element, sorted."""
        seen: set[int] = set()
        out = []
        for a in range(1, self.n + 1):
            if a in seen or self(a) == a:
                continue
            cyc = [a]
            seen.add(a)
            b = self(a)
            while b != a:
                cyc.append(b)
                seen.add(b)
                b = self(b)
            out.append(tuple(cyc))
        return out

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i in range(1, self.n + 1) if self(i) != i)

    def swap_values(self, a: int, b: int) -> Permutation:
        """Left multiplication by the transposition (a, b)."""
        n = max(self.n, a, b)
        vals = list(self.values(n))
        ia, ib = vals.index(a), vals.index(b)
        vals[ia], vals[ib] = b, a
        return Permutation(vals)

    def swap_positions(self, i: int, j: int) -> Permutation:
        """Right multiplication by the transposition (i, j)."""
        n = max(self.n, i, j)
        vals = list(self.values(n))
        vals[i - 1], vals[j - 1] = vals[j - 1], vals[i - 1]
        return Permutation(vals)

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self.oneline:
            return "1"
        if self.n <= 9:
            return "".join(map(str, self.oneline))
        return ",".join(map(str, self.oneline))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"

    def to_text(self) -> str:
        """Comma-separated one-line notation (the wire format)."""
        return ",".join(map(str, self.oneline)) if self.oneline else ""


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_perm(text: str | Sequence[int] | Permutation) -> Permutation:
    """Parse ``"2,5,3,4,1"``, ``"25341"``, ``"(4,3,2)"`` or ``"(1,2)(3,4)"``.

    ``"1"`` and ``""`` both denote the identity.
    """
    if isinstance(text, Permutation):
        return text
    if not isinstance(text, str):
        return Permutation(text)
    s = text.strip()
    if s.startswith("("):
        if _CYCLE_RE.sub("", s).strip():
            raise ValueError(f"bad cycle notation: {text!r}")
        cycles = []
        for body in _CYCLE_RE.findall(s):
            parts = [p for p in re.split(r"[,\s]+", body.strip()) if p]
            if len(parts) == 1 and len(parts[0]) > 1 and "," not in body:
                parts = list(parts[0])
            cycles.append(tuple(int(p) for p in parts))
        return Permutation.from_cycles(c for c in cycles if len(c) > 1)
    if s in ("", "1", "id"):
        return Permutation()
    if "," in s or " " in s:
        return Permutation(int(p) for p in re.split(r"[,\s]+", s) if p)
    if not s.isdigit():
        raise ValueError(f"cannot parse permutation {text!r}")
    return Permutation(int(c) for c in s)


def all_perms(n: int) -> list[Permutation]:
    """All of S_n in lexicographic order of one-line notation."""
    return [Permutation(p) for p in _iter_permutations(range(1, n + 1))]


def transposition(a: int, b: int) -> Permutation:
    return Permutation().swap_positions(a, b)


def length(w: Permutation) -> int:
    return w.length


def descents(w: Permutation) -> frozenset[int]:
    return w.descents


def grassmannian(shape: Sequence[int], k: int) -> Permutation:
    """v(lambda, k): the permutation with descents in {k} and shape lambda."""
    parts = [p for p in shape if p > 0]
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"not a partition: {tuple(shape)}")
    if len(parts) > k:
        raise ValueError(f"partition {tuple(parts)} has more than k={k} parts")
    lam = parts + [0] * (k - len(parts))
    first = [0] * k
    for j in range(1, k + 1):
        first[k - j] = lam[j - 1] + k + 1 - j
    n = k + (lam[0] if lam else 0)
    used = set(first)
    rest = [v for v in range(1, n + 1) if v not in used]
    return Permutation(first + rest)


def shape_of_grassmannian(w: Permutation, k: int) -> tuple[int, ...]:
    """Recover lambda from v(lambda, k)."""
    if not w.descents <= {k}:
        raise ValueError(f"{w} is not Grassmannian with descent {k}")
    lam = [w(k + 1 - j) - k - 1 + j for j in range(1, k + 1)]
    return tuple(p for p in lam if p > 0)


def increasing_cycle(m: int, k: int) -> Permutation:
    """r[m, k] = v((m), k), the cycle (k+m, k+m-1, ..., k)."""
    if m < 1 or k < 1:
        raise ValueError("m and k must be positive")
    return Permutation.from_cycles([tuple(range(k + m, k - 1, -1))])


def decreasing_cycle(m: int, k: int) -> Permutation:
    """v(1^m, k), the cycle (k+1-m, ..., k, k+1); needs k >= m."""
    if m < 1 or k < 1:
        raise ValueError("m and k must be positive")
    if k < m:
        raise ValueError(f"v(1^{m}, {k}) needs k >= m")
    return Permutation.from_cycles([tuple(range(k + 1 - m, k + 2))])


def special_cycles(m: int, k: int) -> tuple[Permutation, Permutation]:
    return increasing_cycle(m, k), decreasing_cycle(m, k)


def shape_embed(zeta: Permutation, positions: Sequence[int]) -> Permutation:
    """epsilon_P(zeta): transport zeta along the order isomorphism N -> P."""
    pos = list(positions)
    if any(a >= b for a, b in zip(pos, pos[1:])) or (pos and pos[0] < 1):
        raise ValueError(f"P must be strictly increasing positive integers: {pos}")
    if len(pos) < zeta.n:
        raise ValueError(f"P has {len(pos)} entries but zeta lives in S_{zeta.n}")
    if not pos:
        return Permutation()
    img = list(range(1, pos[-1] + 1))
    for i in range(1, zeta.n + 1):
        img[pos[i - 1] - 1] = pos[zeta(i) - 1]
    return Permutation(img)


def compress(zeta: Permutation) -> Permutation:
    """Standardize zeta on its support to a permutation without fixed points."""
    supp = sorted(zeta.support)
    index = {a: i for i, a in enumerate(supp, 1)}
    return Permutation(index[zeta(a)] for a in supp)


def shape_equivalent(zeta: Permutation, eta: Permutation) -> bool:
    return compress(zeta) == compress(eta)


def up_down_fix(zeta: Permutation, bound: int | None = None):
    """(up, down, fix) of zeta, with fix reported inside ``1..bound``."""
    n = zeta.n if bound is None else max(bound, zeta.n)
    up = frozenset(a for a in range(1, n + 1) if a < zeta(a))
    down = frozenset(b for b in range(1, n + 1) if b > zeta(b))
    fix = frozenset(c for c in range(1, n + 1) if c == zeta(c))
    return up, down, fix


def cycles_crossing(s: Iterable[int], t: Iterable[int]) -> bool:
    """True iff some a < b < c < d has a, c in one set and b, d in the other."""
    s, t = set(s), set(t)
    merged = sorted([(x, 0) for x in s] + [(x, 1) for x in t])
    tags = [tag for _, tag in merged]
    # crossing <=> the two-colour sequence contains a pattern x y x y
    for first in (0, 1):
        state = 0
        want = [first, 1 - first, first, 1 - first]
        for tag in tags:
            if tag == want[state]:
                state += 1
                if state == 4:
                    return True
    return False


def crossing_graph(zeta: Permutation):
    """Cycles of zeta and the pairs of cycle indices whose supports cross."""
    cyc = zeta.cycles()
    edges = [
        (i, j)
        for i in range(len(cyc))
        for j in range(i + 1, len(cyc))
        if cycles_crossing(cyc[i], cyc[j])
    ]
    return cyc, edges


def irreducible_factorization(zeta: Permutation) -> list[Permutation]:
    """Factor zeta as a disjoint product of irreducibles.

    Blocks are the connected components of the crossing graph on cycles,
    i.e. the finest non-crossing partition coarsening the cycle partition.
    """
    cyc, edges = crossing_graph(zeta)
    parent = list(range(len(cyc)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in edges:
        parent[find(i)] = find(j)
    blocks: dict[int, list[tuple[int, ...]]] = {}
    for i, c in enumerate(cyc):
        blocks.setdefault(find(i), []).append(c)
    factors = [Permutation.from_cycles(cs) for cs in blocks.values()]
    return sorted(factors, key=lambda f: min(f.support))


def omega0(n: int) -> Permutation:
    return Permutation(range(n, 0, -1))


def _check_in(w: Permutation, n: int) -> None:
    if w.n > n:
        raise ValueError(f"{w} is not in S_{n}")


def cyclic_shift(eta: Permutation, n: int) -> Permutation:
    """eta^(12...n) = c eta c^-1 where c is the n-cycle (1 2 ... n)."""
    _check_in(eta, n)
    if n == 0:
        return eta
    c = Permutation.from_cycles([tuple(range(1, n + 1))]) if n > 1 else Permutation()
    return c * eta * c.inverse()


def omega0_conjugate(w: Permutation, n: int) -> Permutation:
    _check_in(w, n)
    return Permutation(n + 1 - w(n + 1 - i) for i in range(1, n + 1))
