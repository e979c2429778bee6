"""Symmetric functions in the Schur and complete-homogeneous bases.

Everything is exact integer arithmetic.  Schur polynomials in finitely many
variables come from the Jacobi-Trudi determinant, and Schur coefficients of a
symmetric polynomial are read off by peeling dominance-maximal monomials.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product as _cartesian
from typing import Iterable, Iterator, Mapping, Sequence

from .poly import Poly

__all__ = [
    "Partition",
    "as_partition",
    "partitions",
    "partitions_in_box",
    "contains",
    "compositions",
    "weak_compositions",
    "h_poly",
    "e_poly",
    "schur_poly",
    "schur_coefficients",
    "schur_product",
    "lr_coefficient",
    "horizontal_strips",
    "ssyt",
    "kostka",
    "skew_kostka",
    "count_reverse_lr",
    "SymFunction",
    "h_to_schur",
    "coproduct_terms",
    "comultiply",
    "skew_schur",
]

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    p = tuple(int(x) for x in parts)
    if any(x < 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"not a partition: {p}")
    return tuple(x for x in p if x > 0)


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    out = []
    for parts in _cartesian(range(cols + 1), repeat=rows):
        if all(a >= b for a, b in zip(parts, parts[1:])):
            out.append(as_partition(parts))
    return sorted(out, key=lambda p: (sum(p), p))


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff mu is a subdiagram of lam."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """Compositions of n into positive parts."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def weak_compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Compositions of n into exactly k non-negative parts."""
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in weak_compositions(n - first, k - 1):
            yield (first,) + rest


# -- polynomials in finitely many variables ---------------------------------


@lru_cache(maxsize=None)
def h_poly(d: int, n: int) -> Poly:
    """Complete homogeneous h_d(x_1, ..., x_n)."""
    if d < 0:
        return Poly()
    if d == 0:
        return Poly.const(1)
    if n <= 0:
        return Poly()
    return Poly({e: 1 for e in weak_compositions(d, n)})


@lru_cache(maxsize=None)
def e_poly(d: int, n: int) -> Poly:
    """Elementary e_d(x_1, ..., x_n)."""
    if d < 0 or d > max(n, 0):
        return Poly()
    if d == 0:
        return Poly.const(1)
    terms = {}
    for e in _cartesian((0, 1), repeat=n):
        if sum(e) == d:
            terms[e] = 1
    return Poly(terms)


@lru_cache(maxsize=None)
def schur_poly(lam: Partition, n: int) -> Poly:
    """s_lambda(x_1, ..., x_n) by cofactor expansion of det[h_{lam_i - i + j}]."""
    lam = as_partition(lam)
    if len(lam) > n:
        return Poly()
    k = len(lam)
    if k == 0:
        return Poly.const(1)

    @lru_cache(maxsize=None)
    def minor(row: int, cols: int) -> Poly:
        # determinant of rows row..k-1 against the column set ``cols``
        if row == k:
            return Poly.const(1)
        total = Poly()
        sign = 1
        for j in range(k):
            if not cols >> j & 1:
                continue
            entry = h_poly(lam[row] - row + j, n)
            if entry:
                total = total + entry * minor(row + 1, cols & ~(1 << j)) * sign
            sign = -sign
        return total

    return minor(0, (1 << k) - 1)


def schur_coefficients(f: Poly, n: int) -> dict[Partition, int]:
    """Expand a symmetric polynomial in x_1..x_n as sum c_lambda s_lambda(x_1..x_n)."""
    if f.nvars > n:
        raise ValueError(f"polynomial uses more than {n} variables")
    out: dict[Partition, int] = {}
    rest = f
    guard = 0
    while rest:
        guard += 1
        if guard > 100000:
            raise RuntimeError("Schur extraction did not terminate")
        lead, c = max(
            ((e + (0,) * (n - len(e)), c) for e, c in rest.items()), key=lambda t: t[0]
        )
        if any(a < b for a, b in zip(lead, lead[1:])):
            raise ValueError("polynomial is not symmetric")
        lam = as_partition(lead)
        out[lam] = out.get(lam, 0) + c
        rest = rest - schur_poly(lam, n) * c
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _truncated_product(mu: Partition, nu: Partition, n: int) -> tuple[tuple[Partition, int], ...]:
    f = schur_poly(mu, n) * schur_poly(nu, n)
    return tuple(sorted(schur_coefficients(f, n).items()))


def schur_product(mu: Sequence[int], nu: Sequence[int]) -> dict[Partition, int]:
    """s_mu * s_nu in the Schur basis, computed in len(mu)+len(nu) variables."""
    mu, nu = as_partition(mu), as_partition(nu)
    n = len(mu) + len(nu)
    return dict(_truncated_product(mu, nu, n))


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Littlewood-Richardson coefficient c^lam_{mu nu}.

    Expands s_mu * s_nu in len(lam) variables; that many variables already
    separate every s_kappa with len(kappa) <= len(lam).
    """
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if sum(lam) != sum(mu) + sum(nu) or not contains(lam, mu) or not contains(lam, nu):
        return 0
    n = len(lam)
    return dict(_truncated_product(mu, nu, n)).get(lam, 0)


# -- tableaux ----------------------------------------------------------------


def horizontal_strips(kappa: Partition, lam: Partition, size: int) -> Iterator[Partition]:
    """Partitions rho with kappa <= rho <= lam and rho/kappa a horizontal strip of ``size``."""
    rows = len(lam)
    kap = list(kappa) + [0] * (rows - len(kappa))

    def rec(i: int, left: int, acc: list[int]) -> Iterator[Partition]:
        if i == rows:
            if left == 0:
                yield as_partition(acc)
            return
        upper = lam[i] if i == 0 else min(lam[i], kap[i - 1])
        for r in range(kap[i], min(upper, kap[i] + left) + 1):
            yield from rec(i + 1, left - (r - kap[i]), acc + [r])

    if not contains(lam, kappa):
        return
    yield from rec(0, size, [])


def skew_kostka(lam: Sequence[int], mu: Sequence[int], content: Sequence[int]) -> int:
    """Number of SSYT of shape lam/mu with the given content (a composition)."""
    lam, mu = as_partition(lam), as_partition(mu)
    content = tuple(content)
    if any(c < 0 for c in content) or sum(content) != sum(lam) - sum(mu):
        return 0
    if not contains(lam, mu):
        return 0

    @lru_cache(maxsize=None)
    def count(kappa: Partition, i: int) -> int:
        if i == len(content):
            return 1 if kappa == lam else 0
        return sum(count(rho, i + 1) for rho in horizontal_strips(kappa, lam, content[i]))

    return count(mu, 0)


def kostka(lam: Sequence[int], content: Sequence[int]) -> int:
    """K_{lam, alpha}: SSYT of shape lam and content alpha."""
    return skew_kostka(lam, (), content)


def ssyt(lam: Sequence[int], mu: Sequence[int], content: Sequence[int]) -> Iterator[list[list[int]]]:
    """Semistandard fillings of lam/mu with the given content.

    Each filling is a list of rows (row 1 first); row i holds the entries in
    columns mu_i+1 .. lam_i, left to right.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    content = tuple(content)
    if not contains(lam, mu) or sum(content) != sum(lam) - sum(mu):
        return
    rows = len(lam)
    mu_full = list(mu) + [0] * (rows - len(mu))

    def rec(kappa: Partition, i: int, fill: list[list[int]]) -> Iterator[list[list[int]]]:
        if i == len(content):
            if kappa == lam:
                yield [list(r) for r in fill]
            return
        kap = list(kappa) + [0] * (rows - len(kappa))
        for rho in horizontal_strips(kappa, lam, content[i]):
            r = list(rho) + [0] * (rows - len(rho))
            new = [row + [i + 1] * (r[j] - kap[j]) for j, row in enumerate(fill)]
            yield from rec(rho, i + 1, new)

    yield from rec(mu, 0, [[] for _ in range(rows)])
    _ = mu_full


def count_reverse_lr(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Reverse LR tableaux of shape lam/mu and content (nu_k, ..., nu_1).

    The word is read row by row from the top row (Cartesian convention, the
    shortest row) down to row 1, and every prefix must satisfy
    f_1 <= f_2 <= ... <= f_k, f_a being the number of a's seen so far.
    """
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if not contains(lam, mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    k = len(nu)
    total = 0
    for filling in ssyt(lam, mu, tuple(reversed(nu))):
        counts = [0] * (k + 1)
        ok = True
        for row in reversed(filling):
            for a in row:
                counts[a] += 1
                if a > 1 and counts[a - 1] > counts[a]:
                    ok = False
                    break
                if a < k and counts[a] > counts[a + 1]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            total += 1
    return total


# -- symmetric functions -----------------------------------------------------


class SymFunction:
    """Finite integer combination of s_lambda (basis "schur") or h_lambda (basis "h")."""

    __slots__ = ("basis", "coeffs")

    BASES = ("schur", "h")

    def __init__(self, basis: str = "schur", coeffs: Mapping[Sequence[int], int] | None = None):
        if basis not in self.BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        clean: dict[Partition, int] = {}
        for key, c in (coeffs or {}).items():
            if basis == "h":
                if any(p < 0 for p in key):
                    continue
                lam = tuple(sorted((p for p in key if p), reverse=True))
            else:
                lam = as_partition(key)
            clean[lam] = clean.get(lam, 0) + c
        self.coeffs = {k: v for k, v in clean.items() if v}

    @classmethod
    def schur(cls, lam: Sequence[int] = ()) -> SymFunction:
        return cls("schur", {tuple(lam): 1})

    @classmethod
    def h(cls, alpha: Sequence[int] = ()) -> SymFunction:
        return cls("h", {tuple(alpha): 1})

    @classmethod
    def one(cls, basis: str = "schur") -> SymFunction:
        return cls(basis, {(): 1})

    def _same(self, other: SymFunction) -> SymFunction:
        if other.basis == self.basis:
            return other
        if other.basis == "h" and self.basis == "schur":
            return h_to_schur(other)
        raise ValueError("cannot convert from the Schur basis to the h basis")

    def __add__(self, other: SymFunction) -> SymFunction:
        other = self._same(other)
        out = Counter(self.coeffs)
        out.update(other.coeffs)
        return SymFunction(self.basis, out)

    def __neg__(self) -> SymFunction:
        return SymFunction(self.basis, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: SymFunction) -> SymFunction:
        return self + (-other)

    def __mul__(self, other: SymFunction | int) -> SymFunction:
        if isinstance(other, int):
            return SymFunction(self.basis, {k: v * other for k, v in self.coeffs.items()})
        other = self._same(other)
        out: Counter = Counter()
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                if self.basis == "h":
                    out[a + b] += ca * cb
                else:
                    for lam, c in schur_product(a, b).items():
                        out[lam] += ca * cb * c
        return SymFunction(self.basis, out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymFunction):
            return NotImplemented
        if self.basis != other.basis:
            a = self if self.basis == "schur" else h_to_schur(self)
            b = other if other.basis == "schur" else h_to_schur(other)
            return a.coeffs == b.coeffs
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.basis, frozenset(self.coeffs.items())))

    def __getitem__(self, lam: Sequence[int]) -> int:
        return self.coeffs.get(tuple(lam), 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def degrees(self) -> set[int]:
        return {sum(k) for k in self.coeffs}

    def is_positive(self) -> bool:
        return all(v > 0 for v in self.coeffs.values())

    def terms(self) -> list[tuple[Partition, int]]:
        return sorted(self.coeffs.items(), key=lambda t: (-sum(t[0]), tuple(-p for p in t[0])))

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [{"shape": list(lam), "coeff": c} for lam, c in self.terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> SymFunction:
        return cls(data["basis"], {tuple(t["shape"]): t["coeff"] for t in data["terms"]})

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        sym = "s" if self.basis == "schur" else "h"
        parts = []
        for lam, c in self.terms():
            name = f"{sym}[{','.join(map(str, lam))}]"
            if c == 1:
                parts.append(name)
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{c}*{name}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"SymFunction({self.basis!r}, {self.coeffs!r})"


def h_to_schur(f: SymFunction) -> SymFunction:
    """h_mu = sum_lambda K_{lambda mu} s_lambda."""
    if f.basis == "schur":
        return f
    out: Counter = Counter()
    for mu, c in f.coeffs.items():
        for lam in partitions(sum(mu)):
            k = kostka(lam, mu)
            if k:
                out[lam] += c * k
    return SymFunction("schur", out)


def coproduct_terms(alpha: Sequence[int]) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All (beta, gamma) with beta + gamma = alpha componentwise, beta, gamma >= 0."""
    for beta in _cartesian(*(range(a + 1) for a in alpha)):
        yield tuple(beta), tuple(a - b for a, b in zip(alpha, beta))


def comultiply(f: SymFunction) -> dict[tuple[Partition, Partition], int]:
    """Delta on the h basis: Delta(h_alpha) = sum_{beta+gamma=alpha} h_beta (x) h_gamma."""
    if f.basis != "h":
        raise ValueError("comultiply expects the h basis")
    out: Counter = Counter()
    for alpha, c in f.coeffs.items():
        for beta, gamma in coproduct_terms(alpha):
            key = (
                tuple(sorted((b for b in beta if b), reverse=True)),
                tuple(sorted((g for g in gamma if g), reverse=True)),
            )
            out[key] += c
    return {k: v for k, v in out.items() if v}


def skew_schur(lam: Sequence[int], mu: Sequence[int]) -> SymFunction:
    """s_{lam/mu} = sum_nu c^lam_{mu nu} s_nu."""
    lam, mu = as_partition(lam), as_partition(mu)
    if not contains(lam, mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    m = sum(lam) - sum(mu)
    return SymFunction("schur", {nu: lr_coefficient(lam, mu, nu) for nu in partitions(m)})
