"""Schubert polynomials, Schubert-basis expansion, the Pieri rule by chains in
the k-Bruhat order, and the chain description of Schubert monomials.

Divided differences are the reference computation.  The chain-based
routines never touch polynomials and are checked against it.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .order import canonical_u, k_bruhat_covers, kbruhat_interval, zeta_size
from .perm import Permutation, all_perms, grassmannian, increasing_cycle, omega0, omega0_conjugate
from .poly import Poly
from .poset import poset_symfunc
from .symfunc import SymFunction, e_poly, h_poly, partitions

__all__ = [
    "schubert_poly",
    "expand_in_schubert",
    "polynomial_from_expansion",
    "apply_divided_differences",
    "structure_constant",
    "pieri_h",
    "pieri_e",
    "pieri_oracle",
    "skew_schubert",
    "split_variable",
    "insert_row_column",
    "remove_row_column",
    "interleave",
    "substitute_alphabets",
    "shift_variables",
    "univariate_expansion",
    "univariate_oracle",
    "chain_monomial_coeff",
    "chain_monomials",
    "d_coefficient",
    "staircase",
    "h_product",
    "e_product",
    "top_coefficient",
    "expand_two_alphabets",
    "reduce_staircase_ideal",
    "two_alphabet_sides",
]

Expansion = dict[Permutation, int]


# -- Schubert polynomials ---------------------------------------------------


def staircase(n: int) -> tuple[int, ...]:
    """delta = (n-1, n-2, ..., 1, 0)."""
    return tuple(range(n - 1, -1, -1))


def _is_dominant(code: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(code, code[1:]))


@lru_cache(maxsize=None)
def _schubert_dominant(w: Permutation) -> Poly:
    code = w.code()
    if _is_dominant(code):
        return Poly.monomial(code)
    # climb towards a dominant permutation: w(i) < w(i+1) means l(w s_i) = l(w) + 1
    i = next(i for i in range(1, len(code)) if code[i - 1] < code[i])
    return _schubert_dominant(w.swap_positions(i, i + 1)).divided_difference(i)


@lru_cache(maxsize=None)
def _schubert_longest(w: Permutation, n: int) -> Poly:
    if w == omega0(n):
        return Poly.monomial(staircase(n))
    i = next(i for i in range(1, n) if w(i) < w(i + 1))
    return _schubert_longest(w.swap_positions(i, i + 1), n).divided_difference(i)


def schubert_poly(w: Permutation, method: str = "dominant", n: int | None = None) -> Poly:
    """The Schubert polynomial of w.

    ``dominant`` recurses up to the nearest dominant permutation, whose
    Schubert polynomial is the monomial of its code.  ``longest`` starts from
    x^delta for the longest element of S_n (n defaults to the size of w).
    """
    if method == "dominant":
        return _schubert_dominant(w)
    if method == "longest":
        n = max(w.n, 1) if n is None else n
        if w.n > n:
            raise ValueError(f"{w} is not in S_{n}")
        return _schubert_longest(w, n)
    raise ValueError(f"unknown method {method!r}")


def _padded(e: tuple[int, ...], n: int) -> tuple[int, ...]:
    return e + (0,) * (n - len(e))


def expand_in_schubert(f: Poly) -> Expansion:
    """Coefficients c_w with f = sum c_w S_w.

    The lexicographically smallest monomial of S_w is x^code(w) with
    coefficient one, so the smallest monomial of f names the next term.
    """
    out: Expansion = {}
    rest = f
    guard = 0
    while rest:
        guard += 1
        if guard > 200000:
            raise RuntimeError("Schubert expansion did not terminate")
        n = rest.nvars
        exp, c = min(rest.items(), key=lambda t: _padded(t[0], n))
        w = Permutation.from_code(exp)
        out[w] = out.get(w, 0) + c
        rest = rest - schubert_poly(w) * c
    return {w: c for w, c in sorted(out.items()) if c}


def polynomial_from_expansion(expansion: Mapping[Permutation, int]) -> Poly:
    total = Poly()
    for w, c in expansion.items():
        total = total + schubert_poly(w) * c
    return total


def apply_divided_differences(f: Poly, w: Permutation) -> Poly:
    """The operator attached to w: peel right descents of w, applying d_i each time."""
    cur = w
    while not cur.is_identity():
        i = min(cur.descents)
        f = f.divided_difference(i)
        cur = cur.swap_positions(i, i + 1)
    return f


def top_coefficient(f: Poly, w: Permutation) -> int:
    """Coefficient of S_w in f, read off by applying the divided differences of w.

    Only the degree-l(w) part matters; there the operator kills every S_v
    with v != w and sends S_w to 1.
    """
    g = apply_divided_differences(f.homogeneous_part(w.length), w)
    if g.degree() > 0:
        raise RuntimeError("divided differences left a non-constant")
    return g.coeff(())


def structure_constant(u: Permutation, v: Permutation, w: Permutation) -> int:
    """c^w_{uv}: coefficient of S_w in S_u * S_v."""
    if w.length != u.length + v.length:
        return 0
    return top_coefficient(schubert_poly(u) * schubert_poly(v), w)


# -- Pieri rule by label-monotone chains ---------------------------------------


def _monotone_chains(
    u: Permutation, m: int, k: int, increasing: bool, bound: int | None
) -> Counter:
    ends: Counter = Counter()

    def rec(v: Permutation, left: int, last: int | None) -> None:
        if left == 0:
            ends[v] += 1
            return
        for w, lab in k_bruhat_covers(v, k, bound):
            if last is not None and (lab <= last if increasing else lab >= last):
                continue
            rec(w, left - 1, lab)

    rec(u, m, None)
    return ends


def pieri_h(u: Permutation, m: int, k: int, bound: int | None = None) -> Expansion:
    """S_u * h_m(x_1..x_k) via increasing chains of length m above u in the k-Bruhat order.

    With ``bound`` the chains stay inside S_bound, which truncates the
    expansion to S_bound.
    """
    if m < 0 or k < 1:
        raise ValueError("need m >= 0 and k >= 1")
    ends = _monotone_chains(u, m, k, True, bound)
    if any(c != 1 for c in ends.values()):
        raise RuntimeError(f"increasing chain not unique above {u}")
    return dict(sorted(ends.items()))


def pieri_e(u: Permutation, m: int, k: int, bound: int | None = None) -> Expansion:
    """S_u * e_m(x_1..x_k) via decreasing chains; empty when m > k."""
    if m < 0 or k < 1:
        raise ValueError("need m >= 0 and k >= 1")
    if m > k:
        return {}
    ends = _monotone_chains(u, m, k, False, bound)
    if any(c != 1 for c in ends.values()):
        raise RuntimeError(f"decreasing chain not unique above {u}")
    return dict(sorted(ends.items()))


def pieri_oracle(u: Permutation, m: int, k: int, elementary: bool = False) -> Expansion:
    factor = e_poly(m, k) if elementary else h_poly(m, k)
    return expand_in_schubert(schubert_poly(u) * factor)


# -- skew Schubert functions --------------------------------------------------


def skew_schubert(zeta: Permutation, method: str = "poset") -> SymFunction:
    """S_zeta = sum over lambda of c^{zeta u}_{u, v(lambda, k)} s_lambda.

    ``poset`` counts chains in [u, zeta u]_k; ``polynomial`` computes the
    structure constants with divided differences.
    """
    u, k = canonical_u(zeta)
    if k == 0:
        return SymFunction.one()
    w = zeta * u
    if method == "poset":
        return poset_symfunc(kbruhat_interval(u, w, k))
    if method == "polynomial":
        m = zeta_size(zeta)
        coeffs = {
            lam: structure_constant(u, grassmannian(lam, k), w)
            for lam in partitions(m)
            if len(lam) <= k
        }
        return SymFunction("schur", coeffs)
    raise ValueError(f"unknown method {method!r}")


# -- inserting and splitting variables -----------------------------------------


def split_variable(f: Poly, p: int) -> dict[int, Poly]:
    """Send x_p to a new variable y and x_i to x_{i-1} for i > p.

    Returns {j: g_j} with the image equal to sum_j y^j g_j(x).
    """
    out: dict[int, dict[tuple[int, ...], int]] = {}
    for e, c in f.items():
        e = _padded(e, p)
        j = e[p - 1]
        bucket = out.setdefault(j, {})
        key = e[: p - 1] + e[p:]
        bucket[key] = bucket.get(key, 0) + c
    return {j: Poly(t) for j, t in sorted(out.items()) if Poly(t)}


def insert_row_column(w: Permutation, p: int, q: int) -> Permutation:
    """Add a new p-th row and q-th column to the permutation matrix of w, with a 1 at (p, q)."""
    if p < 1 or q < 1:
        raise ValueError("p and q must be positive")
    n = max(w.n, p - 1, q - 1)
    vals = []
    for j in range(1, n + 2):
        if j == p:
            vals.append(q)
            continue
        v = w(j) if j < p else w(j - 1)
        vals.append(v if v < q else v + 1)
    return Permutation(vals)


def remove_row_column(v: Permutation, p: int, q: int) -> Permutation | None:
    """Inverse of :func:`insert_row_column`; None unless v(p) = q."""
    if v(p) != q:
        return None
    n = max(v.n, p, q)
    vals = [v(j) for j in range(1, n + 1) if j != p]
    return Permutation(x if x < q else x - 1 for x in vals)


def interleave(w: Permutation, z: Permutation, p: int, n: int) -> Permutation:
    """Embed (w, z) in S_n x S_m into S_{n+m}, placing n + z(1) at position p."""
    if not 1 <= p <= n:
        raise ValueError(f"need 1 <= p <= n, got p={p}, n={n}")
    if w.n > n:
        raise ValueError(f"{w} is not in S_{n}")
    m = max(z.n, 1)
    vals = []
    for i in range(1, n + m + 1):
        if i < p:
            vals.append(w(i))
        elif i == p:
            vals.append(n + z(1))
        elif i <= n + 1:
            vals.append(w(i - 1))
        else:
            vals.append(n + z(i - n))
    return Permutation(vals)


def shift_variables(f: Poly, offset: int) -> Poly:
    """Rename x_i to x_{i + offset}; used to hold a second alphabet."""
    return f.map_exponents(lambda e: (0,) * offset + e if e else e)


def substitute_alphabets(f: Poly, positions: Sequence[int], total: int, offset: int) -> Poly:
    """x_{p_j} -> x_j and x_{q_j} -> y_j, where q is the complement of p in 1..total.

    The y-alphabet is stored as the variables offset+1, offset+2, ....
    """
    pos = list(positions)
    if any(a >= b for a, b in zip(pos, pos[1:])) or (pos and (pos[0] < 1 or pos[-1] > total)):
        raise ValueError("positions must be increasing inside 1..total")
    if len(pos) > offset:
        raise ValueError("offset must leave room for the x-alphabet")
    comp = [i for i in range(1, total + 1) if i not in set(pos)]
    target = {p: j for j, p in enumerate(pos, 1)}
    target.update({q: offset + j for j, q in enumerate(comp, 1)})

    def f_exp(e: tuple[int, ...]) -> tuple[int, ...] | None:
        if len(e) > total:
            raise ValueError(f"polynomial uses variables beyond x_{total}")
        out = [0] * (offset + len(comp) + 1)
        for i, a in enumerate(e, 1):
            if a:
                out[target[i] - 1] += a
        return tuple(out)

    return f.map_exponents(f_exp)


def expand_two_alphabets(f: Poly, offset: int) -> dict[tuple[Permutation, Permutation], int]:
    """Expand f(x; y) as sum d_{w,z} S_w(x) S_z(y); y_j is variable offset+j."""
    by_y: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {}
    for e, c in f.items():
        x, y = e[:offset], e[offset:]
        by_y.setdefault(_trim(y), {})[_trim(x)] = c
    # peel the y-alphabet first, with polynomial coefficients in x
    rest = {y: Poly(t) for y, t in by_y.items()}
    out: Counter = Counter()
    guard = 0
    while rest:
        guard += 1
        if guard > 100000:
            raise RuntimeError("two-alphabet expansion did not terminate")
        n = max(len(y) for y in rest)
        y = min(rest, key=lambda e: _padded(e, n))
        coeff = rest[y]
        z = Permutation.from_code(y)
        for ye, c in schubert_poly(z).items():
            ye = _trim(ye)
            new = rest.get(ye, Poly()) - coeff * c
            if new:
                rest[ye] = new
            else:
                rest.pop(ye, None)
        for w, c in expand_in_schubert(coeff).items():
            out[(w, z)] += c
    return {k: v for k, v in sorted(out.items()) if v}


def _trim(e: Sequence[int]) -> tuple[int, ...]:
    e = list(e)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def reduce_staircase_ideal(f: Poly, n: int, m: int, offset: int) -> Poly:
    """Drop monomials with x_i^a, a > n - i, or y_j^b, b > m - j."""

    def keep(e: tuple[int, ...]) -> tuple[int, ...] | None:
        x, y = e[:offset], e[offset:]
        if any(a > n - i for i, a in enumerate(x, 1) if a):
            return None
        if any(b > m - j for j, b in enumerate(y, 1) if b):
            return None
        return e

    return f.map_exponents(keep)


def two_alphabet_sides(u: Permutation, p: int, n: int, m: int) -> tuple[Poly, Poly]:
    """Both sides of the two-alphabet expansion of S_u for positions 1..n+1 without p.

    Left: substitute_alphabets(S_u).  Right: sum over w in S_n, z in S_m of
    c^{interleave(w, z)}_{u, r[n+1-p, p]} S_w(x) S_z(y).  The y-alphabet sits
    at offset n.  They agree modulo the staircase ideal.
    """
    if u.n > n or not 1 <= p <= n:
        raise ValueError(f"need u in S_{n} and 1 <= p <= n")
    positions = [i for i in range(1, n + 2) if i != p]
    lhs = substitute_alphabets(schubert_poly(u), positions, n + m, n)
    cycle = increasing_cycle(n + 1 - p, p)
    rhs = Poly()
    for w in all_perms(n):
        for z in all_perms(m):
            c = structure_constant(u, cycle, interleave(w, z, p, n))
            if c:
                rhs = rhs + schubert_poly(w) * shift_variables(schubert_poly(z), n) * c
    return lhs, rhs


# -- univariate expansion ---------------------------------------------------------


def univariate_expansion(u: Permutation, p: int, n: int | None = None, refined: bool = False) -> list[tuple[int, Permutation]]:
    """Terms y^j S_w(x) of the image of S_u under :func:`split_variable`, found by chains.

    Unrefined: u -> insert_row_column(w, p, n+1) by an increasing chain of
    length n+1-p-j in the p-Bruhat order.  Refined: length n-p-j and column
    n; valid when n is not among u(1), ..., u(p-1).
    """
    n = max(u.n, p) if n is None else n
    if u.n > n or not 1 <= p <= n:
        raise ValueError(f"need u in S_{n} and 1 <= p <= n")
    if refined and n in {u(i) for i in range(1, p)}:
        raise ValueError("the refined form needs n outside u(1), ..., u(p-1)")
    col = n if refined else n + 1
    top_len = n - p if refined else n + 1 - p
    terms = []
    for j in range(top_len + 1):
        for v in pieri_h(u, top_len - j, p):
            w = remove_row_column(v, p, col)
            if w is not None:
                terms.append((j, w))
    return sorted(terms)


def univariate_oracle(u: Permutation, p: int) -> list[tuple[int, Permutation]]:
    """The same terms read off from polynomial substitution and Schubert expansion."""
    terms = []
    for j, g in split_variable(schubert_poly(u), p).items():
        for w, c in expand_in_schubert(g).items():
            if c != 1:
                raise RuntimeError(f"coefficient {c} for y^{j} S_{w}")
            terms.append((j, w))
    return sorted(terms)


# -- Schubert monomials from chains ------------------------------------------


def _value_condition(v: Permutation, k: int, n: int) -> bool:
    return all(v(j) == n + 1 - j for j in range(1, k + 1))


def chain_monomials(w: Permutation, n: int | None = None) -> dict[tuple[int, ...], int]:
    """All alpha with the number of chains w -> ... -> w0 in S_n whose k-th block
    is an increasing chain of length alpha_k in the k-Bruhat order.

    S_w is then sum over alpha of count * x^(delta - alpha).  Every counted
    chain is checked to pass through permutations fixing the values
    n, n-1, ..., n+1-k in the first k positions after block k.
    """
    n = max(w.n, 1) if n is None else n
    if w.n > n:
        raise ValueError(f"{w} is not in S_{n}")
    top = omega0(n)

    @lru_cache(maxsize=None)
    def completions(k: int, v: Permutation) -> tuple[tuple[tuple[int, ...], int], ...]:
        if k == n:
            return (((), 1),) if v == top else ()
        out: Counter = Counter()
        for a in range(n - k + 1):
            for nxt in pieri_h(v, a, k, bound=n):
                for rest, c in completions(k + 1, nxt):
                    out[(a,) + rest] += c
        if out and k > 1 and not _value_condition(v, k - 1, n):
            raise AssertionError(f"chain through {v} violates the value condition at stage {k - 1}")
        return tuple(sorted(out.items()))

    return dict(completions(1, w))


def chain_monomial_coeff(w: Permutation, alpha: Sequence[int], n: int | None = None) -> int:
    """Coefficient of x^(delta - alpha) in S_w, counted by chains (n = len(alpha) + 1)."""
    n = len(alpha) + 1 if n is None else n
    if len(alpha) != n - 1 or w.n > n:
        raise ValueError("alpha must have n - 1 parts and w must lie in S_n")
    if any(not 0 <= a <= n - i for i, a in enumerate(alpha, 1)):
        return 0
    layer: Counter = Counter({w: 1})
    for k, a in enumerate(alpha, 1):
        nxt: Counter = Counter()
        for v, c in layer.items():
            for x in pieri_h(v, a, k, bound=n):
                nxt[x] += c
        layer = nxt
    return layer.get(omega0(n), 0)


def h_product(alpha: Sequence[int]) -> Poly:
    """h(alpha) = h_{alpha_1}(x_1) h_{alpha_2}(x_1, x_2) ..."""
    out = Poly.const(1)
    for k, a in enumerate(alpha, 1):
        out = out * h_poly(a, k)
    return out


def e_product(alpha: Sequence[int]) -> Poly:
    """e(alpha) = e_{alpha_{n-1}}(x_1) e_{alpha_{n-2}}(x_1, x_2) ... e_{alpha_1}(x_1..x_{n-1})."""
    out = Poly.const(1)
    for k, a in enumerate(reversed(alpha), 1):
        out = out * e_poly(a, k)
    return out


def _iterate_pieri(w: Permutation, alpha: Sequence[int], n: int, elementary: bool) -> int:
    step = pieri_e if elementary else pieri_h
    # the e-side product takes the parts in reverse order
    parts = tuple(reversed(alpha)) if elementary else tuple(alpha)
    layer: Counter = Counter({w: 1})
    for k, a in enumerate(parts, 1):
        nxt: Counter = Counter()
        for v, c in layer.items():
            for x in step(v, a, k, bound=n):
                nxt[x] += c
        layer = nxt
    return layer.get(omega0(n), 0)


def d_coefficient(w: Permutation, alpha: Sequence[int], method: str = "pieri") -> int:
    """Coefficient of S_{w0} in S_w * h(alpha), w0 the longest element of S_n, n = len(alpha) + 1.

    ``pieri`` iterates the chain Pieri rule inside S_n; ``polynomial`` applies
    divided differences to the product; ``mirror`` iterates the e-side rule on S_{w0 w w0} * e(alpha).
    """
    n = len(alpha) + 1
    if w.n > n:
        raise ValueError(f"{w} is not in S_{n}")
    if method == "pieri":
        return _iterate_pieri(w, alpha, n, elementary=False)
    if method == "polynomial":
        return top_coefficient(schubert_poly(w) * h_product(alpha), omega0(n))
    if method == "mirror":
        return _iterate_pieri(omega0_conjugate(w, n), alpha, n, elementary=True)
    raise ValueError(f"unknown method {method!r}")


