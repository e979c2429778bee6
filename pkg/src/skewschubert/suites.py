"""Property suites that compare every chain-based computation with an
independent polynomial or tableau computation.

A suite is a list of :class:`Check` values.  Each check names a module-level
function and its arguments, so checks can run in worker processes; results
are always reported in list order.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from .order import (
    canonical_u,
    k_bruhat_leq,
    kbruhat_interval,
    prec_interval,
    weak_interval,
    young_interval,
    zeta_size,
)
from .perm import (
    Permutation,
    all_perms,
    cyclic_shift,
    grassmannian,
    irreducible_factorization,
    shape_embed,
)
from .poly import Poly
from .poset import (
    LabeledPoset,
    chain_poset,
    h_count,
    h_count_endpoint_form,
    is_symmetric,
    poset_product,
    poset_symfunc,
    skew_coefficient,
)
from .schubert import (
    chain_monomials,
    d_coefficient,
    pieri_e,
    pieri_h,
    pieri_oracle,
    reduce_staircase_ideal,
    schubert_poly,
    skew_schubert,
    staircase,
    structure_constant,
    two_alphabet_sides,
    univariate_expansion,
    univariate_oracle,
)
from .stanley import stanley_coefficient, stanley_function, theta, theta_domain, tableau_of_word
from .symfunc import (
    as_partition,
    compositions,
    contains,
    count_reverse_lr,
    lr_coefficient,
    partitions,
    partitions_in_box,
    skew_schur,
)

__all__ = ["Check", "Failure", "SuiteReport", "SUITES", "DEFAULT_SEED", "build_suite", "run_checks", "run_suite"]

DEFAULT_SEED = 20240101
SCALES = ("small", "full")


@dataclass(frozen=True)
class Check:
    case: str
    fn: Callable[..., tuple[Any, Any]]
    args: tuple = ()


@dataclass(frozen=True)
class Failure:
    case: str
    lhs: str
    rhs: str

    def to_json(self) -> dict:
        return {"case": self.case, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class SuiteReport:
    name: str
    cases: int = 0
    failures: list[Failure] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "suite": self.name,
            "cases": self.cases,
            "failures": [f.to_json() for f in self.failures],
        }
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out

    def format(self, timing: bool = False) -> str:
        status = "ok" if self.ok else "FAILED"
        line = f"{self.name:<12} cases {self.cases:>6}  failures {len(self.failures):>4}  {status}"
        if timing:
            line += f"  {self.seconds:.2f}s"
        lines = [line]
        for f in self.failures:
            lines.append(f"  {f.case}: {f.lhs} != {f.rhs}")
        return "\n".join(lines)


def _evaluate(check: Check) -> Failure | None:
    try:
        lhs, rhs = check.fn(*check.args)
    except Exception as exc:  # a crash counts as a failed case
        return Failure(check.case, f"error: {type(exc).__name__}: {exc}", "-")
    if lhs == rhs:
        return None
    return Failure(check.case, str(lhs), str(rhs))


def run_checks(name: str, checks: Iterable[Check], jobs: int = 1) -> SuiteReport:
    checks = list(checks)
    start = time.perf_counter()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_evaluate, checks, chunksize=8))
    else:
        results = [_evaluate(c) for c in checks]
    report = SuiteReport(name, len(checks), [r for r in results if r is not None])
    report.seconds = time.perf_counter() - start
    return report


# -- individual properties ------------------------------------------------------


def _fmt_expansion(e: dict) -> dict[str, int]:
    return {k.to_text(): v for k, v in e.items()}


def pieri_case(u: Permutation, m: int, k: int, elementary: bool):
    chains = pieri_e(u, m, k) if elementary else pieri_h(u, m, k)
    return _fmt_expansion(chains), _fmt_expansion(pieri_oracle(u, m, k, elementary))


def univariate_case(u: Permutation, p: int, refined: bool):
    return univariate_expansion(u, p, refined=refined), univariate_oracle(u, p)


def monomial_reconstruction_case(w: Permutation, n: int):
    delta = staircase(n)
    total = Poly()
    for alpha, c in chain_monomials(w, n).items():
        total = total + Poly.monomial(tuple(d - a for d, a in zip(delta, alpha)), c)
    return total, schubert_poly(w)


def admissible_alphas(n: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = [()]
    for i in range(1, n):
        out = [a + (x,) for a in out for x in range(n - i + 1)]
    return out


def d_coefficient_case(w: Permutation, n: int, method: str):
    chains = chain_monomials(w, n)
    table = {}
    for alpha in admissible_alphas(n):
        c = d_coefficient(w, alpha, method)
        if c:
            table[alpha] = c
    return table, chains


def _coefficients(u: Permutation, w: Permutation, k: int, size: int) -> dict[tuple[int, ...], int]:
    out = {}
    for lam in partitions(size):
        c = structure_constant(u, grassmannian(lam, k), w) if len(lam) <= k else 0
        if c:
            out[lam] = c
    return out


def shape_equivalence_case(u: Permutation, w: Permutation, k: int, positions: tuple[int, ...]):
    """c^w_{u, v(lam, k)} against c^z_{y, v(lam, l)} for z y^-1 = shape_embed(w u^-1)."""
    eta = shape_embed(w * u.inverse(), positions)
    y, l = canonical_u(eta)
    z = eta * y
    size = w.length - u.length
    if z.length - y.length != size:
        return ("size", size), ("size", z.length - y.length)
    return _coefficients(u, w, k, size), _coefficients(y, z, l, size)


def disjoint_product_case(zeta: Permutation):
    rhs = None
    for factor in irreducible_factorization(zeta):
        f = skew_schubert(factor, "polynomial")
        rhs = f if rhs is None else rhs * f
    return skew_schubert(zeta), rhs


def skew_routes_case(zeta: Permutation):
    return skew_schubert(zeta, "poset"), skew_schubert(zeta, "polynomial")


def cyclic_shift_case(eta: Permutation, n: int):
    shifted = cyclic_shift(eta, n)
    p, q = prec_interval(Permutation(), eta), prec_interval(Permutation(), shifted)
    m = zeta_size(eta)
    left = {alpha: h_count(p, alpha) for alpha in compositions(m)}
    right = {alpha: h_count(q, alpha) for alpha in compositions(m)} if q.height == m else {"height": q.height}
    return left, right


def two_alphabet_case(u: Permutation, p: int, n: int, m: int):
    lhs, rhs = two_alphabet_sides(u, p, n, m)
    return reduce_staircase_ideal(lhs, n, m, n), reduce_staircase_ideal(rhs, n, m, n)


def symmetry_case(spec: tuple):
    return is_symmetric(_poset_from(spec)), True


def endpoint_form_case(spec: tuple):
    poset = _poset_from(spec)
    h = poset.height
    return (
        {a: h_count(poset, a) for a in compositions(h)},
        {a: h_count_endpoint_form(poset, a) for a in compositions(h)},
    )


def young_skew_case(mu: tuple[int, ...], lam: tuple[int, ...]):
    return poset_symfunc(young_interval(mu, lam)), skew_schur(lam, mu)


def product_case(left: tuple, right: tuple):
    p = _poset_from(left)
    q = _poset_from(right).relabel_labels(lambda lab: lab + 100)
    return poset_symfunc(poset_product(p, q)), poset_symfunc(p) * poset_symfunc(q)


def reverse_lr_case(lam: tuple[int, ...], mu: tuple[int, ...]):
    size = sum(lam) - sum(mu)
    left = {nu: count_reverse_lr(lam, mu, nu) for nu in partitions(size)}
    right = {nu: lr_coefficient(lam, mu, nu) for nu in partitions(size)}
    return left, right


def stanley_case(w: Permutation):
    return stanley_function(w), poset_symfunc(weak_interval(Permutation(), w))


def stanley_coefficient_case(w: Permutation, lam: tuple[int, ...]):
    return stanley_coefficient(w, lam), skew_coefficient(weak_interval(Permutation(), w), lam)


def _perm_length(pi: tuple[int, ...]) -> int:
    return sum(1 for i in range(len(pi)) for j in range(i + 1, len(pi)) if pi[i] > pi[j])


def theta_case(w: Permutation, lam: tuple[int, ...]):
    """Involution, fixed points and sign change of theta; returns the list of violations."""
    ident = tuple(range(1, len(lam) + 1))
    bad = []
    fixed = 0
    for pi, rho in theta_domain(w, lam):
        image = theta(pi, rho, lam)
        t = tableau_of_word(rho)
        is_fixed = image == (pi, rho)
        expect_fixed = pi == ident and t.is_partition_shape() and as_partition(t.outer) == as_partition(lam)
        if theta(*image, lam) != (pi, rho):
            bad.append(("not an involution", pi, rho))
        if is_fixed != expect_fixed:
            bad.append(("fixed point mismatch", pi, rho))
        if not is_fixed and abs(_perm_length(pi) - _perm_length(image[0])) != 1:
            bad.append(("sign not reversed", pi, rho))
        fixed += is_fixed
    if fixed != stanley_coefficient(w, lam):
        bad.append(("fixed count", fixed, stanley_coefficient(w, lam)))
    return bad, []


# -- posets named by picklable specs --------------------------------------------


def _poset_from(spec: tuple) -> LabeledPoset:
    kind = spec[0]
    if kind == "kBruhat":
        return kbruhat_interval(spec[1], spec[2], spec[3])
    if kind == "Young":
        return young_interval(spec[1], spec[2])
    if kind == "Weak":
        return weak_interval(spec[1], spec[2])
    if kind == "chain":
        return chain_poset(spec[1])
    raise ValueError(f"unknown poset kind {kind!r}")


def _spec_text(spec: tuple) -> str:
    return " ".join(x.to_text() if isinstance(x, Permutation) else str(x) for x in spec)


# -- generators ------------------------------------------------------------------


def random_kbruhat_specs(rng: random.Random, n: int, count: int, max_height: int | None = None) -> list[tuple]:
    perms = all_perms(n)
    out = []
    while len(out) < count:
        u = rng.choice(perms)
        k = rng.randint(1, n - 1)
        tops = [
            w
            for w in perms
            if w.length > u.length
            and k_bruhat_leq(u, w, k)
            and (max_height is None or w.length - u.length <= max_height)
        ]
        if tops:
            out.append(("kBruhat", u, rng.choice(tops), k))
    return out


def shape_equivalent_triples(rng: random.Random, count: int, n: int = 5, room: int = 7) -> list[tuple]:
    out = random_kbruhat_specs(rng, n, count)
    triples = []
    for _, u, w, k in out:
        zeta = w * u.inverse()
        positions = tuple(sorted(rng.sample(range(1, room + 1), zeta.n)))
        triples.append((u, w, k, positions))
    return triples


def disjoint_products(n: int, max_size: int) -> list[Permutation]:
    return [
        z
        for z in all_perms(n)
        if len(irreducible_factorization(z)) >= 2 and zeta_size(z) <= max_size
    ]


def small_symmetric_specs(rng: random.Random, count: int) -> list[tuple]:
    pool: list[tuple] = []
    pool += random_kbruhat_specs(rng, 4, 12, max_height=3)
    pool += [("Young", mu, lam) for lam in partitions_in_box(2, 2) for mu in partitions_in_box(2, 2) if contains(lam, mu) and 0 < sum(lam) - sum(mu) <= 3]
    pool += [("Weak", Permutation(), w) for w in all_perms(3) if w.length > 0]
    pool += [("chain", (1, 2)), ("chain", (2, 1)), ("chain", (3,))]
    return [(rng.choice(pool), rng.choice(pool)) for _ in range(count)]


def sampled_perms(rng: random.Random, n: int, count: int) -> list[Permutation]:
    return rng.sample(all_perms(n), count)


# -- suites ------------------------------------------------------------------------


def pieri_checks(n: int = 4, bound_k: int = 3, bound_m: int = 3) -> list[Check]:
    checks = []
    for u in all_perms(n):
        for k in range(1, bound_k + 1):
            for m in range(1, bound_m + 1):
                for elementary in (False, True):
                    tag = "e" if elementary else "h"
                    checks.append(Check(f"pieri-{tag} u={u.to_text()} m={m} k={k}", pieri_case, (u, m, k, elementary)))
    return checks


def univariate_checks(n: int = 4) -> list[Check]:
    checks = []
    for u in all_perms(n):
        for p in range(1, n + 1):
            checks.append(Check(f"univariate u={u.to_text()} p={p}", univariate_case, (u, p, False)))
    return checks


def monomial_checks(sizes: Iterable[int]) -> list[Check]:
    checks = []
    for n in sizes:
        for w in all_perms(n):
            checks.append(Check(f"reconstruct w={w.to_text()} n={n}", monomial_reconstruction_case, (w, n)))
            for method in ("pieri", "polynomial", "mirror"):
                checks.append(Check(f"d-{method} w={w.to_text()} n={n}", d_coefficient_case, (w, n, method)))
    return checks


def shape_equivalence_checks(seed: int, count: int) -> list[Check]:
    rng = random.Random(seed)
    return [
        Check(f"shape-equivalence u={u.to_text()} w={w.to_text()} k={k} P={list(pos)}", shape_equivalence_case, (u, w, k, pos))
        for u, w, k, pos in shape_equivalent_triples(rng, count)
    ]


def disjoint_product_checks(n: int, max_size: int = 6) -> list[Check]:
    return [Check(f"disjoint-product zeta={z.to_text()}", disjoint_product_case, (z,)) for z in disjoint_products(n, max_size)]


def skew_route_checks(n: int) -> list[Check]:
    return [Check(f"skew-routes zeta={z.to_text()}", skew_routes_case, (z,)) for z in all_perms(n)]


def cyclic_shift_checks(n: int = 4) -> list[Check]:
    return [Check(f"cyclic-shift eta={e.to_text()}", cyclic_shift_case, (e, n)) for e in all_perms(n)]


def two_alphabet_checks(n: int = 3, m: int = 3) -> list[Check]:
    return [
        Check(f"two-alphabet u={u.to_text()} p={p}", two_alphabet_case, (u, p, n, m))
        for u in all_perms(n)
        for p in range(1, n + 1)
    ]


def symmetry_checks(seed: int, kbruhat_count: int = 200, box: int = 3, weak_n: int = 4) -> list[Check]:
    rng = random.Random(seed)
    specs = random_kbruhat_specs(rng, 5, kbruhat_count)
    specs += [
        ("Young", mu, lam)
        for lam in partitions_in_box(box, box)
        for mu in partitions_in_box(box, box)
        if contains(lam, mu)
    ]
    specs += [("Weak", Permutation(), w) for w in all_perms(weak_n)]
    return [Check(f"symmetric {_spec_text(s)}", symmetry_case, (s,)) for s in specs]


def endpoint_form_checks(seed: int, count: int = 20) -> list[Check]:
    rng = random.Random(seed)
    return [Check(f"endpoint-form {_spec_text(s)}", endpoint_form_case, (s,)) for s in random_kbruhat_specs(rng, 4, count)]


def young_skew_checks(box: int = 3) -> list[Check]:
    return [
        Check(f"young-skew {list(mu)} {list(lam)}", young_skew_case, (mu, lam))
        for lam in partitions_in_box(box, box)
        for mu in partitions_in_box(box, box)
        if contains(lam, mu)
    ]


def product_checks(seed: int, count: int = 20) -> list[Check]:
    rng = random.Random(seed)
    return [
        Check(f"product {_spec_text(a)} x {_spec_text(b)}", product_case, (a, b))
        for a, b in small_symmetric_specs(rng, count)
    ]


def reverse_lr_checks(max_size: int = 6) -> list[Check]:
    checks = []
    for size in range(max_size + 1):
        for lam in partitions(size):
            for s in range(size + 1):
                for mu in partitions(s):
                    if contains(lam, mu):
                        checks.append(Check(f"reverse-lr {list(lam)}/{list(mu)}", reverse_lr_case, (lam, mu)))
    return checks


def stanley_perms(seed: int, sample: int) -> list[Permutation]:
    rng = random.Random(seed)
    return [w for w in all_perms(4) if w.length > 0] + sampled_perms(rng, 5, sample)


def stanley_checks(seed: int, sample: int = 20) -> list[Check]:
    checks = []
    for w in stanley_perms(seed, sample):
        checks.append(Check(f"stanley w={w.to_text()}", stanley_case, (w,)))
        for lam in partitions(w.length):
            checks.append(Check(f"a=c w={w.to_text()} lam={list(lam)}", stanley_coefficient_case, (w, lam)))
    return checks


def theta_checks(seed: int, sample: int = 20) -> list[Check]:
    return [
        Check(f"theta w={w.to_text()} lam={list(lam)}", theta_case, (w, lam))
        for w in stanley_perms(seed, sample)
        for lam in partitions(w.length)
    ]


def build_suite(name: str, scale: str = "small", seed: int = DEFAULT_SEED) -> list[Check]:
    if scale not in SCALES:
        raise ValueError(f"unknown scale {scale!r}; expected one of {SCALES}")
    full = scale == "full"
    if name == "pieri":
        return pieri_checks(5 if full else 4) + univariate_checks(5 if full else 4)
    if name == "monomials":
        return monomial_checks((4, 5) if full else (4,))
    if name == "identities":
        return (
            shape_equivalence_checks(seed, 200 if full else 50)
            + disjoint_product_checks(6 if full else 5)
            + skew_route_checks(5 if full else 4)
            + cyclic_shift_checks(4)
            + two_alphabet_checks(3, 3)
        )
    if name == "posets":
        return (
            symmetry_checks(seed, 200 if full else 50, 3, 4)
            + endpoint_form_checks(seed)
            + young_skew_checks(3)
            + product_checks(seed, 20)
            + reverse_lr_checks(6 if full else 5)
        )
    if name == "stanley":
        sample = 20 if full else 5
        return stanley_checks(seed, sample) + theta_checks(seed, sample)
    raise ValueError(f"unknown suite {name!r}; expected one of {SUITES}")


SUITES = ("pieri", "identities", "posets", "stanley", "monomials", "all")


def run_suite(name: str, scale: str = "small", seed: int = DEFAULT_SEED, jobs: int = 1) -> list[SuiteReport]:
    """Run one suite, or every suite for ``all``; one report per suite."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")
    names = SUITES[:-1] if name == "all" else (name,)
    return [run_checks(n, build_suite(n, scale, seed), jobs) for n in names]
