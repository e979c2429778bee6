"""Command-line front end: compute, expand and verify."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .order import IntervalSpec, interval
from .perm import Permutation, parse_perm
from .poly import parse_poly
from .poset import LabeledPoset, pi_composition, poset_symfunc
from .schubert import (
    chain_monomials,
    expand_in_schubert,
    pieri_e,
    pieri_h,
    schubert_poly,
    skew_schubert,
    staircase,
)
from .stanley import format_word, parse_word, stanley_function, theta, theta_domain, theta_row
from .suites import DEFAULT_SEED, SCALES, SUITES, run_suite
from .symfunc import as_partition

__all__ = ["main", "build_parser"]


class UsageError(Exception):
    pass


def _perm(text: str) -> Permutation:
    try:
        return parse_perm(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parts(text: str) -> tuple[int, ...]:
    try:
        return as_partition(int(p) for p in text.replace(",", " ").split())
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from exc


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _expansion(e: dict[Permutation, int]) -> list[dict]:
    return [{"perm": w.to_text() or "1", "coeff": c} for w, c in e.items()]


def _expansion_text(e: dict[Permutation, int]) -> str:
    if not e:
        return "0"
    parts = [(f"{c}*" if c != 1 else "") + f"S[{w.to_text() or '1'}]" for w, c in e.items()]
    return " + ".join(parts)


# -- subcommands -------------------------------------------------------------------


def cmd_schubert(args) -> tuple[Any, str]:
    w = _perm(args.perm)
    f = schubert_poly(w)
    return {"perm": w.to_text(), "polynomial": f.format()}, f.format()


def cmd_expand(args) -> tuple[Any, str]:
    try:
        f = parse_poly(_read(args.file).strip())
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    e = expand_in_schubert(f)
    return {"expansion": _expansion(e)}, _expansion_text(e)


def cmd_pieri(args) -> tuple[Any, str]:
    u = _perm(args.u)
    if args.m < 0 or args.k < 1:
        raise UsageError("need m >= 0 and k >= 1")
    e = pieri_e(u, args.m, args.k) if args.e else pieri_h(u, args.m, args.k)
    return {"u": u.to_text(), "m": args.m, "k": args.k, "elementary": args.e, "expansion": _expansion(e)}, _expansion_text(e)


def cmd_skew(args) -> tuple[Any, str]:
    zeta = _perm(args.perm)
    f = skew_schubert(zeta)
    return {"perm": zeta.to_text(), "function": f.to_json()}, str(f)


def cmd_monomials(args) -> tuple[Any, str]:
    w = _perm(args.perm)
    n = args.n or max(w.n, 1)
    if w.n > n:
        raise UsageError(f"{args.perm} is not in S_{n}")
    table = chain_monomials(w, n)
    delta = staircase(n)
    poly = schubert_poly(w)
    rows = [
        {"alpha": list(alpha), "exponent": [d - a for d, a in zip(delta, alpha)], "chains": c}
        for alpha, c in table.items()
    ]
    lines = ["alpha\texponent\tchains"]
    lines += [f"{tuple(r['alpha'])}\t{tuple(r['exponent'])}\t{r['chains']}" for r in rows]
    lines.append(f"S[{w.to_text() or '1'}] = {poly.format()}")
    return {"perm": w.to_text(), "n": n, "table": rows, "polynomial": poly.format()}, "\n".join(lines)


def cmd_stanley(args) -> tuple[Any, str]:
    w = _perm(args.perm)
    f = stanley_function(w)
    return {"perm": w.to_text(), "function": f.to_json()}, str(f)


def cmd_poset(args) -> tuple[Any, str]:
    data = json.loads(_read(args.file))
    try:
        poset = interval(IntervalSpec.from_json(data)) if "kind" in data else LabeledPoset.from_json(data)
        f = poset_symfunc(poset)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    return {"function": f.to_json()}, str(f)


def cmd_theta_trace(args) -> tuple[Any, str]:
    w = _perm(args.w)
    lam = _parts(args.lam)
    if sum(lam) != w.length:
        raise UsageError(f"lambda must be a partition of l(w) = {w.length}")
    if args.word:
        word, _ = parse_word(args.word)
        pi = tuple(int(x) for x in args.pi.replace(",", " ").split()) if args.pi else tuple(range(1, len(lam) + 1))
        domain = [(pi, word)]
    else:
        domain = list(theta_domain(w, lam))
    rows = []
    for pi, rho in domain:
        new_pi, new_rho = theta(pi, rho, lam)
        rows.append(
            {
                "pi": list(pi),
                "word": format_word(rho, pi_composition(lam, pi)),
                "image_pi": list(new_pi),
                "image_word": format_word(new_rho, pi_composition(lam, new_pi)),
                "fixed": (new_pi, new_rho) == (pi, rho),
                "row": theta_row(pi, rho, lam),
                "image_row": theta_row(new_pi, new_rho, lam),
            }
        )
    fixed = sum(r["fixed"] for r in rows)
    lines = [
        f"{r['pi']} {r['word']} -> " + ("fixed" if r["fixed"] else f"{r['image_pi']} {r['image_word']}  (r={r['row']}, r'={r['image_row']})")
        for r in rows
    ]
    lines.append(f"fixed points: {fixed}")
    return {"w": w.to_text(), "lambda": list(lam), "orbits": rows, "fixed": fixed}, "\n".join(lines)


def cmd_verify(args) -> tuple[Any, str, int]:
    reports = run_suite(args.suite, args.scale, args.seed, args.jobs)
    data = {
        "scale": args.scale,
        "seed": args.seed,
        "reports": [r.to_json(args.timing) for r in reports],
    }
    text = "\n".join(r.format(args.timing) for r in reports)
    return data, text, 0 if all(r.ok for r in reports) else 1


# -- parser -----------------------------------------------------------------------


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # after the subcommand the flags must not reset values given before it
    def default(value):
        return argparse.SUPPRESS if suppress else value

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=default(False), help="machine-readable output")
    common.add_argument("--seed", type=int, default=default(DEFAULT_SEED), help="seed for sampled suites")
    common.add_argument("--scale", choices=SCALES, default=default("small"), help="suite size")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewschubert",
        description="Schubert polynomials, skew Schubert and Stanley symmetric functions.",
        parents=[_global_flags(False)],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help_text, parents=[_global_flags(True)])

    p = add("schubert", "Schubert polynomial of a permutation")
    p.add_argument("perm")
    p.set_defaults(func=cmd_schubert)

    p = add("expand", "expand a polynomial file in the Schubert basis ('-' reads stdin)")
    p.add_argument("file")
    p.set_defaults(func=cmd_expand)

    p = add("pieri", "Pieri product S_u * h_m(x_1..x_k) or e_m with --e")
    p.add_argument("--u", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--e", action="store_true", default=False)
    p.set_defaults(func=cmd_pieri)

    p = add("skew", "skew Schubert function in the Schur basis")
    p.add_argument("perm")
    p.set_defaults(func=cmd_skew)

    p = add("monomials", "chain table and Schubert polynomial")
    p.add_argument("perm")
    p.add_argument("--n", type=int, default=None, help="ambient S_n (defaults to the size of perm)")
    p.set_defaults(func=cmd_monomials)

    p = add("stanley", "Stanley symmetric function in the Schur basis")
    p.add_argument("perm")
    p.set_defaults(func=cmd_stanley)

    p = add("poset", "symmetric function of a labelled poset or interval JSON file")
    p.add_argument("file")
    p.set_defaults(func=cmd_poset)

    p = add("theta-trace", "orbits of the sign-reversing involution")
    p.add_argument("--w", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--word", default=None, help="trace one dot-separated word only")
    p.add_argument("--pi", default=None, help="permutation paired with --word (default identity)")
    p.set_defaults(func=cmd_theta_trace)

    p = add("verify", "run a property suite")
    p.add_argument("suite", help=f"one of {', '.join(SUITES)}")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--timing", action="store_true", default=False, help="include wall time")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.suite not in SUITES:
        parser.error(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    try:
        result = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (OSError, json.JSONDecodeError) as exc:
        parser.error(str(exc))
    data, text, code = result if len(result) == 3 else (*result, 0)
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
