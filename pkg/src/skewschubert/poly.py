"""Sparse multivariate polynomials with integer coefficients.

Terms are stored as ``{exponent tuple: coefficient}``; exponent tuples have
trailing zeros stripped so that ``x1`` is ``(1,)`` regardless of how many
variables are in play.  Variables are numbered from 1 in the public API.
"""

from __future__ import annotations

import re
from typing import Callable, Iterable, Mapping

__all__ = ["Poly", "parse_poly"]

Exp = tuple[int, ...]


def _trim(e: Iterable[int]) -> Exp:
    e = list(e)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def _add_exp(a: Exp, b: Exp) -> Exp:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return tuple(out)


class Poly:
    """An element of Z[x1, x2, ...]; treat as immutable."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Iterable[int], int] | None = None):
        clean: dict[Exp, int] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    key = _trim(e)
                    v = clean.get(key, 0) + c
                    if v:
                        clean[key] = v
                    else:
                        clean.pop(key, None)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exp, int]) -> Poly:
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> Poly:
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, i: int, power: int = 1) -> Poly:
        if i < 1:
            raise ValueError("variables are numbered from 1")
        return cls._raw({_trim((0,) * (i - 1) + (power,)): 1})

    @classmethod
    def monomial(cls, exp: Iterable[int], coeff: int = 1) -> Poly:
        return cls({tuple(exp): coeff})

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            other = Poly.const(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other: int) -> Poly:
        return Poly.const(other) - self

    def __mul__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            if other == 0:
                return Poly()
            return Poly._raw({e: c * other for e, c in self.terms.items()})
        out: dict[Exp, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exp(e1, e2)
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    # -- inspection ---------------------------------------------------------

    def coeff(self, exp: Iterable[int]) -> int:
        return self.terms.get(_trim(exp), 0)

    @property
    def nvars(self) -> int:
        """Index of the last variable that occurs."""
        return max((len(e) for e in self.terms), default=0)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous_part(self, d: int) -> Poly:
        return Poly._raw({e: c for e, c in self.terms.items() if sum(e) == d})

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def items(self):
        return self.terms.items()

    def sorted_terms(self) -> list[tuple[Exp, int]]:
        n = self.nvars
        return sorted(self.terms.items(), key=lambda t: t[0] + (0,) * (n - len(t[0])), reverse=True)

    # -- operators ----------------------------------------------------------

    def map_exponents(self, f: Callable[[Exp], Exp | None]) -> Poly:
        """Apply a substitution given on exponent vectors; ``None`` drops a term."""
        out: dict[Exp, int] = {}
        for e, c in self.terms.items():
            e2 = f(e)
            if e2 is None:
                continue
            e2 = _trim(e2)
            v = out.get(e2, 0) + c
            if v:
                out[e2] = v
            else:
                out.pop(e2, None)
        return Poly._raw(out)

    def swap(self, i: int) -> Poly:
        """s_i: exchange x_i and x_{i+1}."""

        def f(e: Exp) -> Exp:
            e = list(e) + [0] * max(0, i + 1 - len(e))
            e[i - 1], e[i] = e[i], e[i - 1]
            return tuple(e)

        return self.map_exponents(f)

    def divided_difference(self, i: int) -> Poly:
        """(f - s_i f) / (x_i - x_{i+1}), computed termwise without division."""
        out: dict[Exp, int] = {}
        for e, c in self.terms.items():
            e = list(e) + [0] * max(0, i + 1 - len(e))
            a, b = e[i - 1], e[i]
            if a == b:
                continue
            sign = 1
            if a < b:
                a, b, sign = b, a, -1
            # x^a y^b - x^b y^a = (x - y) * sum_t x^(a-1-t) y^(b+t)
            for t in range(a - b):
                e2 = list(e)
                e2[i - 1], e2[i] = a - 1 - t, b + t
                key = _trim(e2)
                v = out.get(key, 0) + sign * c
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return Poly._raw(out)

    def __str__(self) -> str:
        return self.format()

    def format(self, names: Callable[[int], str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or (lambda i: f"x{i}")
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                names(i) + (f"^{p}" if p > 1 else "") for i, p in enumerate(e, 1) if p
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        s = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self) -> str:
        return f"Poly({self.format()!r})"


_TERM_RE = re.compile(r"([+-]?)\s*([^+-]+)")


def parse_poly(text: str) -> Poly:
    """Parse sums of terms like ``3*x1^2*x2 - x3 + 2``."""
    s = text.replace(" ", "")
    if not s:
        return Poly()
    out = Poly()
    for sign, body in _TERM_RE.findall(s):
        coeff = -1 if sign == "-" else 1
        term = Poly.const(1)
        for factor in body.split("*"):
            if not factor:
                raise ValueError(f"bad term {body!r}")
            m = re.fullmatch(r"x(\d+)(?:\^(\d+))?", factor)
            if m:
                term = term * Poly.var(int(m.group(1)), int(m.group(2) or 1))
            elif factor.isdigit():
                coeff *= int(factor)
            else:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
        out = out + term * coeff
    return out
