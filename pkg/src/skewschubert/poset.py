"""Graded posets with integer-labelled covers and their symmetric functions.

A maximal chain reads off a word of edge labels.  Counting chains by the
descent set of that word gives the numbers #H_alpha(P); for symmetric posets
these assemble into a Schur expansion S_P.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from functools import cached_property
from itertools import permutations as _iter_permutations
from typing import Any, Callable, Hashable, Iterable, Mapping, Sequence

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from .symfunc import Partition, SymFunction, as_partition, partitions

__all__ = [
    "LabeledPoset",
    "chain_poset",
    "descent_set",
    "partial_sums",
    "h_count",
    "h_count_endpoint_form",
    "is_symmetric",
    "pi_composition",
    "sign",
    "skew_coefficient",
    "poset_symfunc",
    "poset_product",
    "sort_chain",
    "unsort_chain",
    "merge_blocks",
    "is_isomorphic",
    "maximal_chains",
]

Node = Hashable
Edge = tuple[Any, Any, int]


def _key(node: Node) -> tuple:
    return (str(node),)


class LabeledPoset:
    """A graded interval [bottom, top] given by its labelled Hasse diagram."""

    def __init__(
        self,
        ranks: Mapping[Node, int],
        edges: Iterable[Edge],
        bottom: Node,
        top: Node,
    ):
        self.rank: dict[Node, int] = dict(ranks)
        self.bottom = bottom
        self.top = top
        up: dict[Node, list[tuple[Node, int]]] = defaultdict(list)
        down: dict[Node, list[tuple[Node, int]]] = defaultdict(list)
        clean: list[Edge] = []
        for lo, hi, lab in edges:
            if lo not in self.rank or hi not in self.rank:
                raise ValueError(f"edge ({lo}, {hi}) uses an unknown node")
            if self.rank[hi] != self.rank[lo] + 1:
                raise ValueError(f"edge ({lo}, {hi}) does not raise rank by one")
            clean.append((lo, hi, int(lab)))
            up[lo].append((hi, int(lab)))
            down[hi].append((lo, int(lab)))
        for adj in (up, down):
            for v in adj.values():
                v.sort(key=lambda t: (t[1], _key(t[0])))
        self.edges: list[Edge] = sorted(clean, key=lambda e: (self.rank[e[0]], e[2], _key(e[0]), _key(e[1])))
        self.up = dict(up)
        self.down = dict(down)
        self._check_graded()

    def _check_graded(self) -> None:
        if self.bottom not in self.rank or self.top not in self.rank:
            raise ValueError("bottom and top must be nodes")
        if self.rank[self.bottom] != 0:
            raise ValueError("bottom must have rank 0")
        reach_up = self._reach(self.bottom, self.up)
        reach_down = self._reach(self.top, self.down)
        for v in self.rank:
            if v not in reach_up or v not in reach_down:
                raise ValueError(f"node {v} is not on a bottom-to-top chain")

    @staticmethod
    def _reach(start: Node, adj: Mapping[Node, list]) -> set:
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w, _ in adj.get(v, ()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    # -- basic data ---------------------------------------------------------

    @property
    def nodes(self) -> list[Node]:
        return sorted(self.rank, key=lambda v: (self.rank[v], _key(v)))

    @property
    def height(self) -> int:
        """Rank m of the top element."""
        return self.rank[self.top]

    def __len__(self) -> int:
        return len(self.rank)

    def labels(self) -> set[int]:
        return {lab for _, _, lab in self.edges}

    def covers(self, node: Node) -> list[tuple[Node, int]]:
        return list(self.up.get(node, ()))

    def __repr__(self) -> str:
        return f"LabeledPoset(nodes={len(self.rank)}, edges={len(self.edges)}, rank={self.height})"

    # -- chains -------------------------------------------------------------

    def chain_paths(self) -> list[tuple[Node, ...]]:
        """All maximal chains as node sequences, ordered by their words."""
        out: list[tuple[tuple[int, ...], tuple[Node, ...]]] = []

        def rec(v: Node, path: list[Node], word: list[int]) -> None:
            if v == self.top:
                out.append((tuple(word), tuple(path)))
                return
            for w, lab in self.up.get(v, ()):
                path.append(w)
                word.append(lab)
                rec(w, path, word)
                path.pop()
                word.pop()

        rec(self.bottom, [self.bottom], [])
        out.sort(key=lambda t: (t[0], [_key(v) for v in t[1]]))
        return [p for _, p in out]

    def word(self, path: Sequence[Node]) -> tuple[int, ...]:
        labs = []
        for a, b in zip(path, path[1:]):
            for w, lab in self.up.get(a, ()):
                if w == b:
                    labs.append(lab)
                    break
            else:
                raise ValueError(f"{a} -> {b} is not a cover")
        return tuple(labs)

    def maximal_chains(self) -> list[tuple[int, ...]]:
        return sorted(self.word(p) for p in self.chain_paths())

    @cached_property
    def descent_distribution(self) -> dict[int, int]:
        """Number of maximal chains per descent set, descent sets as bitmasks.

        Bit j-1 is set when the word has a descent at position j < m.
        """
        layer: dict[tuple[Node, int | None], Counter] = {(self.bottom, None): Counter({0: 1})}
        for pos in range(self.height):
            nxt: dict[tuple[Node, int | None], Counter] = defaultdict(Counter)
            for (v, last), masks in layer.items():
                for w, lab in self.up.get(v, ()):
                    bit = (1 << (pos - 1)) if last is not None and last > lab else 0
                    target = nxt[(w, lab)]
                    for mask, c in masks.items():
                        target[mask | bit] += c
            layer = nxt
        total: Counter = Counter()
        for (v, _), masks in layer.items():
            if v == self.top:
                total.update(masks)
        return dict(total)

    @cached_property
    def _subset_sums(self) -> list[int]:
        bits = max(self.height - 1, 0)
        table = [0] * (1 << bits)
        for mask, c in self.descent_distribution.items():
            table[mask] += c
        for b in range(bits):
            step = 1 << b
            for mask in range(1 << bits):
                if mask & step:
                    table[mask] += table[mask ^ step]
        return table

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "nodes": [{"id": _node_text(v), "rank": self.rank[v]} for v in self.nodes],
            "edges": [[_node_text(a), _node_text(b), lab] for a, b, lab in self.edges],
            "bottom": _node_text(self.bottom),
            "top": _node_text(self.top),
        }

    @classmethod
    def from_json(cls, data: Mapping | str) -> LabeledPoset:
        if isinstance(data, str):
            data = json.loads(data)
        ranks = {str(n["id"]): int(n["rank"]) for n in data["nodes"]}
        edges = [(str(a), str(b), int(lab)) for a, b, lab in data["edges"]]
        return cls(ranks, edges, str(data["bottom"]), str(data["top"]))

    def relabel_nodes(self, f: Callable[[Node], Node]) -> LabeledPoset:
        return LabeledPoset(
            {f(v): r for v, r in self.rank.items()},
            [(f(a), f(b), lab) for a, b, lab in self.edges],
            f(self.bottom),
            f(self.top),
        )

    def relabel_labels(self, f: Callable[[int], int]) -> LabeledPoset:
        return LabeledPoset(self.rank, [(a, b, f(lab)) for a, b, lab in self.edges], self.bottom, self.top)


def _node_text(v: Node) -> str:
    if isinstance(v, tuple):
        return "(" + ",".join(_node_text(x) for x in v) + ")"
    to_text = getattr(v, "to_text", None)
    if to_text is not None:
        return to_text() or "1"
    return str(v)


def chain_poset(labels: Sequence[int]) -> LabeledPoset:
    """A chain 0 < 1 < ... < m whose i-th cover carries labels[i]."""
    m = len(labels)
    return LabeledPoset({i: i for i in range(m + 1)}, [(i, i + 1, labels[i]) for i in range(m)], 0, m)


def maximal_chains(P: LabeledPoset) -> list[tuple[int, ...]]:
    return P.maximal_chains()


# -- descent statistics ------------------------------------------------------


def descent_set(word: Sequence[int]) -> frozenset[int]:
    """Positions j < len(word) with word[j] > word[j+1] (1-based)."""
    return frozenset(j for j in range(1, len(word)) if word[j - 1] > word[j])


def partial_sums(alpha: Sequence[int]) -> list[int]:
    out, s = [], 0
    for a in alpha:
        s += a
        out.append(s)
    return out


def h_count(P: LabeledPoset, alpha: Sequence[int]) -> int:
    """#H_alpha(P): chains whose word has all descents among the partial sums of alpha."""
    if any(a < 0 for a in alpha):
        return 0
    m = P.height
    if sum(alpha) != m:
        return 0
    mask = 0
    for s in partial_sums(alpha):
        if 0 < s < m:
            mask |= 1 << (s - 1)
    return P._subset_sums[mask] if m > 0 else 1


def h_count_endpoint_form(P: LabeledPoset, alpha: Sequence[int]) -> int:
    """Brute-force count using I(alpha) = {alpha_1, alpha_1+alpha_2, ..., m - alpha_k}."""
    if any(a < 0 for a in alpha):
        return 0
    m = P.height
    if sum(alpha) != m:
        return 0
    allowed = set(partial_sums(alpha)[:-1]) if alpha else set()
    return sum(1 for w in P.maximal_chains() if descent_set(w) <= allowed)


def is_symmetric(P: LabeledPoset) -> bool:
    """True iff #H_alpha(P) depends only on the multiset of parts of alpha."""
    for lam in partitions(P.height):
        values = {h_count(P, alpha) for alpha in set(_iter_permutations(lam))}
        if len(values) > 1:
            return False
    return True


# -- Schur coefficients -----------------------------------------------------


def sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given in one-line notation (0- or 1-based)."""
    p = list(perm)
    s = 1
    seen = [False] * len(p)
    base = min(p) if p else 0
    for i in range(len(p)):
        if seen[i]:
            continue
        j, cyc = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j] - base
            cyc += 1
        if cyc % 2 == 0:
            s = -s
    return s


def pi_composition(lam: Sequence[int], pi: Sequence[int]) -> tuple[int, ...]:
    """lambda_pi: part i is pi(i) - i + lambda_{k+1-pi(i)}, with k = len(pi)."""
    k = len(pi)
    parts = list(lam) + [0] * (k + 1 - len(lam))
    return tuple(pi[i - 1] - i + parts[k - pi[i - 1]] for i in range(1, k + 1))


def _signed_compositions(lam: Partition):
    """(sign, lambda_pi) over pi in S_k, skipping pi that give a negative part."""
    k = len(lam)
    parts = list(lam) + [0]

    def rec(i: int, used: int, acc: list[int], perm: list[int]):
        if i > k:
            yield sign(perm), tuple(acc)
            return
        for v in range(1, k + 1):
            if used >> v & 1:
                continue
            part = v - i + parts[k - v]
            if part < 0:
                continue
            acc.append(part)
            perm.append(v)
            yield from rec(i + 1, used | 1 << v, acc, perm)
            acc.pop()
            perm.pop()

    yield from rec(1, 0, [], [])


def skew_coefficient(P: LabeledPoset, lam: Sequence[int]) -> int:
    """c^P_lambda as the alternating sum of #H_{lambda_pi}(P) over pi in S_k."""
    lam = as_partition(lam)
    if sum(lam) != P.height:
        raise ValueError(f"{lam} is not a partition of the rank {P.height}")
    return sum(s * h_count(P, alpha) for s, alpha in _signed_compositions(lam))


def poset_symfunc(P: LabeledPoset) -> SymFunction:
    """S_P = sum over lambda of c^P_lambda s_lambda."""
    if not is_symmetric(P):
        raise ValueError("poset is not symmetric")
    return SymFunction("schur", {lam: skew_coefficient(P, lam) for lam in partitions(P.height)})


# -- products ---------------------------------------------------------------


def poset_product(P: LabeledPoset, Q: LabeledPoset) -> LabeledPoset:
    """Cartesian product; covers move in one factor and keep that factor's label."""
    ranks = {(p, q): P.rank[p] + Q.rank[q] for p in P.rank for q in Q.rank}
    edges: list[Edge] = []
    for a, b, lab in P.edges:
        edges.extend(((a, q), (b, q), lab) for q in Q.rank)
    for a, b, lab in Q.edges:
        edges.extend(((p, a), (p, b), lab) for p in P.rank)
    return LabeledPoset(ranks, edges, (P.bottom, Q.bottom), (P.top, Q.top))


def sort_chain(path: Sequence[tuple[Node, Node]]) -> tuple[tuple, tuple, frozenset[int]]:
    """Split a chain of P x Q into its P-chain, Q-chain and the positions B of P-steps."""
    chain_p = [path[0][0]]
    chain_q = [path[0][1]]
    positions = []
    for step, ((p0, q0), (p1, q1)) in enumerate(zip(path, path[1:]), 1):
        if p0 != p1:
            if q0 != q1:
                raise ValueError("not a chain of covers in a product")
            chain_p.append(p1)
            positions.append(step)
        else:
            chain_q.append(q1)
    return tuple(chain_p), tuple(chain_q), frozenset(positions)


def unsort_chain(chain_p: Sequence[Node], chain_q: Sequence[Node], positions: Iterable[int]) -> tuple:
    """Inverse of :func:`sort_chain`."""
    positions = set(positions)
    n = len(chain_p) - 1 + len(chain_q) - 1
    i = j = 0
    path = [(chain_p[0], chain_q[0])]
    for step in range(1, n + 1):
        if step in positions:
            i += 1
        else:
            j += 1
        path.append((chain_p[i], chain_q[j]))
    if i != len(chain_p) - 1 or j != len(chain_q) - 1:
        raise ValueError("positions do not match the chain lengths")
    return tuple(path)


def merge_blocks(
    word_p: Sequence[int], word_q: Sequence[int], beta: Sequence[int], gamma: Sequence[int]
) -> frozenset[int]:
    """Positions of P-steps for the chain in H_{beta+gamma}(P x Q) over given chains.

    Within block i the beta_i labels from P and the gamma_i labels from Q are
    merged into increasing order; labels must be distinct.
    """
    if len(beta) != len(gamma):
        raise ValueError("beta and gamma must have the same length")
    positions: set[int] = set()
    ip = iq = 0
    offset = 0
    for b, g in zip(beta, gamma):
        block = [(lab, 0) for lab in word_p[ip : ip + b]] + [(lab, 1) for lab in word_q[iq : iq + g]]
        if len({lab for lab, _ in block}) != len(block):
            raise ValueError("labels of the two factors must be disjoint")
        block.sort()
        positions |= {offset + t for t, (_, side) in enumerate(block, 1) if side == 0}
        ip, iq, offset = ip + b, iq + g, offset + b + g
    if ip != len(word_p) or iq != len(word_q):
        raise ValueError("compositions do not match the chain lengths")
    return frozenset(positions)


# -- isomorphism ------------------------------------------------------------


def _label_graph(P: LabeledPoset) -> nx.DiGraph:
    order = {lab: i for i, lab in enumerate(sorted(P.labels()))}
    g = nx.DiGraph()
    for v in P.rank:
        g.add_node(v, role=(v == P.bottom, v == P.top))
    for a, b, lab in P.edges:
        g.add_edge(a, b, label=order[lab])
    return g


def is_isomorphic(P: LabeledPoset, Q: LabeledPoset, mapping: Mapping[Node, Node] | None = None) -> bool:
    """Isomorphism of labelled posets up to an order-preserving relabelling of labels.

    With ``mapping`` given, checks that this particular node bijection works.
    """
    if len(P) != len(Q) or len(P.edges) != len(Q.edges) or P.height != Q.height:
        return False
    gp, gq = _label_graph(P), _label_graph(Q)
    if mapping is not None:
        if set(mapping) != set(P.rank) or set(mapping.values()) != set(Q.rank):
            return False
        for a, b, data in gp.edges(data=True):
            fa, fb = mapping[a], mapping[b]
            if not gq.has_edge(fa, fb) or gq.edges[fa, fb]["label"] != data["label"]:
                return False
        return mapping[P.bottom] == Q.bottom and mapping[P.top] == Q.top
    matcher = DiGraphMatcher(
        gp,
        gq,
        node_match=lambda x, y: x["role"] == y["role"],
        edge_match=lambda x, y: x["label"] == y["label"],
    )
    return matcher.is_isomorphic()
