"""Reduced words, their tableaux, Stanley coefficients, and the sign-reversing
involution built from a jeu de taquin that keeps words reduced.

A word rho = (rho_1, ..., rho_m) is a reduced word of w when
s_{rho_m} ... s_{rho_1} = w with m = l(w); these are exactly the words of
maximal chains in [1, w] for the left weak order.  Tableaux use Cartesian
conventions: row 1 is at the bottom and the word is read from the top row
down, each row left to right.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _perms
from typing import Iterator, Sequence

from .perm import Permutation
from .poset import descent_set, partial_sums, pi_composition
from .symfunc import Partition, SymFunction, as_partition

__all__ = [
    "word_permutation",
    "is_reduced",
    "reduced_words",
    "segments",
    "descent_composition",
    "format_word",
    "parse_word",
    "WordTableau",
    "word_tableau",
    "tableau_of_word",
    "stanley_coefficient",
    "stanley_function",
    "TwoRowTableau",
    "two_row_tableau",
    "inward_slide",
    "outward_slide",
    "exchange_rows",
    "select_row",
    "select_row_by_counts",
    "theta",
    "theta_row",
    "theta_domain",
]

Word = tuple[int, ...]


# -- reduced words --------------------------------------------------------------


def word_permutation(word: Sequence[int]) -> Permutation:
    """s_{rho_m} ... s_{rho_1}: each letter multiplies on the left."""
    v = Permutation()
    for i in word:
        if i < 1:
            raise ValueError(f"letters must be positive: {tuple(word)}")
        v = v.swap_values(i, i + 1)
    return v


def is_reduced(word: Sequence[int]) -> bool:
    return word_permutation(word).length == len(word)


@lru_cache(maxsize=None)
def _reduced_words(w: Permutation) -> tuple[Word, ...]:
    if w.is_identity():
        return ((),)
    inv = w.inverse()
    out: list[Word] = []
    for i in range(1, w.n):
        if inv(i) > inv(i + 1):
            out.extend(rho + (i,) for rho in _reduced_words(w.swap_values(i, i + 1)))
    return tuple(sorted(out))


def reduced_words(w: Permutation) -> list[Word]:
    return list(_reduced_words(w))


def segments(word: Sequence[int], alpha: Sequence[int]) -> list[Word]:
    if sum(alpha) != len(word) or any(a < 0 for a in alpha):
        raise ValueError(f"{tuple(alpha)} does not split a word of length {len(word)}")
    out, start = [], 0
    for a in alpha:
        out.append(tuple(word[start : start + a]))
        start += a
    return out


def descent_composition(word: Sequence[int]) -> tuple[int, ...]:
    """The composition alpha of len(word) with I(alpha) the descent set plus the end."""
    cuts = sorted(descent_set(word)) + [len(word)]
    out, prev = [], 0
    for c in cuts:
        out.append(c - prev)
        prev = c
    return tuple(out) if word else ()


def format_word(word: Sequence[int], alpha: Sequence[int] | None = None) -> str:
    """Dot-separated blocks, e.g. 5.345.236.1235."""
    if alpha is None:
        alpha = descent_composition(word)
    sep = "" if all(x < 10 for x in word) else ","
    return ".".join(sep.join(map(str, seg)) for seg in segments(word, alpha))


def parse_word(text: str) -> tuple[Word, tuple[int, ...]]:
    """Parse ``5.345.236.1235`` into the flat word and its block lengths."""
    blocks = text.strip().split(".")
    parsed = []
    for b in blocks:
        if "," in b:
            parsed.append(tuple(int(x) for x in b.split(",") if x))
        else:
            parsed.append(tuple(int(c) for c in b))
    word = tuple(x for seg in parsed for x in seg)
    return word, tuple(len(seg) for seg in parsed)


# -- tableaux of words ----------------------------------------------------------


@dataclass(frozen=True)
class WordTableau:
    """Rows listed bottom-up; row i starts after ``offsets[i]`` empty cells."""

    rows: tuple[Word, ...]
    offsets: tuple[int, ...]

    @property
    def outer(self) -> tuple[int, ...]:
        return tuple(o + len(r) for o, r in zip(self.offsets, self.rows))

    def is_partition_shape(self) -> bool:
        return all(o == 0 for o in self.offsets)

    def shape(self) -> tuple[Partition, Partition]:
        return as_partition(self.outer), as_partition(self.offsets)

    def word(self) -> Word:
        return tuple(x for row in reversed(self.rows) for x in row)

    def left_justified(self) -> tuple[Word, ...]:
        return self.rows

    def is_tableau(self) -> bool:
        outer, inner = self.outer, self.offsets
        if any(a < b for a, b in zip(outer, outer[1:])) or any(a < b for a, b in zip(inner, inner[1:])):
            return False
        for row in self.rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                return False
        for j in range(len(self.rows) - 1):
            lower, upper = self._cells(j), self._cells(j + 1)
            if any(col in lower and lower[col] >= v for col, v in upper.items()):
                return False
        return True

    def _cells(self, j: int) -> dict[int, int]:
        return {self.offsets[j] + 1 + s: v for s, v in enumerate(self.rows[j])}

    def __str__(self) -> str:
        width = max((len(str(x)) for r in self.rows for x in r), default=1)
        lines = []
        for off, row in zip(reversed(self.offsets), reversed(self.rows)):
            lines.append(" " * ((width + 1) * off) + " ".join(str(x).rjust(width) for x in row))
        return "\n".join(lines)


def _min_shift(lower: Word, upper: Word) -> int:
    """Least d >= max(0, len(upper) - len(lower)) with lower[s] < upper[s + d] wherever both exist."""
    d = max(0, len(upper) - len(lower))
    while any(lower[s] >= upper[s + d] for s in range(len(lower)) if s + d < len(upper)):
        d += 1
    return d


def word_tableau(alpha: Sequence[int], word: Sequence[int]) -> WordTableau:
    """T(alpha, rho): rows are the alpha-blocks of rho, the last block at the bottom,
    with each row pushed as far left as columns allow."""
    alpha = tuple(alpha)
    allowed = {s for s in partial_sums(alpha)}
    if not descent_set(word) <= allowed:
        raise ValueError(f"descents of {tuple(word)} are not among the partial sums of {alpha}")
    rows = tuple(reversed(segments(word, alpha)))
    for row in rows:
        if any(a >= b for a, b in zip(row, row[1:])):
            raise AssertionError("rows must increase")
    k = len(rows)
    shifts = [_min_shift(rows[j], rows[j + 1]) for j in range(k - 1)]
    offsets = [0] * k
    for j in range(k - 2, -1, -1):
        offsets[j] = offsets[j + 1] + shifts[j]
    return WordTableau(rows, tuple(offsets))


def tableau_of_word(word: Sequence[int]) -> WordTableau:
    """T(rho), cut at the descents of rho."""
    return word_tableau(descent_composition(word), word)


def stanley_coefficient(w: Permutation, lam: Sequence[int]) -> int:
    """Number of reduced words of w whose tableau has partition shape lam."""
    lam = as_partition(lam)
    count = 0
    for rho in reduced_words(w):
        t = tableau_of_word(rho)
        if t.is_partition_shape() and as_partition(t.outer) == lam:
            count += 1
    return count


def stanley_function(w: Permutation) -> SymFunction:
    counts: dict[Partition, int] = {}
    for rho in reduced_words(w):
        t = tableau_of_word(rho)
        if t.is_partition_shape():
            lam = as_partition(t.outer)
            counts[lam] = counts.get(lam, 0) + 1
    return SymFunction("schur", counts)


# -- two-row jeu de taquin ---------------------------------------------------------


@dataclass(frozen=True)
class TwoRowTableau:
    """Shape (y+p, q)/(y, 0): ``top`` in columns 1..q, ``bottom`` in y+1..y+p."""

    y: int
    bottom: Word
    top: Word

    def word(self) -> Word:
        return self.top + self.bottom

    def is_tableau(self) -> bool:
        return WordTableau((self.bottom, self.top), (self.y, 0)).is_tableau()


def two_row_tableau(word: Sequence[int], q: int, p: int) -> TwoRowTableau:
    """The two-row tableau T((q, p), word) with minimal y."""
    t = word_tableau((q, p), word)
    if t.offsets[1] != 0:
        raise AssertionError("top row must start in column 1")
    return TwoRowTableau(t.offsets[0], t.rows[0], t.rows[1])


def inward_slide(t: TwoRowTableau) -> TwoRowTableau:
    """Slide the empty cell at (y, row 1) outwards; one letter moves from the top row down."""
    if t.y == 0:
        raise ValueError("inward slide needs y > 0")
    bot = {t.y + 1 + s: v for s, v in enumerate(t.bottom)}
    top = {1 + s: v for s, v in enumerate(t.top)}
    c, row = t.y, 1
    while row == 1:
        right, above = bot.get(c + 1), top.get(c)
        if right is None and above is None:
            raise AssertionError("the empty cell must change rows; y was not minimal")
        if above is None or (right is not None and right < above):
            bot[c] = right
            c += 1
        elif right is None or above < right:
            bot[c] = above
            row = 2
        else:
            a = above
            J = 0
            while top.get(c + J + 1) == a + J + 1 and bot.get(c + J + 1) == a + J:
                J += 1
            if J == 0:
                raise AssertionError("equal neighbours without the braid configuration")
            for j in range(J + 1):
                bot[c + j] = a + j
            for j in range(J):
                top[c + j] = a + j + 1
            nxt = bot.get(c + J + 1)
            if nxt is not None and nxt <= a + J:
                raise AssertionError("braid block must be followed by a larger entry")
            c += J
            row = 2
    while c + 1 in top:
        top[c] = top[c + 1]
        c += 1
    del top[c]
    new_bottom = tuple(bot[col] for col in range(t.y, t.y + len(t.bottom) + 1))
    new_top = tuple(top[col] for col in range(1, len(t.top)))
    return TwoRowTableau(t.y - 1, new_bottom, new_top)


def outward_slide(t: TwoRowTableau) -> TwoRowTableau:
    """Slide an empty cell from (q+1, row 2) inwards; one letter moves from the bottom row up."""
    q, p = len(t.top), len(t.bottom)
    if t.y + p <= q:
        raise ValueError("outward slide needs y + p > q")
    bot = {t.y + 1 + s: v for s, v in enumerate(t.bottom)}
    top = {1 + s: v for s, v in enumerate(t.top)}
    c, row = q + 1, 2
    while row == 2:
        left, below = top.get(c - 1), bot.get(c)
        if left is None and below is None:
            raise AssertionError("the empty cell reached the start of the top row")
        if below is None or (left is not None and left > below):
            top[c] = left
            c -= 1
        elif left is None or below > left:
            top[c] = below
            row = 1
        else:
            a_top = left
            J = 0
            while top.get(c - J - 1) == a_top - J and bot.get(c - J - 1) == a_top - J - 1:
                J += 1
            if J == 0:
                raise AssertionError("equal neighbours without the braid configuration")
            c0 = c - J
            a = a_top - J
            for j in range(J + 1):
                top[c0 + j] = a + j
            for j in range(1, J + 1):
                bot[c0 + j] = a + j - 1
            c = c0
            row = 1
    while c - 1 in bot:
        bot[c] = bot[c - 1]
        c -= 1
    del bot[c]
    new_top = tuple(top[col] for col in range(1, q + 2))
    new_bottom = tuple(bot[col] for col in range(t.y + 2, t.y + p + 1))
    return TwoRowTableau(t.y + 1, new_bottom, new_top)


def exchange_rows(word: Sequence[int], q: int, p: int, variant: str = "offbyone") -> Word:
    """Move between block lengths (q, p) and (p, q) ("full") or (p+1, q-1) ("offbyone").

    Inward slides when the top block is longer, outward slides otherwise.
    """
    word = tuple(word)
    if len(word) != q + p:
        raise ValueError("block lengths do not match the word")
    t = two_row_tableau(word, q, p)
    if variant == "full":
        target = p
    elif variant == "offbyone":
        target = p + 1
        if t.y == 0:
            raise ValueError("the off-by-one exchange needs a skew tableau")
    else:
        raise ValueError(f"unknown variant {variant!r}")
    while len(t.top) > target:
        t = inward_slide(t)
    while len(t.top) < target:
        t = outward_slide(t)
    if not t.is_tableau():
        raise AssertionError("slides left the tableau condition")
    return t.word()


# -- the involution -------------------------------------------------------------


def select_row(t: WordTableau) -> int:
    """Row choice on the left-justified rows: least column i, then largest r,
    such that row r+1 has an entry a in column i and row r has none or one >= a."""
    rows = t.rows
    k = len(rows)
    width = max((len(r) for r in rows), default=0)
    for i in range(width):
        for r in range(k - 1, 0, -1):
            upper, lower = rows[r], rows[r - 1]
            if i < len(upper) and (i >= len(lower) or lower[i] >= upper[i]):
                return r
    raise ValueError("left-justified rows already form a tableau")


def select_row_by_counts(t: WordTableau) -> int:
    """Same choice from prefix counts f_{a,b} of block indices, letters taken in increasing order."""
    rows = t.rows
    k = len(rows)
    # block a is row k+1-a; ties put the lower block index first
    tagged = sorted((v, k - j) for j, row in enumerate(rows) for v in row)
    counts = [0] * (k + 2)
    best: tuple[int, int] | None = None
    for _, a in tagged:
        counts[a] += 1
        for x in range(1, k):
            if counts[x] > counts[x + 1]:
                cand = (counts[x], x)
                if best is None or cand < best:
                    best = cand
    if best is None:
        raise ValueError("no violation")
    return k - best[1]


def _compose_positions(pi: Sequence[int], i: int) -> tuple[int, ...]:
    out = list(pi)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def theta(pi: Sequence[int], word: Sequence[int], lam: Sequence[int]) -> tuple[tuple[int, ...], Word]:
    """The sign-reversing involution on pairs (pi, rho), rho in H_{lambda_pi}(w).

    ``pi`` is in one-line notation on 1..k with k = len(lam).
    """
    lam = as_partition(lam)
    pi = tuple(pi)
    word = tuple(word)
    k = len(pi)
    if k != len(lam):
        raise ValueError("pi must lie in S_k with k the number of parts of lambda")
    alpha = pi_composition(lam, pi)
    if any(a < 0 for a in alpha):
        raise ValueError(f"lambda_pi = {alpha} has a negative part")
    t = word_tableau(alpha, word)
    if t.is_partition_shape():
        if pi != tuple(range(1, k + 1)):
            raise AssertionError("partition shape forces pi to be the identity")
        return pi, word
    r = select_row(t)
    if select_row_by_counts(t) != r:
        raise AssertionError("the two row selectors disagree")
    j = k - r  # block index of row r+1
    blocks = segments(word, alpha)
    q, p = len(blocks[j - 1]), len(blocks[j])
    swapped = exchange_rows(blocks[j - 1] + blocks[j], q, p, "offbyone")
    blocks[j - 1], blocks[j] = swapped[: p + 1], swapped[p + 1 :]
    new_pi = _compose_positions(pi, j)
    new_word = tuple(x for b in blocks for x in b)
    if pi_composition(lam, new_pi) != tuple(len(b) for b in blocks):
        raise AssertionError("block lengths do not match lambda_pi'")
    return new_pi, new_word


def theta_row(pi: Sequence[int], word: Sequence[int], lam: Sequence[int]) -> int | None:
    """The row r chosen by :func:`theta`, or None at a fixed point."""
    t = word_tableau(pi_composition(as_partition(lam), tuple(pi)), tuple(word))
    return None if t.is_partition_shape() else select_row(t)


def theta_domain(w: Permutation, lam: Sequence[int]) -> Iterator[tuple[tuple[int, ...], Word]]:
    """All (pi, rho) with rho in H_{lambda_pi}(w)."""
    lam = as_partition(lam)
    k = len(lam)
    words = reduced_words(w)
    for pi in _perms(range(1, k + 1)):
        alpha = pi_composition(lam, pi)
        if any(a < 0 for a in alpha):
            continue
        allowed = set(partial_sums(alpha))
        for rho in words:
            if descent_set(rho) <= allowed:
                yield tuple(pi), rho

