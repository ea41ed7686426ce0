"""Partitions, words over a bounded alphabet, row insertion, and hook counts.

Everything in this module is exact integer or rational arithmetic.  The
quantities computed here (hook products, standard tableau counts, principal
Schur evaluations, insertion shapes) feed the measure layer, so each of the
main formulas is cross-checked internally against a second route.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left, bisect_right
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import BruteForceBoundError, CellOutOfShapeError, ParameterOrderError

#: Largest word length for which the exhaustive subsequence search runs.
I_K_BRUTE_FORCE_BOUND = 12


class Partition:
    """An integer partition: a weakly decreasing tuple of positive parts."""

    __slots__ = ("_parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p <= 0:
                raise ValueError(f"parts must be positive integers, got {parts}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        self._parts = parts

    @property
    def parts(self):
        return self._parts

    @property
    def weight(self):
        """Number of cells, the sum of the parts."""
        return sum(self._parts)

    @property
    def num_rows(self):
        return len(self._parts)

    def part(self, i):
        """The i-th part, 1-based, zero beyond the last row."""
        if i < 1:
            raise ValueError(f"row index is 1-based, got {i}")
        return self._parts[i - 1] if i <= len(self._parts) else 0

    def conjugate(self):
        """Transpose of the diagram."""
        if not self._parts:
            return Partition()
        cols = [0] * self._parts[0]
        for p in self._parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def cells(self):
        """All (row, column) cells, 1-based, row by row."""
        for i, p in enumerate(self._parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def contains(self, other):
        """Whether the diagram of ``other`` fits inside this one."""
        other = other if isinstance(other, Partition) else Partition(other)
        return all(self.part(i) >= op for i, op in enumerate(other.parts, start=1))

    def contains_cell(self, i, j):
        return 1 <= i and 1 <= j <= self.part(i)

    def __iter__(self):
        return iter(self._parts)

    def __len__(self):
        return len(self._parts)

    def __getitem__(self, idx):
        return self._parts[idx]

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self._parts == other._parts
        if isinstance(other, tuple):
            return self._parts == other
        return NotImplemented

    def __hash__(self):
        return hash(self._parts)

    def __repr__(self):
        return f"Partition({self._parts!r})"


def _as_partition(lam):
    return lam if isinstance(lam, Partition) else Partition(lam)


def conjugate(lam):
    return _as_partition(lam).conjugate()


def hook_length(lam, i, j):
    """Arm plus leg plus one at cell (i, j), 1-based."""
    lam = _as_partition(lam)
    if not lam.contains_cell(i, j):
        raise CellOutOfShapeError(f"cell ({i}, {j}) is outside {lam!r}")
    conj = lam.conjugate()
    return lam.part(i) + conj.part(j) - i - j + 1


@lru_cache(maxsize=4096)
def hook_product(lam):
    """Product of all hook lengths of the shape."""
    lam = _as_partition(lam)
    conj = lam.conjugate()
    out = 1
    for i, p in enumerate(lam.parts, start=1):
        for j in range(1, p + 1):
            out *= p + conj.part(j) - i - j + 1
    return out


def count_standard(lam):
    """Number of standard fillings of the shape.

    Computed as weight! over the hook product, then re-derived from the
    Vandermonde form weight! * prod_{i<j}(x_i - x_j) / prod_i x_i! with
    x_i = part_i + rows - i.  The two must agree exactly.
    """
    lam = _as_partition(lam)
    w = lam.weight
    count, rem = divmod(factorial(w), hook_product(lam))
    if rem:
        raise ArithmeticError(f"hook product does not divide {w}! for {lam!r}")

    r = lam.num_rows
    xs = [lam.part(i) + r - i for i in range(1, r + 1)]
    vander = 1
    for a in range(r):
        for b in range(a + 1, r):
            vander *= xs[a] - xs[b]
    alt = factorial(w) * vander
    for x in xs:
        alt, rem = divmod(alt, factorial(x))
        if rem:
            raise ArithmeticError(f"factorial division failed for {lam!r}")
    if alt != count:
        raise ArithmeticError(
            f"standard count mismatch for {lam!r}: hooks give {count}, "
            f"determinant form gives {alt}"
        )
    return count


def rising_factorial(x, m):
    """x (x+1) ... (x+m-1); exact for int or Fraction input."""
    out = x - x + 1 if isinstance(x, Fraction) else 1
    for t in range(m):
        out *= x + t
    return out


def pochhammer_symbol(x, lam):
    """Partition-indexed rising factorial: prod_i (x + 1 - i)_{part_i}."""
    lam = _as_partition(lam)
    out = 1
    for i, p in enumerate(lam.parts, start=1):
        out *= rising_factorial(x + 1 - i, p)
    return out


def schur_at_ones(lam, q):
    """Schur polynomial of the shape at q variables all equal to one.

    Three equivalent evaluations are computed and compared: the content
    over hook product, the partition rising factorial over the hook
    product, and the Vandermonde determinant form.  Returns an integer,
    zero when the shape has more than q rows.
    """
    lam = _as_partition(lam)
    if q < 1:
        raise ValueError(f"need at least one variable, got q={q}")
    if lam.num_rows > q:
        return 0
    if not lam.parts:
        return 1

    h = hook_product(lam)
    content = 1
    for i, j in lam.cells():
        content *= j - i + q
    value, rem = divmod(content, h)
    if rem:
        raise ArithmeticError(f"content product not divisible by hooks for {lam!r}")

    alt = Fraction(pochhammer_symbol(q, lam), h)
    xs = [q + lam.part(i) - i for i in range(1, q + 1)]
    vander = 1
    for a in range(q):
        for b in range(a + 1, q):
            vander *= xs[a] - xs[b]
    denom = 1
    for i in range(1, q):
        denom *= factorial(i)
    det_form = Fraction(vander, denom)
    if not (value == alt == det_form):
        raise ArithmeticError(
            f"principal evaluation mismatch for {lam!r} at q={q}: "
            f"{value} / {alt} / {det_form}"
        )
    return value


def rsk_shape(word):
    """Shape of the row-insertion tableau of the word."""
    rows = []
    for letter in word:
        if letter < 1:
            raise ValueError(f"letters must be positive integers, got {letter}")
        x = letter
        for row in rows:
            k = bisect_right(row, x)
            if k == len(row):
                row.append(x)
                x = None
                break
            x, row[k] = row[k], x
        if x is not None:
            rows.append([x])
    return Partition(len(row) for row in rows)


def d1(word):
    """Length of the longest strictly decreasing subsequence.

    Patience sorting on the reversed word: a strictly decreasing
    subsequence read backwards is strictly increasing.
    """
    tails = []
    for v in reversed(tuple(word)):
        k = bisect_left(tails, v)
        if k == len(tails):
            tails.append(v)
        else:
            tails[k] = v
    return len(tails)


def _largest_cover(word, k):
    """Largest subset of positions coverable by k weakly increasing runs.

    A subset works iff its longest strictly decreasing subsequence has at
    most k terms, so subsets are scanned by decreasing size with that test.
    """
    n = len(word)
    if d1(word) <= k:
        return n
    for size in range(n - 1, 0, -1):
        for keep in itertools.combinations(range(n), size):
            if d1([word[i] for i in keep]) <= k:
                return size
    return 0


def i_k(word, k, method="auto", brute_force_bound=I_K_BRUTE_FORCE_BOUND):
    """Maximum total length of k disjoint weakly increasing subsequences.

    ``method`` picks the route: "exhaustive" searches subsets directly,
    "rsk" sums the first k rows of the insertion shape, and "auto" uses
    the exhaustive route up to ``brute_force_bound`` letters.
    """
    word = tuple(word)
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if k == 0:
        return 0
    if method == "auto":
        method = "exhaustive" if len(word) <= brute_force_bound else "rsk"
    if method == "rsk":
        return sum(rsk_shape(word).parts[:k])
    if method != "exhaustive":
        raise ValueError(f"unknown method {method!r}")
    if len(word) > brute_force_bound:
        raise BruteForceBoundError(
            f"exhaustive search limited to {brute_force_bound} letters, "
            f"got {len(word)}"
        )
    return _largest_cover(word, k)


def strip_hook_product(lam, n, p, q):
    """Product of hook lengths over the cells in columns n-q+1 .. n-p.

    Only cells of the shape itself contribute; the product over an empty
    set of cells is one.  Requires n >= q >= p >= 1.
    """
    if not (n >= q >= p >= 1):
        raise ParameterOrderError(f"need n >= q >= p >= 1, got n={n}, q={q}, p={p}")
    lam = _as_partition(lam)
    conj = lam.conjugate()
    lo = max(n - q + 1, 1)
    hi = n - p
    out = 1
    for i, part in enumerate(lam.parts, start=1):
        for j in range(lo, min(hi, part) + 1):
            out *= part + conj.part(j) - i - j + 1
    return out


def enumerate_partitions(weight, max_rows, min_part=None):
    """Yield partitions of the given weight with at most max_rows rows.

    Parts are bounded below by ``min_part`` when given.  Output order is
    lexicographically decreasing.
    """
    if weight < 0:
        raise ValueError(f"weight must be nonnegative, got {weight}")
    if weight == 0:
        yield Partition()
        return
    lo = 1 if min_part is None else max(1, min_part)

    def rec(remaining, rows_left, cap):
        if remaining == 0:
            yield ()
            return
        if rows_left == 0 or remaining < lo:
            return
        for first in range(min(cap, remaining), lo - 1, -1):
            if remaining - first > (rows_left - 1) * first:
                continue
            for rest in rec(remaining - first, rows_left - 1, first):
                yield (first,) + rest

    for parts in rec(weight, max_rows, weight):
        yield Partition(parts)


def iter_words(p, length):
    """All words of the given length over the alphabet {1, ..., p}."""
    if p < 1:
        raise ValueError(f"alphabet size must be positive, got {p}")
    if length < 0:
        raise ValueError(f"length must be nonnegative, got {length}")
    return itertools.product(range(1, p + 1), repeat=length)
