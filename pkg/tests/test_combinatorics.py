"""Exact combinatorics against brute-force oracles.

The oracles at the top count tableaux and subsequence covers by direct
enumeration, with no hook products or insertion anywhere in them, so a
bug in the fast routes cannot hide in the checks.
"""

import itertools
from collections import Counter
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from hooktau.combinatorics import (
    I_K_BRUTE_FORCE_BOUND,
    Partition,
    conjugate,
    count_standard,
    d1,
    enumerate_partitions,
    hook_length,
    hook_product,
    i_k,
    iter_words,
    pochhammer_symbol,
    rising_factorial,
    rsk_shape,
    schur_at_ones,
    strip_hook_product,
)
from hooktau.errors import (
    BruteForceBoundError,
    CellOutOfShapeError,
    ParameterOrderError,
)


# -- oracles ------------------------------------------------------------------


def standard_count_by_peeling(parts):
    """Count standard fillings by removing outer corners recursively."""
    memo = {}

    def walk(shape):
        if not shape:
            return 1
        hit = memo.get(shape)
        if hit is not None:
            return hit
        total = 0
        for i in range(len(shape)):
            if i + 1 < len(shape) and shape[i] == shape[i + 1]:
                continue
            smaller = list(shape)
            smaller[i] -= 1
            while smaller and smaller[-1] == 0:
                smaller.pop()
            total += walk(tuple(smaller))
        memo[shape] = total
        return total

    return walk(tuple(parts))


def semistandard_count_brute(parts, q):
    """Count weakly-row / strictly-column fillings with entries 1..q."""
    cells = []
    for i, row in enumerate(parts):
        for j in range(row):
            cells.append((i, j))
    count = 0
    for combo in itertools.product(range(1, q + 1), repeat=len(cells)):
        grid = {}
        for cell, val in zip(cells, combo):
            grid[cell] = val
        ok = True
        for (i, j), val in grid.items():
            if (i, j + 1) in grid and grid[(i, j + 1)] < val:
                ok = False
                break
            if (i + 1, j) in grid and grid[(i + 1, j)] <= val:
                ok = False
                break
        count += ok
    return count


def longest_weak_run(word):
    """Longest weakly increasing subsequence, by trying every subset."""
    best = 0
    for size in range(len(word), best, -1):
        for combo in itertools.combinations(word, size):
            if all(a <= b for a, b in zip(combo, combo[1:])):
                return size
    return 0


def longest_strict_drop(word):
    best = 0
    for size in range(len(word), 0, -1):
        for combo in itertools.combinations(word, size):
            if all(a > b for a, b in zip(combo, combo[1:])):
                return size
    return 0


def cover_weight_exhaustive(word, k):
    """Heaviest subsequence splittable into k weakly increasing runs."""
    n = len(word)
    best = 0
    for mask in range(1 << n):
        letters = [word[i] for i in range(n) if mask >> i & 1]
        if len(letters) <= best:
            continue
        if longest_strict_drop(letters) <= k:
            best = len(letters)
    return best


def partitions_brute(weight, max_rows):
    out = []

    def rec(rem, most, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        if len(acc) == max_rows:
            return
        for part in range(min(rem, most), 0, -1):
            acc.append(part)
            rec(rem - part, part, acc)
            acc.pop()

    rec(weight, weight, [])
    return out


@st.composite
def partition_strategy(draw, max_n=12):
    n = draw(st.integers(min_value=1, max_value=max_n))
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(0, k - 1), min_size=n, max_size=n))
    parts = sorted(Counter(bins).values(), reverse=True)
    return tuple(parts)


@st.composite
def word_strategy(draw, max_p=4, max_len=9):
    p = draw(st.integers(min_value=1, max_value=max_p))
    length = draw(st.integers(min_value=0, max_value=max_len))
    return tuple(
        draw(st.lists(st.integers(1, p), min_size=length, max_size=length))
    ), p


# -- partitions as objects ----------------------------------------------------


def test_partition_validates_order():
    with pytest.raises(ValueError):
        Partition((2, 3))
    with pytest.raises(ValueError):
        Partition((3, 0))
    with pytest.raises(ValueError):
        Partition((3, -1))


def test_partition_basic_fields():
    lam = Partition((4, 2, 1))
    assert lam.weight == 7
    assert lam.num_rows == 3
    assert lam.part(1) == 4
    assert lam.part(3) == 1
    assert lam.part(9) == 0
    assert lam == (4, 2, 1)
    assert Partition(()).weight == 0


def test_partition_cells_and_membership():
    lam = Partition((2, 1))
    assert set(lam.cells()) == {(1, 1), (1, 2), (2, 1)}
    assert lam.contains_cell(1, 2)
    assert not lam.contains_cell(2, 2)
    assert Partition((3, 2)).contains((2, 1))
    assert not Partition((3, 2)).contains((3, 3))


@given(partition_strategy())
def test_conjugate_is_an_involution(parts):
    assert conjugate(conjugate(parts)).parts == tuple(parts)


@given(partition_strategy())
def test_conjugate_swaps_rows_and_first_part(parts):
    lam = Partition(parts)
    mu = conjugate(parts)
    assert mu.part(1) == lam.num_rows
    assert mu.num_rows == lam.part(1)
    assert mu.weight == lam.weight


# -- hooks and standard counts ------------------------------------------------


def test_hook_length_values():
    # shape (4, 3): hooks row by row are 5 4 3 1 / 3 2 1
    lam = (4, 3)
    hooks = [[hook_length(lam, i, j) for j in range(1, r + 1)]
             for i, r in enumerate(lam, start=1)]
    assert hooks == [[5, 4, 3, 1], [3, 2, 1]]
    with pytest.raises(CellOutOfShapeError):
        hook_length(lam, 2, 4)


def test_hook_product_frozen_values():
    assert hook_product((4, 3)) == 5 * 4 * 3 * 1 * 3 * 2 * 1
    assert factorial(7) // hook_product((4, 3)) == 14
    assert hook_product(()) == 1
    assert hook_product((1,)) == 1


def test_count_standard_small_table():
    known = {
        (1,): 1,
        (2,): 1,
        (1, 1): 1,
        (2, 1): 2,
        (2, 2): 2,
        (3, 1): 3,
        (3, 2): 5,
        (4, 3): 14,
        (2, 2, 1): 5,
        (3, 3, 3): 42,
    }
    for lam, expect in known.items():
        assert count_standard(lam) == expect, lam


@given(partition_strategy(max_n=9))
@settings(deadline=None)
def test_count_standard_matches_peeling_oracle(parts):
    assert count_standard(parts) == standard_count_by_peeling(parts)


@given(partition_strategy())
def test_count_standard_transpose_symmetry(parts):
    assert count_standard(parts) == count_standard(conjugate(parts).parts)


def test_standard_counts_sum_to_involutions():
    # Sum of f over shapes of weight m counts involutions of S_m.
    involutions = {1: 1, 2: 2, 3: 4, 4: 10, 5: 26, 6: 76}
    for m, expect in involutions.items():
        total = sum(
            count_standard(lam.parts) for lam in enumerate_partitions(m, m)
        )
        assert total == expect


# -- principal Schur values ----------------------------------------------------


def test_schur_at_ones_known_values():
    assert schur_at_ones((2, 1), 2) == 2
    assert schur_at_ones((2, 1), 3) == 8
    assert schur_at_ones((1, 1, 1), 2) == 0
    assert schur_at_ones((3,), 1) == 1
    assert schur_at_ones((), 3) == 1


@given(partition_strategy(max_n=7), st.integers(min_value=1, max_value=3))
@settings(deadline=None, max_examples=40)
def test_schur_at_ones_counts_semistandard_fillings(parts, q):
    if sum(parts) > 6:
        parts = parts[:2]
    assert schur_at_ones(parts, q) == semistandard_count_brute(parts, q)


def test_rising_factorial_and_pochhammer():
    assert rising_factorial(3, 4) == 3 * 4 * 5 * 6
    assert rising_factorial(3, 0) == 1
    assert rising_factorial(Fraction(1, 2), 2) == Fraction(3, 4)
    # (x)_lam with one row is the plain rising factorial
    assert pochhammer_symbol(5, (3,)) == rising_factorial(5, 3)
    # two rows shift the base down one per row
    assert pochhammer_symbol(5, (2, 2)) == rising_factorial(5, 2) * rising_factorial(4, 2)
    # vanishes as soon as a row is longer than the integer base allows
    assert pochhammer_symbol(1, (1, 1)) == 0


# -- insertion and subsequence statistics --------------------------------------


def test_rsk_shape_examples():
    assert rsk_shape(()).parts == ()
    assert rsk_shape((1, 1, 1)).parts == (3,)
    assert rsk_shape((3, 2, 1)).parts == (1, 1, 1)
    assert rsk_shape((2, 1, 2, 1)).parts == (2, 2)
    assert rsk_shape((1, 2, 1, 3, 2)).parts == (3, 2)


@given(word_strategy())
def test_rsk_shape_weight_and_rows(args):
    word, p = args
    lam = rsk_shape(word)
    assert lam.weight == len(word)
    assert lam.num_rows <= p or len(word) == 0


@given(word_strategy(max_p=4, max_len=8))
@settings(deadline=None)
def test_first_row_is_longest_weak_run(args):
    word, _ = args
    lam = rsk_shape(word)
    assert lam.part(1) == longest_weak_run(word)


@given(word_strategy(max_p=4, max_len=8))
@settings(deadline=None)
def test_d1_is_longest_strict_drop(args):
    word, _ = args
    assert d1(word) == longest_strict_drop(word)
    assert d1(word) == rsk_shape(word).num_rows


@given(word_strategy(max_p=3, max_len=7))
@settings(deadline=None, max_examples=60)
def test_i_k_matches_exhaustive_cover(args):
    word, p = args
    lam = rsk_shape(word)
    for k in range(1, p + 1):
        fast = i_k(word, k)
        assert fast == cover_weight_exhaustive(word, k)
        # Greene: the cover weight is a prefix sum of the shape.
        assert fast == sum(lam.parts[:k])


def test_i_k_methods_agree_and_bound_is_enforced():
    word = (2, 1, 3, 1, 2, 3, 1)
    assert i_k(word, 2, method="rsk") == i_k(word, 2, method="exhaustive")
    long_word = (1, 2) * 7
    # one run picks up the seven 1s plus the trailing 2; two runs cover it all
    assert i_k(long_word, 1, method="rsk") == 8
    assert i_k(long_word, 2, method="rsk") == 14
    with pytest.raises(BruteForceBoundError):
        i_k(long_word, 1, method="exhaustive")
    assert i_k(long_word, 1, method="exhaustive",
               brute_force_bound=len(long_word)) == 8
    assert i_k(word, 0) == 0
    with pytest.raises(ValueError):
        i_k(word, -1)


# -- strip products -------------------------------------------------------------


def test_strip_hook_product_examples():
    assert strip_hook_product((6,), 5, 1, 3) == 12
    assert strip_hook_product((3, 2), 4, 2, 3) == 3
    # q = p leaves no strip columns at all
    assert strip_hook_product((4, 4), 6, 2, 2) == 1


def test_strip_hook_product_validation():
    with pytest.raises(ParameterOrderError):
        strip_hook_product((3,), 4, 2, 1)
    # a shape with no cells in the strip columns contributes an empty product
    assert strip_hook_product((1,), 4, 1, 2) == 1


def test_strip_hook_product_single_cell_is_hook():
    # One strip column and one strip cell: the value is that plain hook.
    lam = (3,)
    n, p, q = 3, 1, 2
    assert strip_hook_product(lam, n, p, q) == hook_length(lam, 1, 2)


# -- partition enumeration -------------------------------------------------------


@given(st.integers(min_value=0, max_value=14), st.integers(min_value=1, max_value=5))
@settings(deadline=None)
def test_enumerate_partitions_matches_brute(weight, max_rows):
    fast = [lam.parts for lam in enumerate_partitions(weight, max_rows)]
    assert sorted(fast) == sorted(partitions_brute(weight, max_rows))
    assert len(set(fast)) == len(fast)


def test_enumerate_partitions_min_part():
    got = [lam.parts for lam in enumerate_partitions(7, 2, min_part=3)]
    assert sorted(got) == [(4, 3), (7,)]
    assert [lam.parts for lam in enumerate_partitions(0, 3)] == [()]


def test_iter_words_counts():
    assert sum(1 for _ in iter_words(3, 4)) == 81
    assert list(iter_words(2, 1)) == [(1,), (2,)]
    assert list(iter_words(5, 0)) == [()]


def test_brute_force_bound_constant():
    assert I_K_BRUTE_FORCE_BOUND == 12
