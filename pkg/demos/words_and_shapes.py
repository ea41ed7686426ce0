#!/usr/bin/env python3
"""Insert words, tally shapes, and compare against the exact measure.

Replays the defining experiment at desk scale: every 2-letter word of
length 7 is inserted, shape frequencies are tallied, and the tail event
part_2 >= 3 is counted three ways (tally, partition formula, event
identity through the subsequence statistics).
"""

from collections import Counter
from fractions import Fraction

from hooktau.asymptotics import row_tail_word_check
from hooktau.combinatorics import d1, i_k, iter_words, rsk_shape
from hooktau.measures import StripFunctionalParams, strip_expectation, word_measure


def main():
    p, ell = 2, 7
    tally = Counter()
    for word in iter_words(p, ell):
        tally[rsk_shape(word).parts] += 1
    total = p**ell
    print(f"all {total} words over {p} letters, length {ell}:")
    for parts, count in sorted(tally.items()):
        exact = word_measure(parts, p, ell)
        ok = "ok" if Fraction(count, total) == exact else "MISMATCH"
        print(f"  shape {parts}: {count}/{total} = {exact}  [{ok}]")

    upper = 3
    tail_tally = sum(
        count for parts, count in tally.items()
        if len(parts) >= p and parts[p - 1] >= upper
    )
    formula = strip_expectation(ell, StripFunctionalParams(n=upper + p, p=p, q=p))
    tail, words, failures = row_tail_word_check(p, upper, 1)
    print(f"\ntail event part_{p} >= {upper}:")
    print(f"  word tally       {Fraction(tail_tally, total)}")
    print(f"  partition formula {formula}")
    print(f"  event-identity sweep: {tail}/{words} with {failures} failures")

    word = (1, 2, 2, 1, 2, 1, 1)
    shape = rsk_shape(word)
    print(f"\none word {word}: shape {shape.parts},"
          f" d1 = {d1(word)}, i_1 = {i_k(word, 1)}")


if __name__ == "__main__":
    main()
