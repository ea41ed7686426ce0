#!/usr/bin/env python3
"""Watch the scaled strip expectation drift toward its chi-square constant.

For one letter the scaled expectation equals the constant identically;
for two letters the table shows the finite-size ratio walking to 1 as n
grows.  Pass --csv to keep the table for plotting.
"""

import argparse

from hooktau.asymptotics import chi2_limit_study
from hooktau.measures import limit_constant


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--csv", default=None, help="write the p=2 table here")
    args = parser.parse_args()

    exact = chi2_limit_study(1, 3, 2, [5, 10, 20])
    print("p=1, q=3, k=2 (exact at every n):")
    for row in exact.rows():
        print(f"  n={row['parameter']:>3}  scaled={row['lhs']:.10g}"
              f"  limit={row['rhs']:.10g}  ratio={row['ratio']:.10g}")

    const = limit_constant(2, 2, 1)
    print(f"\np=2, q=2, k=1: limit constant = {const.rational} * sqrt(2)/(2 pi)^(1/2)"
          f" = {const.value:.10g}")
    study = chi2_limit_study(2, 2, 1, [10, 20, 40, 60])
    for row, exact_str in zip(study.rows(), study.extras["expectation_exact"]):
        print(f"  n={row['parameter']:>3}  ratio={row['ratio']:.8f}"
              f"  exact expectation {exact_str}")
    print(f"  gaps improving: {study.improving}, monotone: {study.monotone}")

    if args.csv:
        study.write_csv(args.csv)
        print(f"wrote {args.csv}")


if __name__ == "__main__":
    main()
