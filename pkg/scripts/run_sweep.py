"""Run the cross-pipeline sweep and print a per-prime table.

    python scripts/run_sweep.py --primes 5 7 11 13 --n-max 6
"""

import argparse
import sys

from weilres.sweep import SweepConfig, run_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+", default=list(SweepConfig.primes))
    ap.add_argument("--n-max", type=int, default=SweepConfig.n_max)
    args = ap.parse_args()

    report = run_sweep(SweepConfig(tuple(args.primes), args.n_max))
    header = f"{'p':>3} {'curves':>7} {'cases':>6} {'agree':>6} {'isotypic':>9} {'theorem':>8} {'unsound':>8}  result"
    print(header)
    print("-" * len(header))
    for row in report.summary():
        print(f"{row['p']:>3} {row['curves']:>7} {row['cases']:>6} {row['agree']:>6} {row['isotypic_ok']:>9} "
              f"{row['simple_by_theorem']:>8} {row['soundness_violations']:>8}  {'pass' if row['pass'] else 'FAIL'}")
    print(f"\n{len(report.rows)} cases in {report.elapsed:.1f} s, {len(report.failures)} failures")
    for p, a4, a6, n, case in report.failures[:20]:
        print(f"  p={p} (a4, a6)=({a4}, {a6}) n={n} t={case.t}: {case.error or 'mismatch'}")
    return 0 if not report.failures else 1


if __name__ == "__main__":
    sys.exit(main())
