"""Run every checker up to a point bound and print a compact table of tallies."""
import argparse
import time

from unitop.limits import unsafe_limits
from unitop.sweep import run_paper_checks


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-points", type=int, default=3)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    start = time.perf_counter()
    with unsafe_limits(args.max_points > 3):
        report = run_paper_checks(args.max_points, jobs=args.jobs)
    width = max(map(len, report["propositions"]))
    for pid, t in report["propositions"].items():
        print(f"{pid:<{width}}  {t['instances']:>7} inst  {t['recorded']:>6} rec  {t['failures']:>3} fail")
    print("\nhypothesis violations on the finite surrogate:")
    for name, count in report["hypothesis_violations"].items():
        print(f"  {count:>4}  {name}")
    print(f"\n{'PASSED' if report['passed'] else 'FAILED'} in {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
