"""Print the finite cardinality table: labeled topologies, directed families, beth_2(n)."""
import argparse

from unitop.census import beth_finite, check_finite_cardinalities, directed_closed_form
from unitop.limits import unsafe_limits


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-points", type=int, default=4)
    args = ap.parse_args()
    print(f"{'n':>2} {'2^n':>5} {'|Sigma|':>8} {'|D_X|':>8} {'closed form':>12} {'beth_2':>12}  chain")
    with unsafe_limits(args.max_points > 4):
        for n in range(1, args.max_points + 1):
            rep = check_finite_cardinalities(n)
            print(f"{n:>2} {2 ** n:>5} {rep.sigma_count:>8} {rep.dx_count.with_empty:>8} "
                  f"{directed_closed_form(n):>12} {beth_finite(2, n):>12}  {'ok' if rep.passed else 'BROKEN'}")


if __name__ == "__main__":
    main()
