"""List pairs of non-homeomorphic spaces whose lattices are isomorphic, grouped by lattice size."""
import argparse
from collections import Counter

from unitop.census import search_iso_nonhomeo


def fmt(space):
    return f"{len(space['points'])}pt {space['opens']}"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-points", type=int, default=3)
    ap.add_argument("--restrict", choices=["all", "T0", "T1", "discrete"], default="all")
    args = ap.parse_args()
    findings = search_iso_nonhomeo(args.max_points, None if args.restrict == "all" else args.restrict)
    for f in findings:
        print(f"|U|={f['lattice_size']:<3} {fmt(f['x'])}  ~  {fmt(f['y'])}  non_T0={f['non_T0']}")
    sizes = Counter(f["lattice_size"] for f in findings)
    print(f"{len(findings)} pairs; by lattice size: {dict(sorted(sizes.items()))}")


if __name__ == "__main__":
    main()
