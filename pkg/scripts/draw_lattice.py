"""Write Hasse diagrams (DOT) for a handful of small spaces into a directory."""
import argparse
from pathlib import Path

from unitop.formats import lattice_to_dot, write_atomic
from unitop.lattice import build_lattice
from unitop.space import build_space, discrete, indiscrete, sierpinski

GALLERY = {
    "discrete3": discrete(3),
    "sierpinski": sierpinski(),
    "indiscrete2": indiscrete(2),
    "chain3": build_space("abc", [[], ["a"], ["a", "b"], ["a", "b", "c"]]),
    "vee": build_space("abc", [[], ["a"], ["b"], ["a", "b"], ["a", "b", "c"]]),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("outdir", nargs="?", default="lattices")
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name, space in GALLERY.items():
        L = build_lattice(space)
        write_atomic(out / f"{name}.dot", lattice_to_dot(L, name))
        print(f"{name}: {len(L)} elements -> {out / (name + '.dot')}")


if __name__ == "__main__":
    main()
