"""Walk through the priority lattice on {0..n}: levels, covers, meets and joins.

    python demos/lattice_tour.py 3 --dot pi3.dot
"""
import argparse

from plattice import TOP, build_lattice
from plattice.io import lattice_to_dot
from plattice.lattice import edge_label, join, meet


def show(x):
    return "TOP" if x is TOP else str(list(x.parent))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("n", type=int, nargs="?", default=3)
    ap.add_argument("--dot", help="write the Hasse diagram to this file")
    args = ap.parse_args()

    lat = build_lattice(args.n)
    print(f"{len(lat)} elements, level sizes {lat.level_sizes()}")
    for r, level in enumerate(lat.levels()):
        print(f"  rank {r}: " + "  ".join(show(x) for x in level))

    # covers carry the child vertex of the added edge
    x = lat.atoms()[0]
    for y in lat.covers_up(x):
        print(f"{show(x)} -> {show(y)} labelled {edge_label(x, y)}")

    if args.n >= 3:
        a = lat.elements[-2]
        b = next(e for e in lat.coatoms() if e != a)
        print(f"meet {show(a)} ^ {show(b)} = {show(meet(a, b))}")
        print(f"join {show(a)} v {show(b)} = {show(join(a, b))}")

    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(lattice_to_dot(lat))
        print(f"wrote {args.dot}")


if __name__ == "__main__":
    main()
