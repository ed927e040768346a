"""Moebius values, characteristic polynomials, hook counts and flag vectors."""
import argparse

from plattice import (TOP, build_lattice, chain_count_hook, characteristic_polynomial,
                      flag_vectors, hook_lengths, mobius, whitney_first)
from plattice.core import small_ascents


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("n", type=int, nargs="?", default=3)
    args = ap.parse_args()
    lat = build_lattice(args.n)

    print("chi(q) =", characteristic_polynomial(lat))
    print("first kind", whitney_first(lat))

    print("mu(P, TOP) by forest:")
    for p in lat.elements[:-1]:
        print(f"  {list(p.parent)}  mu={mobius(p, TOP):+d}  chi={characteristic_polynomial(lat, p)}"
              f"  small ascents={small_ascents(p)}")

    p = lat.coatoms()[len(lat.coatoms()) // 2]
    print(f"hooks of {list(p.parent)}: {hook_lengths(p)} -> {chain_count_hook(p)} chains")

    if args.n <= 4:
        alpha, beta = flag_vectors(lat)
        for comp in sorted(beta):
            if alpha[comp] or beta[comp]:
                print(f"  {comp}: alpha={alpha[comp]} beta={beta[comp]}")


if __name__ == "__main__":
    main()
