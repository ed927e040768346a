"""Count lattice elements, ideals and filters isomorphic to smaller lattices."""
import argparse

from plattice import corank_gf_coefficients, filter_census_theta, ideal_census_gamma
from plattice.lattice import max_n_cap


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("n", type=int, nargs="?", default=6)
    args = ap.parse_args()
    top = min(args.n, max_n_cap())

    print("n  gamma  theta  |non-top|")
    rows = corank_gf_coefficients(top)
    for n in range(1, top + 1):
        print(f"{n:<2} {ideal_census_gamma(n):>5}  {filter_census_theta(n):>5}  {sum(rows[n]) - 1:>9}")


if __name__ == "__main__":
    main()
