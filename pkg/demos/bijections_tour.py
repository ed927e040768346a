"""Follow one saturated chain through both bijections and back."""
import argparse

from plattice import (complete_chains, forest_statistics, jordan_holder, park,
                      parking_statistics, phi, phi_inverse, psi, weary)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("n", type=int, nargs="?", default=4)
    ap.add_argument("m", type=int, nargs="?", default=3)
    ap.add_argument("--index", type=int, default=5, help="which chain in lexicographic order")
    args = ap.parse_args()

    chains = list(complete_chains(args.n, args.m))
    c = chains[args.index % len(chains)]
    print(f"{len(chains)} complete {args.m}-chains in the lattice on {{0..{args.n}}}")
    for x in c:
        print("   ", list(x.parent))
    print("label word      ", jordan_holder(c))

    f = phi(c)
    pf = psi(c)
    print("ordered forest  ", [str(v) if isinstance(v, int) else f"root {v.index}" for v in f.parent_of])
    print("parking function", list(pf.prefs))
    print("bird's eye      ", park(pf).birds_eye)
    assert weary(f) == pf and phi_inverse(f) == c

    fs, ps = forest_statistics(f), parking_statistics(pf)
    print(f"records {sorted(fs.records)} / {sorted(ps.records)}")
    print(f"small ascents {fs.psa} = lucky cars {ps.lucky}")
    print(f"waiting {fs.wait} = probes {ps.probes}")


if __name__ == "__main__":
    main()
