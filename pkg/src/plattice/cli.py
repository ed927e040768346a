"""Command-line interface.

Exit codes: 0 on success, 1 on invalid input or a failed verification,
2 when a size cap is hit. Errors go to stderr as a JSON object.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bijections as bij
from . import io as pio
from .core import PriorityForest, forest_statistics, ordered_forests
from .enumeration import (cayley_forest_count, characteristic_polynomial,
                          characteristic_polynomial_closed, chain_count_hook,
                          corank_gf_coefficients, filter_census_theta, flag_vectors,
                          hook_lengths, hook_poset_parent, ideal_census_gamma, mobius,
                          mobius_oracle, whitney_first, whitney_second,
                          whitney_second_closed)
from .errors import PlatticeError, ResourceLimit
from .lattice import (TOP, build_lattice, complete_chains, forest_interval_chains,
                      jordan_holder, max_n_cap)
from .parking import park, parking_functions, parking_statistics, priority_forest_of_pf
from .verify import SUITES, format_report, run_all, run_suite

OEIS = {
    "whitney": "A084938",
    "corank-gf": "A051295",
    "gamma": "A014206",
    "theta": "A003422",
}


def _emit(obj):
    print(json.dumps(obj, separators=(", ", ": ")))


def _chain_json(c):
    out = pio.chain_to_json(c)
    if not c.contains_top:
        out["labels"] = list(jordan_holder(c).word)
    return out


def _comp_key(comp):
    return ",".join(map(str, comp))


# lattice ---------------------------------------------------------------------

def cmd_lattice_build(args):
    lat = build_lattice(args.n)
    if args.dot:
        sys.stdout.write(pio.lattice_to_dot(lat))
    else:
        _emit(pio.lattice_to_json(lat))


# chains ----------------------------------------------------------------------

def cmd_chains_count(args):
    n, m = args.n, args.m
    chains = sum(1 for _ in complete_chains(n, m))
    forests = sum(1 for _ in ordered_forests(n, m))
    pfs = sum(1 for _ in parking_functions(m, n))
    _emit({"n": n, "m": m, "count": chains, "ordered_forests": forests,
           "parking_functions": pfs, "formula": cayley_forest_count(n, m)})


def cmd_chains_list(args):
    if args.top is not None:
        top = pio.forest_from_json(pio.load_json(args.top))
        if top.n != args.n or top.rank != args.m:
            raise PlatticeError(f"--top must be a forest on [0,{args.n}] with {args.m} edges")
        chains = forest_interval_chains(PriorityForest.edgeless(args.n), top)
    else:
        chains = complete_chains(args.n, args.m)
    for c in chains:
        _emit(_chain_json(c))


# map -------------------------------------------------------------------------

def cmd_map(args):
    data = pio.load_json(args.input)
    out = {}
    chain = None
    if args.direction == "forest-to-pf":
        f = pio.ordered_forest_from_json(data)
        chain = bij.phi_inverse(f)
        out["parking_function"] = pio.pf_to_json(bij.weary(f))
    elif args.direction == "pf-to-forest":
        pf = pio.pf_from_json(data)
        chain = bij.psi_inverse(pf)
        out["ordered_forest"] = pio.ordered_forest_to_json(bij.weary_inverse(pf))
    elif args.direction == "forest-to-chain":
        chain = bij.phi_inverse(pio.ordered_forest_from_json(data))
        out["chain"] = _chain_json(chain)
    elif args.direction == "pf-to-chain":
        chain = bij.psi_inverse(pio.pf_from_json(data))
        out["chain"] = _chain_json(chain)
    elif args.direction == "chain-to-forest":
        chain = pio.chain_from_json(data)
        out["ordered_forest"] = pio.ordered_forest_to_json(bij.phi(chain))
    else:
        chain = pio.chain_from_json(data)
        out["parking_function"] = pio.pf_to_json(bij.psi(chain))
    if args.via_chain and "chain" not in out:
        out["chain"] = _chain_json(chain)
    _emit(out)


# park / stats ----------------------------------------------------------------

def cmd_park(args):
    pf = pio.pf_from_json(pio.load_json(args.input))
    out = park(pf)
    result = {"input": pio.pf_to_json(pf), "outcome": pio.outcome_to_json(out),
              "statistics": None, "priority_forest": None}
    if out.success:
        st = parking_statistics(pf)
        result["statistics"] = {"records": sorted(st.records), "lucky": st.lucky,
                                "probes": st.probes}
        result["priority_forest"] = pio.forest_to_json(priority_forest_of_pf(pf))
    _emit(result)


def cmd_stats(args):
    data = pio.load_json(args.input)
    if args.kind == "forest":
        st = forest_statistics(pio.ordered_forest_from_json(data))
        _emit({"records": sorted(st.records), "psa": st.psa, "wait": st.wait})
    else:
        st = parking_statistics(pio.pf_from_json(data))
        _emit({"records": sorted(st.records), "lucky": st.lucky, "probes": st.probes})


# invariants ------------------------------------------------------------------

def cmd_whitney(args):
    rows = []
    for n in range(args.n + 1):
        second = whitney_second(n) if n <= max_n_cap() else whitney_second_closed(n)
        first = whitney_first(build_lattice(n)) if n <= max_n_cap() else None
        rows.append((n, second, first))
    if args.csv:
        width = args.n + 2
        pad = lambda v: list(v) + [""] * (width - len(v))
        table = []
        for n, second, first in rows:
            table.append([n, "second"] + pad(second))
            if first is not None:
                table.append([n, "first"] + pad(first))
        sys.stdout.write(pio.rows_to_csv(["n", "kind"] + [f"k{k}" for k in range(width)], table))
    else:
        _emit({"rows": [{"n": n, "second_kind": list(s),
                         "first_kind": None if f is None else list(f)} for n, s, f in rows]})
    if args.oeis:
        print(f"second kind: {' '.join(str(x) for _, s, _ in rows for x in s[:-1])} "
              f"(compare {OEIS['whitney']})")


def cmd_charpoly(args):
    lat = build_lattice(args.n)
    top = TOP
    if args.ideal is not None:
        top = pio.forest_from_json(pio.load_json(args.ideal))
        if top.n != args.n:
            raise PlatticeError(f"--ideal forest lives on [0,{top.n}], not [0,{args.n}]")
    chi = characteristic_polynomial(lat, top)
    closed = characteristic_polynomial_closed(args.n, top)
    _emit({"n": args.n, "ideal": pio.element_to_json(top), "polynomial": str(chi),
           "coefficients": list(chi.coeffs), "closed_form": str(closed),
           "agree": chi == closed, "whitney_first": list(whitney_first(lat, top))})


def cmd_mobius(args):
    lat = build_lattice(args.n)
    if args.pair:
        x, y = (TOP if a == "top" else pio.element_from_json(pio.load_json(a))
                for a in args.pair)
        for e in (x, y):
            if e is not TOP and e.n != args.n:
                raise PlatticeError(f"element lives on [0,{e.n}], not [0,{args.n}]")
        _emit({"x": pio.element_to_json(x), "y": pio.element_to_json(y),
               "mobius": mobius(x, y), "oracle": mobius_oracle(lat, x, y)})
        return
    triplets = []
    for i in range(len(lat)):
        for j, v in sorted(lat.poset.mobius_from(i).items()):
            if v:
                triplets.append([i, j, v])
    if args.csv:
        sys.stdout.write(pio.rows_to_csv(["i", "j", "mu"], triplets))
    else:
        _emit({"n": args.n, "elements": [pio.element_to_json(e) for e in lat.elements],
               "triplets": triplets})


def cmd_hooks(args):
    p = pio.forest_from_json(pio.load_json(args.input))
    h = hook_lengths(p)
    _emit({"forest": pio.forest_to_json(p),
           "parent": {str(v): q for v, q in sorted(hook_poset_parent(p).items())},
           "hooks": {str(v): c for v, c in sorted(h.items())},
           "chains": chain_count_hook(p)})


def cmd_flag(args):
    alpha, beta = flag_vectors(build_lattice(args.n))
    keys = sorted(alpha)
    if args.csv:
        sys.stdout.write(pio.rows_to_csv(
            ["composition", "alpha", "beta"], [[_comp_key(k), alpha[k], beta[k]] for k in keys]))
    else:
        _emit({"n": args.n, "alpha": {_comp_key(k): alpha[k] for k in keys},
               "beta": {_comp_key(k): beta[k] for k in keys}})


def cmd_census(args):
    fn = ideal_census_gamma if args.kind == "gamma" else filter_census_theta
    values = [fn(n) for n in range(1, args.n + 1)]
    _emit({"kind": args.kind, "start": 1, "values": values})
    if args.oeis:
        print(f"{args.kind}: {' '.join(map(str, values))} (compare {OEIS[args.kind]})")


def cmd_corank_gf(args):
    rows = corank_gf_coefficients(args.n)
    non_top = [sum(r) - 1 for r in rows]
    lattice = [len(build_lattice(n)) - 1 for n in range(min(args.n, max_n_cap()) + 1)]
    _emit({"rows": rows, "non_top_counts": non_top, "lattice_counts": lattice,
           "agree": non_top[:len(lattice)] == lattice})
    if args.oeis:
        print(f"non-top sizes: {' '.join(map(str, non_top))} (compare {OEIS['corank-gf']}, shifted)")


# verify ----------------------------------------------------------------------

def cmd_verify(args):
    checks = run_all(args.n) if args.suite == "all" else run_suite(args.suite, args.n)
    print(format_report(checks))
    return 0 if all(c.passed for c in checks) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="plattice", description="Priority lattices, forests and parking functions.")
    sub = ap.add_subparsers(dest="command", required=True)

    lat = sub.add_parser("lattice", help="build and export a lattice").add_subparsers(dest="action", required=True)
    b = lat.add_parser("build")
    b.add_argument("n", type=int)
    fmt = b.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true", help="Graphviz Hasse diagram")
    fmt.add_argument("--json", action="store_true", help="JSON (default)")
    b.set_defaults(func=cmd_lattice_build)

    ch = sub.add_parser("chains", help="complete chains").add_subparsers(dest="action", required=True)
    c = ch.add_parser("count")
    c.add_argument("n", type=int)
    c.add_argument("m", type=int)
    c.set_defaults(func=cmd_chains_count)
    c = ch.add_parser("list")
    c.add_argument("n", type=int)
    c.add_argument("m", type=int)
    c.add_argument("--top", help="restrict to maximal chains below this forest")
    c.set_defaults(func=cmd_chains_list)

    mp = sub.add_parser("map", help="run a bijection")
    mp.add_argument("direction", choices=["forest-to-pf", "pf-to-forest", "forest-to-chain",
                                          "pf-to-chain", "chain-to-forest", "chain-to-pf"])
    mp.add_argument("input", help="JSON file, inline JSON, or - for stdin")
    mp.add_argument("--via", choices=["chain"], help="also print the intermediate chain")
    mp.set_defaults(func=cmd_map)

    pk = sub.add_parser("park", help="run the parking process")
    pk.add_argument("input")
    pk.set_defaults(func=cmd_park)

    st = sub.add_parser("stats", help="forest or parking statistics")
    st.add_argument("kind", choices=["forest", "pf"])
    st.add_argument("input")
    st.set_defaults(func=cmd_stats)

    inv = sub.add_parser("invariants", help="enumerative invariants").add_subparsers(dest="which", required=True)
    w = inv.add_parser("whitney")
    w.add_argument("n", type=int)
    w.add_argument("--csv", action="store_true")
    w.add_argument("--oeis", action="store_true")
    w.set_defaults(func=cmd_whitney)
    w = inv.add_parser("charpoly")
    w.add_argument("n", type=int)
    w.add_argument("--ideal", help="forest JSON; default is the whole lattice")
    w.set_defaults(func=cmd_charpoly)
    w = inv.add_parser("mobius")
    w.add_argument("n", type=int)
    w.add_argument("--pair", nargs=2, metavar=("X", "Y"), help='forest JSON or "top"')
    w.add_argument("--csv", action="store_true")
    w.set_defaults(func=cmd_mobius)
    w = inv.add_parser("hooks")
    w.add_argument("input")
    w.set_defaults(func=cmd_hooks)
    w = inv.add_parser("flag")
    w.add_argument("n", type=int)
    w.add_argument("--csv", action="store_true")
    w.set_defaults(func=cmd_flag)
    w = inv.add_parser("census")
    w.add_argument("kind", choices=["gamma", "theta"])
    w.add_argument("n", type=int)
    w.add_argument("--oeis", action="store_true")
    w.set_defaults(func=cmd_census)
    w = inv.add_parser("corank-gf")
    w.add_argument("n", type=int)
    w.add_argument("--oeis", action="store_true")
    w.set_defaults(func=cmd_corank_gf)

    v = sub.add_parser("verify", help="run the oracle suites")
    v.add_argument("n", type=int)
    v.add_argument("--suite", default="all", choices=sorted(SUITES) + ["all"])
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if hasattr(args, "via"):
        args.via_chain = args.via == "chain"
    try:
        code = args.func(args)
    except ResourceLimit as exc:
        print(json.dumps({"error": exc.code, "message": str(exc)}), file=sys.stderr)
        return 2
    except (PlatticeError, TypeError) as exc:
        code_name = getattr(exc, "code", "invalid_input")
        print(json.dumps({"error": code_name, "message": str(exc)}), file=sys.stderr)
        return 1
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
