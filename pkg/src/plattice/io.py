"""JSON, DOT and CSV encodings shared by the library and the CLI."""

from __future__ import annotations

import csv
import io
import json
import os
from typing import Any

from .core import OrderedForest, PartialPermutation, PriorityForest, Root
from .errors import InvalidStructure
from .lattice import TOP, Chain, Lattice, edge_label
from .parking import ParkingOutcome, PartialParkingFunction

__all__ = [
    "forest_to_json", "forest_from_json", "ordered_forest_to_json",
    "ordered_forest_from_json", "perm_to_json", "perm_from_json", "pf_to_json",
    "pf_from_json", "outcome_to_json", "chain_to_json", "chain_from_json",
    "element_to_json", "element_from_json", "lattice_to_json", "lattice_to_dot",
    "rows_to_csv", "load_json", "dumps",
]


def dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _need(d, *keys):
    if not isinstance(d, dict):
        raise InvalidStructure(f"expected a JSON object, got {type(d).__name__}")
    missing = [k for k in keys if k not in d]
    if missing:
        raise InvalidStructure(f"missing keys {missing}")


def forest_to_json(p: PriorityForest) -> dict:
    return {"n": p.n, "parent": list(p.parent)}


def forest_from_json(d) -> PriorityForest:
    _need(d, "n", "parent")
    return PriorityForest(d["n"], tuple(d["parent"]))


def element_to_json(x):
    return "top" if x is TOP else forest_to_json(x)


def element_from_json(d):
    return TOP if d == "top" else forest_from_json(d)


def ordered_forest_to_json(f: OrderedForest) -> dict:
    return {"n": f.n, "m": f.m,
            "parent_of": [{"root": x.index} if isinstance(x, Root) else {"label": x}
                          for x in f.parent_of]}


def ordered_forest_from_json(d) -> OrderedForest:
    _need(d, "n", "m", "parent_of")
    parent_of = []
    for entry in d["parent_of"]:
        if isinstance(entry, dict) and "root" in entry:
            parent_of.append(Root(entry["root"]))
        elif isinstance(entry, dict) and "label" in entry:
            parent_of.append(entry["label"])
        else:
            raise InvalidStructure(f"bad parent_of entry {entry!r}")
    return OrderedForest(d["n"], d["m"], tuple(parent_of))


def perm_to_json(p: PartialPermutation) -> dict:
    return {"domain": p.domain_size, "codomain": p.codomain_size, "word": list(p.word)}


def perm_from_json(d) -> PartialPermutation:
    _need(d, "domain", "codomain", "word")
    return PartialPermutation(d["domain"], d["codomain"], tuple(d["word"]))


def pf_to_json(pf: PartialParkingFunction) -> dict:
    return {"n": pf.n, "prefs": list(pf.prefs)}


def pf_from_json(d) -> PartialParkingFunction:
    _need(d, "n", "prefs")
    return PartialParkingFunction(d["n"], tuple(d["prefs"]))


def outcome_to_json(out: ParkingOutcome) -> dict:
    return {"success": out.success, "birds_eye": list(out.birds_eye.word),
            "blueprint": [list(t) for t in out.blueprint]}


def chain_to_json(c: Chain) -> dict:
    first = next(e for e in c.elements if e is not TOP)
    return {"n": first.n, "chain": [element_to_json(e) for e in c.elements]}


def chain_from_json(d) -> Chain:
    _need(d, "chain")
    return Chain(tuple(element_from_json(e) for e in d["chain"]))


def lattice_to_json(lat: Lattice) -> dict:
    return {
        "n": lat.n,
        "elements": [element_to_json(e) for e in lat.elements],
        "ranks": [lat.rank(e) for e in lat.elements],
        "covers": [[i, j, edge_label(lat.elements[i], lat.elements[j])]
                   for i, ys in enumerate(lat.poset.up) for j in ys],
    }


def lattice_to_dot(lat: Lattice) -> str:
    """Hasse diagram; nodes carry the forest JSON, edges the label of the cover."""
    lines = [f"digraph Pi{lat.n} {{", "  rankdir=BT;", "  node [shape=box, fontsize=10];"]
    for i, e in enumerate(lat.elements):
        text = "TOP" if e is TOP else json.dumps(e.parent)
        lines.append(f'  e{i} [label="{text}"];')
    for level in lat.levels():
        lines.append("  { rank=same; " + " ".join(f"e{lat.index(e)};" for e in level) + " }")
    for i, ys in enumerate(lat.poset.up):
        for j in ys:
            lab = edge_label(lat.elements[i], lat.elements[j])
            attr = "" if lab is None else f' [label="{lab}"]'
            lines.append(f"  e{i} -> e{j}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def rows_to_csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def load_json(source: str):
    """Read JSON from a file path, ``-`` for stdin, or an inline literal."""
    import sys

    text = source
    if source == "-":
        text = sys.stdin.read()
    elif os.path.exists(source):
        with open(source) as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidStructure(f"cannot parse JSON from {source!r}: {exc}") from None
