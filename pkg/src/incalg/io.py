"""JSON serialization for posets, functions, cocycles, and basis tables.

All exact values travel as strings (or nested arrays of strings for matrix
rings) so no numeric precision is lost in transit.  Loading is strict: any
structural problem raises :class:`InputError`.
"""

from __future__ import annotations

import json

from .algebra import IncFunction
from .automorph import BasisTable, MultCocycle, make_table
from .derivation import AddCocycle
from .errors import InputError
from .poset import Preorder, build_preorder, quotient
from .rings import RingSpec, format_elem, parse_elem, parse_ring

__all__ = [
    "load_json",
    "dump_json",
    "poset_from_json",
    "poset_to_json",
    "ring_from_string",
    "function_from_json",
    "function_to_json",
    "cocycle_from_json",
    "mult_cocycle_to_json",
    "add_cocycle_to_json",
    "table_from_json",
    "table_to_json",
    "reduced_from_json",
    "reduced_to_json",
]


def load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path}: {exc}") from exc


def dump_json(doc, out=None) -> str:
    text = json.dumps(doc, indent=2, sort_keys=False) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    return text


def _expect(doc, key, kinds):
    if not isinstance(doc, dict) or key not in doc:
        raise InputError(f"missing key {key!r}")
    v = doc[key]
    if not isinstance(v, kinds):
        raise InputError(f"key {key!r} has the wrong type")
    return v


def poset_from_json(doc) -> Preorder:
    n = _expect(doc, "n", int)
    rels = _expect(doc, "relations", list)
    pairs = []
    for item in rels:
        if not (isinstance(item, list) and len(item) == 2
                and all(isinstance(v, int) for v in item)):
            raise InputError(f"relation {item!r} is not a pair of integers")
        pairs.append(tuple(item))
    if n < 0:
        raise InputError("n must be nonnegative")
    return build_preorder(n, pairs)


def poset_to_json(p: Preorder):
    return {"n": p.n, "relations": [[i, j] for i, j in p.strict_pairs()]}


def ring_from_string(text: str) -> RingSpec:
    try:
        return parse_ring(text)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _parse_value(spec: RingSpec, literal):
    try:
        return parse_elem(spec, literal)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"bad element literal {literal!r}: {exc}") from exc


def function_from_json(doc, p: Preorder, spec: RingSpec | None = None) -> IncFunction:
    if spec is None:
        spec = ring_from_string(_expect(doc, "ring", str))
    entries = _expect(doc, "entries", list)
    vals = {}
    for ent in entries:
        i = _expect(ent, "from", int)
        j = _expect(ent, "to", int)
        if "value" not in ent:
            raise InputError("entry without a value")
        vals[(i, j)] = _parse_value(spec, ent["value"])
    return IncFunction.make(p, spec, vals)


def function_to_json(f: IncFunction, dense: bool = True):
    entries = []
    if dense:
        for (i, j) in f.preorder.pairs():
            entries.append({"from": i, "to": j, "value": format_elem(f.at(i, j))})
    else:
        for (i, j), v in f.values:
            entries.append({"from": i, "to": j, "value": format_elem(v)})
    return {"ring": str(f.ring), "entries": entries}


def cocycle_from_json(doc, spec: RingSpec):
    """Returns (assignment dict on class pairs, mode)."""
    edges = _expect(doc, "edges", list)
    mode = doc.get("mode", "full")
    if mode not in ("full", "tree"):
        raise InputError(f"unknown cocycle mode {mode!r}")
    assignment = {}
    for ent in edges:
        x = _expect(ent, "from", int)
        y = _expect(ent, "to", int)
        if "value" not in ent:
            raise InputError("edge without a value")
        assignment[(x, y)] = _parse_value(spec, ent["value"])
    return assignment, mode


def _cocycle_to_json(c):
    return {"edges": [{"from": x, "to": y, "value": format_elem(v)}
                      for (x, y), v in c.c],
            "mode": "full"}


def mult_cocycle_to_json(c: MultCocycle):
    return _cocycle_to_json(c)


def add_cocycle_to_json(c: AddCocycle):
    return _cocycle_to_json(c)


def _basis_label(key) -> str:
    return "e_" + "_".join(str(v) for v in key[1:])


def _basis_key(label: str):
    parts = label.split("_")
    if parts[0] != "e" or len(parts) not in (2, 3):
        raise InputError(f"bad basis label {label!r}")
    try:
        return ("e", *(int(v) for v in parts[1:]))
    except ValueError as exc:
        raise InputError(f"bad basis label {label!r}") from exc


def table_from_json(doc, source: Preorder, target: Preorder,
                    spec: RingSpec) -> BasisTable:
    if not isinstance(doc, list):
        raise InputError("a basis table is a JSON list")
    images = {}
    for ent in doc:
        label = _expect(ent, "basis", str)
        img = _expect(ent, "image", dict)
        images[_basis_key(label)] = function_from_json(img, target, spec)
    return make_table(source, target, spec, images)


def table_to_json(t: BasisTable):
    return [{"basis": _basis_label(key), "image": function_to_json(img, dense=False)}
            for key, img in t.images]


def reduced_from_json(doc, ntypes: int, spec: RingSpec | None = None):
    from .reduced import ReducedElem
    if spec is None:
        spec = ring_from_string(_expect(doc, "ring", str))
    values = _expect(doc, "values", list)
    if len(values) != ntypes:
        raise InputError(f"expected {ntypes} type values, got {len(values)}")
    return ReducedElem(spec, tuple(_parse_value(spec, v) for v in values))


def reduced_to_json(a):
    return {"ring": str(a.ring), "values": [format_elem(v) for v in a.values]}


def quotient_of(p: Preorder):
    return quotient(p)
