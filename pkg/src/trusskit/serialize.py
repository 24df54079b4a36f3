"""JSON structure files for groups, heaps, trusses, rings, and modules.

Documents are dicts with a "kind" discriminator; tables are row-major nested
arrays of element ids, ternary tables are nested as table[a][b][c].  Dumps
are deterministic (sorted keys, fixed separators) so byte-stable output can
be asserted.  Every emitted document re-parses to an equal value.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import FiniteGroup, FiniteHeap, StructureError
from .modules import FiniteTModule, FreeTModule, TrivialIntModule, free_module
from .rings import FiniteRing
from .trusses import (
    ConstantTruss,
    ExtensionTruss,
    FiniteTruss,
    IntegerTruss,
    ring_extension,
    tc2_brace_truss,
    terminal_truss,
    truss_TZn,
    unital_extension,
)


@dataclass(frozen=True)
class SubHeapSpec:
    """A sub-heap given by members only; the parent is supplied at use time."""

    members: tuple


def structure_to_obj(x) -> dict:
    if isinstance(x, FiniteGroup):
        return {"kind": "group", "names": list(x.names),
                "table": [list(r) for r in x.op_table()]}
    if isinstance(x, FiniteHeap):
        return {"kind": "heap", "names": list(x.names), "abelian": x.abelian,
                "table": [[list(l) for l in p] for p in x.table()]}
    if isinstance(x, SubHeapSpec):
        return {"kind": "subheap", "members": list(x.members)}
    if isinstance(x, FiniteRing):
        return {"kind": "ring", "names": list(x.names),
                "add": [list(r) for r in x.add.op_table()],
                "mul": [list(r) for r in x.mul_table]}
    if isinstance(x, FiniteTruss):
        return {"kind": "truss", "heap": structure_to_obj(x.heap),
                "names": list(x.names),
                "mul": [list(r) for r in x.mul_table]}
    if isinstance(x, IntegerTruss):
        return {"kind": "truss", "builtin": "TZ"}
    if isinstance(x, ConstantTruss):
        return {"kind": "truss", "builtin": "Zc", "c": x.c}
    if isinstance(x, ExtensionTruss):
        return {"kind": "truss", "extension": x.adjoined,
                "base": structure_to_obj(x.base)}
    if isinstance(x, FiniteTModule):
        return {"kind": "module", "truss": structure_to_obj(x.truss),
                "heap": structure_to_obj(x.heap),
                "action": [list(r) for r in x.action]}
    if isinstance(x, TrivialIntModule):
        return {"kind": "module", "builtin": "ZTrivial"}
    if isinstance(x, FreeTModule):
        return {"kind": "free-module", "truss": structure_to_obj(x.truss),
                "generators": x.n,
                "window": getattr(x, "display_window", 5)}
    raise StructureError(f"cannot serialize {type(x).__name__}")


def _load_truss(obj):
    builtin = obj.get("builtin")
    if builtin is not None:
        if builtin == "TZ":
            return IntegerTruss()
        if builtin == "TZn":
            return truss_TZn(int(obj["n"]))
        if builtin == "Zc":
            return ConstantTruss(int(obj.get("c", 0)))
        if builtin == "TC2":
            return tc2_brace_truss()
        if builtin == "star":
            return terminal_truss()
        raise StructureError(f"unknown builtin truss {builtin!r}")
    if "extension" in obj:
        base = _load_truss(obj["base"])
        if obj["extension"] == "one":
            return unital_extension(base)
        if obj["extension"] == "zero":
            return ring_extension(base)
        raise StructureError(f"unknown extension kind {obj['extension']!r}")
    heap = obj_to_structure(obj["heap"])
    return FiniteTruss(heap, obj["mul"], names=obj.get("names"))


def obj_to_structure(obj):
    if not isinstance(obj, dict) or "kind" not in obj:
        raise StructureError("a structure document must be an object with a 'kind'")
    kind = obj["kind"]
    if kind == "group":
        return FiniteGroup(obj["table"], names=obj.get("names"))
    if kind == "heap":
        return FiniteHeap.from_table(obj["table"], names=obj.get("names"))
    if kind == "subheap":
        return SubHeapSpec(tuple(obj["members"]))
    if kind == "ring":
        add = FiniteGroup(obj["add"], names=obj.get("names"))
        return FiniteRing(add, obj["mul"], names=obj.get("names"))
    if kind == "truss":
        return _load_truss(obj)
    if kind == "module":
        if obj.get("builtin") == "ZTrivial":
            return TrivialIntModule()
        truss = _load_truss(obj["truss"])
        heap = obj_to_structure(obj["heap"])
        return FiniteTModule(truss, heap, obj["action"])
    if kind == "free-module":
        truss = _load_truss(obj["truss"])
        fm = free_module(truss, int(obj["generators"]))
        fm.display_window = int(obj.get("window", 5))
        return fm
    raise StructureError(f"unknown structure kind {kind!r}")


def dumps(x) -> str:
    return json.dumps(structure_to_obj(x), sort_keys=True, indent=2)


def loads(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructureError(f"malformed JSON: {exc}") from None
    return obj_to_structure(obj)


def load_path(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    return loads(text)
