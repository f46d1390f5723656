"""JSON codecs for every definition document the CLI and corpus consume.

Schema version 1. Carriers are the strings "Zmod(n)" / "Nat" / "QPlus";
rationals serialize as "p/q" strings; intervals as [lo, hi] pairs.
Document types: space, bispace, substructure, bisubstructure, map,
projection, pseudo_projection, kernel, decomposition, independence,
generation, basis, fuzzy1, fuzzy2, fuzzy_eval, theorem, classify targets.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional

from .bistructure import BiSpec
from .carriers import Carrier, Interval, render_value
from .domains import (Domain, ExplicitDomain, PatternFamily, Slot, UnionDomain)
from .elements import (MATRIX, POLY, SCALAR, TUPLE, IntervalElement,
                       matrix_element, poly_element, scalar_element,
                       tuple_element)
from .fuzzy import FuzzyInterval, FuzzyMap
from .linalg import (Decomposition, LinearMap, MapRule)
from .scalars import ScalarStructure
from .spaces import SpaceSpec

SCHEMA = 1


class ParseError(ValueError):
    pass


def _value_out(v):
    if isinstance(v, Fraction):
        return render_value(v)
    return v


def _value_in(v, carrier: Carrier):
    if isinstance(v, str):
        return carrier.coerce(Fraction(v))
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ParseError(f"bad carrier value {v!r}")
    return carrier.coerce(v)


# -- carriers ----------------------------------------------------------------


def carrier_out(c: Carrier) -> str:
    return c.render()


def carrier_in(text) -> Carrier:
    try:
        return Carrier.parse(text)
    except Exception as exc:
        raise ParseError(str(exc))


# -- elements ----------------------------------------------------------------


def element_out(e: IntervalElement) -> dict:
    base: Dict[str, Any] = {"carrier": carrier_out(e.carrier)}
    pairs = [[_value_out(iv.lo), _value_out(iv.hi)] for iv in e.entries]
    if e.kind == SCALAR:
        base.update(kind="interval", value=pairs[0])
    elif e.kind == TUPLE:
        base.update(kind="tuple", entries=pairs)
    elif e.kind == MATRIX:
        base.update(kind="matrix", rows=e.dims[0], cols=e.dims[1], entries=pairs)
    else:
        base.update(kind="poly", coeffs=pairs)
    return base


def element_in(doc: dict) -> IntervalElement:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ParseError(f"bad element document: {doc!r}")
    carrier = carrier_in(doc.get("carrier", "Nat"))

    def iv(pair):
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise ParseError(f"bad interval pair {pair!r}")
        return Interval(_value_in(pair[0], carrier), _value_in(pair[1], carrier),
                        carrier)

    k = doc["kind"]
    try:
        if k == "interval":
            return scalar_element(iv(doc["value"]))
        if k == "tuple":
            return tuple_element([iv(p) for p in doc["entries"]], carrier)
        if k == "matrix":
            return matrix_element(doc["rows"], doc["cols"],
                                  [iv(p) for p in doc["entries"]], carrier)
        if k == "poly":
            return poly_element([iv(p) for p in doc["coeffs"]], carrier)
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(f"bad element: {exc}")
    raise ParseError(f"unknown element kind {k!r}")


# -- domains -----------------------------------------------------------------


def domain_out(d: Domain) -> dict:
    if isinstance(d, ExplicitDomain):
        return {"kind": "explicit", "elements": [element_out(e) for e in d.elements]}
    if isinstance(d, UnionDomain):
        return {"kind": "union", "parts": [domain_out(p) for p in d.parts]}
    slots = []
    for s in d.slots:
        if s is None:
            slots.append(0)
        elif s.lo_coeff == 0 and s.hi_coeff == 1:
            slots.append({"param": s.param})
        else:
            slots.append({"param": s.param, "lo": s.lo_coeff, "hi": s.hi_coeff})
    shape: Dict[str, Any] = {"kind": d.kind}
    if d.kind == TUPLE:
        shape["length"] = d.dims[0]
    if d.kind == MATRIX:
        shape["rows"], shape["cols"] = d.dims
    if d.kind == POLY:
        shape["max_degree"] = len(d.slots) - 1
    return {"kind": "family", "carrier": carrier_out(d.carrier), "shape": shape,
            "slots": slots, "params": d.nparams, "fuzzy": d.fuzzy}


def domain_in(doc: dict) -> Domain:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ParseError(f"bad domain document: {doc!r}")
    k = doc["kind"]
    if k == "explicit":
        return ExplicitDomain(tuple(element_in(e) for e in doc["elements"]))
    if k == "union":
        return UnionDomain(tuple(domain_in(p) for p in doc["parts"]))
    if k != "family":
        raise ParseError(f"unknown domain kind {k!r}")
    carrier = carrier_in(doc["carrier"])
    shape = doc["shape"]
    ekind = shape["kind"]
    if ekind == "interval":
        dims: tuple = ()
        nslots = 1
    elif ekind == "tuple":
        dims = (shape["length"],)
        nslots = shape["length"]
    elif ekind == "matrix":
        dims = (shape["rows"], shape["cols"])
        nslots = shape["rows"] * shape["cols"]
    elif ekind == "poly":
        dims = ()
        nslots = shape["max_degree"] + 1
    else:
        raise ParseError(f"unknown shape kind {ekind!r}")
    raw = doc["slots"]
    if len(raw) != nslots:
        raise ParseError("slot count does not match the shape")
    slots = []
    for s in raw:
        if s == 0:
            slots.append(None)
        elif isinstance(s, dict):
            slots.append(Slot(s["param"], s.get("lo", 0), s.get("hi", 1)))
        else:
            raise ParseError(f"bad slot {s!r}")
    nparams = doc.get("params")
    if nparams is None:
        nparams = 1 + max((s.param for s in slots if s is not None), default=-1)
    return PatternFamily(carrier, ekind, dims, tuple(slots), nparams,
                         bool(doc.get("fuzzy", False)))


# -- scalars -------------------------------------------------------------------


def scalars_out(s: ScalarStructure) -> dict:
    out: Dict[str, Any] = {"carrier": carrier_out(s.carrier), "kind": s.kind}
    if s.values is not None:
        out["values"] = [_value_out(v) for v in s.values]
    elif s.multiple is not None:
        out["multiples_of"] = s.multiple
    elif s.recip_bases is not None:
        out["reciprocal_powers_of"] = list(s.recip_bases)
    else:
        out["values"] = "all"
    return out


def scalars_in(doc: dict) -> ScalarStructure:
    carrier = carrier_in(doc["carrier"])
    kind = doc.get("kind", "set")
    try:
        if doc.get("multiples_of") is not None:
            return ScalarStructure(carrier, kind, None, doc["multiples_of"])
        if doc.get("reciprocal_powers_of") is not None:
            return ScalarStructure(carrier, kind, None, None,
                                   tuple(doc["reciprocal_powers_of"]))
        vals = doc.get("values", "all")
        if vals == "all":
            return ScalarStructure(carrier, kind)
        return ScalarStructure(carrier, kind,
                               tuple(_value_in(v, carrier) for v in vals))
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(f"bad scalar structure: {exc}")


# -- specs ---------------------------------------------------------------------


def space_out(spec: SpaceSpec) -> dict:
    return {"schema": SCHEMA, "type": "space", "label": spec.label,
            "domain": domain_out(spec.domain), "scalars": scalars_out(spec.scalars),
            "structure": spec.structure, "op": spec.op}


def space_in(doc: dict) -> SpaceSpec:
    try:
        return SpaceSpec(domain_in(doc["domain"]), scalars_in(doc["scalars"]),
                         doc.get("structure", "vector_space"),
                         doc.get("op", "add"), doc.get("label", ""))
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(f"bad space document: {exc}")


def bispace_out(b: BiSpec) -> dict:
    return {"schema": SCHEMA, "type": "bispace", "kind_label": b.kind_label,
            "scalar_mode": b.scalar_mode, "left": space_out(b.left),
            "right": space_out(b.right)}


def bispace_in(doc: dict) -> BiSpec:
    try:
        return BiSpec(space_in(doc["left"]), space_in(doc["right"]),
                      doc.get("scalar_mode", "shared"),
                      doc.get("kind_label", "set_bivector"))
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(f"bad bispace document: {exc}")


# -- maps ------------------------------------------------------------------------


def rule_out(r: MapRule) -> dict:
    out: Dict[str, Any] = {"rule": r.name}
    if r.factor is not None:
        out["factor"] = _value_out(r.factor)
    if r.slots is not None:
        out["slots"] = [(-1 if s is None else s) for s in r.slots]
        out["target_shape"] = list(r.target_shape)
    if r.domain is not None:
        out["domain"] = domain_out(r.domain)
    return out


def rule_in(doc: dict) -> MapRule:
    name = doc["rule"]
    if name == "identity":
        return MapRule("identity")
    if name == "scale":
        f = doc["factor"]
        return MapRule("scale", factor=Fraction(f) if isinstance(f, str) else f)
    if name == "project_to":
        return MapRule("project_to", domain=domain_in(doc["domain"]))
    if name == "remap":
        slots = tuple(None if s == -1 else s for s in doc["slots"])
        return MapRule("remap", slots=slots, target_shape=tuple(doc["target_shape"]))
    raise ParseError(f"unknown map rule {name!r}")


def map_out(m: LinearMap) -> dict:
    doc = {"schema": SCHEMA, "type": "map", "source": space_out(m.source),
           "target": space_out(m.target)}
    if isinstance(m.graph, MapRule):
        doc["graph"] = rule_out(m.graph)
    else:
        doc["graph"] = [{"from": element_out(k), "to": element_out(v)}
                        for k, v in sorted(m.graph.items(),
                                           key=lambda kv: kv[0].render())]
    return doc


def map_in(doc: dict) -> LinearMap:
    source, target = space_in(doc["source"]), space_in(doc["target"])
    g = doc["graph"]
    if isinstance(g, dict):
        return LinearMap(source, target, rule_in(g))
    table = {element_in(row["from"]): element_in(row["to"]) for row in g}
    return LinearMap(source, target, table)


def decomposition_in(doc: dict) -> Decomposition:
    return Decomposition(space_in(doc["parent"]),
                         tuple(domain_in(p) for p in doc["parts"]),
                         doc["mode"])


def decomposition_out(d: Decomposition) -> dict:
    return {"schema": SCHEMA, "type": "decomposition", "mode": d.mode,
            "parent": space_out(d.parent),
            "parts": [domain_out(p) for p in d.parts]}


# -- fuzzy -----------------------------------------------------------------------


def fuzzy_map_out(f: FuzzyMap) -> dict:
    if f.table is not None:
        return {"table": [{"element": element_out(k), "value": render_value(v.upper)}
                          for k, v in f.table]}
    out: Dict[str, Any] = {"builtin": f.builtin}
    if f.constant is not None:
        out["value"] = render_value(f.constant)
    return out


def fuzzy_map_in(doc: dict) -> FuzzyMap:
    if "table" in doc:
        pairs = tuple((element_in(r["element"]),
                       FuzzyInterval(Fraction(r["value"])))
                      for r in doc["table"])
        return FuzzyMap(table=pairs)
    if "builtin" not in doc:
        raise ParseError("fuzzy map needs a builtin or a table")
    c = doc.get("value")
    return FuzzyMap(builtin=doc["builtin"],
                    constant=Fraction(c) if c is not None else None)


def load_document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}")
    if not isinstance(doc, dict):
        raise ParseError("top-level document must be an object")
    if doc.get("schema", SCHEMA) != SCHEMA:
        raise ParseError(f"unsupported schema version {doc.get('schema')!r}")
    if "type" not in doc:
        raise ParseError("document needs a 'type' field")
    return doc
