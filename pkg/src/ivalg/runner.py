"""Dispatch a parsed definition document to the matching check.

Every entry returns a plain dict with at least a "verdict" key so the CLI
and the corpus runner share one execution path.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict

from .bistructure import check_bistructure, check_bisubstructure, classify_bi
from .carriers import render_value
from .domains import BudgetExceeded
from .elements import sort_key
from .fuzzy import check_fuzzy_type1, check_fuzzy_type2, eval_fuzzy
from .linalg import (check_decomposition, check_generating, check_independent,
                     kernel, minimal_generating_set, verify_map,
                     verify_projection, verify_pseudo_operator)
from .report import DEFAULT, CheckReport, RunConfig, Verdict
from .serialization import (ParseError, bispace_in, decomposition_in,
                            domain_in, element_in, element_out, fuzzy_map_in,
                            map_in, rule_in, scalars_in, space_in)
from .spaces import orbit_closure, orbit_subspaces
from .theorems import HypothesisViolated, verify_theorem_instance
from .verify import check_structure, check_substructure, classify


def _report_result(rep: CheckReport) -> Dict[str, Any]:
    out = rep.to_json()
    out["passed"] = rep.passed
    return out


def run_document(doc: dict, config: RunConfig = DEFAULT) -> Dict[str, Any]:
    t = doc["type"]
    handler = _HANDLERS.get(t)
    if handler is None:
        raise ParseError(f"unknown document type {t!r}")
    return handler(doc, config)


def _space(doc, config):
    return _report_result(check_structure(space_in(doc), config))


def _bispace(doc, config):
    return _report_result(check_bistructure(bispace_in(doc), config))


def _substructure(doc, config):
    spec = space_in(doc["space"])
    sub = domain_in(doc["sub_domain"])
    t = scalars_in(doc["sub_scalars"]) if "sub_scalars" in doc else None
    rep = check_substructure(spec, sub, t, doc.get("target_structure"),
                             doc.get("target_op"), config)
    return _report_result(rep)


def _bisubstructure(doc, config):
    b = bispace_in(doc["bispace"])
    rep = check_bisubstructure(
        b, domain_in(doc["left_domain"]), domain_in(doc["right_domain"]),
        scalars_in(doc["left_scalars"]) if "left_scalars" in doc else None,
        scalars_in(doc["right_scalars"]) if "right_scalars" in doc else None,
        doc.get("target_left"), doc.get("target_right"), config)
    return _report_result(rep)


def _classify(doc, config):
    if "left" in doc:
        cls = classify_bi(bispace_in(doc), config)
    else:
        cls = classify(space_in(doc), config)
    out = cls.to_json()
    out["passed"] = cls.is_structure.passed
    out["verdict"] = cls.is_structure.verdict.value
    return out


def _map(doc, config):
    return _report_result(verify_map(map_in(doc), config))


def _projection(doc, config):
    m = map_in(doc["map"])
    rep = verify_projection(m, domain_in(doc["part"]),
                            bool(doc.get("strict", False)), config)
    return _report_result(rep)


def _pseudo_projection(doc, config):
    m = map_in(doc["map"])
    rep = verify_pseudo_operator(m, rule_in(doc["tau"]),
                                 scalars_in(doc["sub_scalars"]), config)
    return _report_result(rep)


def _kernel(doc, config):
    res = kernel(map_in(doc["map"]), config)
    out: Dict[str, Any] = res.to_json()
    out["verdict"] = "holds"
    out["passed"] = True
    if doc.get("expect_defined") is not None:
        ok = res.defined == bool(doc["expect_defined"])
        out["verdict"] = "holds" if ok else "fails"
        out["passed"] = ok
    return out


def _decomposition(doc, config):
    return _report_result(check_decomposition(decomposition_in(doc), config))


def _independence(doc, config):
    spec = space_in(doc["space"])
    B = [element_in(e) for e in doc["elements"]]
    res = check_independent(B, spec, config)
    out = res.to_json()
    out["verdict"] = ("holds" if res.independent is not None else "unknown")
    out["passed"] = res.independent is not None
    return out


def _generation(doc, config):
    spec = space_in(doc["space"])
    B = [element_in(e) for e in doc["elements"]]
    res = check_generating(B, spec, config)
    out = res.to_json()
    out["verdict"] = "holds" if res.generates is not None else "unknown"
    out["passed"] = res.generates is not None
    return out


def _basis(doc, config):
    spec = space_in(doc["space"])
    B = minimal_generating_set(spec, config)
    return {"verdict": "holds", "passed": True,
            "basis": [element_out(e) for e in B], "size": len(B)}


def _subspaces(doc, config):
    spec = space_in(doc)
    subs = orbit_subspaces(spec, config)
    return {"verdict": "holds", "passed": True, "count": len(subs),
            "subspaces": [sorted(e.render() for e in s) for s in subs]}


def _fuzzy1(doc, config):
    spec = space_in(doc["space"])
    fmap = fuzzy_map_in(doc["map"])
    return _report_result(check_fuzzy_type1(spec, fmap, config))


def _fuzzy2(doc, config):
    dom = domain_in(doc["domain"])
    svals = [Fraction(v) if isinstance(v, str) else Fraction(v)
             for v in doc["scalars"]]
    rep = check_fuzzy_type2(dom, svals, doc.get("structure", "vector_space"),
                            doc.get("op"), config)
    return _report_result(rep)


def _fuzzy_eval(doc, config):
    fmap = fuzzy_map_in(doc["map"])
    e = element_in(doc["element"])
    value = eval_fuzzy(fmap, e)
    out = {"value": render_value(value.upper), "verdict": "holds", "passed": True}
    if "expected" in doc:
        ok = Fraction(doc["expected"]) == value.upper
        out["verdict"] = "holds" if ok else "fails"
        out["passed"] = ok
    return out


def _theorem(doc, config):
    try:
        rep = verify_theorem_instance(doc["id"], doc.get("params"), config)
    except HypothesisViolated as exc:
        return {"verdict": "rejected", "passed": False, "error": str(exc)}
    return _report_result(rep)


_HANDLERS = {
    "space": _space,
    "bispace": _bispace,
    "substructure": _substructure,
    "bisubstructure": _bisubstructure,
    "classify": _classify,
    "map": _map,
    "projection": _projection,
    "pseudo_projection": _pseudo_projection,
    "kernel": _kernel,
    "decomposition": _decomposition,
    "independence": _independence,
    "generation": _generation,
    "basis": _basis,
    "subspaces": _subspaces,
    "fuzzy1": _fuzzy1,
    "fuzzy2": _fuzzy2,
    "fuzzy_eval": _fuzzy_eval,
    "theorem": _theorem,
}
