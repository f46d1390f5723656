"""Registry of theorem-instance verifications.

Each entry validates its hypothesis (rejecting e.g. composite moduli where a
prime is required), constructs the claimed structures concretely and runs the
relevant checks; Holds means the instance confirms the claim.
"""

from __future__ import annotations

import itertools
from typing import Callable, Dict, List, Tuple

from fractions import Fraction

from .carriers import NAT, QPLUS, Zmod
from .domains import ExplicitDomain, PatternFamily, Slot, UnionDomain
from .factory import (canonical_space, explicit_set_scalars, explicit_space,
                      iv, matrix_family, nat_semigroup, poly_family, sc,
                      scalar_family, scalar_set, tuple_family, zn_group,
                      zn_semigroup, zn_set)
from .linalg import check_generating, check_independent, compose, LinearMap, MapRule, verify_map
from .report import (DEFAULT, EXHAUSTIVE, AxiomResult, CheckReport, RunConfig,
                     Verdict, Witness, fails, holds, merge)
from .scalars import GROUP, SEMIGROUP, SET, ScalarStructure
from .spaces import LINEAR_ALGEBRA, VECTOR_SPACE, SpaceSpec
from .verify import check_structure, check_substructure, classify
from .bistructure import BiSpec, check_bistructure, classify_bi
from .fuzzy import check_fuzzy_type2


class HypothesisViolated(ValueError):
    """Parameters fall outside the theorem's hypothesis."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n ** 0.5) + 1))


def _require_prime(p):
    if not _is_prime(p):
        raise HypothesisViolated(f"{p} is not prime")


def _require_composite(n):
    if n < 4 or _is_prime(n):
        raise HypothesisViolated(f"{n} is not composite")


def _claim(name: str, ok: bool, witness_data=None, message="") -> CheckReport:
    if ok:
        return holds([AxiomResult(name, True, EXHAUSTIVE)])
    return fails(Witness(name, witness_data or {}, message),
                 [AxiomResult(name, False, EXHAUSTIVE)])


def _and(*reports: CheckReport) -> CheckReport:
    return merge(reports)


# -- chapter 2.1 -------------------------------------------------------------


def thm_2_1_1(params, config):
    elems = [sc(0, NAT), sc(2, NAT, 1), sc(7, NAT, 4), sc(3, NAT, -2),
             sc(21, NAT, 4), sc(37, NAT, -45), sc(7, NAT, 3), sc(2011, NAT, 147)]
    spec = explicit_space(elems, explicit_set_scalars(NAT, (0, 1)))
    cls = classify(spec, config)
    return _claim("pseudo_simple_over_01", cls.pseudo_simple.value is True)


def thm_2_1_2(params, config):
    lo, hi = params.get("lo", 5), params.get("hi", 7)
    spec = explicit_space([sc(0, NAT), sc(hi, NAT, lo)],
                          explicit_set_scalars(NAT, (0, 1)))
    cls = classify(spec, config)
    return _claim("doubly_simple", cls.doubly_simple is True)


def thm_2_1_3(params, config):
    # intersection of subset subspaces is again a subset subspace
    parent = SpaceSpec(UnionDomain(tuple(
        scalar_family(NAT, k) for k in (2, 6, 5, 11, 14))),
        ScalarStructure(NAT, SET), VECTOR_SPACE)
    lcm = 2310  # lcm(2, 6, 5, 11, 14)
    w = scalar_family(NAT, lcm)
    t = ScalarStructure(NAT, SET, None, lcm)
    return check_substructure(parent, w, t, config=config)


def thm_2_1_4(params, config):
    spec = SpaceSpec(UnionDomain((scalar_family(NAT, 2), scalar_family(NAT, 3),
                                  scalar_family(NAT, 5), scalar_family(NAT, 7))),
                     ScalarStructure(NAT, SET), VECTOR_SPACE)
    B = [sc(2, NAT), sc(3, NAT), sc(5, NAT), sc(7, NAT)]
    gen = check_generating(B, spec, config)
    ind = check_independent(B, spec, config)
    first = _claim("generating_implies_independent",
                   bool(gen.generates) and ind.independent is True)
    # composition of verified maps is a verified map
    base = canonical_space(6, SEMIGROUP, VECTOR_SPACE)
    m1 = LinearMap(base, base, MapRule("scale", factor=2))
    m2 = LinearMap(base, base, MapRule("scale", factor=3))
    r1, r2 = verify_map(m1, config), verify_map(m2, config)
    comp = verify_map(compose(m1, m2), config)
    second = _claim("composition_verified",
                    r1.passed and r2.passed and comp.passed)
    return _and(first, second)


def thm_2_1_5(params, config):
    p = params.get("p", 5)
    _require_prime(p)
    spec = SpaceSpec(scalar_family(Zmod(p)),
                     explicit_set_scalars(Zmod(p), (0, 1)), LINEAR_ALGEBRA)
    cls = classify(spec, config)
    return _claim("doubly_simple", cls.doubly_simple is True, {"p": p})


# -- chapter 2.2 -------------------------------------------------------------


def thm_2_2_1(params, config):
    p = params.get("p", 5)
    _require_prime(p)
    cls = classify(canonical_space(p, SEMIGROUP, VECTOR_SPACE), config)
    return _claim("simple", cls.simple.value is True, {"p": p})


def composite_subspace_sweep(m: int, config) -> Tuple[CheckReport, List]:
    _require_composite(m)
    spec = canonical_space(m, SEMIGROUP, VECTOR_SPACE)
    primes = [p for p in range(2, m) if _is_prime(p) and m % p == 0]
    discovered = []
    reports = []
    for p in primes:
        sub = ExplicitDomain(tuple(sc((p * k) % m, Zmod(m))
                                   for k in range(m)))
        rep = check_substructure(spec, sub, config=config)
        reports.append(rep)
        discovered.append((p, sub))
    return merge(reports), discovered


def thm_2_2_2(params, config):
    m = params.get("m", 30)
    rep, _ = composite_subspace_sweep(m, config)
    return rep


def thm_2_2_3(params, config):
    p = params.get("p", 5)
    _require_prime(p)
    cls = classify(canonical_space(p, SEMIGROUP, LINEAR_ALGEBRA), config)
    return _claim("doubly_simple", cls.doubly_simple is True, {"p": p})


def thm_2_2_4(params, config):
    p = params.get("p", 3)
    spec = SpaceSpec(scalar_family(NAT), nat_semigroup(), LINEAR_ALGEBRA)
    tp = scalar_family(NAT, p)
    plain = check_substructure(spec, tp, config=config)
    over_sub = check_substructure(spec, tp, nat_semigroup(p), config=config)
    return _and(plain, over_sub)


# -- chapter 3.2 -------------------------------------------------------------


def thm_3_2_1(params, config):
    dom = matrix_family(QPLUS, 2, 2, fuzzy=True)
    svals = [Fraction(0), Fraction(1)] + [Fraction(1, 2 ** k) for k in range(1, 6)]
    alg = check_fuzzy_type2(dom, svals, "linear_algebra", "max", config)
    vs = check_fuzzy_type2(dom, svals, "vector_space", None, config)
    return _claim("algebra_implies_space", alg.passed and vs.passed)


# -- chapter 4 ---------------------------------------------------------------


def _bi_canonical(n1: int, n2: int, kind1: str, kind2: str, structure: str,
                  label: str, mode: str = "biscalar") -> BiSpec:
    mk = {SET: zn_set, SEMIGROUP: zn_semigroup, GROUP: zn_group}
    left = SpaceSpec(matrix_family(Zmod(n1), 2, 2, tied=True), mk[kind1](n1),
                     structure)
    right = SpaceSpec(matrix_family(Zmod(n2), 3, 4, tied=True), mk[kind2](n2),
                      structure)
    return BiSpec(left, right, mode, label)


def _bi_shared(n: int, kind: str, structure: str, label: str,
               simple_sides: bool = True) -> BiSpec:
    mk = {SET: zn_set, SEMIGROUP: zn_semigroup, GROUP: zn_group}
    if simple_sides:
        left = SpaceSpec(matrix_family(Zmod(n), 2, 2, tied=True), mk[kind](n),
                         structure)
        right = SpaceSpec(tuple_family(Zmod(n), 5, tied=True), mk[kind](n),
                          structure)
    else:
        left = SpaceSpec(scalar_family(Zmod(n)), mk[kind](n), structure)
        right = SpaceSpec(tuple_family(Zmod(n), 3), mk[kind](n), structure)
    return BiSpec(left, right, "shared", label)


def _downgrade(b: BiSpec) -> BiSpec:
    left = SpaceSpec(b.left.domain, b.left.scalars, VECTOR_SPACE, b.left.op)
    right = SpaceSpec(b.right.domain, b.right.scalars, VECTOR_SPACE, b.right.op)
    return BiSpec(left, right, b.scalar_mode, b.kind_label)


def thm_4_1_1(params, config):
    left = SpaceSpec(matrix_family(Zmod(7), 2, 2, tied=True), zn_set(7),
                     LINEAR_ALGEBRA)
    right = SpaceSpec(poly_family(Zmod(7), 9), zn_set(7), LINEAR_ALGEBRA)
    b = BiSpec(left, right, "shared", "set_bialgebra")
    alg = check_bistructure(b, config)
    vs = check_bistructure(_downgrade(b), config)
    return _claim("algebra_implies_space", alg.passed and vs.passed)


def thm_4_1_2(params, config):
    b = _bi_shared(8, SET, LINEAR_ALGEBRA, "set_bialgebra")
    alg = check_bistructure(b, config)
    vs = check_bistructure(_downgrade(b), config)
    return _claim("algebra_implies_space", alg.passed and vs.passed)


def thm_4_1_3(params, config):
    # a set bialgebra stays a valid structure when one side is weakened to a
    # vector space (the quasi reading)
    b = _bi_shared(9, SET, LINEAR_ALGEBRA, "set_bialgebra")
    alg = check_bistructure(b, config)
    mixed = BiSpec(b.left,
                   SpaceSpec(b.right.domain, b.right.scalars, VECTOR_SPACE),
                   "shared", "semi_quasi")
    return _claim("algebra_implies_quasi", alg.passed
                  and check_bistructure(mixed, config).passed)


def _doubly_simple_quasi(p: int) -> BiSpec:
    left = SpaceSpec(matrix_family(Zmod(p), 2, 2, tied=True), zn_set(p),
                     LINEAR_ALGEBRA)
    plain = PatternFamily(Zmod(p), "tuple", (3,),
                          tuple(Slot(0, 1, 1) for _ in range(3)), 1)
    right = SpaceSpec(plain, zn_set(p), LINEAR_ALGEBRA)
    return BiSpec(left, right, "shared", "quasi_set")


def thm_4_1_4(params, config):
    p = params.get("p", 5)
    _require_prime(p)
    cls = classify_bi(_doubly_simple_quasi(p), config)
    return _claim("doubly_implies_simple",
                  cls.doubly_simple is True and cls.simple.value is True, {"p": p})


def thm_4_1_5(params, config):
    p = params.get("p", 5)
    _require_prime(p)
    cls = classify_bi(_doubly_simple_quasi(p), config)
    return _claim("doubly_implies_pseudo",
                  cls.doubly_simple is True and cls.pseudo_simple.value is True,
                  {"p": p})


def thm_4_2_1(params, config):
    p = params.get("p", 5)
    _require_prime(p)
    both = classify_bi(_bi_shared(p, SEMIGROUP, VECTOR_SPACE, "semigroup"),
                       config)
    first = _claim("both_simple_sides_doubly", both.doubly_simple is True,
                   {"p": p})
    semi_spec = BiSpec(
        SpaceSpec(poly_family(Zmod(p), 8), zn_semigroup(p), VECTOR_SPACE),
        SpaceSpec(matrix_family(Zmod(p), 2, 2, tied=True), zn_semigroup(p),
                  VECTOR_SPACE),
        "shared", "semigroup")
    semi = classify_bi(semi_spec, config)
    second = _claim("one_simple_side_semi", semi.semi_simple is True, {"p": p})
    return _and(first, second)


def thm_4_2_2(params, config):
    b = _bi_shared(6, SEMIGROUP, LINEAR_ALGEBRA, "semigroup")
    alg = check_bistructure(b, config)
    vs = check_bistructure(_downgrade(b), config)
    return _claim("algebra_implies_space", alg.passed and vs.passed)


def group_bivector_instance(p: int, structure: str = VECTOR_SPACE) -> BiSpec:
    left = SpaceSpec(scalar_family(Zmod(p)), zn_group(p), structure)
    right = SpaceSpec(tuple_family(Zmod(p), 2), zn_group(p), structure)
    return BiSpec(left, right, "shared", "group")


def thm_4_3_1(params, config):
    p = params.get("p", 5)
    _require_prime(p)
    cls = classify_bi(group_bivector_instance(p), config)
    return _claim("pseudo_simple", cls.pseudo_simple.value is True, {"p": p})


def thm_4_3_2(params, config):
    n = params.get("n", 12)
    _require_composite(n)
    cls = classify_bi(group_bivector_instance(n), config)
    return _claim("not_pseudo_not_simple",
                  cls.pseudo_simple.value is False and cls.simple.value is False,
                  {"n": n})


def thm_4_3_3(params, config):
    # a group interval bivector space whose sides cannot form a bialgebra
    # (mixed shapes make addition undefined)
    left_dom = UnionDomain((scalar_family(Zmod(5)), tuple_family(Zmod(5), 2)))
    left = SpaceSpec(left_dom, zn_group(5), VECTOR_SPACE)
    right = SpaceSpec(tuple_family(Zmod(5), 3), zn_group(5), VECTOR_SPACE)
    b = BiSpec(left, right, "shared", "group")
    vs = check_bistructure(b, config)
    try:
        SpaceSpec(left_dom, zn_group(5), LINEAR_ALGEBRA)
        algebra_possible = True
    except Exception:
        algebra_possible = False
    return _claim("bivector_not_bialgebra", vs.passed and not algebra_possible)


def thm_4_3_4(params, config):
    b = group_bivector_instance(7, LINEAR_ALGEBRA)
    alg = check_bistructure(b, config)
    vs = check_bistructure(_downgrade(b), config)
    return _claim("algebra_implies_space", alg.passed and vs.passed)


def thm_4_3_5(params, config):
    p = params.get("p", 5)
    _require_prime(p)
    cls = classify_bi(group_bivector_instance(p, LINEAR_ALGEBRA), config)
    return _claim("pseudo_simple", cls.pseudo_simple.value is True, {"p": p})


def thm_4_3_6(params, config):
    n = params.get("n", 12)
    _require_composite(n)
    cls = classify_bi(group_bivector_instance(n, LINEAR_ALGEBRA), config)
    return _claim("not_simple_not_pseudo",
                  cls.simple.value is False and cls.pseudo_simple.value is False,
                  {"n": n})


def thm_4_3_7(params, config):
    p = params.get("p", 5)
    _require_prime(p)
    left = SpaceSpec(scalar_family(Zmod(p)), zn_group(p), LINEAR_ALGEBRA)
    right = SpaceSpec(tuple_family(Zmod(p), 2), zn_group(p), VECTOR_SPACE)
    cls = classify_bi(BiSpec(left, right, "shared", "group"), config)
    return _claim("pseudo_simple", cls.pseudo_simple.value is True, {"p": p})


def thm_4_3_8(params, config):
    n = params.get("n", 12)
    _require_composite(n)
    left = SpaceSpec(scalar_family(Zmod(n)), zn_group(n), LINEAR_ALGEBRA)
    right = SpaceSpec(tuple_family(Zmod(n), 2), zn_group(n), VECTOR_SPACE)
    cls = classify_bi(BiSpec(left, right, "shared", "group"), config)
    return _claim("not_doubly", cls.doubly_simple is False, {"n": n})


def thm_4_4_1(params, config):
    b = _bi_canonical(7, 10, SEMIGROUP, SEMIGROUP, LINEAR_ALGEBRA, "bisemigroup")
    alg = check_bistructure(b, config)
    vs = check_bistructure(_downgrade(b), config)
    return _claim("algebra_implies_space", alg.passed and vs.passed)


def thm_4_4_2(params, config):
    p, q = params.get("p", 7), params.get("q", 11)
    _require_prime(p), _require_prime(q)
    if p == q:
        raise HypothesisViolated("p and q must be distinct")
    cls = classify_bi(_bi_canonical(p, q, SEMIGROUP, SEMIGROUP, LINEAR_ALGEBRA,
                                    "bisemigroup"), config)
    return _claim("pseudo_simple", cls.pseudo_simple.value is True,
                  {"p": p, "q": q})


def thm_4_4_3(params, config):
    m, n = params.get("m", 6), params.get("n", 10)
    _require_composite(m), _require_composite(n)
    cls = classify_bi(_bi_canonical(m, n, SEMIGROUP, SEMIGROUP, LINEAR_ALGEBRA,
                                    "bisemigroup"), config)
    return _claim("not_doubly", cls.doubly_simple is False, {"m": m, "n": n})


def thm_4_4_4(params, config):
    n = params.get("n", 6)
    left = SpaceSpec(scalar_family(NAT), nat_semigroup(), LINEAR_ALGEBRA)
    right = SpaceSpec(scalar_family(Zmod(n)), zn_semigroup(n), LINEAR_ALGEBRA)
    cls = classify_bi(BiSpec(left, right, "biscalar", "bisemigroup"), config)
    return _claim("not_doubly", cls.doubly_simple is False, {"n": n})


def thm_4_4_5(params, config):
    p, q = params.get("p", 3), params.get("q", 5)
    _require_prime(p), _require_prime(q)
    if p == q:
        raise HypothesisViolated("p and q must be distinct")
    left = SpaceSpec(tuple_family(Zmod(p), 3), zn_group(p), VECTOR_SPACE)
    right = SpaceSpec(tuple_family(Zmod(q), 2), zn_group(q), VECTOR_SPACE)
    cls = classify_bi(BiSpec(left, right, "biscalar", "bigroup"), config)
    return _and(
        _claim("pseudo_simple", cls.pseudo_simple.value is True,
               {"p": p, "q": q}),
        _claim("not_doubly_in_general", cls.doubly_simple is False,
               {"p": p, "q": q}))


def thm_4_4_6(params, config):
    m, n = params.get("m", 6), params.get("n", 12)
    _require_composite(m), _require_composite(n)
    left = SpaceSpec(scalar_family(Zmod(m)), zn_group(m), VECTOR_SPACE)
    right = SpaceSpec(tuple_family(Zmod(n), 2), zn_group(n), VECTOR_SPACE)
    cls = classify_bi(BiSpec(left, right, "biscalar", "bigroup"), config)
    return _claim("not_simple_not_pseudo",
                  cls.simple.value is False and cls.pseudo_simple.value is False,
                  {"m": m, "n": n})


def thm_4_4_7(params, config):
    n = params.get("n", 12)
    _require_composite(n)
    left = SpaceSpec(scalar_family(Zmod(n)), zn_group(n), LINEAR_ALGEBRA)
    right = SpaceSpec(scalar_family(NAT), nat_semigroup(), LINEAR_ALGEBRA)
    cls = classify_bi(BiSpec(left, right, "biscalar", "group_semigroup"), config)
    return _claim("not_simple_not_pseudo",
                  cls.simple.value is False and cls.pseudo_simple.value is False,
                  {"n": n})


def thm_4_4_8(params, config):
    p = params.get("p", 5)
    _require_prime(p)
    left = SpaceSpec(tuple_family(Zmod(p), 2), zn_group(p), VECTOR_SPACE)
    right = SpaceSpec(scalar_family(NAT), nat_semigroup(), VECTOR_SPACE)
    cls = classify_bi(BiSpec(left, right, "biscalar", "group_semigroup"), config)
    return _and(
        _claim("pseudo_simple", cls.pseudo_simple.value is True, {"p": p}),
        _claim("not_doubly_in_general", cls.doubly_simple is not True, {"p": p}))


def thm_4_4_9(params, config):
    left = SpaceSpec(scalar_family(Zmod(11)),
                     explicit_set_scalars(Zmod(11), (0, 1, 3)), LINEAR_ALGEBRA)
    right = SpaceSpec(tuple_family(Zmod(9), 2), zn_group(9), LINEAR_ALGEBRA)
    b = BiSpec(left, right, "biscalar", "set_group")
    alg = check_bistructure(b, config)
    vs = check_bistructure(_downgrade(b), config)
    return _claim("algebra_implies_space", alg.passed and vs.passed)


REGISTRY: Dict[str, Callable] = {
    "thm-2.1.1": thm_2_1_1, "thm-2.1.2": thm_2_1_2, "thm-2.1.3": thm_2_1_3,
    "thm-2.1.4": thm_2_1_4, "thm-2.1.5": thm_2_1_5,
    "thm-2.2.1": thm_2_2_1, "thm-2.2.2": thm_2_2_2, "thm-2.2.3": thm_2_2_3,
    "thm-2.2.4": thm_2_2_4,
    "thm-3.2.1": thm_3_2_1,
    "thm-4.1.1": thm_4_1_1, "thm-4.1.2": thm_4_1_2, "thm-4.1.3": thm_4_1_3,
    "thm-4.1.4": thm_4_1_4, "thm-4.1.5": thm_4_1_5,
    "thm-4.2.1": thm_4_2_1, "thm-4.2.2": thm_4_2_2,
    "thm-4.3.1": thm_4_3_1, "thm-4.3.2": thm_4_3_2, "thm-4.3.3": thm_4_3_3,
    "thm-4.3.4": thm_4_3_4, "thm-4.3.5": thm_4_3_5, "thm-4.3.6": thm_4_3_6,
    "thm-4.3.7": thm_4_3_7, "thm-4.3.8": thm_4_3_8,
    "thm-4.4.1": thm_4_4_1, "thm-4.4.2": thm_4_4_2, "thm-4.4.3": thm_4_4_3,
    "thm-4.4.4": thm_4_4_4, "thm-4.4.5": thm_4_4_5, "thm-4.4.6": thm_4_4_6,
    "thm-4.4.7": thm_4_4_7, "thm-4.4.8": thm_4_4_8, "thm-4.4.9": thm_4_4_9,
}


def verify_theorem_instance(theorem_id: str, params: dict = None,
                            config: RunConfig = DEFAULT) -> CheckReport:
    if theorem_id not in REGISTRY:
        raise KeyError(f"unknown theorem id {theorem_id!r}")
    return REGISTRY[theorem_id](params or {}, config)
