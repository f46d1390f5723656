"""ivalg: verification toolkit for interval algebraic structures.

Represents intervals [0, a] (and general [x, y]) over exact finite and
countable carriers, builds composite elements, and mechanically checks
structure axioms, substructures, maps, decompositions, fuzzy layers and
bistructures, with replayable witnesses for every failure.
"""

from .carriers import (NAT, QPLUS, Carrier, CarrierMismatch, Interval,
                       NotCanonical, OrderViolation, Zmod, interval_add,
                       interval_mul, interval_scalar_mul, parse_interval,
                       zero_interval)
from .elements import (IntervalElement, ShapeMismatch, element_add,
                       element_max, element_min, element_scalar_mul,
                       matrix_element, poly_element, scalar_element,
                       tuple_element)
from .domains import (ExplicitDomain, PatternFamily, Slot, UnionDomain,
                      domain_contains)
from .scalars import ScalarStructure
from .spaces import SpaceSpec, orbit_closure, orbit_subspaces
from .report import CheckReport, RunConfig, Verdict, Witness
from .verify import Classification, check_structure, check_substructure, classify
from .linalg import (Decomposition, LinearMap, MapRule, check_decomposition,
                     check_generating, check_independent, compose, kernel,
                     minimal_generating_set, verify_map, verify_projection,
                     verify_pseudo_operator)
from .fuzzy import (FuzzyInterval, FuzzyMap, check_fuzzy_type1,
                    check_fuzzy_type2, eval_fuzzy)
from .bistructure import BiSpec, check_bistructure, check_bisubstructure, classify_bi
from .theorems import verify_theorem_instance

__version__ = "0.1.0"
