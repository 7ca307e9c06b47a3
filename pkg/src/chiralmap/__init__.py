"""Constructive verifier for chiral maps with alternating automorphism groups."""

from ._accel import BACKEND
from .chirality import (
    ChiralityVerdict,
    abstract_reflexibility,
    check_lemma_2_6,
    check_lemma_2_7,
    conjugation_search,
    decide_chirality,
)
from .constructions import (
    ConstructionId,
    GeneratorSet,
    HyperbolicType,
    build,
    dispatch,
    dualize,
    from_generators,
    table1_lookup,
)
from .errors import ChiralMapError, NotHyperbolic
from .groups import GroupClassification, Verdict, classify, group_order, is_primitive, is_transitive
from .maps import MapRecord, build_record, export_dot
from .perm import Parity, Permutation, format_cycles, from_cycles, parse_cycles
from .report import VerificationReport, verify_generators, verify_type

__all__ = [
    "BACKEND",
    "ChiralMapError",
    "ChiralityVerdict",
    "ConstructionId",
    "GeneratorSet",
    "GroupClassification",
    "HyperbolicType",
    "MapRecord",
    "NotHyperbolic",
    "Parity",
    "Permutation",
    "Verdict",
    "VerificationReport",
    "abstract_reflexibility",
    "build",
    "build_record",
    "check_lemma_2_6",
    "check_lemma_2_7",
    "classify",
    "conjugation_search",
    "decide_chirality",
    "dispatch",
    "dualize",
    "export_dot",
    "format_cycles",
    "from_cycles",
    "from_generators",
    "group_order",
    "is_primitive",
    "is_transitive",
    "parse_cycles",
    "table1_lookup",
    "verify_generators",
    "verify_type",
]
