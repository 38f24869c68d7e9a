# Copyright (C) 2024 Nice Zombies
"""Effective constructions on countable groups and fields."""
from __future__ import annotations

__all__: list[str] = [
    "AlgebraicFieldDiagram",
    "And",
    "App",
    "Atom",
    "AuditReport",
    "BitStream",
    "Chip",
    "ChipScheduler",
    "ClosureStream",
    "Coded",
    "CompositionError",
    "Const",
    "CorruptStreamError",
    "CountableAnd",
    "CountableOr",
    "CycloElement",
    "CycloField",
    "DerivedStream",
    "Detector",
    "DiagramStream",
    "DivisibilityType",
    "EmittedStream",
    "Enumeration",
    "Exists",
    "Fact",
    "FieldMorphism",
    "FieldQuotient",
    "Forall",
    "GroupFamilyView",
    "HenselElement",
    "HenselField",
    "InfSentence",
    "IntConst",
    "InvalidBasisError",
    "IsoStatus",
    "JoinedStream",
    "LinearExprSet",
    "MalformedFactError",
    "MonomialCombination",
    "MorphismViolationError",
    "Multiple",
    "NestingViolationError",
    "NoSimpleRootError",
    "NormalizationError",
    "OnesCount",
    "Operator",
    "Or",
    "PhiField",
    "Poly",
    "Power",
    "ProbeReport",
    "QQ",
    "RadicalFieldDiagram",
    "RatFunc",
    "RatFuncField",
    "RationalField",
    "RawDiagram",
    "Relabeling",
    "RootFormulaSet",
    "RootSetApproximation",
    "RunOfOnes",
    "SequencingError",
    "Series",
    "Sigma3Reduction",
    "Sigma3Relation",
    "Signature",
    "StepCounter",
    "SubgroupDiagram",
    "SubgroupPresentation",
    "Symbol",
    "Term",
    "TranscendentalDiagram",
    "TripleMachine",
    "TypeEquivalenceVerdict",
    "UnsupportedConductorError",
    "Var",
    "Verdict",
    "add_Z",
    "all_primes_once",
    "audit_invariants",
    "audit_stream",
    "check_homomorphism",
    "cof_to_tfab1",
    "cof_type",
    "combination",
    "compose",
    "constant_relation",
    "cyclo_inverse",
    "cyclotomic",
    "cyclotomic_field",
    "decode_fact",
    "detector_family",
    "direct_sum",
    "e0_relation",
    "e0_to_tfab1",
    "e0_type",
    "eval_bounded",
    "evaluate",
    "example_field",
    "fact_index",
    "format_sentence",
    "format_series",
    "has_primitive_root",
    "height",
    "helem_eq",
    "hensel_lift",
    "hensel_morphism",
    "henselize",
    "independence_check",
    "inf_reduction",
    "integer_constant",
    "integer_polynomial",
    "integer_polynomials",
    "iso_rank1",
    "join",
    "lift_candidates",
    "monomial_map",
    "multiple",
    "naive_oracle",
    "nth_prime",
    "odd_primes_product",
    "owner",
    "pair",
    "pair_tuple",
    "pair_with_constant",
    "parse_poly",
    "parse_rational",
    "phi_morphism",
    "phi_object",
    "pi2_reduction",
    "poly_gcd",
    "poly_index",
    "poly_xgcd",
    "prime_position",
    "project",
    "pure_transcendental",
    "quotient_eq",
    "radical_field",
    "rank1_from_type",
    "rationals_of_height",
    "read_diagram",
    "reduce_sigma3",
    "relabel",
    "residue",
    "resultant",
    "ring_mul",
    "root_evidence",
    "root_set_operator",
    "scott_fd",
    "scott_tfab",
    "sentence_to_json",
    "sigma_level",
    "transcendental_morphism",
    "triple_prime",
    "unpair",
    "unpair_tuple",
    "v_t",
    "witnessed_divisibility",
    "write_diagram",
    "zero_divisor_probe",
]
__version__: str = "1.0.0"

from effalg._diagrams import (
    CompositionError, CorruptStreamError, DerivedStream, DiagramStream,
    EmittedStream, Fact, JoinedStream, MalformedFactError, Operator,
    RawDiagram, Relabeling, Signature, Symbol, audit_stream, compose,
    decode_fact, fact_index, join, pair, pair_tuple, pair_with_constant,
    project, read_diagram, relabel, unpair, unpair_tuple, write_diagram,
)
from effalg._exact import (
    CycloElement, CycloField, Poly, QQ, RatFunc, RatFuncField, RationalField,
    UnsupportedConductorError, cyclo_inverse, cyclotomic, has_primitive_root,
    parse_poly, parse_rational, poly_gcd, poly_xgcd, resultant,
)
from effalg._oracles import (
    BitStream, Detector, Enumeration, OnesCount, RunOfOnes, StepCounter,
    detector_family,
)
from effalg._tfab import (
    DivisibilityType, IsoStatus, SubgroupDiagram, SubgroupPresentation,
    TypeEquivalenceVerdict, add_Z, all_primes_once, cof_to_tfab1, cof_type,
    combination, direct_sum, e0_to_tfab1, e0_type, height, independence_check,
    iso_rank1, multiple, nth_prime, prime_position, rank1_from_type,
    rationals_of_height, witnessed_divisibility,
)
from effalg._fields import (
    AlgebraicFieldDiagram, ClosureStream, Coded, FieldMorphism,
    MorphismViolationError, NestingViolationError, RadicalFieldDiagram,
    RootSetApproximation, TranscendentalDiagram, cyclotomic_field, evaluate,
    example_field, inf_reduction, integer_constant, integer_polynomial,
    integer_polynomials, odd_primes_product, pi2_reduction, poly_index,
    pure_transcendental, radical_field, root_set_operator,
    transcendental_morphism,
)
from effalg._grp2fld import (
    FieldQuotient, MonomialCombination, PhiField, ProbeReport,
    check_homomorphism, monomial_map, phi_morphism, phi_object, quotient_eq,
    ring_mul, root_evidence, zero_divisor_probe,
)
from effalg._hensel import (
    HenselElement, HenselField, NoSimpleRootError, NormalizationError, Series,
    format_series, helem_eq, hensel_lift, hensel_morphism, henselize,
    lift_candidates, residue, v_t,
)
from effalg._scott import (
    And, App, Atom, Const, CountableAnd, CountableOr, Exists, Forall,
    InfSentence, IntConst, InvalidBasisError, LinearExprSet, Multiple, Or,
    Power, RootFormulaSet, Term, Var, Verdict, eval_bounded, format_sentence,
    scott_fd, scott_tfab, sentence_to_json, sigma_level,
)
from effalg._sigma3 import (
    AuditReport, Chip, ChipScheduler, GroupFamilyView, SequencingError,
    Sigma3Reduction, Sigma3Relation, TripleMachine, audit_invariants,
    constant_relation, e0_relation, naive_oracle, owner, reduce_sigma3,
    triple_prime,
)
