"""Generalized rough sets over symmetric and transitive relations and their matroids."""

from .bridge import (
    InducedMatroid,
    PropositionReport,
    circuit_approx,
    circuits_from_relation,
    induced_matroid,
    induced_relation,
    round_trip_check,
    union_relation_check,
    verify_propositions,
)
from .errors import (
    InvalidCircuitFamily,
    InvalidIndependenceFamily,
    NotSymmetricTransitive,
    RoughMatroidError,
    UniverseMismatch,
    UniverseTooLarge,
    UnknownLabel,
)
from .matroid import (
    AxiomReport,
    Matroid,
    SetFamily,
    check_circuit_axioms,
    check_independence_axioms,
    circuits_of,
    family_intersection_probe,
    free_matroid,
    is_normal,
    matroid_from_circuits,
    matroid_from_independents,
    union,
)
from .relation import (
    PropertyReport,
    Relation,
    Universe,
    check_properties,
    classes,
    intersect,
    make_relation,
    successor,
)
from .rough import ApproxReport, ProbeReport, Property, approx_report, lower, probe_property, upper

__version__ = "0.1.0"
