"""Exact tools for integral discounted-sum automata: evaluation, gap-vector
determinization, and a certified determinizability decision procedure."""

from .core import (
    Automaton,
    AutomatonError,
    ParseError,
    ResourceLimitError,
    Transition,
    ValidationError,
    export_dot,
    parse_automaton,
    serialize_automaton,
)
from .semantics import INF, ScaledValue, evaluate, min_value, normalized_diff
from .constants import ConstantSet, compute_constants, max_weight
from .nfa import boolean_accepts, difference_witness
from .vectors import GapVector, VectorGraph, explore, initial_vector, vector_step
from .determinize import DDA, auto_determinize, determinize
from .decide import (
    Determinizable,
    NotDeterminizable,
    SeparationWitness,
    check_separation,
    decide,
    validate_witness,
)
from .gaps import GapRecord, enumerate_gaps, find_recovery_suffix, gap
from .oracle import enumerate_runs, equivalent_up_to

__all__ = [name for name in dir() if not name.startswith("_")]
