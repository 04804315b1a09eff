"""Deterministic interleavers from permutation functions over finite fields and from Skolem-type sequences."""

from .families import (
    DicksonParams,
    MobiusParams,
    MonomialParams,
    RedeiParams,
    build_interleaver,
    inverse_params,
)
from .gf import FieldElement, FieldSpec, build_field
from .perm import CycleStructure, Permutation, compose, cycle_structure, invert, is_self_inverse
from .skolem import SkolemSequence, generate, modify, skolem_interleaver, validate

__all__ = [
    "CycleStructure",
    "DicksonParams",
    "FieldElement",
    "FieldSpec",
    "MobiusParams",
    "MonomialParams",
    "Permutation",
    "RedeiParams",
    "SkolemSequence",
    "build_field",
    "build_interleaver",
    "compose",
    "cycle_structure",
    "generate",
    "inverse_params",
    "invert",
    "is_self_inverse",
    "modify",
    "skolem_interleaver",
    "validate",
]
