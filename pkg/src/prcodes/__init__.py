"""Polynomial remainder codes over F[x] with joint error-and-erasure decoding.

The public surface: finite fields (field), dense polynomials (poly), code
construction and the residue transform pair (code), the partial-GCD
decoders (decode), reference decoders (oracle), the seeded channel and
trial harness (channel), text formats (formats) and the CLI (cli).
"""

from .backend import OpCounter, backend_name, have_kernel, set_backend
from .channel import CorruptionPlan, SimOptions, corrupt, random_plan, simulate
from .code import (Code, ReceivedWord, dd_distance, degree_weight, encode,
                   from_residues, rs_code, to_residues)
from .decode import (DecodeOptions, DecodeOutcome, Failure, GcdState, StopKind,
                     StopRule, decode, extended_gcd1, extended_gcd2, gcd_engine,
                     interpolate_with_locator, locator_for, locator_support,
                     modified_received, partial_gcd1, partial_gcd2,
                     punctured_modulus)
from .field import Field, FieldElement, FieldMismatchError
from .formats import FormatError, dump_code, dump_word, parse_code, parse_word
from .oracle import decode_modified_transform, nearest_codeword, shorten
from .poly import Poly, ext_gcd, is_irreducible, mod_inverse, random_irreducible

__version__ = "0.1.0"

__all__ = [
    "Code", "CorruptionPlan", "DecodeOptions", "DecodeOutcome", "Failure",
    "Field", "FieldElement", "FieldMismatchError", "FormatError", "GcdState",
    "OpCounter", "Poly", "ReceivedWord", "SimOptions", "StopKind", "StopRule",
    "backend_name", "corrupt", "dd_distance", "decode",
    "decode_modified_transform", "degree_weight", "dump_code", "dump_word",
    "encode", "ext_gcd", "extended_gcd1", "extended_gcd2", "from_residues",
    "gcd_engine", "have_kernel", "interpolate_with_locator", "is_irreducible",
    "locator_for", "locator_support", "mod_inverse", "modified_received",
    "nearest_codeword",
    "parse_code", "parse_word", "partial_gcd1", "partial_gcd2",
    "punctured_modulus", "random_irreducible", "random_plan", "rs_code",
    "set_backend", "shorten", "simulate", "to_residues",
]
