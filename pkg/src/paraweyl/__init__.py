"""Left ideals of the Weyl algebra with central parameters, over Q."""

from .commutative import CommIdeal, CommPoly
from .errors import NotAGroebnerBasis, PreconditionError, VerificationError
from .groebner import (
    GroebnerBasisR,
    buchberger_r,
    dense_open_certificate,
    eliminate_to_a,
    fiber_nonzero,
    h_poly,
    left_divide,
    reduce_gb,
    specialize_gb,
)
from .monomial import Monomial
from .oracle import Verdict, bounded_membership
from .parsing import IdealFile, ParseError, load_ideal_file, parse_comm, parse_operator
from .primary import PrimaryComponentInput, lemma21_f, lemma24_check, thm22_h, verify_lemma24
from .weyl import LeftIdealPresentation, RationalPoint, WeylOperator, plc, plm, specialize

__all__ = [
    "CommIdeal", "CommPoly", "GroebnerBasisR", "IdealFile", "LeftIdealPresentation",
    "Monomial", "NotAGroebnerBasis", "ParseError", "PreconditionError", "PrimaryComponentInput",
    "RationalPoint", "Verdict", "VerificationError", "WeylOperator", "bounded_membership",
    "buchberger_r", "dense_open_certificate", "eliminate_to_a", "fiber_nonzero", "h_poly",
    "left_divide", "lemma21_f", "lemma24_check", "load_ideal_file", "parse_comm",
    "parse_operator", "plc", "plm", "reduce_gb", "specialize", "specialize_gb", "thm22_h",
    "verify_lemma24",
]
