"""Equiangular tight frames from Paley tournaments, skew conference matrices
and quadratic residues, with exact and numerical verification."""

from .characters import (
    additive_character,
    gauss_sum,
    quadratic_character,
    residues,
    sigma,
)
from .constructions import (
    conference_etf,
    conference_frame,
    conference_skew,
    conjecture_experiment,
    drop_one_canonical,
    extract_core,
    frame_from_gram,
    gram_lower,
    gram_upper,
    paley_adjacency,
    paley_frame,
    zauner_frame,
)
from .finite_field import FieldElement, FiniteField, make_field, trace
from .frames import Frame
from .linalg import hermitian_eig, inv_sqrt_psd
from .verification import (
    VerificationReport,
    check_equiangular,
    check_gram_spectrum,
    check_tight,
    gram_equal_up_to_conjugation,
    welch_target,
)

__version__ = "0.1.0"
