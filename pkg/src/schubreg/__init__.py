"""Castelnuovo-Mumford regularity of matrix Schubert varieties via the
Rajchgot index, with Grothendieck polynomials and pipe dreams as oracles."""
from .errors import CapExceeded, EmptyInterval, ParseError
from .grothendieck import (
    cm_double,
    cm_single,
    groth_double,
    groth_single,
    rajchgot_poly,
    regularity,
    schubert_double,
    schubert_single,
)
from .perm import Composition, Permutation
from .pipedreams import PipeDream, enumerate_pipes, max_pipe_dream
from .poly import SparsePoly
from .rajchgot import SetPartition, blob_diagram, raj, raj_code, set_partition, shape
from .verify import CheckReport, check

__all__ = [
    "CapExceeded", "CheckReport", "Composition", "EmptyInterval", "ParseError",
    "Permutation", "PipeDream", "SetPartition", "SparsePoly", "blob_diagram",
    "check", "cm_double", "cm_single", "enumerate_pipes", "groth_double",
    "groth_single", "max_pipe_dream", "raj", "raj_code", "rajchgot_poly",
    "regularity", "schubert_double", "schubert_single", "set_partition", "shape",
]
