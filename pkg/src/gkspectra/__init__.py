"""Element-order spectra, prime graphs, and recognition of almost simple groups."""

__version__ = "0.1.0"

from .bsgs import DEFAULT_CAP, PermutationGroup, SpectrumResult, StabilizerChain
from .errors import (
    CapExceededError,
    GKSpectraError,
    ParseError,
    PreconditionError,
    SingularError,
    UnsupportedTargetError,
    ValidationError,
)
from .perm import Permutation
from .primegraph import PrimeGraph
from .spectra import (
    divisor_closure,
    maximal_elements,
    parse_mu,
    preferred_witness,
    primes_of,
    witnesses_not_in,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CAP",
    "CapExceededError",
    "GKSpectraError",
    "ParseError",
    "Permutation",
    "PermutationGroup",
    "PreconditionError",
    "PrimeGraph",
    "SingularError",
    "SpectrumResult",
    "StabilizerChain",
    "UnsupportedTargetError",
    "ValidationError",
    "divisor_closure",
    "maximal_elements",
    "parse_mu",
    "preferred_witness",
    "primes_of",
    "witnesses_not_in",
]
