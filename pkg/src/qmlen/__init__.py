"""Certified bounds on word, commutator and torsion lengths via quasimorphisms."""
from .errors import (
    DomainError,
    InvariantViolation,
    NoCertificateError,
    ParseError,
    QmlenError,
    ResourceError,
)

__version__ = "0.1.0"
