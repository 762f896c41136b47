"""Robust mediated equilibria for ordinal and pre-Bayesian games.

Compute on-path and punishment distributions that stay in equilibrium for
every cardinal utility function consistent with a player's declared
preference information, or certify that none exists.  All arithmetic is
exact rational.
"""

from .equilibrium import Aare, Eore, Omire, Sire, SolveResult, find_pure_unmediated, solve
from .games import (
    DistributionOrder,
    FiniteTypes,
    GameForm,
    MediatedProfile,
    ObjectiveSpec,
    PartialOrder,
    PreferenceCnf,
    TotalOrder,
)
from .verifier import VerifyReport, verify

__all__ = [
    "Aare",
    "DistributionOrder",
    "Eore",
    "FiniteTypes",
    "GameForm",
    "MediatedProfile",
    "ObjectiveSpec",
    "Omire",
    "PartialOrder",
    "PreferenceCnf",
    "Sire",
    "SolveResult",
    "TotalOrder",
    "VerifyReport",
    "find_pure_unmediated",
    "solve",
    "verify",
]

__version__ = "0.1.0"
