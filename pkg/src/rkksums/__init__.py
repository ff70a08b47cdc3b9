"""Exact verification of congruences for sums of binom(rk,k) x^k / k^d.

The package evaluates both sides of each congruence independently: brute
force summation on the left, root sums over Hensel-lifted factorizations
and finite-polylogarithm constants on the right, all in exact arithmetic
modulo p, p^2 or p^3.
"""

from ._accel import engine
from .modring import (
    GaloisElt,
    GaloisRing,
    ModulusCtx,
    MonicPoly,
    RationalInput,
    ResidueInt,
    as_rational,
    residue_from_rational,
)
from .report import CongruenceReport, RunSummary

__version__ = "0.1.0"

__all__ = [
    "CongruenceReport",
    "GaloisElt",
    "GaloisRing",
    "ModulusCtx",
    "MonicPoly",
    "RationalInput",
    "ResidueInt",
    "RunSummary",
    "as_rational",
    "engine",
    "residue_from_rational",
    "__version__",
]
