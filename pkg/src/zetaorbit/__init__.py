"""Exact arithmetic for the SL(2,Z) action on Dirichlet series.

The divisor matrix (the matrix of multiplication by zeta in the Dirichlet
convolution ring) is conjugated into Jordan form by explicit integer
matrices, extended to a representation of SL(2,Z) in which T acts as the
divisor matrix, and the orbit of zeta under that action is pinned down by a
cubic equation verified coefficientwise.  All linear algebra is windowed and
exact; growth certificates make finite windows faithful to the infinite
matrices they truncate.
"""

from zetaorbit import cfmat, cli, dseries, exactnum, orbit, pseries, rep

__all__ = [
    "cfmat",
    "cli",
    "dseries",
    "exactnum",
    "orbit",
    "pseries",
    "rep",
]

__version__ = "0.1.0"
