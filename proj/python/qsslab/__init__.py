"""Entropic verification laboratory for quantum secret sharing schemes.

The heavy lifting lives in the C++ extension; this package re-exports its
surface: scheme builders (cgl23, threshold), the Definition-1 verifier,
access-structure algebra, entropy tooling and recovery-map synthesis.
"""

from qsslab._core import *  # noqa: F401,F403
from qsslab._core import __version__  # noqa: F401
