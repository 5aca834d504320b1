"""Rational Chebyshev, Pade and Newton-Pade approximation on shrinking domains."""

from ._ratcheb import *  # noqa: F401,F403
from ._ratcheb import RatchebError, cli

__all__ = [name for name in dir() if not name.startswith("_")]
