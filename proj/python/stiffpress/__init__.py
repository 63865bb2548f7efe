"""Porous-medium Keller-Segel solvers and incompressible-limit diagnostics."""

from ._core import *  # noqa: F401,F403
from ._core import ConfigError, NumericalError, StepRejected  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
