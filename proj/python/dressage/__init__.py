"""Gauge-invariant dressed qubits over classical U(1) lattice backgrounds."""

from ._dressage import *  # noqa: F401,F403
from ._dressage import __doc__  # noqa: F401
