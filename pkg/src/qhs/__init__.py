"""Exact finite q-multiple harmonic sums at roots of unity, and a harness
that checks closed forms for them against exact evaluation."""

__version__ = "0.1.0"

from .cyclotomic import CycElem, CycField, get_field  # noqa: E402
from .harmonic import QSpec, zq_bruteforce, zq_dp  # noqa: E402

__all__ = ["__version__", "CycElem", "CycField", "get_field", "QSpec", "zq_bruteforce", "zq_dp"]
