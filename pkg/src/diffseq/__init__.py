"""Diffsequence Ramsey numbers: exact search, explicit colorings, certified bounds."""

from diffseq.gapset import GapSet
from diffseq.kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["GapSet", "BACKEND", "__version__"]
