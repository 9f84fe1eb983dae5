"""Baxter families: bijections, counting and oracles.

Submodules: ``planemap``, ``orientations``, ``trees``, ``paths``, ``baxter``,
``bipolar``, ``counting``, ``oracle``, ``formats``, ``render``, ``suites`` and
``cli``.  The hot loops live in ``kernels``, which uses the compiled extension
when it is built and a pure-Python fallback otherwise.
"""

from . import counting, kernels, oracle
from .baxter import is_baxter, twin_pair_of_baxter, twin_pair_of_permutation
from .errors import BaxterLabError
from .formats import KINDS, convert, parse, serialize

__version__ = "0.1.0"

__all__ = [
    "BaxterLabError",
    "KINDS",
    "convert",
    "counting",
    "is_baxter",
    "kernels",
    "oracle",
    "parse",
    "serialize",
    "twin_pair_of_baxter",
    "twin_pair_of_permutation",
]
