"""Finite oscillator model built on the deformed algebra u(2)_alpha.

Submodules:

``specfun``     Pochhammer symbols, terminating hypergeometric series, Hahn polynomials
``algebra``     representation matrices and defining-relation checks
``oscillator``  position spectrum, eigenvectors and discrete wavefunctions
``parabose``    truncated parabose ladder operators and continuous wavefunctions
``limits``      Krawtchouk reductions and the large-j limit scans
``cli``         command-line entry point
"""

from .algebra import HalfInt, RepParams

__version__ = "0.1.0"

__all__ = ["HalfInt", "RepParams", "__version__"]
