"""Signature-six hypergeometric toolkit.

Thin Python layer over the C++ library: the incomplete integral f, its
inverse phi, the functions s6 and c6, five routes to the complete integral K,
the Weierstrass root data, and checks of the sextic modulus identity.
"""

from ._sig6 import *  # noqa: F401,F403
from ._sig6 import (  # noqa: F401
    DomainError,
    Modulus,
    NonConvergence,
    Sig6Context,
    Sig6Error,
)

__version__ = "0.1.0"
