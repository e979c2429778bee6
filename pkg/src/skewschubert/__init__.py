"""Schubert polynomials, skew Schubert functions and Stanley symmetric functions
computed through chains in labelled posets, with polynomial cross-checks."""

from .perm import *  # noqa: F401,F403
from .poly import *  # noqa: F401,F403
from .symfunc import *  # noqa: F401,F403
from .poset import *  # noqa: F401,F403
from .order import *  # noqa: F401,F403
from .schubert import *  # noqa: F401,F403
from .stanley import *  # noqa: F401,F403

from . import order, perm, poly, poset, schubert, stanley, symfunc  # noqa: F401

__version__ = "0.1.0"
