"""Numerical toolkit for the truncated d-shift on the symmetric Fock space."""

try:
    from dshift._core import *  # noqa: F401,F403
except ImportError:  # running against a bare build tree
    from _core import *  # noqa: F401,F403
