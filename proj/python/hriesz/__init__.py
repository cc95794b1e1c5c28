"""Ladder-operator calculus and kernel bounds for Hermite/Laguerre Riesz transforms."""

try:
    from ._hriesz import *  # noqa: F401,F403  (installed package layout)
except ImportError:  # in-tree build: module sits next to the package on sys.path
    from _hriesz import *  # noqa: F401,F403

__version__ = "0.1.0"
