"""Finite negative totally ordered monoids: stepwise generation by
one-element coextensions, verification, and rendering."""

try:
    from ._core import *  # noqa: F401,F403  (installed layout)
    from ._core import __version__  # noqa: F401
except ImportError:  # development layout: extension built next to the sources
    from _core import *  # noqa: F401,F403
    from _core import __version__  # noqa: F401
