"""Gauss-diagram state-sum invariants of classical and virtual links.

Thin package wrapper around the compiled ``_gdcalc`` extension. The extension
lives inside the installed package; during development it may instead sit on
``sys.path`` next to the build tree, so both import forms are tried.
"""

try:
    from ._gdcalc import *  # noqa: F401,F403
    from ._gdcalc import __doc__ as _doc
except ImportError:
    from _gdcalc import *  # noqa: F401,F403
    from _gdcalc import __doc__ as _doc

__doc__ = _doc
