"""Exact cohomology and deformation computations for involutive and cyclic
A-infinity structures on finite-dimensional graded vector spaces.

The heavy lifting happens in the C++ extension; every function takes a JSON
algebra description (as a ``str`` or a ``dict``) and returns the report as a
``dict``. See the project README for the document schema.
"""

import json as _json

from dihedra import _core

__version__ = _core.__version__

__all__ = ["__version__", "validate", "cohomology", "deform", "iso_check"]


def _text(doc):
    if isinstance(doc, str):
        return doc
    return _json.dumps(doc)


def validate(doc):
    """Run the applicable structure checks (square-zero, involutive, cyclic)."""
    return _core.validate(_text(doc))


def cohomology(doc, which, max_weight=None, degrees=None, filtration=None, decompose=False):
    """Per-degree dimension table for hh|hh+|hh-|hc|hd+|hd-|cycder."""
    return _core.cohomology(_text(doc), which, max_weight, degrees, filtration, decompose)


def deform(doc, subcommand, ring=None, flavor="plain"):
    """Maurer-Cartan check, gauge action, or infinitesimal moduli."""
    return _core.deform(_text(doc), subcommand, ring, flavor)


def iso_check(doc):
    """Compare cyclic cochains with cyclic derivations through the form."""
    return _core.iso_check(_text(doc))
