"""Exact invariants of finite-dimensional algebras given by structure constants.

The heavy lifting lives in the C++ extension; this package re-exports the
algebra/element handles and wraps the JSON-emitting entry points as dicts.
"""

import json as _json

from ._core import (  # noqa: F401
    Algebra,
    CeringError,
    Element,
    __version__,
    algebra,
    load_spec_text,
)
from . import _core as _c


def build(input):
    """Validate an algebra and return its (loadable) spec document."""
    return _json.loads(_c.build_json(input))


def report(input, method="auto", seed=1, skip=()):
    """Full structure + essentiality report as a dict."""
    return _json.loads(_c.report_json(input, method, seed, list(skip)))


def quotient(input, generators, method="auto", seed=1):
    """Report on the quotient by the two-sided ideal the generators span."""
    return _json.loads(_c.quotient_json(input, list(generators), method, seed))


def scan(family, method="auto", seed=1, jobs=1):
    """One report row per family member."""
    return _json.loads(_c.scan_json(family, method, seed, jobs))


def verify_paper(seed=1):
    """Run the curated verification suite; returns the check list and counts."""
    return _json.loads(_c.verify_paper_json(seed))
