"""Exact spectra and energies of unitary Cayley graphs over finite commutative rings."""

import json as _json

try:
    from cayley_spectra._cayley import *  # noqa: F401,F403
    from cayley_spectra import _cayley as _core
except ImportError:  # running against a build tree
    from _cayley import *  # noqa: F401,F403
    import _cayley as _core

__all__ = [name for name in dir(_core) if not name.startswith("_")] + [
    "pair_report",
    "triple_report",
    "bundle",
]


def pair_report(ring, kind="grplus"):
    """Classification report for {G, G+} or {G, Gbar} as a dict."""
    return _json.loads(_core.pair_report_json(ring, kind))


def triple_report(ring):
    """Classification report for {G, G+, Gbar} as a dict."""
    return _json.loads(_core.triple_report_json(ring))


def bundle(recipe, ring=""):
    """Named Kronecker bundle ('prop62', 'ex65', 'ex66') as a dict."""
    return _json.loads(_core.bundle_json(recipe, ring))
