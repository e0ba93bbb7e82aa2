"""Beauville structures on finite p-groups.

Thin wrappers over the C++ core. Certificates come back as dicts with the
same fields as the CLI's JSON output.
"""

import json

from ._beauville import (
    DomainError,
    Error,
    LimitExceeded,
    ParseError,
    StateError,
    __version__,
    abelian_search,
    enumerate_order,
    gamma_quotient_presentation,
    intersection_lemmas,
    maximal_class_layers,
    normalize_presentation,
    nottingham_lcs,
    nottingham_order,
)
from . import _beauville


def verify(p, k, max_cosets=0):
    """Run the full verification for (p, k) and return the certificate."""
    return json.loads(_beauville.verify_json(p, k, max_cosets))


def recheck(certificate, max_cosets=0):
    """Re-derive the recorded checks of a certificate (dict or JSON text)."""
    text = certificate if isinstance(certificate, str) else json.dumps(certificate)
    return [
        {"name": n, "pass": ok, "detail": d}
        for n, ok, d in _beauville.recheck_json(text, max_cosets)
    ]


__all__ = [
    "DomainError",
    "Error",
    "LimitExceeded",
    "ParseError",
    "StateError",
    "__version__",
    "abelian_search",
    "enumerate_order",
    "gamma_quotient_presentation",
    "intersection_lemmas",
    "maximal_class_layers",
    "normalize_presentation",
    "nottingham_lcs",
    "nottingham_order",
    "recheck",
    "verify",
]
