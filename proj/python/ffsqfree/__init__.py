"""Square-free values of polynomials over F_q[t]."""

import json as _json

from ._ffsqfree import FFSqfreeError, canonical, disc_x, is_squarefree
from . import _ffsqfree

__all__ = ["FFSqfreeError", "canonical", "disc_x", "is_squarefree", "density", "certify", "ramsay"]


def density(p, f, n, **kwargs):
    """Census report for the monic a of degree n over F_q, q = p^k."""
    return _json.loads(_ffsqfree._density(p, f, n, **kwargs))


def certify(p, f, n, **kwargs):
    """Hypersurface certificate; pass verify=True to compare with enumeration."""
    return _json.loads(_ffsqfree._certify(p, f, n, **kwargs))


def ramsay(p, f, B, ns, **kwargs):
    """Truncated Euler product over primes of degree <= B against densities for each n in ns."""
    return _json.loads(_ffsqfree._ramsay(p, f, B, list(ns), **kwargs))
