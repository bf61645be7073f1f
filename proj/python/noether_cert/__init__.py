"""Norm certificates and prime classification for cyclotomic rings.

Thin wrapper over the C++ core.  Functions returning structured reports give
plain dicts in the same layout as the ``noether --json`` command line output;
certificate coefficients stay decimal strings there, as in certificate files.
"""

import json as _json

from . import _noether
from ._noether import (
    CutoffFailure,
    IndeterminateComparison,
    JsonFormatError,
    cyc_conjugate,
    cyc_mul,
    cyc_norm,
    cyclotomic_poly,
    divisors,
    element_of_order,
    euler_phi,
    factorize,
    is_prime,
    is_rational_cyclic,
    lll_reduce,
    moebius,
    ratio,
    resultant,
    rs_f,
    tool_version,
)

__version__ = tool_version

R_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 61, 67, 71)


def find_norm_certificate(p, budget=5_000_000, bound=2, escalate=True):
    """Search Z[zeta_(p-1)] for an element of norm +-p.

    Returns {"certificate": dict or None, "search": report}.
    """
    return _json.loads(_noether.find_norm_certificate(p, budget, bound, escalate))


def verify_certificate(certificate):
    """Re-check a certificate given as a dict or as JSON text."""
    if not isinstance(certificate, str):
        certificate = _json.dumps(certificate)
    return _noether.verify_certificate(certificate)


def classify_prime(p, budget=5_000_000, bound=2, probe_budget=10_000):
    return _json.loads(_noether.classify_prime(p, budget, bound, probe_budget))


def scan(max_p, budget=5_000_000, bound=2, probe_budget=10_000, jobs=1):
    return _json.loads(_noether.scan(max_p, budget, bound, probe_budget, jobs))


def eliminate_prime(p):
    return _json.loads(_noether.eliminate_prime(p))


def cutoff_certificate(envelope_limit=100_000, grid_hi=10_000):
    return _json.loads(_noether.cutoff_certificate(envelope_limit, grid_hi))


def lenstra_lemma_check(p, r):
    return _json.loads(_noether.lenstra_lemma_check(p, r))
