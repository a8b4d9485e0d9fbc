"""Exact Hilbert series of graded algebras."""

import json
from fractions import Fraction

from . import _core
from ._core import HilbertError

__all__ = [
    "HilbertError",
    "call",
    "catalan",
    "dicks_formanek",
    "gk_from_rational",
    "magma_series",
    "molien",
    "named_series",
    "paper_suite",
    "run",
]


def _fractions(coeffs):
    return [Fraction(c) for c in coeffs]


def run(*args, stdin=""):
    """Run a CLI command and return (exit_code, stdout, stderr)."""
    return _core.run([str(a) for a in args], stdin)


def call(*args, stdin=""):
    """Run a CLI command and return its parsed JSON output."""
    code, out, err = run(*args, stdin=stdin)
    if code != 0:
        detail = json.loads(err) if err else {"error": "Unknown", "message": ""}
        exc = HilbertError(detail["message"])
        exc.code = detail["error"]
        exc.exit_code = code
        raise exc
    return json.loads(out)


def catalan(order):
    return _fractions(_core.catalan(order))


def named_series(kind, order):
    return _fractions(_core.named_series(kind, order))


def magma_series(arities, order):
    return _fractions(_core.magma_series(dict(arities), order))


def gk_from_rational(num, den):
    return _core.gk_from_rational([str(Fraction(c)) for c in num], [str(Fraction(c)) for c in den])


def _averaged(result):
    return {"num": result["num"], "den": result["den"], "coeffs": _fractions(result["coeffs"])}


def molien(group, order):
    return _averaged(_core.molien(group, order))


def dicks_formanek(group, order):
    return _averaged(_core.dicks_formanek(group, order))


def paper_suite():
    return _core.paper_suite()
