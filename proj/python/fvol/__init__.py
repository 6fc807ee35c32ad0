"""Python access to the fvol core.

Every function takes spec text in the same format as the ``fvol`` command line tool.
"""

from fractions import Fraction

from ._fvol import FVolError, check_names, normalize_spec, run, v_set
from . import _fvol

__all__ = [
    "FVolError",
    "check_names",
    "fedder",
    "hk_estimates",
    "normalize_spec",
    "nu",
    "run",
    "threshold_estimates",
    "v_set",
    "volume_estimates",
]


def _table(raw):
    out = dict(raw)
    out["rows"] = [(e, Fraction(int(n), int(d))) for e, n, d in raw["rows"]]
    out["tilde_rows"] = [(e, Fraction(int(n), int(d))) for e, n, d in raw["tilde_rows"]]
    return out


def volume_estimates(text, e_min=None, e_max=None):
    return _table(_fvol.volume_estimates(text, e_min, e_max))


def threshold_estimates(text, e_min=None, e_max=None):
    return _table(_fvol.threshold_estimates(text, e_min, e_max))


def hk_estimates(text, e_min=None, e_max=None, d=None):
    return _table(_fvol.hk_estimates(text, e_min, e_max, d))


def nu(text, e):
    return _fvol.nu(text, e)


def fedder(text, e):
    """Returns (passes Fedder's test at level e, forms a system of parameters)."""
    return _fvol.fedder(text, e)
