"""Quantum McKay correspondence data for C^3/G, G a polyhedral group.

Every report is returned as plain dicts and lists; numbers are strings
("p/q" for rationals, scientific notation for reals).
"""

import json

from . import _core
from ._core import ConfigurationError, ConsistencyError, PoleError, PreconditionError

__all__ = [
    "roots", "group", "bps", "gw", "partition", "dt", "intersect", "crc", "verify", "run_cli",
    "ConfigurationError", "PreconditionError", "ConsistencyError", "PoleError",
]


def roots(group, precision=None):
    return json.loads(_core.roots(group, precision))


def group(group, precision=None):
    return json.loads(_core.group(group, precision))


def bps(group, precision=None):
    return json.loads(_core.bps(group, precision))


def gw(group, max_q_degree=4, lambda_order=4, precision=None):
    return json.loads(_core.gw(group, max_q_degree, lambda_order, precision))


def partition(group, max_q_degree=4, q_series_degree=4, precision=None):
    return json.loads(_core.partition(group, max_q_degree, q_series_degree, False, precision))


def dt(group, max_q_degree=4, q_series_degree=4, precision=None):
    return json.loads(_core.partition(group, max_q_degree, q_series_degree, True, precision))


def intersect(group, precision=None):
    return json.loads(_core.intersect(group, precision))


def crc(group, degree=5, precision=None):
    return json.loads(_core.crc(group, degree, precision))


def verify(group, max_q_degree=4, q_series_degree=4, lambda_order=4, precision=None):
    return json.loads(_core.verify(group, max_q_degree, q_series_degree, lambda_order, precision))


def run_cli(args):
    """Runs the command line tool in-process: (exit code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
