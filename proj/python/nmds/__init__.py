"""MDS and near-MDS matrix constructions over finite fields."""

import json

from ._nmds import Field, NmdsError, classify_matrix, det_gvand, run_cli, scan, theta_family
from . import _nmds

__all__ = [
    "Field",
    "NmdsError",
    "classify_matrix",
    "code_report",
    "construct_gvand",
    "construct_involutory",
    "det_gvand",
    "run_cli",
    "scan",
    "theta_family",
]


def construct_gvand(field, x, y, disc="n-1", target="mds", verify=True):
    return json.loads(_nmds._construct_gvand(field, list(x), list(y), disc, target, verify))


def construct_involutory(field, x, l, target="mds"):
    return json.loads(_nmds._construct_involutory(field, list(x), l, target))


def code_report(field, rows):
    return json.loads(_nmds._code_report(field, rows))
