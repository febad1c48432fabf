"""Exact checks for sl2-hat Borel modules, R-matrices and q-characters.

Matrices, series and reports come back as plain dicts and lists decoded
from the same JSON the ``qloop`` command line tool writes.
"""

import json

from . import _qloop
from ._qloop import ConfigError, known_suites, matrix_builders, qchar_builders, qchar_text

__all__ = [
    "ConfigError",
    "all_pass",
    "check",
    "emit_matrix",
    "emit_qchar",
    "known_suites",
    "matrix_builders",
    "pole_scan",
    "qchar_builders",
    "qchar_text",
    "run_suites",
]


def run_suites(trunc=8, depth=8, u_order=4, seed=1, strategy="exact", suites=None, jobs=1):
    if suites is not None:
        suites = list(suites)
    return json.loads(_qloop.run_suites(trunc, depth, u_order, seed, strategy, suites, jobs))


def all_pass(report):
    return all(row["status"] == "PASS" for row in report)


def emit_matrix(builder, k=1, ell=1, trunc=8, u_order=4):
    return json.loads(_qloop.emit_matrix(builder, k, ell, trunc, u_order, False))


def pole_scan(builder, k=1, ell=1, trunc=8, u_order=4):
    return json.loads(_qloop.emit_matrix(builder, k, ell, trunc, u_order, True))


def emit_qchar(builder, k=1, shift=0, depth=8):
    return json.loads(_qloop.emit_qchar(builder, k, shift, depth))


_CHECKS = {
    "wronskian": _qloop.check_wronskian,
    "qq_dual": _qloop.check_qq_dual,
    "baxter_qt": _qloop.check_baxter_qt,
    "iq_kr": _qloop.check_iq_kr,
    "twist_prefund": _qloop.check_twist_prefund,
    "intertwining": _qloop.check_intertwining,
    "relations": _qloop.check_relations,
}


def check(name, *args, **kwargs):
    """Run one named check, e.g. ``check("iq_kr", 3, depth=6)``."""
    try:
        fn = _CHECKS[name]
    except KeyError:
        raise ValueError(f"unknown check {name!r}; expected one of {sorted(_CHECKS)}") from None
    return json.loads(fn(*args, **kwargs))
