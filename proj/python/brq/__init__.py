"""Bogomolov multipliers, Amitsur classes and unramified Brauer groups.

Documents are the JSON inputs accepted by the ``brq`` command line tool,
given either as dicts or as JSON text. Reports come back as dicts.
"""

import json

from . import _core
from ._core import DomainError, Error, SizeLimitError

__all__ = [
    "DomainError",
    "Error",
    "SizeLimitError",
    "group_info",
    "h1",
    "h2",
    "bogomolov_multiplier",
    "br_nr",
    "stack",
    "verify",
    "run_cli",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def group_info(doc, all_subgroups=False):
    return json.loads(_core.group_info(_text(doc), all_subgroups))


def h1(doc, witnesses=False, max_order=0):
    return json.loads(_core.cohomology(_text(doc), 1, witnesses, max_order))


def h2(doc, witnesses=False, max_order=0):
    """H^2 of the document's module, or H^2(G, Q/Z) when there is none."""
    return json.loads(_core.cohomology(_text(doc), 2, witnesses, max_order))


def bogomolov_multiplier(doc, all_subgroups=False, witnesses=False, max_order=0):
    return json.loads(_core.bogomolov(_text(doc), all_subgroups, witnesses, max_order))


def br_nr(kind, doc, r=(), witnesses=False, max_order=0):
    """kind is linear, projective, grassmannian, flag or toric."""
    if isinstance(r, int):
        r = [r]
    return json.loads(_core.brnr(kind, _text(doc), list(r), witnesses, max_order))


def stack(doc, max_rank=0):
    """Invariant factors of Br([V/G]) for a document with "pic" and a fixed point."""
    return list(_core.stack(_text(doc), max_rank))


def verify(suite, fixture_dir=""):
    name, cases = _core.run_suite(suite, fixture_dir)
    return {"suite": name, "cases": [{"name": n, "pass": p, "detail": d} for n, p, d in cases]}


def run_cli(*args):
    """Returns (exit status, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
