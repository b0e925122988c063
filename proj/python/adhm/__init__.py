"""Exact ADHM data computations.

Data and reports are JSON; the helpers here decode reports into dicts.
"""

import json

from . import _core
from ._core import InputError, InvariantViolation, fixture_ids, run_cli

__all__ = [
    "InputError",
    "InvariantViolation",
    "c2_fixtures",
    "charge1",
    "check",
    "deform",
    "du",
    "fixture",
    "fixture_ids",
    "lines_datum",
    "monad",
    "normalize",
    "rank0",
    "run_cli",
]


def _text(datum):
    return datum if isinstance(datum, str) else json.dumps(datum)


def fixture(fixture_id):
    return json.loads(_core.fixture(fixture_id))


def normalize(datum):
    return json.loads(_core.normalize(_text(datum)))


def lines_datum(spec):
    return json.loads(_core.lines_datum(spec))


def check(datum):
    return json.loads(_core.check(_text(datum)))


def monad(datum):
    return json.loads(_core.monad(_text(datum)))


def deform(datum, with_complex=False):
    return json.loads(_core.deform(_text(datum), with_complex))


def du(datum):
    return json.loads(_core.du(_text(datum)))


def rank0(datum, traces=0):
    return json.loads(_core.rank0(_text(datum), traces))


def charge1(spec):
    return json.loads(_core.charge1(spec))


def c2_fixtures(seed=1):
    return json.loads(_core.c2_fixtures(seed))
