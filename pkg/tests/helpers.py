"""Shared fixture-loading helpers for the test suite."""
from __future__ import annotations

from functools import lru_cache

import oracle
from ilalg import build_algebra, parse_spec
from ilalg.fixtures import expectations, fixture_names, fixture_text

ALL_FIXTURES = fixture_names()
VALID_FIXTURES = [n for n in ALL_FIXTURES if expectations(n)["strict_valid"]]
ERRATIC_FIXTURES = [n for n in ALL_FIXTURES if not expectations(n)["strict_valid"]]


@lru_cache(maxsize=None)
def doc_of(name):
    return parse_spec(fixture_text(name))


@lru_cache(maxsize=None)
def built(name):
    """Lenient build: (algebra, report)."""
    return build_algebra(doc_of(name), mode="lenient")


def algebra_of(name):
    return built(name)[0]


def report_of(name):
    return built(name)[1]


@lru_cache(maxsize=None)
def model_of(name):
    """Independent oracle model over the same raw document fields."""
    d = doc_of(name)
    return oracle.Model(d.elements, d.order_pairs, d.star_rows, d.unit, d.arrow_rows)


def mask_of(alg, names):
    return sum(1 << alg.index(n) for n in names)


def upset_of_unit(alg):
    return [i for i in range(alg.n) if alg.leq_table[alg.unit][i]]
