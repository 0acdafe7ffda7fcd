import sys
from pathlib import Path

import pytest
from hypothesis import settings

from osforge.exterior import bits
from osforge.field import FieldContext
from osforge.osalg import os_ideal

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("repo", max_examples=60, deadline=None, derandomize=True)
settings.load_profile("repo")

F = FieldContext()


def os_terms(m, field=F):
    return [g.terms for g in os_ideal(m, field).generators]


def to_oracle(terms, field=F):
    """Package term dict (mask -> coeff) to oracle format (support tuple -> int)."""
    return {tuple(b + 1 for b in bits(m)): field.lift(c) for m, c in terms.items()}


@pytest.fixture
def field():
    return F


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    # lets fixtures see the outcome of the test body during teardown
    outcome = yield
    rep = outcome.get_result()
    setattr(item, f"rep_{rep.when}", rep)
