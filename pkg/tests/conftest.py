from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from adequate import Alphabet
from adequate.generate import enumerate_trees

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def ab() -> Alphabet:
    return Alphabet.from_string("ab")


@pytest.fixture(scope="session")
def small_tree_corpus(ab):
    """Every tree with at most 3 edges over {a, b}; 433 isomorphism classes."""
    return enumerate_trees(3, ab)
