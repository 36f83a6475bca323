"""
Shared pytest fixtures
"""
import pytest

import counterexamples.certifier as certifier
from config import settings
from pinning.groups import GroupDescriptor
from positivity.sampling import make_rng


@pytest.fixture
def rng():
    """A seeded generator; sample 0 of seed 42"""
    return make_rng(42, 0)


@pytest.fixture
def c2():
    return GroupDescriptor("C", 2)


@pytest.fixture
def b3():
    return GroupDescriptor("B", 3)


@pytest.fixture
def features(monkeypatch):
    """Copy of the feature flags that tests may toggle without leaking"""
    flags = dict(settings.FEATURES)
    monkeypatch.setattr(settings, "FEATURES", flags)
    monkeypatch.setattr(certifier, "FEATURES", flags)
    return flags
