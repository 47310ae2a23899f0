import contextlib
import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from csl import constructions, plane

settings.register_profile(
    "csl",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("csl")


# -- registry of every plane graph built during the run --------------------
#
# The identity criterion checks Euler-type identities on all graphs the test
# run produces, so PlaneGraph construction is wrapped once per session.
# Tests that build deliberately broken rotations pause the registry.


class Registry:
    def __init__(self):
        self.graphs = {}
        self.paused = 0

    def add(self, G):
        if self.paused or G.n == 0:
            return
        key = (G.labels, G._rot)
        h = hash(key)
        if h not in self.graphs:
            self.graphs[h] = G

    @contextlib.contextmanager
    def pause(self):
        self.paused += 1
        try:
            yield
        finally:
            self.paused -= 1


REGISTRY = Registry()
_orig_init = plane.PlaneGraph.__init__


def _recording_init(self, *args, **kwargs):
    _orig_init(self, *args, **kwargs)
    REGISTRY.add(self)


plane.PlaneGraph.__init__ = _recording_init


def _paused(fn):
    def wrapper(*args, **kwargs):
        with REGISTRY.pause():
            return fn(*args, **kwargs)

    return wrapper


# the stub orientation probe builds a throwaway map whose genus is the answer
constructions._stub_cycle_ok = _paused(constructions._stub_cycle_ok)
constructions._stub_cycle_ok_multi = _paused(constructions._stub_cycle_ok_multi)


@pytest.fixture
def registry():
    return REGISTRY


# -- acceptance summary -----------------------------------------------------

ACCEPTANCE = {}


@pytest.fixture
def acceptance():
    return ACCEPTANCE


def pytest_collection_modifyitems(session, config, items):
    # acceptance runs last so the identity criterion sees every graph
    items.sort(key=lambda it: it.nodeid.startswith("tests/test_acceptance.py"))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, title, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {title}  [{detail}]")


# -- strategies -------------------------------------------------------------

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def rng_of(seed):
    return random.Random(seed)
