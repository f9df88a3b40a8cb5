from __future__ import annotations

import pytest
from hypothesis import settings

from mapwords.maps import (
    RootedMap, digon_map, link_map, loop_map, theta_map, torus_map,
)

# first calls fill memo tables, so per-example timing is meaningless
settings.register_profile("repo", deadline=None)
settings.load_profile("repo")

# filled by tests/test_acceptance.py: criterion number -> (title, passed)
ACCEPTANCE: dict[int, tuple[str, bool]] = {}


@pytest.fixture
def loop():
    return loop_map()


@pytest.fixture
def link():
    return link_map()


@pytest.fixture
def digon():
    return digon_map()


@pytest.fixture
def torus():
    return torus_map()


@pytest.fixture
def theta():
    return theta_map()


@pytest.fixture
def rooted():
    return lambda g, root=0: RootedMap(g, root)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d} {'PASS' if ok else 'FAIL'}  {title}")
