from __future__ import annotations

import pytest

from ordmod.cli import ALL_DESK, parse_algebra
from ordmod.rootdata import build_root_system
from ordmod.weyl import generate_weyl

ROSTER = list(ALL_DESK)


@pytest.fixture(scope="session")
def desk():
    return {name: build_root_system(parse_algebra(name)) for name in ROSTER}


@pytest.fixture(scope="session")
def desk_groups(desk):
    return {name: generate_weyl(rs) for name, rs in desk.items()}
