import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from level1kit.corpus import ELEVEN_CLUSTER_NETWORK, SIXTEEN_TRIPLET_NETWORK
from level1kit.defining import get_universe
from level1kit.enewick import parse_enewick

DATA = Path(__file__).parent / "data"


def taxa(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, n + 1))


@pytest.fixture(scope="session")
def u3():
    return get_universe(taxa(3))


@pytest.fixture(scope="session")
def u4():
    return get_universe(taxa(4))


@pytest.fixture(scope="session")
def u5():
    return get_universe(taxa(5))


@pytest.fixture(scope="session")
def u6():
    return get_universe(taxa(6))


@pytest.fixture(scope="session")
def fig_sixteen():
    return parse_enewick(SIXTEEN_TRIPLET_NETWORK)


@pytest.fixture(scope="session")
def fig_eleven():
    return parse_enewick(ELEVEN_CLUSTER_NETWORK)
