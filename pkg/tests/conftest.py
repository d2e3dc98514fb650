import time

import pytest

from tfano.search import EnumConfig, enumerate_terminal_fano


@pytest.fixture(scope="session")
def box1_enumeration():
    """Full box-1 terminal Fano enumeration, shared across the suite.

    Returns (classes, elapsed_seconds); the timing feeds the acceptance
    runtime bound.
    """
    t0 = time.time()
    classes = enumerate_terminal_fano(EnumConfig(box_bound=1, dim=3))
    return classes, time.time() - t0
