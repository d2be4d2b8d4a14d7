"""
Pytest configuration and fixtures for dampsearch tests

Chain diagonals are built once per session; the 12-spin chain is the largest
system the suite touches.
"""

import pytest

from dampsearch.core import SearchInstance
from dampsearch.spectrum import IsingChain, build_diagonal

from .reference import TABLE_INSTANCES


@pytest.fixture(scope="session")
def chain8_diagonal():
    """Energy diagonal of the 8-spin chain"""
    return build_diagonal(IsingChain(8))


@pytest.fixture(scope="session")
def chain12_diagonal():
    """Energy diagonal of the 12-spin chain"""
    return build_diagonal(IsingChain(12))


@pytest.fixture
def small_instance():
    """N=256 database with the two fully aligned states as targets"""
    return SearchInstance(256, 2)


@pytest.fixture
def checkpoint_instance():
    """N=4096, M=22: the 12-spin lambda=-9 level"""
    return SearchInstance(4096, 22)


@pytest.fixture(params=TABLE_INSTANCES, ids=lambda nm: f"N{nm[0]}-M{nm[1]}")
def table_instance(request):
    """Every search instance of the reference tables"""
    n_items, n_targets = request.param
    return SearchInstance(n_items, n_targets)
