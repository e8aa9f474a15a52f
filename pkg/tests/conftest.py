import numpy as np
import pytest

from knotopt import default_catalog


@pytest.fixture(scope="session")
def catalog():
    return default_catalog()


@pytest.fixture(scope="session")
def catalog_by_name(catalog):
    return {entry.name: entry for entry in catalog}


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
