import os

import pytest

from thompson_nv.sampling import make_rng

DATA = os.path.join(os.path.dirname(__file__), "data")


def data_path(name):
    return os.path.join(DATA, name)


def read_data(name):
    with open(data_path(name)) as fh:
        return fh.read()


@pytest.fixture
def rng():
    """Seeded from THOMPSON_NV_SEED, or the package default."""
    return make_rng()
