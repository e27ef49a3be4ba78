import os

import pytest

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


def load_rows(name):
    with open(os.path.join(DATA_DIR, name)) as fh:
        return fh.read().split()


@pytest.fixture(scope="session")
def table1_rows():
    return load_rows("table1_n6.txt")


@pytest.fixture(scope="session")
def table3_rows():
    return load_rows("table3_n6.txt")
