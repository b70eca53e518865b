import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from exk0 import compute_k0, load_fixture  # noqa: E402

DATA = os.path.join(os.path.dirname(__file__), "data")
ODD_FIXTURES = ["a2", "a2co", "v4", "n3gen", "free3"]


@pytest.fixture(scope="session")
def k0():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = compute_k0(load_fixture(name))
        return cache[name]
    return get
