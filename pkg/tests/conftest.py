import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from secondsemi.catalog import builtin_catalog, extended_catalog  # noqa: E402


@pytest.fixture(scope="session")
def catalog():
    return builtin_catalog()


@pytest.fixture(scope="session")
def extended():
    return extended_catalog()


@pytest.fixture(scope="session")
def get(catalog):
    by_name = {s.name: s for s in catalog}
    return by_name.__getitem__
