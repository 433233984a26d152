import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from flat4spec import load_catalog


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()
