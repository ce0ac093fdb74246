import os
import shutil
import tempfile

import pytest

# Set before any test module is collected: some modules build their corpus at
# import time, and nothing should touch the user's cache.
_CACHE = tempfile.mkdtemp(prefix="disting-test-cache-")
os.environ["DISTING_CACHE_DIR"] = _CACHE


@pytest.fixture(scope="session", autouse=True)
def cache_dir():
    yield _CACHE
    shutil.rmtree(_CACHE, ignore_errors=True)
