import os

import pytest

from quadff.search import full_classification


@pytest.fixture(scope="session", autouse=True)
def isolated_cache(tmp_path_factory):
    """Point the search cache at a throwaway directory for the whole run."""
    d = tmp_path_factory.mktemp("cache")
    old = os.environ.get("QUADFF_CACHE_DIR")
    os.environ["QUADFF_CACHE_DIR"] = str(d)
    yield d
    if old is None:
        os.environ.pop("QUADFF_CACHE_DIR", None)
    else:
        os.environ["QUADFF_CACHE_DIR"] = old


@pytest.fixture(scope="session")
def all_cells(isolated_cache):
    """One full classification, shared by the tests that inspect it."""
    return full_classification(jobs=1)
