import pytest
from hypothesis import settings

import helpers

settings.register_profile("suite", max_examples=60, deadline=None, derandomize=True)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def corpus():
    return helpers.full_corpus()
