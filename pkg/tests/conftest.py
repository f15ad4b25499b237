import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def corpus():
    from symcoalg.corpus import full_corpus
    return full_corpus()


@pytest.fixture(scope="session")
def hopfs():
    from symcoalg.corpus import hopf_corpus
    return hopf_corpus()
