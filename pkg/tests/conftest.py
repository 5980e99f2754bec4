import pytest

from loopkit import ZOO_NAMES, zoo_loop


@pytest.fixture(scope="session")
def zoo():
    return {name: zoo_loop(name) for name in ZOO_NAMES}
