import pytest

from rovib import load_database


@pytest.fixture(scope="session")
def db():
    return load_database()
