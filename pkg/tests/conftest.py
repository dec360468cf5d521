"""
Test configuration and fixtures for braidtrace
"""
import random

import pytest

from braidtrace.cli import run
from braidtrace.core.config import settings
from braidtrace.coxeter.braids import BraidWord
from braidtrace.coxeter.systems import dihedral, type_a


# Seed shared by every randomized property test
RANDOM_SEED = 20240517


@pytest.fixture(scope="session")
def a1():
    return type_a(1)


@pytest.fixture(scope="session")
def a2():
    return type_a(2)


@pytest.fixture(scope="session")
def a3():
    return type_a(3)


@pytest.fixture(scope="session")
def bc2():
    """I2(4)"""
    return dihedral(4)


@pytest.fixture(scope="session")
def g2():
    """I2(6)"""
    return dihedral(6)


@pytest.fixture
def rng():
    """Seeded generator so property tests are reproducible"""
    return random.Random(RANDOM_SEED)


@pytest.fixture(scope="session")
def samples():
    """Number of random braids drawn per property"""
    return settings.PROPERTY_SAMPLES


@pytest.fixture
def random_word(rng):
    """Factory for random braid words in the generators of a system"""
    def make(system, length: int, positive: bool = False) -> BraidWord:
        letters = []
        for _ in range(length):
            i = rng.randint(1, system.rank)
            if not positive and rng.random() < 0.3:
                i = -i
            letters.append(i)
        return BraidWord(tuple(letters))
    return make


@pytest.fixture
def data_dir_restore():
    """Put settings.DATA_DIR back after a test that changes it"""
    saved = settings.DATA_DIR
    yield
    settings.DATA_DIR = saved


@pytest.fixture
def cli(capsys, data_dir_restore):
    """Run the command line in-process; returns (exit code, stdout, stderr)"""
    def invoke(*argv):
        code = run(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return invoke
