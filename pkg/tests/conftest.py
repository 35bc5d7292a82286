import pytest

from csjordan import random_conjugation, random_symmetric, stream


@pytest.fixture
def rand_conj():
    def make(n, seed=0):
        return random_conjugation(n, stream(seed, "test-conj", n))

    return make


@pytest.fixture
def rand_sym():
    def make(c, seed=0):
        return random_symmetric(c, stream(seed, "test-sym", c.n))

    return make


@pytest.fixture
def complex_rng():
    def make(seed=0):
        return stream(seed, "test-generic")

    return make
