"""Shared fixtures: the small catalog spaces and their property lattices.

Session scope keeps the repeatedly used lattices built once; everything
here is deterministic, so sharing is safe.
"""

import pytest

import orthlab as O


@pytest.fixture(scope="session")
def b1():
    return O.boolean_space(1)


@pytest.fixture(scope="session")
def b2():
    return O.boolean_space(2)


@pytest.fixture(scope="session")
def b3():
    return O.boolean_space(3)


@pytest.fixture(scope="session")
def b4():
    return O.boolean_space(4)


@pytest.fixture(scope="session")
def mo2():
    return O.mo_lantern(2)


@pytest.fixture(scope="session")
def mo3():
    return O.mo_lantern(3)


@pytest.fixture(scope="session")
def b1_ppl(b1):
    return O.property_lattice(b1)


@pytest.fixture(scope="session")
def b2_ppl(b2):
    return O.property_lattice(b2)


@pytest.fixture(scope="session")
def b3_ppl(b3):
    return O.property_lattice(b3)


@pytest.fixture(scope="session")
def b4_ppl(b4):
    return O.property_lattice(b4)


@pytest.fixture(scope="session")
def mo2_ppl(mo2):
    return O.property_lattice(mo2)


@pytest.fixture(scope="session")
def mo3_ppl(mo3):
    return O.property_lattice(mo3)


@pytest.fixture(scope="session")
def random_batch():
    """A deterministic batch of valid random spaces for cross-checking."""
    out = []
    for i in range(36):
        n = 1 + i % 6
        density = (0.3, 0.5, 0.7)[i % 3]
        out.append(O.random_space(n, density, 7000 + i))
    return tuple(out)
