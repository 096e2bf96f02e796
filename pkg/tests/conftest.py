import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hypercentral.constructions import build_matrix_subring  # noqa: E402
from hypercentral.harness.catalog import build_catalog  # noqa: E402
from hypercentral.ring import cyclic_ring, finite_field, matrix_ring  # noqa: E402


@pytest.fixture(scope="session")
def catalog():
    return build_catalog()


@pytest.fixture(scope="session")
def small_rings(catalog):
    """Catalog rings small enough for the brute-force oracle."""
    return [e for e in catalog if e.ring.size <= 16]


@pytest.fixture(scope="session")
def t2():
    return build_matrix_subring("T_n", finite_field(2), 2)


@pytest.fixture(scope="session")
def m2():
    return matrix_ring(finite_field(2), 2)


@pytest.fixture(scope="session")
def z4():
    return cyclic_ring(4)


@pytest.fixture(scope="session")
def z6():
    return cyclic_ring(6)
