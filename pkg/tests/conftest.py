import pytest

from pbci.core import Algebra
from pbci.decomposition import builtin_example
from pbci.search import SearchSpec, enumerate_models
from pbci.structure import cyclic_group, dihedral_group, group_to_algebra


@pytest.fixture(scope="session")
def ex6():
    return builtin_example()


@pytest.fixture(scope="session")
def chain2():
    return Algebra(["0", "1"], 1, [[1, 1], [0, 1]], [[1, 1], [0, 1]])


@pytest.fixture(scope="session")
def one():
    return Algebra(["1"], 0, [[0]], [[0]])


@pytest.fixture(scope="session")
def z2():
    return group_to_algebra(cyclic_group(2))


@pytest.fixture(scope="session")
def z3():
    return group_to_algebra(cyclic_group(3))


@pytest.fixture(scope="session")
def d4():
    return group_to_algebra(dihedral_group(4))


@pytest.fixture(scope="session")
def models_by_size():
    """All pseudo-BCI-algebras up to isomorphism, sizes 1 through 4."""
    return {n: list(enumerate_models(SearchSpec(n))) for n in range(1, 5)}


@pytest.fixture(scope="session")
def small_suite(models_by_size, ex6):
    """The enumerated size <= 4 models plus the bundled example."""
    out = []
    for n in range(1, 5):
        out.extend(models_by_size[n])
    out.append(ex6)
    return out
