from fractions import Fraction

import pytest

from threelie.linalg import Matrix, Vec
from threelie.trilie import ThreeLieAlgebra


@pytest.fixture(scope="session")
def dim3_algebra():
    # dim 3, only [e1,e2,e3] = e1
    return ThreeLieAlgebra(3, {(0, 1, 2): {0: Fraction(1)}}, label="dim3")


@pytest.fixture(scope="session")
def dim4_algebra():
    # dim 4, only [e2,e3,e4] = e1
    return ThreeLieAlgebra(4, {(1, 2, 3): {0: Fraction(1)}}, label="dim4")


@pytest.fixture(scope="session")
def dim3_witnesses():
    return [Matrix.diagonal([1, 1, -1]), Matrix.diagonal([1, -1, 1])]


@pytest.fixture(scope="session")
def dim4_witnesses():
    return [Matrix.diagonal([1, 1, -1, -1]), Matrix.diagonal([1, -1, 1, -1])]


@pytest.fixture(scope="session")
def e3():
    return [Vec.basis(3, i) for i in range(3)]


@pytest.fixture(scope="session")
def e4():
    return [Vec.basis(4, i) for i in range(4)]
