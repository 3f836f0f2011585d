import pytest

from lielike import LieLikeAlgebra


@pytest.fixture(scope="session")
def leib2():
    """Dim-2 Leibniz algebra: <e2,e2> = e1, all other brackets zero."""
    return LieLikeAlgebra.from_constants(2, 1, {(0, 1, 1): [1, 0]})


@pytest.fixture(scope="session")
def bundle2(leib2):
    """Leib2 doubled with c[1] = 2 c[0]: a trivial bundle."""
    c1 = tuple(
        tuple(tuple(2 * x for x in v) for v in row) for row in leib2.c[0]
    )
    return LieLikeAlgebra(2, 2, (leib2.c[0], c1))


@pytest.fixture(scope="session")
def nt3():
    """Non-trivial dim-3 bundle: <e3,e3>_0 = e1, <e3,e3>_1 = e2."""
    return LieLikeAlgebra.from_constants(
        3, 2, {(0, 2, 2): [1, 0, 0], (1, 2, 2): [0, 1, 0]}
    )


@pytest.fixture(scope="session")
def aff2():
    """Non-nilpotent solvable Lie algebra: <e2,e1> = e1 = -<e1,e2>."""
    return LieLikeAlgebra.from_constants(
        2, 1, {(0, 1, 0): [1, 0], (0, 0, 1): [-1, 0]}
    )


@pytest.fixture(scope="session")
def right1():
    """Dim-2 Leibniz algebra with a right action: <e1,e2> = e1."""
    return LieLikeAlgebra.from_constants(2, 1, {(0, 0, 1): [1, 0]})
