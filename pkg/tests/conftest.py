from random import Random

import pytest

from zdense import GroupKind, Matrix, validate


@pytest.fixture
def sl2():
    s = Matrix([[0, -1], [1, 0]])
    t = Matrix([[1, 1], [0, 1]])
    return validate(GroupKind.SPECIAL_LINEAR, 2, [s, t])


@pytest.fixture
def heisenberg():
    a = Matrix([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    b = Matrix([[1, 0, 0], [0, 1, 1], [0, 0, 1]])
    return validate(GroupKind.SPECIAL_LINEAR, 3, [a, b])


@pytest.fixture
def sl3():
    a = Matrix([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    b = Matrix([[1, 0, 0], [0, 1, 1], [0, 0, 1]])
    c = Matrix([[1, 0, 0], [0, 1, 0], [1, 0, 1]])
    return validate(GroupKind.SPECIAL_LINEAR, 3, [a, b, c])


@pytest.fixture
def sp4():
    j = Matrix([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
    n1 = Matrix([[1, 0, 1, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    n2 = Matrix([[1, 0, 0, 1], [0, 1, 1, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    u = Matrix([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, -1, 1]])
    return validate(GroupKind.SYMPLECTIC, 4, [j, n1, n2, u])


def random_unimodular(dim: int, rng: Random, steps: int = 8) -> Matrix:
    """Random product of elementary row-addition matrices: always det 1."""
    m = Matrix.identity(dim)
    for _ in range(steps):
        i = rng.randrange(dim)
        j = rng.randrange(dim)
        if i == j:
            continue
        rows = [[1 if a == b else 0 for b in range(dim)] for a in range(dim)]
        rows[i][j] = rng.randrange(-2, 3)
        m = m * Matrix(rows)
    return m
