import pytest

from polycore.matrix import PolyMatrix
from polycore.polynomial import X, Y


@pytest.fixture()
def example_matrix():
    return PolyMatrix([[1, 2], [3, 4]])


@pytest.fixture()
def polynomial_matrix():
    """Φ of the Krall-Sheffer family with `Φ = ((3y, 1), (1, 0))` plus an x-dependent variant."""
    return PolyMatrix([[3 * Y, 1], [X, X - Y]])
