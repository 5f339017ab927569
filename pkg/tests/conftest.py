import pytest

from cyclotome.codes import build_code
from cyclotome.gf import FieldParams, build_field

X3_2X_1 = (1, 2, 0, 1)  # x^3 + 2x + 1 over F_3


@pytest.fixture(scope="session")
def ctx33():
    return build_field(FieldParams(3, 3, 1, X3_2X_1))


@pytest.fixture(scope="session")
def ctx33_k2():
    return build_field(FieldParams(3, 3, 2, X3_2X_1))


@pytest.fixture(scope="session")
def ctx35():
    return build_field(FieldParams(3, 5, 2))


@pytest.fixture(scope="session")
def ctx53():
    return build_field(FieldParams(5, 3, 1))


@pytest.fixture(scope="session")
def code33(ctx33):
    return build_code(ctx33)
