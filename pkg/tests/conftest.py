import pytest

from entwine.catalogue import (
    group_algebra,
    group_self_coextension,
    quadratic_field_extension,
    self_extension,
    sweedler_hopf_algebra,
)
from entwine.fields import QQ


@pytest.fixture(scope="session")
def z2_hopf():
    return group_algebra({"group": "Z2"}, QQ)


@pytest.fixture(scope="session")
def z2_self_extension(z2_hopf):
    return self_extension(z2_hopf)


@pytest.fixture(scope="session")
def z2_coextension(z2_hopf):
    return group_self_coextension(z2_hopf)


@pytest.fixture(scope="session")
def sweedler():
    return sweedler_hopf_algebra(QQ)


@pytest.fixture(scope="session")
def sweedler_self_extension(sweedler):
    return self_extension(sweedler)


@pytest.fixture(scope="session")
def quadratic():
    return quadratic_field_extension(2, QQ)


@pytest.fixture(scope="session")
def s3_hopf():
    return group_algebra({"group": "S3"}, QQ)
