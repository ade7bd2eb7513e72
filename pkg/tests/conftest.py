import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from algebra.gf import hermitian_field  # noqa: E402
from codes import odsm  # noqa: E402
from generators.hop import construct_hop  # noqa: E402
from utils import config  # noqa: E402


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    """Every test starts from default settings, unaffected by a local .env"""
    for name in ('HERMLCD_BUDGET', 'HERMLCD_LOG_LEVEL', 'HERMLCD_SEED', 'HERMLCD_CHUNK'):
        monkeypatch.delenv(name, raising=False)
    config.reload_settings()
    yield
    config._settings = None


@pytest.fixture
def gf4():
    return hermitian_field(2)


@pytest.fixture
def gf9():
    return hermitian_field(3)


@pytest.fixture
def hop9():
    """The [9,2,6] code over GF(4)"""
    return construct_hop(1).code


@pytest.fixture
def hop9_odsm(hop9):
    return odsm.setup(hop9)
