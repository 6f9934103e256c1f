"""
Pytest fixtures for the verification engine tests.
"""
import pytest
import sys
import os
from fractions import Fraction

# Set TESTING environment variable BEFORE importing the engine
os.environ["TESTING"] = "1"

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from aw_algebra import AskeyWilsonTensors, uq_core
from dunkl_model import DunklModel
from monogenics import Monogenics
from ospq_core import OspQCore
from scalars import lattice_build
from tensor_ext import BannaiItoTensors


HALF = Fraction(1, 2)
MU_N4 = (Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2))


@pytest.fixture(scope="session")
def lat3():
    """Lattice for n = 3 with every mu_i = 1/2."""
    return lattice_build([HALF] * 3)


@pytest.fixture(scope="session")
def lat4():
    """Lattice for n = 4 with mu = (1/2, 1, 3/2, 2)."""
    return lattice_build(MU_N4)


@pytest.fixture(scope="session")
def core3(lat3):
    """osp_q(1|2) core over the n = 3 lattice."""
    return OspQCore.for_lattice(lat3)


@pytest.fixture(scope="session")
def osp(core3):
    """The osp_q(1|2) PBW algebra."""
    return core3.osp


@pytest.fixture(scope="session")
def bi3(core3):
    """Bannai-Ito Casimirs in the threefold tensor product."""
    return BannaiItoTensors(core3, 3)


@pytest.fixture(scope="session")
def bi4(lat4):
    """Bannai-Ito Casimirs in the fourfold tensor product."""
    return BannaiItoTensors(OspQCore.for_lattice(lat4), 4)


@pytest.fixture(scope="session")
def uq():
    """U_Q(sl2) core."""
    return uq_core()


@pytest.fixture(scope="session")
def aw3(uq):
    """Askey-Wilson Casimirs in the threefold tensor product."""
    return AskeyWilsonTensors(3, uq)


@pytest.fixture(scope="session")
def aw4(uq):
    """Askey-Wilson Casimirs in the fourfold tensor product."""
    return AskeyWilsonTensors(4, uq)


@pytest.fixture(scope="session")
def model3(lat3):
    """q-Dirac-Dunkl model for n = 3, mu_i = 1/2."""
    return DunklModel(lat3)


@pytest.fixture(scope="session")
def model4(lat4):
    """q-Dirac-Dunkl model for n = 4, mu = (1/2, 1, 3/2, 2)."""
    return DunklModel(lat4)


@pytest.fixture(scope="session")
def mono3(model3):
    """Monogenics toolkit on the n = 3 model; basis caches persist across tests."""
    return Monogenics(model3)


@pytest.fixture(scope="session")
def mono4(model4):
    """Monogenics toolkit on the n = 4 model."""
    return Monogenics(model4)
