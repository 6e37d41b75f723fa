import pytest

from dcavity import sweep


@pytest.fixture(scope="session")
def device_narrow():
    """Reference device reduced params, narrow mechanical linewidth (2*pi*141 Hz)."""
    return sweep.device_reduced(gamma_m_hz=141.0)


@pytest.fixture(scope="session")
def device_broad():
    """Reference device reduced params, broad mechanical linewidth (2*pi*14.1 kHz)."""
    return sweep.device_reduced(gamma_m_hz=14.1e3)
