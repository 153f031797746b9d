import pytest

from chaosinfer.sweep import SweepConfig, run_sweep


@pytest.fixture(scope="session")
def default_sweep_result():
    """One full default-configuration sweep, shared by the end-to-end tests."""
    return run_sweep(SweepConfig())
