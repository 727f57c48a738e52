import pytest
from hypothesis import HealthCheck, settings

import spectral_gate._kernels as kernels

# JIT compilation pauses would trip hypothesis' per-example deadline.
settings.register_profile(
    "jit", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("jit")


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    kernels.warmup()
