import os

import mpmath
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

mpmath.mp.dps = 30

NU_GRID = (-1.8, -1.5, -0.5, 0.0, 0.5, 1.0, 1.5, 2.5)
F_GRID = (0.5, 1.0, 1.5, 2.5)
REAL_GH_GRID = (-0.5, 0.0, 0.5, 1.5)
MOD_GH_GRID = (-1.8, -1.5, -1.4, -1.2)


def pytest_configure(config):
    config._acceptance = {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = getattr(config, "_acceptance", {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(results):
        title, ok = results[key]
        terminalreporter.write_line(f"criterion {key:>2}: {'PASS' if all(ok) else 'FAIL'}  {title}")
