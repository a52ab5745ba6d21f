import math

import pytest

from risiot import ApPosition, DeviceEnergyProfile, FrameTiming, LinkBudget

# Table 1 values, converted by hand
BETA0 = 10 ** (-5.2)
SIGMA_W2 = 10 ** (-9.4) * 1e-3
RHO_MAX = 10 ** 2.4 * 1e-3
GAMMA = 10.0
D_AP = 20.0


@pytest.fixture
def link():
    return LinkBudget(BETA0, SIGMA_W2, ApPosition(D_AP, math.pi / 4), GAMMA, RHO_MAX)


@pytest.fixture
def frame():
    t_c = 0.05
    return FrameTiming(t_c=t_c, t_t=0.10 * t_c, t_a=0.85 * t_c, t_ack=0.05 * t_c)


@pytest.fixture
def profile():
    return DeviceEnergyProfile(e0=2500.0, t_r=300.0, e_s=10e-6, p_c=1e-3, p_rx=0.1, xi=1.33)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
