"""Required transmit power, best-configuration selection and battery lifetime."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .channel import (
    HALF_PI,
    DevicePosition,
    LinkBudget,
    PhaseConfigSet,
    RisGeometry,
    _phase_sum,
)

# Relative slack on t_t + t_a + t_ack <= t_c, for block lengths given as fractions.
_FRAME_RTOL = 1e-12


@dataclass(frozen=True)
class FrameTiming:
    """TDMA frame block lengths in seconds.

    ``t_t`` is the training block, ``t_a`` the access (data) block and
    ``t_ack`` the acknowledgement block, all within one coherence time ``t_c``.
    """

    t_c: float
    t_t: float
    t_a: float
    t_ack: float

    def __post_init__(self):
        for name in ("t_c", "t_t", "t_a", "t_ack"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be > 0")
        if self.t_t + self.t_a + self.t_ack > self.t_c * (1 + _FRAME_RTOL):
            raise ValueError("t_t + t_a + t_ack must not exceed t_c")

    @classmethod
    def from_fractions(cls, t_c, frac_t_t, frac_t_a, frac_t_ack):
        return cls(t_c, frac_t_t * t_c, frac_t_a * t_c, frac_t_ack * t_c)


@dataclass(frozen=True)
class DeviceEnergyProfile:
    e0: float
    t_r: float
    e_s: float
    p_c: float
    p_rx: float
    xi: float

    def __post_init__(self):
        for name in ("e0", "t_r", "e_s", "p_c", "p_rx", "xi"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be > 0")
        if not self.xi > 1:
            raise ValueError("xi must be > 1 (inverse PA efficiency)")


@dataclass(frozen=True)
class PowerResult:
    rho: float
    best_angle_index: Optional[int]
    outage: bool


def _required_power(d, theta, geom, theta_r, link):
    d = np.asarray(d, dtype=float)
    theta = np.asarray(theta, dtype=float)
    cos2 = np.where(theta == HALF_PI, 0.0, np.cos(theta) ** 2)
    gain = np.abs(_phase_sum(geom.n_x, np.sin(theta) - np.sin(theta_r))) ** 2
    num = link.gamma_target * link.sigma_w2 * link.ap.d_ap**2 * d**2
    den = link.beta0 * geom.n_z**2 * gain * cos2
    with np.errstate(divide="ignore"):
        return np.where(den > 0, num / np.where(den > 0, den, 1.0), np.inf)


def required_power(pos: DevicePosition, geom: RisGeometry, theta_r, link: LinkBudget):
    """Transmit power needed to reach ``link.gamma_target`` at the AP.

    Returns ``inf`` where the channel gain vanishes (an array-factor null or
    ``theta = pi/2``).
    """
    out = _required_power(pos.d, pos.theta, geom, theta_r, link)
    return out[()] if out.ndim == 0 else out


def best_power_arrays(d, theta, geom: RisGeometry, cfg: PhaseConfigSet, link: LinkBudget):
    """Elementwise minimum of the required power over all configurations.

    Returns ``(rho, index)``; ``index`` is -1 where every configuration needs
    infinite power. Ties go to the smaller index.
    """
    d, theta = np.broadcast_arrays(np.asarray(d, float), np.asarray(theta, float))
    best = np.full(d.shape, np.inf)
    index = np.full(d.shape, -1, dtype=int)
    for i, theta_r in enumerate(cfg.angles):
        rho = _required_power(d, theta, geom, theta_r, link)
        better = rho < best
        best = np.where(better, rho, best)
        index = np.where(better, i, index)
    return best, index


def best_config_power(
    pos: DevicePosition, geom: RisGeometry, cfg: PhaseConfigSet, link: LinkBudget
) -> PowerResult:
    """Pick the configuration with the smallest required power for one position."""
    rho, index = best_power_arrays(pos.d, pos.theta, geom, cfg, link)
    if rho.ndim != 0:
        raise ValueError("best_config_power expects a single position")
    rho = float(rho)
    idx = int(index)
    return PowerResult(
        rho=rho,
        best_angle_index=None if idx < 0 else idx,
        outage=rho > link.rho_max,
    )


def _check_finite_rho(rho):
    rho = np.asarray(rho, dtype=float)
    if not np.all(np.isfinite(rho)):
        raise ValueError("energy is undefined for infinite transmit power (outage)")
    if np.any(rho < 0):
        raise ValueError("rho must be >= 0")
    return rho


def energy_consumption(rho, frame: FrameTiming, prof: DeviceEnergyProfile):
    """Energy drawn by the device over one TDMA frame, in joules."""
    rho = _check_finite_rho(rho)
    out = (
        prof.e_s
        + frame.t_t * prof.p_rx
        + frame.t_a * (prof.p_c + prof.xi * rho)
        + frame.t_ack * prof.p_rx
    )
    return out[()] if out.ndim == 0 else out


def expected_battery_lifetime(rho, frame: FrameTiming, prof: DeviceEnergyProfile):
    """Expected battery lifetime in seconds for transmit power ``rho``.

    One frame is spent per report, so the lifetime is the battery capacity
    times the reporting period over the per-frame energy.
    """
    rho = _check_finite_rho(rho)
    den = (
        prof.e_s
        + frame.t_a * (prof.p_c + prof.xi * rho)
        + (frame.t_t + frame.t_ack) * prof.p_rx
    )
    out = prof.e0 * prof.t_r / den
    return out[()] if out.ndim == 0 else out
