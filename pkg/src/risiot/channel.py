"""Geometry and channel model of the RIS-reflected uplink.

All angles are in radians and all powers in watts / linear ratios. The
functions broadcast over numpy arrays so that a :class:`DevicePosition`
may hold a whole grid of positions at once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

HALF_PI = math.pi / 2

# |sin(pi * omega)| below this is treated as the Dirichlet-kernel limit.
CLOSED_FORM_EPS = 1e-12
# Residual |sum| below NULL_TOL * n_x is rounding noise of an exact null.
NULL_TOL = 1e-12


def _check_angle(name, value):
    arr = np.asarray(value, dtype=float)
    if not np.all((arr >= 0.0) & (arr <= HALF_PI)):
        raise ValueError(f"{name} must lie in [0, pi/2]")


def _check_positive(name, value):
    arr = np.asarray(value, dtype=float)
    if not np.all(arr > 0.0):
        raise ValueError(f"{name} must be > 0")


@dataclass(frozen=True)
class DevicePosition:
    """Polar position of a device (or an array of devices).

    Parameters
    ----------
    d : float or ndarray
        Distance from the RIS centre in meters.
    theta : float or ndarray
        Angle from the RIS boresight in radians, within ``[0, pi/2]``.
    """

    d: float | np.ndarray
    theta: float | np.ndarray

    def __post_init__(self):
        _check_positive("d", self.d)
        _check_angle("theta", self.theta)


@dataclass(frozen=True)
class ApPosition:
    d_ap: float
    theta_ap: float = math.pi / 4  # carried for completeness, enters no formula

    def __post_init__(self):
        _check_positive("d_ap", self.d_ap)
        _check_angle("theta_ap", self.theta_ap)


@dataclass(frozen=True)
class RisGeometry:
    n_x: int
    n_z: int

    def __post_init__(self):
        for name in ("n_x", "n_z"):
            value = getattr(self, name)
            if int(value) != value or value < 1:
                raise ValueError(f"{name} must be an integer >= 1, got {value!r}")

    @property
    def n_total(self) -> int:
        return self.n_x * self.n_z

    @classmethod
    def square(cls, n_side: int) -> "RisGeometry":
        return cls(n_side, n_side)


@dataclass(frozen=True)
class PhaseConfigSet:
    """Quantized set of reflecting angles ``{c * delta : c = 1..C}``."""

    c_count: int
    delta: float = field(init=False)
    angles: tuple[float, ...] = field(init=False)

    def __post_init__(self):
        delta = angular_resolution(self.c_count)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(
            self, "angles", tuple((c + 1) * delta for c in range(self.c_count))
        )

    def __len__(self):
        return self.c_count

    def __iter__(self):
        return iter(self.angles)


@dataclass(frozen=True)
class LinkBudget:
    """Link parameters in linear units.

    Parameters
    ----------
    beta0 : float
        Path loss at the reference distance (linear power ratio).
    sigma_w2 : float
        Noise power in watts.
    ap : ApPosition
        Access point position; only ``d_ap`` enters the channel.
    gamma_target : float
        Target SNR (linear).
    rho_max : float
        Maximum device transmit power in watts.
    """

    beta0: float
    sigma_w2: float
    ap: ApPosition
    gamma_target: float
    rho_max: float

    def __post_init__(self):
        for name in ("beta0", "sigma_w2", "gamma_target", "rho_max"):
            _check_positive(name, getattr(self, name))


def angular_resolution(c_count: int) -> float:
    """Angular step ``pi / (2 (C + 1))`` of a RIS with ``C`` configurations."""
    if int(c_count) != c_count or c_count < 1:
        raise ValueError(f"c_count must be an integer >= 1, got {c_count!r}")
    return math.pi / (2 * (c_count + 1))


def build_config_set(c_count: int) -> PhaseConfigSet:
    return PhaseConfigSet(c_count)


def path_loss(pos: DevicePosition, link: LinkBudget):
    """Total cascaded path loss ``beta0 cos^2(theta) / (d_ap^2 d^2)``.

    Returns exactly zero at ``theta = pi/2``.
    """
    theta = np.asarray(pos.theta, dtype=float)
    cos2 = np.where(theta == HALF_PI, 0.0, np.cos(theta) ** 2)
    d = np.asarray(pos.d, dtype=float)
    out = link.beta0 * cos2 / (link.ap.d_ap**2 * d**2)
    return out[()] if out.ndim == 0 else out


def _phase_sum(n_x: int, omega):
    """Direct sum ``sum_{n=1..n_x} exp(j 2 pi omega n)``, accumulated in index order."""
    omega = np.asarray(omega, dtype=float)
    acc = np.zeros(omega.shape, dtype=complex)
    for n in range(1, n_x + 1):
        acc = acc + np.exp(2j * np.pi * omega * n)
    # snap rounding residue of exact nulls to zero so nulls stay exact
    acc = np.where(np.abs(acc) <= NULL_TOL * n_x, 0.0, acc)
    return acc


def array_factor(geom: RisGeometry, theta_k, theta_r):
    """Complex array factor of the RIS by direct summation over elements.

    ``A = n_z * sum_{n=1}^{n_x} exp(j 2 pi (sin theta_k - sin theta_r) n)``.
    """
    omega = np.sin(np.asarray(theta_k, dtype=float)) - np.sin(
        np.asarray(theta_r, dtype=float)
    )
    out = geom.n_z * _phase_sum(geom.n_x, omega)
    return out[()] if out.ndim == 0 else out


def array_gain_closed_form(geom: RisGeometry, omega):
    """Dirichlet-kernel value of ``|sum|^2`` (without the ``n_z^2`` factor)."""
    omega = np.asarray(omega, dtype=float)
    n_x = geom.n_x
    # both squared sines are 1-periodic in omega; reducing to [-1/2, 1/2]
    # avoids cancellation in sin(pi * omega) next to grating lobes
    r = omega - np.round(omega)
    den = np.sin(np.pi * r)
    near = np.abs(den) < CLOSED_FORM_EPS
    safe = np.where(near, 1.0, den)
    out = np.where(near, float(n_x * n_x), np.sin(np.pi * n_x * r) ** 2 / safe**2)
    return out[()] if out.ndim == 0 else out


def snr(rho, pos: DevicePosition, geom: RisGeometry, theta_r, link: LinkBudget):
    """Instantaneous SNR at the AP for transmit power ``rho`` (watts)."""
    rho = np.asarray(rho, dtype=float)
    if np.any(rho < 0):
        raise ValueError("rho must be >= 0")
    gain = np.abs(array_factor(geom, pos.theta, theta_r)) ** 2
    out = np.asarray(rho * path_loss(pos, link) * gain / link.sigma_w2)
    return out[()] if out.ndim == 0 else out
