"""Scenario files: Table-1 style parameters with dB/dBm fields.

A scenario document is a JSON object. Keys may be grouped into sections
(nested objects); sections are only for readability and are flattened on
load. Omitted keys fall back to the built-in defaults unless ``strict`` is
requested.
"""

from __future__ import annotations

import dataclasses
import json
import math
import os
from dataclasses import dataclass, field
from typing import Any, Mapping

from .channel import ApPosition, LinkBudget, PhaseConfigSet, RisGeometry, build_config_set
from .energy import DeviceEnergyProfile, FrameTiming
from .sweep import ServiceAreaGrid
from .units import db_to_linear, dbm_to_watts


class ScenarioError(ValueError):
    """Missing, unknown or invalid scenario field."""


@dataclass(frozen=True)
class Scenario:
    # link budget, as given in dB / dBm
    beta0_db: float = -52.0
    sigma_w2_dbm: float = -94.0
    rho_max_dbm: float = 24.0
    gamma_target_db: float = 10.0
    d_ap_m: float = 20.0
    theta_ap_rad: float = math.pi / 4
    # TDMA frame; block lengths as fractions of t_c
    t_c_s: float = 50e-3
    frac_t_t: float = 0.10
    frac_t_a: float = 0.85
    frac_t_ack: float = 0.05
    # device energy profile
    e0_j: float = 2.5e3
    t_r_s: float = 300.0
    e_s_j: float = 10e-6
    p_c_w: float = 1e-3
    p_rx_w: float = 100e-3
    xi: float = 1.33
    # RIS
    n_x: int = 10
    n_z: int = 10
    c_count: int = 2
    # service area and grid
    d_min_m: float = 20.0
    d_max_m: float = 100.0
    theta_min_rad: float = 0.0
    theta_max_rad: float = math.pi / 2
    n_d: int = 256
    n_theta: int = 256
    # sweep lists (square RIS, n_x = n_z)
    n_x_list: tuple[int, ...] = field(default=tuple(range(2, 11)))
    c_list: tuple[int, ...] = field(default=(2, 4, 8, 16))

    def __post_init__(self):
        # building every derived object runs all downstream invariant checks
        try:
            self.link()
            self.geometry()
            self.config_set()
            self.frame()
            self.profile()
            self.grid()
            for n in self.n_x_list:
                RisGeometry.square(n)
            for c in self.c_list:
                build_config_set(c)
        except ValueError as exc:
            raise ScenarioError(str(exc)) from exc
        if not self.n_x_list or not self.c_list:
            raise ScenarioError("n_x_list and c_list must be nonempty")

    def link(self) -> LinkBudget:
        return LinkBudget(
            beta0=db_to_linear(self.beta0_db),
            sigma_w2=dbm_to_watts(self.sigma_w2_dbm),
            ap=ApPosition(self.d_ap_m, self.theta_ap_rad),
            gamma_target=db_to_linear(self.gamma_target_db),
            rho_max=dbm_to_watts(self.rho_max_dbm),
        )

    def geometry(self) -> RisGeometry:
        return RisGeometry(self.n_x, self.n_z)

    def config_set(self) -> PhaseConfigSet:
        return build_config_set(self.c_count)

    def frame(self) -> FrameTiming:
        return FrameTiming.from_fractions(self.t_c_s, self.frac_t_t, self.frac_t_a, self.frac_t_ack)

    def profile(self) -> DeviceEnergyProfile:
        return DeviceEnergyProfile(
            e0=self.e0_j, t_r=self.t_r_s, e_s=self.e_s_j,
            p_c=self.p_c_w, p_rx=self.p_rx_w, xi=self.xi,
        )

    def grid(self) -> ServiceAreaGrid:
        return ServiceAreaGrid(
            self.d_min_m, self.d_max_m, self.theta_min_rad, self.theta_max_rad,
            self.n_d, self.n_theta,
        )

    def replace(self, **overrides) -> "Scenario":
        return from_mapping(overrides, base=self)

    def to_dict(self) -> dict[str, Any]:
        out = dataclasses.asdict(self)
        out["n_x_list"] = list(self.n_x_list)
        out["c_list"] = list(self.c_list)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


DEFAULT_SCENARIO = Scenario()

_FIELDS = {f.name: f for f in dataclasses.fields(Scenario)}
_INT_KEYS = {"n_x", "n_z", "c_count", "n_d", "n_theta"}
_LIST_KEYS = {"n_x_list", "c_list"}


def field_names() -> list[str]:
    return list(_FIELDS)


def _flatten(doc: Mapping[str, Any], out: dict[str, Any]) -> dict[str, Any]:
    for key, value in doc.items():
        if isinstance(value, Mapping):
            _flatten(value, out)
        elif key in out:
            raise ScenarioError(f"duplicate key {key!r}")
        else:
            out[key] = value
    return out


def _coerce(key: str, value: Any):
    try:
        if key in _LIST_KEYS:
            if isinstance(value, str):
                value = [v for v in value.replace(",", " ").split() if v]
            items = [float(v) for v in value]
            if any(v != int(v) for v in items):
                raise ValueError
            return tuple(int(v) for v in items)
        if key in _INT_KEYS:
            f = float(value)
            if f != int(f):
                raise ValueError
            return int(f)
        f = float(value)
    except (TypeError, ValueError):
        raise ScenarioError(f"{key}: invalid value {value!r}") from None
    if not math.isfinite(f):
        raise ScenarioError(f"{key}: value must be finite")
    return f


def from_mapping(doc: Mapping[str, Any], base: Scenario | None = DEFAULT_SCENARIO) -> Scenario:
    """Build a scenario from a (possibly sectioned) mapping of overrides.

    With ``base=None`` every field must be present.
    """
    flat = _flatten(doc, {})
    unknown = sorted(set(flat) - set(_FIELDS))
    if unknown:
        raise ScenarioError(f"unknown key(s): {', '.join(unknown)}")
    values = {k: _coerce(k, v) for k, v in flat.items()}
    if base is None:
        missing = [k for k in _FIELDS if k not in values]
        if missing:
            raise ScenarioError(f"missing key(s): {', '.join(missing)}")
        return Scenario(**values)
    return dataclasses.replace(base, **values)


def load_scenario(source=None, *, strict: bool = False) -> Scenario:
    """Load a scenario from a path, a JSON string or a mapping.

    ``None`` or an empty document yields the default (Table 1) scenario.
    """
    base = None if strict else DEFAULT_SCENARIO
    if source is None:
        return from_mapping({}, base)
    if isinstance(source, Mapping):
        return from_mapping(source, base)
    if isinstance(source, os.PathLike) or (
        isinstance(source, str) and not source.lstrip().startswith("{") and source.strip()
    ):
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = source
    if not text.strip():
        return from_mapping({}, base)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"malformed scenario document: {exc}") from exc
    if not isinstance(doc, Mapping):
        raise ScenarioError("scenario document must be an object")
    return from_mapping(doc, base)
