"""Uplink power, battery lifetime and coverage of a RIS-assisted IoT cell."""

from .channel import (
    ApPosition,
    DevicePosition,
    LinkBudget,
    PhaseConfigSet,
    RisGeometry,
    angular_resolution,
    array_factor,
    array_gain_closed_form,
    build_config_set,
    path_loss,
    snr,
)
from .energy import (
    DeviceEnergyProfile,
    FrameTiming,
    PowerResult,
    best_config_power,
    energy_consumption,
    expected_battery_lifetime,
    required_power,
)
from .scenario import DEFAULT_SCENARIO, Scenario, ScenarioError, load_scenario
from .sweep import (
    GridMap,
    ServiceAreaGrid,
    SweepSummary,
    aggregate,
    build_grid,
    cell_area,
    evaluate_map,
    sweep_n_c,
)
from .units import db_to_linear, dbm_to_watts, linear_to_db, watts_to_dbm
from .output import emit_grid_csv, emit_summary

__version__ = "0.1.0"
