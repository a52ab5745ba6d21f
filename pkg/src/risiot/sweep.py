"""Service-area grids, per-cell power/EBL maps and (N, C) sweeps."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .channel import LinkBudget, PhaseConfigSet, RisGeometry, build_config_set
from .energy import (
    DeviceEnergyProfile,
    FrameTiming,
    best_power_arrays,
    expected_battery_lifetime,
)


@dataclass(frozen=True)
class ServiceAreaGrid:
    """Uniform polar subdivision of the annular sector ``[d_min, d_max] x [theta_min, theta_max]``.

    Cells are sampled at their centres; index ``i`` runs over distance and
    ``j`` over angle.
    """

    d_min: float
    d_max: float
    theta_min: float
    theta_max: float
    n_d: int
    n_theta: int

    def __post_init__(self):
        if not self.d_min < self.d_max:
            raise ValueError("d_min must be < d_max")
        if not self.theta_min < self.theta_max:
            raise ValueError("theta_min must be < theta_max")
        if self.d_min <= 0:
            raise ValueError("d_min must be > 0")
        if self.theta_min < 0 or self.theta_max > math.pi / 2:
            raise ValueError("angles must lie in [0, pi/2]")
        for name in ("n_d", "n_theta"):
            value = getattr(self, name)
            if int(value) != value or value < 1:
                raise ValueError(f"{name} must be an integer >= 1")

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n_d, self.n_theta)

    @property
    def d_edges(self) -> np.ndarray:
        return self.d_min + np.arange(self.n_d + 1) * (self.d_max - self.d_min) / self.n_d

    @property
    def theta_edges(self) -> np.ndarray:
        step = (self.theta_max - self.theta_min) / self.n_theta
        return self.theta_min + np.arange(self.n_theta + 1) * step

    @property
    def d_centers(self) -> np.ndarray:
        return self.d_min + (np.arange(self.n_d) + 0.5) * (self.d_max - self.d_min) / self.n_d

    @property
    def theta_centers(self) -> np.ndarray:
        step = (self.theta_max - self.theta_min) / self.n_theta
        return self.theta_min + (np.arange(self.n_theta) + 0.5) * step

    def cell_areas(self) -> np.ndarray:
        """Areas of all cells as an ``(n_d, n_theta)`` array."""
        edges = self.d_edges
        dtheta = (self.theta_max - self.theta_min) / self.n_theta
        ring = 0.5 * (edges[1:] ** 2 - edges[:-1] ** 2) * dtheta
        return np.repeat(ring[:, None], self.n_theta, axis=1)

    @property
    def total_area(self) -> float:
        return 0.5 * (self.theta_max - self.theta_min) * (self.d_max**2 - self.d_min**2)


def build_grid(d_min, d_max, theta_min, theta_max, n_d=256, n_theta=256) -> ServiceAreaGrid:
    return ServiceAreaGrid(d_min, d_max, theta_min, theta_max, n_d, n_theta)


def cell_area(grid: ServiceAreaGrid, i: int, j: int) -> float:
    """Area in m^2 of cell ``(i, j)``: ``dtheta (d_hi^2 - d_lo^2) / 2``."""
    if not (0 <= i < grid.n_d and 0 <= j < grid.n_theta):
        raise IndexError(f"cell ({i}, {j}) outside a {grid.n_d}x{grid.n_theta} grid")
    edges = grid.d_edges
    dtheta = (grid.theta_max - grid.theta_min) / grid.n_theta
    return float(0.5 * dtheta * (edges[i + 1] ** 2 - edges[i] ** 2))


class GridCell(NamedTuple):
    rho: float
    ebl: Optional[float]
    best_angle_index: Optional[int]
    outage: bool


@dataclass(frozen=True)
class GridMap:
    """Per-cell results on a grid, stored as ``(n_d, n_theta)`` arrays.

    ``ebl`` is NaN and ``best_index`` may be -1 in outage cells.
    """

    grid: ServiceAreaGrid
    rho: np.ndarray
    ebl: np.ndarray
    best_index: np.ndarray
    outage: np.ndarray

    def __getitem__(self, ij) -> GridCell:
        i, j = ij
        idx = int(self.best_index[i, j])
        out = bool(self.outage[i, j])
        return GridCell(
            rho=float(self.rho[i, j]),
            ebl=None if out else float(self.ebl[i, j]),
            best_angle_index=None if idx < 0 else idx,
            outage=out,
        )

    def __len__(self):
        return self.grid.n_d * self.grid.n_theta

    def cells(self):
        """Iterate ``((i, j), GridCell)`` in row-major (distance-major) order."""
        for i in range(self.grid.n_d):
            for j in range(self.grid.n_theta):
                yield (i, j), self[i, j]


def _evaluate_rows(grid, rows, geom, cfg, link, frame, prof):
    d = grid.d_centers[rows][:, None]
    theta = grid.theta_centers[None, :]
    rho, index = best_power_arrays(d, theta, geom, cfg, link)
    outage = rho > link.rho_max
    ebl = np.full(rho.shape, np.nan)
    ebl[~outage] = expected_battery_lifetime(rho[~outage], frame, prof)
    return rho, ebl, index, outage


def evaluate_map(
    grid: ServiceAreaGrid,
    geom: RisGeometry,
    cfg: PhaseConfigSet,
    link: LinkBudget,
    frame: FrameTiming,
    prof: DeviceEnergyProfile,
    workers: int = 1,
) -> GridMap:
    """Best-configuration power, outage flag and EBL for every cell centre.

    With ``workers > 1`` blocks of radial rows are evaluated on a thread pool;
    every cell is computed elementwise, so the result does not depend on the
    number of workers.
    """
    rho = np.empty(grid.shape)
    ebl = np.empty(grid.shape)
    index = np.empty(grid.shape, dtype=int)
    outage = np.empty(grid.shape, dtype=bool)

    def run(rows):
        r, e, k, o = _evaluate_rows(grid, rows, geom, cfg, link, frame, prof)
        rho[rows], ebl[rows], index[rows], outage[rows] = r, e, k, o

    blocks = np.array_split(np.arange(grid.n_d), max(1, min(workers, grid.n_d)))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(run, blocks))
    else:
        for rows in blocks:
            run(rows)
    return GridMap(grid, rho, ebl, index, outage)


@dataclass(frozen=True)
class SweepSummary:
    n_total: int
    c_count: int
    avg_rho: Optional[float]
    avg_ebl: Optional[float]
    outage_area_pct: float


def aggregate(gmap: GridMap, n_total: int = 0, c_count: int = 0) -> SweepSummary:
    """Area-weighted averages over covered cells and the outage area percentage."""
    areas = gmap.grid.cell_areas()
    total = areas.sum()
    out_area = areas[gmap.outage].sum()
    pct = float(min(100.0, 100.0 * out_area / total))
    covered = ~gmap.outage
    if covered.any():
        w = areas[covered]
        avg_rho = float(np.sum(w * gmap.rho[covered]) / w.sum())
        avg_ebl = float(np.sum(w * gmap.ebl[covered]) / w.sum())
    else:
        avg_rho = avg_ebl = None
    return SweepSummary(n_total, c_count, avg_rho, avg_ebl, pct)


def sweep_n_c(
    n_x_list: Sequence[int],
    c_list: Sequence[int],
    grid: ServiceAreaGrid,
    link: LinkBudget,
    frame: FrameTiming,
    prof: DeviceEnergyProfile,
    workers: int = 1,
) -> list[SweepSummary]:
    """Summaries for every square RIS ``n_x x n_x`` and configuration count.

    Results are ordered by ``(C, N)``.
    """
    if not n_x_list or not c_list:
        raise ValueError("n_x_list and c_list must be nonempty")
    out = []
    for c in sorted(set(c_list)):
        cfg = build_config_set(c)
        for n_x in sorted(set(n_x_list)):
            geom = RisGeometry.square(n_x)
            gmap = evaluate_map(grid, geom, cfg, link, frame, prof, workers=workers)
            out.append(aggregate(gmap, geom.n_total, c))
    return out
