# %% [markdown]
# # Power and battery-lifetime maps
#
# Evaluates the service area on a polar grid for `C = 2` and `C = 8` and
# prints a few summary numbers per RIS size. The same data are produced as
# CSV by `risiot power-map` / `risiot ebl-map`.

# %%
import io

import numpy as np

from risiot import DEFAULT_SCENARIO, RisGeometry, aggregate, build_config_set, emit_grid_csv, evaluate_map
from risiot.units import seconds_to_years, watts_to_dbm

scen = DEFAULT_SCENARIO.replace(n_d=128, n_theta=128)
grid, link, frame, prof = scen.grid(), scen.link(), scen.frame(), scen.profile()

# %%
for c in (2, 8):
    for n_x in (2, 5, 10):
        m = evaluate_map(grid, RisGeometry(n_x, n_x), build_config_set(c), link, frame, prof)
        s = aggregate(m, n_x * n_x, c)
        ok = ~m.outage
        print(
            f"C={c:2d} N={n_x * n_x:3d}  min power {watts_to_dbm(m.rho[ok].min()):6.2f} dBm"
            f"  max EBL {seconds_to_years(np.nanmax(m.ebl)):5.2f} y"
            f"  outage {s.outage_area_pct:5.2f}% of area"
        )

# %% [markdown]
# First rows of the CSV written for the `N = 100`, `C = 2` map.

# %%
m = evaluate_map(grid, RisGeometry(10, 10), build_config_set(2), link, frame, prof)
buf = io.StringIO()
emit_grid_csv(m, buf)
print("\n".join(buf.getvalue().splitlines()[:6]))
