# %% [markdown]
# # Coverage and average power against RIS size
#
# Sweeps square RIS sizes `N = 4 .. 100` for `C in {2, 4, 8, 16}` and prints
# the area-weighted average power, average lifetime and outage area.
# `risiot sweep` writes the same table as CSV or JSON.

# %%
import sys

from risiot import DEFAULT_SCENARIO, emit_summary, sweep_n_c

scen = DEFAULT_SCENARIO
summaries = sweep_n_c(scen.n_x_list, scen.c_list, scen.grid(), scen.link(), scen.frame(), scen.profile())
emit_summary(summaries, sys.stdout)

# %% [markdown]
# The outage area falls quickly with `N` and `C`; a sliver next to the RIS
# plane (theta near 90 degrees) never gets covered.

# %%
best = {(s.n_total, s.c_count): s.outage_area_pct for s in summaries}
print(f"\n(N, C) = (81, 8): {best[(81, 8)]:.2f}% of the area in outage")
