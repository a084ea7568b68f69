"""
Three linear pieces: I1 = (x, y^2, z^3), I2 = (x^4, y^3, z)
============================================================

Every t_j and the regularity are eventually the maximum of three linear
functions.  The middle piece 2a1+3a2+c only becomes visible once the grid
reaches a = (6, 4) for t1, t2 and reg; on smaller grids the other two pieces
already explain every value.
"""

# %%
import time

from reglab import candidate_slopes, fit_envelope
from reglab.asymptotics import betti_grid, necessary_witnesses, tabulate
from reglab.fixtures import example2_family

family = example2_family()
start = time.perf_counter()
bettis = betti_grid(family, 7)
print(f"Betti tables on [0,7]^2 in {time.perf_counter() - start:.2f}s")

# %%
for grid in (5, 6, 7):
    print(f"--- grid {grid}")
    for kind in ("t0", "t1", "t2", "reg"):
        table = tabulate(family, kind, grid, bettis=bettis)
        fit = fit_envelope(table, candidate_slopes(family), (1, 1))
        print(fit.pretty())

# %%
# Where does each piece win outright?
table = tabulate(family, "reg", 7, bettis=bettis)
fit = fit_envelope(table, candidate_slopes(family), (1, 1))
for form, a in necessary_witnesses(fit, table).items():
    print(f"{form.pretty():>12} alone attains reg at a = {a}")
