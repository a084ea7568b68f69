"""
Ideals generated in a single degree
===================================

When every I_i is generated in degree d_i, reg(I^a) is eventually one linear
function with slopes (d_1, ..., d_m).  Some families need a later origin
before the linear behaviour starts.
"""

# %%
from reglab import (
    FitFailed, IdealFamily, RingContext, candidate_slopes, check_corollary2, fit_envelope, minimalize,
    tabulate,
)

R = RingContext(("x", "y", "z"))
families = {
    "(x,y,z), (xy,yz,xz)": [[(1, 0, 0), (0, 1, 0), (0, 0, 1)], [(1, 1, 0), (0, 1, 1), (1, 0, 1)]],
    "(x^2,yz), (xz,y^2)": [[(2, 0, 0), (0, 1, 1)], [(1, 0, 1), (0, 2, 0)]],
    "(x^3,y^3,xyz)": [[(3, 0, 0), (0, 3, 0), (1, 1, 1)]],
}

# %%
for name, gens in families.items():
    family = IdealFamily(R, tuple(minimalize(g, R) for g in gens))
    table = tabulate(family, "reg", 5)
    for k in (0, 1, 2, 3):
        try:
            fit = fit_envelope(table, candidate_slopes(family), (k,) * family.m)
        except FitFailed as exc:
            print(f"{name}: origin {k} fails at a={exc.witness}")
            continue
        print(f"{name}: {fit.pretty()}  single form: {check_corollary2(family, fit)}")
        break
