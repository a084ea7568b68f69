"""
Two linear pieces: I1 = (x, y^2), I2 = (x^2, y)
================================================

Neither ideal is generated in a single degree, and reg(I1^a1 I2^a2) is the
maximum of two linear functions rather than one.
"""

# %%
# Load the family and look at a few products of powers.
from reglab import candidate_slopes, fit_envelope, multigraded_betti, power_product, tabulate
from reglab.fixtures import example1_family

family = example1_family()
for a in [(1, 0), (1, 1), (2, 1), (3, 2)]:
    I = power_product(family, a)
    table = multigraded_betti(I)
    print(a, I, "t =", table.t, "reg =", table.reg)

# %%
# The number of generators is 1+a1+a2 and there are a1+a2 first syzygies.
for a in [(2, 3), (4, 1)]:
    print(a, multigraded_betti(power_product(family, a)).totals())

# %%
# Tabulate reg on [0,6]^2 and print it as a grid, a2 growing to the right.
reg = tabulate(family, "reg", 6)
for a1 in range(7):
    print(" ".join(f"{reg[(a1, a2)]:3d}" for a2 in range(7)))

# %%
# Fit the table by a maximum of linear forms with slopes drawn from the
# generator degrees {1,2} x {1,2}.
for kind in ("t0", "t1", "reg"):
    fit = fit_envelope(tabulate(family, kind, 6), candidate_slopes(family), (1, 1))
    print(fit.pretty())
