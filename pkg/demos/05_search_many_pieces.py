"""
How many linear pieces can reg have?
====================================

A small random search over pairs of monomial ideals in three variables,
recording how many linear forms the fitted envelope of reg(I1^a1 I2^a2)
needs on [2,6]^2.  Families whose table is not yet a max of linear forms on
that box are skipped.
"""

# %%
import random
from collections import Counter

from reglab import FitFailed, IdealFamily, RingContext, candidate_slopes, fit_envelope, minimalize, tabulate

rng = random.Random(11)
R = RingContext(("x", "y", "z"))


def random_ideal():
    gens = [tuple(rng.randint(0, 4) for _ in range(3)) for _ in range(rng.randint(2, 4))]
    return minimalize([g for g in gens if any(g)] or [(1, 0, 0)], R)


# %%
counts = Counter()
best = None
for trial in range(40):
    family = IdealFamily(R, (random_ideal(), random_ideal()))
    try:
        fit = fit_envelope(tabulate(family, "reg", 6), candidate_slopes(family), (2, 2))
    except FitFailed:
        counts["not fitted"] += 1
        continue
    counts[len(fit.forms)] += 1
    if best is None or len(fit.forms) > len(best[1].forms):
        best = (family, fit)

print(dict(counts))
if best:
    family, fit = best
    print("most pieces:", [str(I) for I in family.ideals])
    print(fit.pretty())
