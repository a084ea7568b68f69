"""
Hilbert series of Koszul homology against Betti numbers
=======================================================

For I1 = (x, y^2), I2 = (x^2, y) the Hilbert series of H_0 and H_1 split
into two terms each.  Expanding the coefficient of s^a gives the graded Betti
numbers of I1^a1 I2^a2, and the largest x-degree present is t_j.
"""

# %%
from reglab import asymptotic_forms, coefficients_at, compare_series_to_betti, rho_of_sum
from reglab.asymptotics import format_envelope
from reglab.fixtures import eq1_series, eq2_series, example1_family
from reglab.hilbert import format_series

family = example1_family()
h0, h1 = eq1_series(), eq2_series()
print(format_series(h0))
print(format_series(h1))

# %%
# Coefficients at a few exponents; keys are total degrees, values counts.
for a in [(0, 0), (1, 0), (1, 1), (2, 1)]:
    print(a, "H0:", coefficients_at(h0, a), "H1:", coefficients_at(h1, a),
          "rho:", rho_of_sum(h0, a), rho_of_sum(h1, a))

# %%
print("t0 =", format_envelope(asymptotic_forms(h0)))
print("t1 =", format_envelope(asymptotic_forms(h1)))

# %%
for j, series in ((0, h0), (1, h1)):
    report = compare_series_to_betti(series, family, j, 5)
    print(f"H{j}: {len(report.mismatches)} mismatches on [0,5]^2")
print("H0 checked against j=1:", len(compare_series_to_betti(h0, family, 1, 3).mismatches), "mismatches")
