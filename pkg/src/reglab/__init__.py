"""Regularity and syzygy degrees of products of powers of monomial ideals."""

from .asymptotics import (
    EmptyRegion, EnvelopeFit, FitFailed, GridTable, LinearForm, NotStabilized, candidate_slopes,
    check_corollary2, fit_envelope, pd_stability, tabulate,
)
from .hilbert import (
    RationalSeriesSum, RationalTerm, SeriesFactor, asymptotic_forms, coefficients_at,
    compare_series_to_betti, parse_series, rho_of_sum, rho_of_term,
)
from .monomial import (
    IdealFamily, Monomial, MonomialIdeal, RingContext, RingMismatch, generator_degree_sets,
    is_equigenerated, minimalize, multiply, power_product, unit_ideal,
)
from .resolution import (
    BettiTable, SimplicialComplex, invariants, multigraded_betti, reduced_homology_dims,
    upper_koszul_complex,
)
from .textformat import ParseError, format_family, parse_family

__version__ = "0.1.0"
