"""Bundled ideal families and Hilbert-series decompositions."""

from importlib import resources

from .hilbert import RationalSeriesSum, parse_series
from .monomial import IdealFamily
from .textformat import parse_family


def fixture_text(name: str) -> str:
    return resources.files("reglab").joinpath("data", name).read_text(encoding="utf-8")


def fixture_path(name: str):
    return resources.files("reglab").joinpath("data", name)


def example1_family() -> IdealFamily:
    return parse_family(fixture_text("example1.family"))


def example2_family() -> IdealFamily:
    return parse_family(fixture_text("example2.family"))


def eq1_series() -> RationalSeriesSum:
    return parse_series(fixture_text("eq1.series"))


def eq2_series() -> RationalSeriesSum:
    return parse_series(fixture_text("eq2.series"))
