"""Sums of shifted rational terms x^v s^w / prod (1 - x^d s_i).

Such a sum describes the Hilbert series of a Z x Z^m graded module over the
polynomial ring whose variables have degrees (d, e_i).  For a fixed s-degree
a the coefficient of s^a is a polynomial in x; its degree rho(a) is the
largest x-degree present.
"""

from __future__ import annotations

import re
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Sequence

from .asymptotics import LinearForm, grid_points, power_products_on_grid
from .monomial import IdealFamily
from .resolution import NEG_INF, multigraded_betti

MAX_AXIS_EXPONENT = 10**4


@dataclass(frozen=True, order=True)
class SeriesFactor:
    """One factor 1/(1 - x^x_degree s_axis); ``axis`` counts from 1."""

    x_degree: int
    axis: int

    def __post_init__(self):
        if self.x_degree < 1:
            raise ValueError(f"factor x-degree must be positive, got {self.x_degree}")
        if self.axis < 1:
            raise ValueError(f"factor axis must be at least 1, got {self.axis}")


@dataclass(frozen=True)
class RationalTerm:
    shift_x: int
    shift_s: tuple[int, ...]
    factors: tuple[SeriesFactor, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "shift_s", tuple(self.shift_s))
        object.__setattr__(self, "factors", tuple(sorted(self.factors)))
        m = len(self.shift_s)
        for f in self.factors:
            if f.axis > m:
                raise ValueError(f"factor axis {f.axis} exceeds m={m}")

    @property
    def m(self) -> int:
        return len(self.shift_s)

    def slopes(self) -> tuple[int, ...]:
        """Largest factor degree per axis, 0 on axes without factors."""
        lam = [0] * self.m
        for f in self.factors:
            lam[f.axis - 1] = max(lam[f.axis - 1], f.x_degree)
        return tuple(lam)

    def _local(self, a: Sequence[int]):
        a = tuple(a)
        if len(a) != self.m:
            raise ValueError(f"exponent {a} has length {len(a)}, series has m={self.m}")
        rest = tuple(x - w for x, w in zip(a, self.shift_s))
        lam = self.slopes()
        if any(r < 0 or (r and not l) for r, l in zip(rest, lam)):
            return None
        return rest


def rho_of_term(t: RationalTerm, a: Sequence[int]):
    rest = t._local(a)
    if rest is None:
        return NEG_INF
    return t.shift_x + sum(l * r for l, r in zip(t.slopes(), rest))


@dataclass(frozen=True)
class RationalSeriesSum:
    terms: tuple[RationalTerm, ...]
    m: int = field(default=0)

    def __post_init__(self):
        terms = tuple(self.terms)
        object.__setattr__(self, "terms", terms)
        m = self.m or (terms[0].m if terms else 0)
        if m < 1:
            raise ValueError("cannot infer the number of axes of an empty series")
        if any(t.m != m for t in terms):
            raise ValueError("all terms must have the same number of axes")
        object.__setattr__(self, "m", m)


def rho_of_sum(S: RationalSeriesSum, a: Sequence[int]):
    return max((rho_of_term(t, a) for t in S.terms), default=NEG_INF)


def asymptotic_forms(S: RationalSeriesSum) -> list[LinearForm]:
    best: dict[tuple[int, ...], int] = {}
    for t in S.terms:
        lam = t.slopes()
        if not all(lam):
            continue
        c = t.shift_x - sum(l * w for l, w in zip(lam, t.shift_s))
        if lam not in best or c > best[lam]:
            best[lam] = c
    return sorted(LinearForm(lam, c) for lam, c in best.items())


def _axis_polynomial(degrees: list[int], k: int) -> dict[int, int]:
    """Coefficient of s^k in prod_d 1/(1 - x^d s), as {x-degree: count}."""
    # dp over factors: poly[j] = x-polynomial for total s-exponent j
    poly = [Counter() for _ in range(k + 1)]
    poly[0][0] = 1
    for d in degrees:
        # multiply by 1/(1 - x^d s): poly[j] += x^d * poly[j-1], ascending j
        for j in range(1, k + 1):
            for u, c in poly[j - 1].items():
                poly[j][u + d] += c
    return dict(poly[k])


def _term_coefficients(t: RationalTerm, a: Sequence[int]) -> dict[int, int]:
    rest = t._local(a)
    if rest is None:
        return {}
    if any(r > MAX_AXIS_EXPONENT for r in rest):
        raise ValueError(f"per-axis exponent above {MAX_AXIS_EXPONENT} in {tuple(rest)}")
    by_axis = defaultdict(list)
    for f in t.factors:
        by_axis[f.axis - 1].append(f.x_degree)
    acc = {t.shift_x: 1}
    for i, r in enumerate(rest):
        if not r:
            continue
        part = _axis_polynomial(by_axis[i], r)
        nxt: dict[int, int] = defaultdict(int)
        for u, c in acc.items():
            for v, e in part.items():
                nxt[u + v] += c * e
        acc = nxt
    return dict(acc)


def coefficients_at(S: RationalSeriesSum, a: Sequence[int]) -> dict[int, int]:
    """The x-polynomial multiplying s^a in the expansion of S, nonzero entries only."""
    out: dict[int, int] = defaultdict(int)
    for t in S.terms:
        for u, c in _term_coefficients(t, a).items():
            out[u] += c
    return {u: c for u, c in sorted(out.items()) if c}


@dataclass
class Mismatch:
    a: tuple[int, ...]
    series: dict[int, int]
    betti: dict[int, int]

    def __str__(self):
        return f"a={self.a}: series {self.series} != betti {self.betti}"


@dataclass
class CompareReport:
    j: int
    grid_max: int
    mismatches: list[Mismatch]
    negative: list[tuple[int, ...]]

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.negative

    def to_dict(self) -> dict:
        return {
            "j": self.j,
            "grid_max": self.grid_max,
            "mismatches": [
                {"a": list(x.a), "series": {str(k): v for k, v in x.series.items()},
                 "betti": {str(k): v for k, v in x.betti.items()}}
                for x in self.mismatches
            ],
            "negative_coefficients": [list(a) for a in self.negative],
        }


def compare_series_to_betti(S: RationalSeriesSum, family: IdealFamily, j: int, grid_max: int) -> CompareReport:
    """Check that S expands to the degree-graded j-th Betti numbers of every I^a on the grid."""
    if S.m != family.m:
        raise ValueError(f"series has m={S.m}, family has {family.m} ideals")
    mismatches, negative = [], []
    ideals = power_products_on_grid(family, grid_max)
    for a in grid_points(family.m, 0, grid_max):
        coeffs = coefficients_at(S, a)
        if any(c < 0 for c in coeffs.values()):
            negative.append(a)
        betti = multigraded_betti(ideals[a]).graded(j)
        if coeffs != betti:
            mismatches.append(Mismatch(a, coeffs, betti))
    return CompareReport(j, grid_max, mismatches, negative)


_TERM = re.compile(
    r"^\s*shift\s*:\s*x\^\s*(-?\d+)\s*s\^\s*\(([^)]*)\)\s*;\s*factors\s*:(.*)$"
)
_FACTOR = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_series(text: str) -> RationalSeriesSum:
    """Read the one-term-per-line series format; ``#`` lines are comments."""
    terms = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        match = _TERM.match(line)
        if not match:
            raise ValueError(f"line {lineno}: expected 'shift: x^v s^(w1,...,wm) ; factors: (d,i) ...'")
        v = int(match.group(1))
        w = tuple(int(x) for x in match.group(2).split(","))
        rest = match.group(3)
        factors = [SeriesFactor(int(d), int(i)) for d, i in _FACTOR.findall(rest)]
        if _FACTOR.sub("", rest).strip():
            raise ValueError(f"line {lineno}: cannot read factors {rest.strip()!r}")
        terms.append(RationalTerm(v, w, tuple(factors)))
    if not terms:
        raise ValueError("series has no terms")
    return RationalSeriesSum(tuple(terms))


def format_series(S: RationalSeriesSum) -> str:
    lines = []
    for t in S.terms:
        w = ",".join(map(str, t.shift_s))
        fs = " ".join(f"({f.x_degree},{f.axis})" for f in t.factors)
        lines.append(f"shift: x^{t.shift_x} s^({w}) ; factors: {fs}".rstrip())
    return "\n".join(lines) + "\n"

