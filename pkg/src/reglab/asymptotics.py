"""Tabulating t_j(I^a), reg(I^a), pd(I^a) on exponent grids and fitting
them by a maximum of linear functions."""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .monomial import IdealFamily, MonomialIdeal, generator_degree_sets, is_equigenerated, multiply, unit_ideal
from .resolution import NEG_INF, BettiTable, multigraded_betti


class FitFailed(Exception):
    def __init__(self, witness, expected, got):
        self.witness = tuple(witness)
        self.expected = expected
        self.got = got
        super().__init__(f"envelope {got} differs from table value {expected} at a={self.witness}")


class EmptyRegion(ValueError):
    pass


class NotStabilized(Exception):
    pass


@dataclass(frozen=True, order=True)
class LinearForm:
    slopes: tuple[int, ...]
    intercept: int

    def __post_init__(self):
        object.__setattr__(self, "slopes", tuple(int(s) for s in self.slopes))
        object.__setattr__(self, "intercept", int(self.intercept))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, s in enumerate(self.slopes) if s)

    def __call__(self, a: Sequence[int]) -> int:
        return sum(s * x for s, x in zip(self.slopes, a)) + self.intercept

    def pretty(self) -> str:
        out = ""
        for i, s in enumerate(self.slopes):
            if not s:
                continue
            term = f"a{i + 1}" if s == 1 else f"{s}a{i + 1}"
            out += term if not out else "+" + term
        if self.intercept or not out:
            out += f"{self.intercept:+d}" if out else str(self.intercept)
        return out

    def to_dict(self) -> dict:
        return {"slopes": list(self.slopes), "intercept": self.intercept}

    @classmethod
    def from_dict(cls, d: dict) -> "LinearForm":
        return cls(tuple(d["slopes"]), d["intercept"])


def format_envelope(forms: Iterable[LinearForm]) -> str:
    forms = sorted(forms, reverse=True)
    if len(forms) == 1:
        return forms[0].pretty()
    return "max{" + ", ".join(f.pretty() for f in forms) + "}"


def _kind_label(kind: str) -> str:
    return kind if kind in ("reg", "pd") else f"t{_kind_index(kind)}"


def _kind_index(kind: str) -> int:
    if not (kind.startswith("t") and kind[1:].lstrip("_").isdigit()):
        raise ValueError(f"unknown invariant kind {kind!r}")
    return int(kind[1:].lstrip("_"))


def invariant_value(table: BettiTable, kind: str) -> float:
    if kind == "reg":
        return table.reg
    if kind == "pd":
        return table.pd
    return table.t_j(_kind_index(kind))


def grid_points(m: int, lo: Sequence[int] | int, hi: int) -> list[tuple[int, ...]]:
    if isinstance(lo, int):
        lo = (lo,) * m
    return list(itertools.product(*[range(l, hi + 1) for l in lo]))


@dataclass
class GridTable:
    kind: str
    grid_max: int
    m: int
    values: dict = field(default_factory=dict)

    def __getitem__(self, a):
        return self.values[tuple(a)]

    def to_dict(self) -> dict:
        rows = [{"a": list(a), "value": None if v == NEG_INF else v} for a, v in sorted(self.values.items())]
        return {"kind": self.kind, "grid_max": self.grid_max, "m": self.m, "values": rows}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "GridTable":
        values = {tuple(r["a"]): NEG_INF if r["value"] is None else r["value"] for r in d["values"]}
        return cls(d["kind"], d["grid_max"], d["m"], values)

    @classmethod
    def from_json(cls, s: str) -> "GridTable":
        return cls.from_dict(json.loads(s))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([f"a{i + 1}" for i in range(self.m)] + ["value"])
        for a, v in sorted(self.values.items()):
            w.writerow(list(a) + ["-inf" if v == NEG_INF else v])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, kind: str) -> "GridTable":
        rows = list(csv.reader(io.StringIO(text)))
        m = len(rows[0]) - 1
        values = {}
        for r in rows[1:]:
            values[tuple(int(x) for x in r[:m])] = NEG_INF if r[m] == "-inf" else int(r[m])
        return cls(kind, max(max(a) for a in values), m, values)


def default_workers() -> int:
    raw = os.environ.get("REGLAB_THREADS", "1")
    n = int(raw)
    if n == 0:
        return os.cpu_count() or 1
    return max(n, 1)


def power_products_on_grid(family: IdealFamily, grid_max: int) -> dict[tuple[int, ...], MonomialIdeal]:
    """I^a for every a in [0, grid_max]^m, each obtained from a neighbour by one multiplication."""
    m = family.m
    out = {(0,) * m: unit_ideal(family.ring)}
    for a in grid_points(m, 0, grid_max):
        if a in out:
            continue
        i = max(k for k in range(m) if a[k])
        prev = a[:i] + (a[i] - 1,) + a[i + 1:]
        out[a] = multiply(out[prev], family.ideals[i])
    return out


def betti_grid(family: IdealFamily, grid_max: int, workers: int | None = None) -> dict[tuple[int, ...], BettiTable]:
    ideals = power_products_on_grid(family, grid_max)
    keys = sorted(ideals)
    workers = default_workers() if workers is None else workers
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            tables = list(pool.map(multigraded_betti, [ideals[a] for a in keys], chunksize=4))
    else:
        tables = [multigraded_betti(ideals[a]) for a in keys]
    return dict(zip(keys, tables))


def tabulate(family: IdealFamily, kind: str, grid_max: int, workers: int | None = None,
             bettis: dict | None = None) -> GridTable:
    if grid_max < 1:
        raise ValueError("grid_max must be at least 1")
    kind = _kind_label(kind)
    if bettis is None:
        bettis = betti_grid(family, grid_max, workers)
    values = {a: invariant_value(bettis[a], kind) for a in grid_points(family.m, 0, grid_max)}
    return GridTable(kind, grid_max, family.m, values)


def candidate_slopes(family: IdealFamily) -> set[tuple[int, ...]]:
    return set(itertools.product(*[sorted(s) for s in generator_degree_sets(family)]))


@dataclass(frozen=True)
class EnvelopeFit:
    forms: tuple[LinearForm, ...]
    region_origin: tuple[int, ...]
    verified_to: int
    kind: str

    def __call__(self, a) -> int:
        return max(f(a) for f in self.forms)

    def pretty(self) -> str:
        lo = ",".join(map(str, self.region_origin))
        hi = ",".join([str(self.verified_to)] * len(self.region_origin))
        return f"{self.kind}(I^a) = {format_envelope(self.forms)} verified on [{lo}]..[{hi}]"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "forms": [f.to_dict() for f in self.forms],
            "region_origin": list(self.region_origin),
            "verified_to": self.verified_to,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "EnvelopeFit":
        return cls(tuple(LinearForm.from_dict(f) for f in d["forms"]), tuple(d["region_origin"]),
                   d["verified_to"], d["kind"])

    @classmethod
    def from_json(cls, s: str) -> "EnvelopeFit":
        return cls.from_dict(json.loads(s))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        m = len(self.region_origin)
        w.writerow([f"slope{i + 1}" for i in range(m)] + ["intercept"])
        for f in self.forms:
            w.writerow(list(f.slopes) + [f.intercept])
        return buf.getvalue()


def _envelope(forms, points):
    return [max(f(a) for f in forms) if forms else NEG_INF for a in points]


def fit_envelope(table: GridTable, candidates: Iterable[Sequence[int]],
                 region_origin: Sequence[int]) -> EnvelopeFit:
    """Fit ``table`` on the box [region_origin, grid_max] by a max of linear forms.

    Every candidate slope vector gets the largest intercept that keeps it below
    the table on the region; the fit succeeds when the max of these forms
    reproduces the table exactly.  The returned forms are a minimal subset that
    still reproduces it.
    """
    origin = tuple(region_origin)
    A = table.grid_max
    if len(origin) != table.m:
        raise ValueError("region origin has the wrong length")
    if any(o < 0 or o > A - 1 for o in origin):
        raise EmptyRegion(f"region starting at {origin} has fewer than 2 points per axis in a grid up to {A}")
    points = grid_points(table.m, origin, A)
    values = [table[a] for a in points]
    if any(v == NEG_INF for v in values):
        bad = points[values.index(NEG_INF)]
        raise FitFailed(bad, NEG_INF, None)
    cands = sorted({tuple(c) for c in candidates})
    if not cands:
        raise EmptyRegion("no candidate slopes")
    forms = []
    for lam in cands:
        c = min(v - sum(l * x for l, x in zip(lam, a)) for a, v in zip(points, values))
        forms.append(LinearForm(lam, c))
    env = _envelope(forms, points)
    for a, v, e in zip(points, values, env):
        if v != e:
            raise FitFailed(a, v, e)

    chosen = set()
    for a, v in zip(points, values):
        hits = [f for f in forms if f(a) == v]
        if len(hits) == 1:
            chosen.add(hits[0])
    for f in forms:
        if _envelope(sorted(chosen), points) == values:
            break
        chosen.add(f)
    # drop anything the greedy pass made redundant
    for f in sorted(chosen, reverse=True):
        rest = chosen - {f}
        if rest and _envelope(sorted(rest), points) == values:
            chosen = rest
    return EnvelopeFit(tuple(sorted(chosen)), origin, A, table.kind)


def necessary_witnesses(fit: EnvelopeFit, table: GridTable) -> dict[LinearForm, tuple[int, ...]]:
    """For each form, a region point where it alone attains the table value."""
    out = {}
    for a in grid_points(table.m, fit.region_origin, fit.verified_to):
        hits = [f for f in fit.forms if f(a) == table[a]]
        if len(hits) == 1 and hits[0] not in out:
            out[hits[0]] = a
    return out


def check_corollary2(family: IdealFamily, fit: EnvelopeFit) -> bool:
    if not all(is_equigenerated(family, i) for i in range(family.m)):
        return True
    degrees = tuple(I.degrees[0] for I in family.ideals)
    return len(fit.forms) == 1 and fit.forms[0].slopes == degrees


def pd_stability(family: IdealFamily, grid_max: int, table: GridTable | None = None) -> tuple[int, tuple[int, ...]]:
    """Value of pd(I^a) on the largest upper box [b, grid_max]^m where it is constant.

    Ties between boxes of equal size go to the lexicographically smallest origin.
    """
    if grid_max < 2:
        raise ValueError("grid_max must be at least 2")
    if table is None:
        table = tabulate(family, "pd", grid_max)
    m = family.m
    best = None
    for b in grid_points(m, 0, grid_max - 1):
        vals = {table[a] for a in grid_points(m, b, grid_max)}
        if len(vals) != 1:
            continue
        size = math.prod(grid_max - x + 1 for x in b)
        if best is None or size > best[0]:
            best = (size, b, vals.pop())
    if best is None:
        raise NotStabilized(f"pd is not constant on any upper box of side >= 2 within [0,{grid_max}]^{m}")
    return best[2], best[1]
