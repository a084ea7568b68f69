"""Monomials, monomial ideals and products of their powers.

Monomials are exponent vectors over a fixed ring.  Ideals are stored by their
minimal generating set in a canonical order, so equal ideals compare equal and
hash equally.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

# exponents are kept in int64 arrays during products; stay far from the edge
MAX_EXPONENT = 2**40


class RingMismatch(ValueError):
    pass


@dataclass(frozen=True)
class RingContext:
    names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(self.names) < 1:
            raise ValueError("a ring needs at least one variable")
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be distinct")

    @property
    def n(self) -> int:
        return len(self.names)

    @classmethod
    def standard(cls, n: int) -> "RingContext":
        if n <= 3:
            return cls(("x", "y", "z")[:n])
        return cls(tuple(f"x{i + 1}" for i in range(n)))


@dataclass(frozen=True, order=False)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        for e in exps:
            if e < 0:
                raise ValueError(f"negative exponent in {exps}")
            if e > MAX_EXPONENT:
                raise OverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")
        object.__setattr__(self, "exponents", exps)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def __len__(self):
        return len(self.exponents)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def sort_key(self):
        # ascending degree; within a degree the lex-larger monomial first
        return (self.degree, tuple(-e for e in self.exponents))

    def to_string(self, ring: RingContext) -> str:
        parts = []
        for name, e in zip(ring.names, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "".join(parts) if parts else "1"


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    Use :func:`minimalize` to build one from an arbitrary generating list; the
    constructor only checks that the given list is already minimal.
    """

    ring: RingContext
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        gens = tuple(self.gens)
        object.__setattr__(self, "gens", gens)
        if not gens:
            raise ValueError("empty generating set")
        for g in gens:
            if len(g) != self.ring.n:
                raise RingMismatch(f"monomial {g.exponents} does not live in a ring with {self.ring.n} variables")
        if list(gens) != sorted(gens, key=Monomial.sort_key):
            raise ValueError("generators are not in canonical order")
        for i, g in enumerate(gens):
            for h in gens[i + 1:]:
                if g.divides(h) or h.divides(g):
                    raise ValueError("generating set is not minimal")

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(g.degree for g in self.gens)

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].degree == 0

    def array(self) -> np.ndarray:
        return np.array([g.exponents for g in self.gens], dtype=np.int64).reshape(len(self.gens), self.ring.n)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def __len__(self):
        return len(self.gens)

    def __str__(self):
        return "(" + ", ".join(g.to_string(self.ring) for g in self.gens) + ")"


@dataclass(frozen=True)
class IdealFamily:
    ring: RingContext
    ideals: tuple[MonomialIdeal, ...]
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "ideals", tuple(self.ideals))
        if not self.ideals:
            raise ValueError("a family needs at least one ideal")
        for I in self.ideals:
            if I.ring != self.ring:
                raise RingMismatch("all ideals of a family must share the ring")
        labels = tuple(self.labels) or tuple(f"I{i + 1}" for i in range(len(self.ideals)))
        if len(labels) != len(self.ideals):
            raise ValueError("one label per ideal")
        object.__setattr__(self, "labels", labels)

    @property
    def m(self) -> int:
        return len(self.ideals)


MultiExponent = tuple[int, ...]


def unit_ideal(ring: RingContext) -> MonomialIdeal:
    return MonomialIdeal(ring, (Monomial((0,) * ring.n),))


def _minimal_rows(arr: np.ndarray) -> np.ndarray:
    """Rows of ``arr`` not divisible by any other row, duplicates removed."""
    arr = np.unique(arr, axis=0)
    order = np.argsort(arr.sum(axis=1), kind="stable")
    arr = arr[order]
    kept = np.empty_like(arr)
    k = 0
    for row in arr:
        if k and (kept[:k] <= row).all(axis=1).any():
            continue
        kept[k] = row
        k += 1
    return kept[:k]


def _from_rows(ring: RingContext, rows: np.ndarray) -> MonomialIdeal:
    if rows.size and rows.max() > MAX_EXPONENT:
        raise OverflowError("exponent overflow in monomial product")
    gens = sorted((Monomial(tuple(int(e) for e in r)) for r in rows), key=Monomial.sort_key)
    return MonomialIdeal(ring, tuple(gens))


def minimalize(gens: Iterable[Monomial | Sequence[int]], ring: RingContext | None = None) -> MonomialIdeal:
    """Minimal generating set of the ideal generated by ``gens``.

    >>> R = RingContext(("x", "y"))
    >>> str(minimalize([(3, 0), (1, 1), (2, 2), (0, 3)], R))
    '(xy, x^3, y^3)'
    """
    gens = [g if isinstance(g, Monomial) else Monomial(tuple(g)) for g in gens]
    if not gens:
        raise ValueError("empty generating set")
    n = len(gens[0])
    if any(len(g) != n for g in gens):
        raise RingMismatch("generators of different lengths")
    if ring is None:
        ring = RingContext.standard(n)
    elif ring.n != n:
        raise RingMismatch(f"ring has {ring.n} variables, generators have {n}")
    rows = np.array([g.exponents for g in gens], dtype=np.int64)
    return _from_rows(ring, _minimal_rows(rows))


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    if I.ring != J.ring:
        raise RingMismatch("cannot multiply ideals of different rings")
    A, B = I.array(), J.array()
    if A.max(initial=0) + B.max(initial=0) > MAX_EXPONENT:
        raise OverflowError("exponent overflow in monomial product")
    sums = (A[:, None, :] + B[None, :, :]).reshape(-1, I.ring.n)
    return _from_rows(I.ring, _minimal_rows(sums))


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """I^k by binary powering."""
    if k < 0:
        raise ValueError("negative power")
    result = unit_ideal(I.ring)
    base = I
    while k:
        if k & 1:
            result = multiply(result, base)
        k >>= 1
        if k:
            base = multiply(base, base)
    return result


def power_product(family: IdealFamily, a: Sequence[int]) -> MonomialIdeal:
    """The ideal I_1^a_1 ... I_m^a_m."""
    a = tuple(a)
    if len(a) != family.m:
        raise ValueError(f"exponent {a} has length {len(a)}, family has {family.m} ideals")
    if any(k < 0 for k in a):
        raise ValueError(f"negative exponent in {a}")
    return reduce(multiply, (power(I, k) for I, k in zip(family.ideals, a)), unit_ideal(family.ring))


def generator_degree_sets(family: IdealFamily) -> list[frozenset[int]]:
    return [frozenset(I.degrees) for I in family.ideals]


def is_equigenerated(family: IdealFamily, i: int) -> bool:
    return len(set(family.ideals[i].degrees)) == 1
