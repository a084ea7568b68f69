"""Multigraded Betti numbers of monomial ideals.

The Betti number in homological degree j and multidegree b equals the reduced
homology in dimension j-1 of the upper Koszul simplicial complex

    K^b(I) = { squarefree S : x^(b - S) in I }.

Every nonzero Betti number sits at an lcm of minimal generators, so only
multidegrees below the lcm of all generators are inspected.  For each one the
face pattern of K^b is a bitmask over the 2^n squarefree subsets; homology is
computed once per distinct pattern.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

import numpy as np

from .linalg import integer_rank
from .monomial import Monomial, MonomialIdeal, RingMismatch

NEG_INF = -math.inf

# above this many grid cells the lcm-closure is enumerated instead of the box
BOX_LIMIT = 2_000_000


@dataclass(frozen=True)
class SimplicialComplex:
    """Faces are frozensets of 0-based vertex indices; the empty face is explicit."""

    vertex_count: int
    faces: frozenset[frozenset[int]]

    def __post_init__(self):
        faces = frozenset(frozenset(f) for f in self.faces)
        object.__setattr__(self, "faces", faces)
        for f in faces:
            if any(v < 0 or v >= self.vertex_count for v in f):
                raise ValueError(f"face {sorted(f)} uses a vertex outside 0..{self.vertex_count - 1}")
            for v in f:
                if f - {v} not in faces:
                    raise ValueError(f"faces are not closed under subsets: {sorted(f)}")

    @property
    def is_void(self) -> bool:
        return not self.faces


def reduced_homology_dims(C: SimplicialComplex) -> dict[int, int]:
    """Nonzero dimensions of reduced homology over the rationals, by dimension."""
    by_dim: dict[int, list[tuple[int, ...]]] = {}
    for f in C.faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    if not by_dim:
        return {}
    for faces in by_dim.values():
        faces.sort()
    top = max(by_dim)
    ranks = {}
    for d in range(0, top + 1):
        # boundary from d-faces to (d-1)-faces
        src = by_dim.get(d, [])
        dst = by_dim.get(d - 1, [])
        if not src or not dst:
            ranks[d] = 0
            continue
        index = {f: i for i, f in enumerate(dst)}
        rows = []
        for f in src:
            row = [0] * len(dst)
            for pos in range(len(f)):
                row[index[f[:pos] + f[pos + 1:]]] = -1 if pos % 2 else 1
            rows.append(row)
        ranks[d] = integer_rank(rows)
    dims = {}
    for d in range(-1, top + 1):
        dim = len(by_dim.get(d, [])) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if dim:
            dims[d] = dim
    return dims


def _check_ring(I: MonomialIdeal, b: Monomial):
    if len(b) != I.ring.n:
        raise RingMismatch(f"multidegree {b.exponents} does not live in a ring with {I.ring.n} variables")


def upper_koszul_complex(I: MonomialIdeal, b: Monomial) -> SimplicialComplex:
    _check_ring(I, b)
    n = I.ring.n
    faces = []
    for k in range(n + 1):
        for S in combinations(range(n), k):
            c = list(b.exponents)
            for i in S:
                c[i] -= 1
            if min(c, default=0) >= 0 and I.contains(Monomial(tuple(c))):
                faces.append(frozenset(S))
    return SimplicialComplex(n, frozenset(faces))


@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded Betti numbers ``entries[(j, b)]`` of one ideal."""

    entries: dict

    @property
    def pd(self) -> int:
        return max(j for j, _ in self.entries)

    @property
    def t(self) -> list[int]:
        """t[j] for j = 0..pd: largest total degree carrying a j-th syzygy."""
        out = [None] * (self.pd + 1)
        for (j, b) in self.entries:
            d = sum(b)
            if out[j] is None or d > out[j]:
                out[j] = d
        return out

    def t_j(self, j: int) -> float:
        if j < 0:
            raise ValueError("homological index must be nonnegative")
        return self.t[j] if j <= self.pd else NEG_INF

    @property
    def reg(self) -> int:
        return max(sum(b) - j for j, b in self.entries)

    def totals(self) -> list[int]:
        out = [0] * (self.pd + 1)
        for (j, _), v in self.entries.items():
            out[j] += v
        return out

    def graded(self, j: int) -> dict[int, int]:
        """Betti numbers in homological degree j, collected by total degree."""
        out: dict[int, int] = {}
        for (jj, b), v in self.entries.items():
            if jj == j:
                out[sum(b)] = out.get(sum(b), 0) + v
        return out

    def to_dict(self) -> dict:
        entries = [{"j": j, "b": list(b), "dim": v} for (j, b), v in sorted(self.entries.items())]
        return {"entries": entries, "t": self.t, "pd": self.pd, "reg": self.reg}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "BettiTable":
        table = cls({(e["j"], tuple(e["b"])): e["dim"] for e in d["entries"]})
        if d.get("t") is not None and table.t != list(d["t"]):
            raise ValueError("serialized t does not match entries")
        return table

    @classmethod
    def from_json(cls, s: str) -> "BettiTable":
        return cls.from_dict(json.loads(s))


def _subsets(n: int) -> list[tuple[int, ...]]:
    return [S for k in range(n + 1) for S in combinations(range(n), k)]


@lru_cache(maxsize=None)
def _pattern_homology(n: int, mask: int) -> tuple[tuple[int, int], ...]:
    subsets = _subsets(n)
    faces = frozenset(frozenset(S) for bit, S in enumerate(subsets) if mask >> bit & 1)
    return tuple(sorted(reduced_homology_dims(SimplicialComplex(n, faces)).items()))


def lcm_closure(gens: np.ndarray) -> np.ndarray:
    """All lcms of nonempty subsets of the rows of ``gens`` (iterated pairwise closure)."""
    closure = np.unique(gens, axis=0)
    frontier = closure
    while frontier.shape[0]:
        joins = np.maximum(frontier[:, None, :], gens[None, :, :]).reshape(-1, gens.shape[1])
        merged = np.unique(np.vstack([closure, joins]), axis=0)
        if merged.shape[0] == closure.shape[0]:
            break
        # rows of merged not in closure
        known = {tuple(r) for r in closure}
        frontier = np.array([r for r in merged if tuple(r) not in known], dtype=gens.dtype)
        closure = merged
    return closure


def _membership_table(G: np.ndarray, top: np.ndarray) -> np.ndarray:
    """Staircase: for each prefix c[:-1] in the box, the least last exponent putting x^c in I."""
    n = G.shape[1]
    shape = tuple(int(t) + 1 for t in top[:-1])
    sentinel = int(top[-1]) + 1
    M = np.full(shape, sentinel, dtype=np.int64)
    for g in G:
        idx = tuple(int(v) for v in g[:-1])
        if M[idx] > g[-1]:
            M[idx] = g[-1]
    for ax in range(n - 1):
        M = np.minimum.accumulate(M, axis=ax)
    return M


def _face_masks(I: MonomialIdeal) -> tuple[np.ndarray, np.ndarray]:
    """Candidate multidegrees and the face bitmask of K^b at each."""
    G = I.array()
    n = I.ring.n
    top = G.max(axis=0)
    subsets = _subsets(n)
    cells = int(np.prod(top + 1, dtype=np.float64))
    if cells <= BOX_LIMIT:
        grids = np.meshgrid(*[np.arange(t + 1) for t in top], indexing="ij")
        B = np.stack([g.ravel() for g in grids], axis=1).astype(np.int64)
        if n > 1:
            M = _membership_table(G, top)
    else:
        B = lcm_closure(G)
        M = None
    masks = np.zeros(B.shape[0], dtype=np.int64)
    for bit, S in enumerate(subsets):
        C = B.copy()
        for i in S:
            C[:, i] -= 1
        ok = (C >= 0).all(axis=1)
        if cells <= BOX_LIMIT and n > 1:
            Cc = np.clip(C, 0, None)
            member = Cc[:, -1] >= M[tuple(Cc[:, i] for i in range(n - 1))]
        elif cells <= BOX_LIMIT:
            member = C[:, 0] >= G[:, 0].min()
        else:
            member = (G[None, :, :] <= C[:, None, :]).all(axis=2).any(axis=1)
        masks |= (ok & member).astype(np.int64) << bit
    return B, masks


def multigraded_betti(I: MonomialIdeal) -> BettiTable:
    """Multigraded Betti numbers of I (characteristic zero)."""
    if I.is_unit:
        return BettiTable({(0, (0,) * I.ring.n): 1})
    n = I.ring.n
    B, masks = _face_masks(I)
    entries = {}
    for mask in np.unique(masks):
        hom = _pattern_homology(n, int(mask))
        if not hom:
            continue
        for b in B[masks == mask]:
            key_b = tuple(int(v) for v in b)
            for d, dim in hom:
                entries[(d + 1, key_b)] = dim
    return BettiTable(dict(sorted(entries.items())))


@dataclass(frozen=True)
class Invariants:
    t: tuple[int, ...]
    pd: int
    reg: int

    def t_j(self, j: int) -> float:
        return self.t[j] if 0 <= j <= self.pd else NEG_INF


def invariants(I: MonomialIdeal) -> Invariants:
    table = multigraded_betti(I)
    return Invariants(tuple(table.t), table.pd, table.reg)


def betti_from_complexes(I: MonomialIdeal, candidates: Iterable[Monomial]) -> dict:
    """Betti numbers at the given multidegrees, one upper Koszul complex at a time.

    Slow reference path used to cross-check the vectorized computation.
    """
    entries = {}
    for b in candidates:
        for d, dim in reduced_homology_dims(upper_koszul_complex(I, b)).items():
            entries[(d + 1, b.exponents)] = dim
    return dict(sorted(entries.items()))
