import math
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reglab import (
    BettiTable, Monomial, RingContext, SimplicialComplex, invariants, minimalize, multigraded_betti,
    power_product, reduced_homology_dims, unit_ideal, upper_koszul_complex,
)
from reglab import resolution
from reglab.resolution import betti_from_complexes, lcm_closure

from conftest import random_corpus
from oracles import k_polynomial, reduced_homology_sympy, taylor_betti

R1 = RingContext(("x",))
R2 = RingContext(("x", "y"))
R3 = RingContext(("x", "y", "z"))


def faces(*fs):
    return frozenset(frozenset(f) for f in fs)


def test_upper_koszul_examples():
    I = minimalize([(1, 0), (0, 1)], R2)
    assert upper_koszul_complex(I, Monomial((1, 1))).faces == faces((), (0,), (1,))
    assert upper_koszul_complex(I, Monomial((2, 0))).faces == faces((), (0,))
    J = minimalize([(1,)], R1)
    assert upper_koszul_complex(J, Monomial((1,))).faces == faces(())


def test_upper_koszul_ring_mismatch():
    with pytest.raises(ValueError):
        upper_koszul_complex(minimalize([(1, 0)], R2), Monomial((1, 1, 1)))


def test_reduced_homology_examples():
    assert reduced_homology_dims(SimplicialComplex(2, faces((), (0,), (1,)))) == {0: 1}
    assert reduced_homology_dims(SimplicialComplex(2, faces(()))) == {-1: 1}
    assert reduced_homology_dims(SimplicialComplex(2, frozenset())) == {}
    triangle = faces((), (0,), (1,), (2,), (0, 1), (0, 2), (1, 2))
    assert reduced_homology_dims(SimplicialComplex(3, triangle)) == reduced_homology_sympy(triangle) == {1: 1}
    filled = triangle | faces((0, 1, 2))
    assert reduced_homology_dims(SimplicialComplex(3, filled)) == {}


def test_complex_must_be_closed():
    with pytest.raises(ValueError):
        SimplicialComplex(2, faces((0, 1)))


@settings(max_examples=60)
@given(st.sets(st.frozensets(st.integers(0, 4), max_size=4), max_size=12))
def test_homology_matches_sympy_on_random_complexes(generators):
    closed = set()
    for f in generators:
        items = sorted(f)
        for mask in range(1 << len(items)):
            closed.add(frozenset(v for k, v in enumerate(items) if mask >> k & 1))
    assert reduced_homology_dims(SimplicialComplex(5, frozenset(closed))) == reduced_homology_sympy(closed)


def test_betti_of_x_y2():
    table = multigraded_betti(minimalize([(1, 0), (0, 2)], R2))
    assert table.entries == {(0, (0, 2)): 1, (0, (1, 0)): 1, (1, (1, 2)): 1}
    assert table.t == [2, 3] and table.reg == 2 and table.pd == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_maximal_ideal_is_koszul(n):
    ring = RingContext.standard(n)
    I = minimalize([tuple(int(i == k) for i in range(n)) for k in range(n)], ring)
    assert multigraded_betti(I).totals() == [math.comb(n, j + 1) for j in range(n)]


def test_betti_of_product(ex1, ex2):
    table = multigraded_betti(minimalize([(1, 1), (3, 0), (0, 3)], R2))
    assert table.totals() == [3, 2]
    assert table.t == [3, 4] and table.reg == 3
    inv = invariants(power_product(ex1, (2, 1)))
    assert inv.t[:2] == (5, 6) and inv.reg == 5
    inv = invariants(power_product(ex2, (1, 1)))
    assert inv.t == (6, 7, 8) and inv.reg == 6


def test_unit_ideal():
    inv = invariants(unit_ideal(R3))
    assert inv.t == (0,) and inv.pd == 0 and inv.reg == 0
    assert inv.t_j(1) == -math.inf


def test_t_j_beyond_pd():
    table = multigraded_betti(minimalize([(1, 0), (0, 2)], R2))
    assert table.t_j(2) == -math.inf


def check_table_invariants(I, table: BettiTable):
    assert sum(v for (j, _), v in table.entries.items() if j == 0) == len(I.gens)
    assert sum((-1) ** j * v for (j, _), v in table.entries.items()) == 1
    t = table.t
    assert all(t[j + 1] >= t[j] + 1 for j in range(table.pd))
    assert table.reg == max(tj - j for j, tj in enumerate(t))


CORPUS = random_corpus()


@pytest.mark.parametrize("I", CORPUS, ids=str)
def test_taylor_oracle_and_invariants(I):
    table = multigraded_betti(I)
    assert table.entries == taylor_betti([g.exponents for g in I.gens])
    check_table_invariants(I, table)


@pytest.mark.parametrize("I", CORPUS[:20], ids=str)
def test_kpolynomial_consistency(I):
    table = multigraded_betti(I)
    alt = {}
    for (j, b), v in table.entries.items():
        alt[b] = alt.get(b, 0) + (-1) ** j * v
    alt = {b: c for b, c in alt.items() if c}
    assert alt == k_polynomial([g.exponents for g in I.gens])


@pytest.mark.parametrize("I", CORPUS[:15], ids=str)
def test_vectorized_path_matches_per_complex_path(I):
    lcms = lcm_closure(I.array())
    slow = betti_from_complexes(I, [Monomial(tuple(int(v) for v in b)) for b in lcms])
    assert multigraded_betti(I).entries == slow


@pytest.mark.parametrize("I", CORPUS[:15], ids=str)
def test_lcm_closure_fallback(I, monkeypatch):
    expected = multigraded_betti(I).entries
    monkeypatch.setattr(resolution, "BOX_LIMIT", 0)
    assert multigraded_betti(I).entries == expected


@pytest.mark.parametrize("I", [I for I in CORPUS if I.ring.n == 3][:10], ids=str)
def test_permutation_invariance(I):
    base = invariants(I)
    for perm in permutations(range(3)):
        J = minimalize([tuple(g.exponents[p] for p in perm) for g in I.gens], I.ring)
        inv = invariants(J)
        assert (inv.t, inv.pd, inv.reg) == (base.t, base.pd, base.reg)


def test_json_roundtrip():
    for I in CORPUS:
        table = multigraded_betti(I)
        assert BettiTable.from_json(table.to_json()) == table
