import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reglab import (
    IdealFamily, Monomial, MonomialIdeal, RingContext, RingMismatch, generator_degree_sets,
    is_equigenerated, minimalize, multiply, power_product, unit_ideal,
)
from reglab.monomial import MAX_EXPONENT, power

from oracles import divides, expand_power_product, minimal_by_pairs

R2 = RingContext(("x", "y"))
R3 = RingContext(("x", "y", "z"))


def ideal(*gens, ring=R2):
    return minimalize(gens, ring)


def exps(I):
    return [g.exponents for g in I.gens]


def test_minimalize_examples():
    gens = [(3, 0), (1, 1), (2, 2), (0, 3)]
    assert set(exps(minimalize(gens, R2))) == minimal_by_pairs(gens) == {(1, 1), (3, 0), (0, 3)}
    assert exps(minimalize(gens, R2)) == [(1, 1), (3, 0), (0, 3)]
    assert exps(ideal((0, 0), (1, 0), (0, 1))) == [(0, 0)]
    assert exps(ideal((1, 0), (0, 2))) == [(1, 0), (0, 2)]


def test_minimalize_empty():
    with pytest.raises(ValueError, match="empty generating set"):
        minimalize([], R2)


def test_constructor_rejects_non_minimal():
    with pytest.raises(ValueError):
        MonomialIdeal(R2, (Monomial((1, 0)), Monomial((2, 0))))
    with pytest.raises(RingMismatch):
        MonomialIdeal(R2, (Monomial((1, 0, 0)),))


def test_multiply_examples():
    I, J = ideal((1, 0), (0, 2)), ideal((2, 0), (0, 1))
    expected = minimal_by_pairs([(3, 0), (1, 1), (2, 2), (0, 3)])
    assert set(exps(multiply(I, J))) == expected
    assert multiply(I, unit_ideal(R2)) == I
    assert exps(multiply(ideal((1, 0)), ideal((1, 0)))) == [(2, 0)]


def test_multiply_ring_mismatch():
    with pytest.raises(RingMismatch):
        multiply(ideal((1, 0)), ideal((1, 0, 0), ring=R3))


def test_power_product_examples(ex1):
    assert exps(power_product(ex1, (1, 1))) == [(1, 1), (3, 0), (0, 3)]
    assert power_product(ex1, (0, 0)).is_unit
    I = power_product(ex1, (2, 1))
    brute = expand_power_product([exps(J) for J in ex1.ideals], (2, 1))
    assert set(exps(I)) == brute == {(2, 1), (4, 0), (1, 3), (0, 5)}
    assert max(I.degrees) == max(2 * 2 + 1, 2 + 2 * 1)


def test_power_product_length_mismatch(ex1):
    with pytest.raises(ValueError):
        power_product(ex1, (1,))


def test_generator_degree_sets(ex1, ex2):
    assert generator_degree_sets(ex1) == [{1, 2}, {1, 2}]
    assert generator_degree_sets(ex2) == [{1, 2, 3}, {1, 3, 4}]
    fam = IdealFamily(R2, (ideal((2, 0), (1, 1), (0, 2)),))
    assert generator_degree_sets(fam) == [{2}]
    assert is_equigenerated(fam, 0)
    assert not is_equigenerated(ex1, 0)


def test_overflow_is_an_error():
    big = ideal((MAX_EXPONENT, 0))
    with pytest.raises(OverflowError):
        multiply(big, big)
    with pytest.raises(OverflowError):
        Monomial((MAX_EXPONENT + 1,))


def test_ring_validation():
    with pytest.raises(ValueError):
        RingContext(("x", "x"))
    with pytest.raises(ValueError):
        RingContext(())


exponent_vec = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 3))
gen_lists = st.lists(exponent_vec, min_size=1, max_size=6)


@given(gen_lists)
def test_minimalize_idempotent_and_matches_pairwise_filter(gens):
    I = minimalize(gens, R3)
    assert minimalize(I.gens, R3) == I
    assert set(exps(I)) == minimal_by_pairs(gens)
    for g in gens:
        assert any(divides(h, g) for h in exps(I))


@given(gen_lists, gen_lists, gen_lists)
def test_multiply_commutative_associative(a, b, c):
    I, J, K = (minimalize(g, R3) for g in (a, b, c))
    assert multiply(I, J) == multiply(J, I)
    assert multiply(multiply(I, J), K) == multiply(I, multiply(J, K))


@settings(max_examples=30)
@given(gen_lists, st.integers(0, 5))
def test_binary_powering_equals_iterated(gens, k):
    I = minimalize(gens, R3)
    iterated = unit_ideal(R3)
    for _ in range(k):
        iterated = multiply(iterated, I)
    assert power(I, k) == iterated


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=3),
       st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=3),
       st.integers(0, 3), st.integers(0, 3))
def test_power_product_recursion_and_factorization(g1, g2, a1, a2):
    fam = IdealFamily(R2, (minimalize(g1, R2), minimalize(g2, R2)))
    I = power_product(fam, (a1, a2))
    assert multiply(I, fam.ideals[0]) == power_product(fam, (a1 + 1, a2))
    assert multiply(I, fam.ideals[1]) == power_product(fam, (a1, a2 + 1))
    brute = expand_power_product([exps(J) for J in fam.ideals], (a1, a2))
    assert set(exps(I)) == brute
