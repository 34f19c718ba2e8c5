from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from colorprob.qsym import (
    QSymPoly, UniPoly, binomial_poly, compositions_of, lagrange_interpolate, parse_qsym,
    principal_specialization, qsym_add, qsym_mul, qsym_to_polynomial, render_poly, render_qsym,
)

from oracles import expand_monomials, poly_mul

M = QSymPoly.monomial

compositions = st.lists(st.integers(1, 3), max_size=3).map(tuple)
qsyms = st.dictionaries(compositions, st.integers(-3, 3), max_size=3).map(QSymPoly)


def test_add_examples():
    assert qsym_add(M((1,)), M((1,))) == M((1,), 2)
    q = M((2, 1), 3)
    assert qsym_add(q, QSymPoly.zero()) == q
    assert qsym_add(M((1, 1), 2), M((1, 1), -2)) == QSymPoly.zero()
    assert not qsym_add(M((1, 1), 2), M((1, 1), -2)).terms


def test_mul_examples():
    assert qsym_mul(M((1,)), M((1,))) == M((1, 1), 2) + M((2,))
    q = M((1, 2)) + M((3,), 4)
    assert qsym_mul(q, QSymPoly.one()) == q == qsym_mul(QSymPoly.one(), q)


def test_mul_matches_monomial_expansion_small():
    a, b = M((1,)), M((1,))
    for nv in (1, 2, 3):
        lhs = expand_monomials(qsym_mul(a, b).terms, nv)
        assert lhs == poly_mul(expand_monomials(a.terms, nv), expand_monomials(b.terms, nv))


@settings(max_examples=80, deadline=None)
@given(qsyms, qsyms)
def test_mul_matches_monomial_expansion(a, b):
    # with len(a)+len(b) variables every quasi-shuffle has its own monomial
    nv = max([len(x) for x in a.terms] + [0]) + max([len(x) for x in b.terms] + [0])
    lhs = expand_monomials(qsym_mul(a, b).terms, nv)
    assert lhs == poly_mul(expand_monomials(a.terms, nv), expand_monomials(b.terms, nv))


@settings(max_examples=80, deadline=None)
@given(qsyms, qsyms, qsyms)
def test_mul_associative_commutative(a, b, c):
    assert qsym_mul(a, b) == qsym_mul(b, a)
    assert qsym_mul(qsym_mul(a, b), c) == qsym_mul(a, qsym_mul(b, c))


@settings(max_examples=80, deadline=None)
@given(qsyms, qsyms, st.integers(0, 6))
def test_specialization_is_ring_map(a, b, n):
    ps = principal_specialization
    assert ps(qsym_mul(a, b), n) == ps(a, n) * ps(b, n)
    assert ps(qsym_add(a, b), n) == ps(a, n) + ps(b, n)


@settings(max_examples=80, deadline=None)
@given(qsyms)
def test_polynomial_agrees_with_specialization(q):
    p = qsym_to_polynomial(q)
    for n in range(max(p.degree, 0) + 3):
        assert p(n) == principal_specialization(q, n)


def test_specialization_examples():
    assert principal_specialization(M((1, 1)), 3) == 3
    q = M((), 7) + M((2, 1), 5)
    assert principal_specialization(q, 0) == 7
    assert principal_specialization(M((1, 1), 2), 3) == 6 == 3 * 3 - 3


def test_to_polynomial_examples():
    x = UniPoly.x()
    assert qsym_to_polynomial(M((1, 1), 2)) == x * x - x
    assert qsym_to_polynomial(M((1,))) == x
    assert qsym_to_polynomial(M((1, 1))) == (x * x - x) * Fraction(1, 2)


def test_binomial_poly_values():
    for k in range(5):
        for n in range(7):
            assert binomial_poly(k)(n) == comb(n, k)


def test_interpolation_examples():
    x = UniPoly.x()
    assert lagrange_interpolate([(0, 0), (1, 0), (2, 2), (3, 6)]) == x * x - x
    assert lagrange_interpolate([(0, 5)]) == 5
    assert lagrange_interpolate([(k, k ** 3) for k in range(4)]) == x * x * x
    with pytest.raises(ValueError, match="duplicate"):
        lagrange_interpolate([(1, 1), (1, 2)])


@settings(max_examples=50, deadline=None)
@given(st.lists(st.fractions(min_value=-10, max_value=10, max_denominator=5), min_size=1, max_size=5))
def test_interpolation_recovers_polynomial(coeffs):
    p = UniPoly(coeffs)
    assert lagrange_interpolate([(k, p(k)) for k in range(len(coeffs))]) == p


def test_compositions_examples():
    assert compositions_of(0) == [()]
    assert len(compositions_of(3)) == 4
    c5 = compositions_of(5)
    assert len(c5) == 16 == len(set(c5))
    assert all(sum(a) == 5 and min(a) >= 1 for a in c5)
    with pytest.raises(ValueError):
        compositions_of(21)


def test_render_and_parse():
    q = M((1, 1), 2) + M((2,))
    assert render_qsym(q) == "2*M[1,1] + M[2]"
    assert str(q) == render_qsym(q)
    assert render_qsym(QSymPoly.zero()) == "0"
    assert render_qsym(QSymPoly.one()) == "1"
    assert render_qsym(M((1,), -1)) == "-M[1]"
    for text in ("2*M[1,1] + M[2]", "0", "1", "-M[1] + 3*M[1,2]"):
        assert render_qsym(parse_qsym(text)) == text


@settings(max_examples=80, deadline=None)
@given(qsyms)
def test_render_parse_round_trip(q):
    assert parse_qsym(render_qsym(q)) == q


def test_render_poly():
    x = UniPoly.x()
    assert render_poly(x * x - x) == "x^2 - x"
    assert render_poly((x * x - x) * Fraction(1, 2)) == "1/2*x^2 - 1/2*x"
    assert render_poly(UniPoly()) == "0"


def test_no_zero_coefficients_stored():
    q = QSymPoly({(1,): 0, (2,): 3})
    assert q.terms == {(2,): 3}
