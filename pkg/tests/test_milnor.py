import itertools
from collections import Counter
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eigenspec.errors import (
    InconsistentWeightsError,
    IndeterminateWeightsError,
    NonIsolatedSingularityError,
    NotQuasiHomogeneousError,
    SmoothPointError,
)
from eigenspec.milnor import (
    MonomialOrder,
    Polynomial,
    WeightVector,
    check_quasi_homogeneous,
    ell_value,
    grevlex,
    groebner_basis,
    infer_weights,
    is_groebner,
    is_reduced,
    milnor_number,
    reduce_polynomial,
    standard_monomial_basis,
    standard_monomials,
    weighted_lex,
    weighted_revlex,
)
from eigenspec.parsing import parse_polynomial

from helpers import bp_polynomial, random_quasi_homogeneous, seeded


def P(text, names="xyz"):
    return parse_polynomial(text, list(names))


# -- polynomials ---------------------------------------------------------------

def test_polynomial_drops_zeros_and_checks_lengths():
    p = Polynomial({(1, 0): Q(0), (0, 2): Q(3)})
    assert p.terms == {(0, 2): Q(3)}
    with pytest.raises(ValueError):
        Polynomial({(1, 0): 1, (1, 0, 0): 1})


def test_polynomial_arithmetic():
    x = Polynomial.variable(0, 2)
    y = Polynomial.variable(1, 2)
    assert (x + y) * (x - y) == x * x - y * y
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert ((x + y) ** 3).diff(0) == 3 * (x + y) ** 2


def test_monomial_orders():
    order = grevlex(3)
    # x*z^2 > y^3 in grevlex since the last variable exponent decides
    assert order.key((0, 3, 0)) > order.key((1, 0, 2))
    wo = weighted_revlex((2, 3))
    assert wo.key((0, 2)) > wo.key((2, 0))
    assert MonomialOrder((1, 1)) == grevlex(2)
    with pytest.raises(ValueError):
        MonomialOrder((1, 1), tiebreak="elim")


# -- weights --------------------------------------------------------------------

def test_check_quasi_homogeneous_examples():
    w = WeightVector([Q(1, 3), Q(1, 2)])
    assert check_quasi_homogeneous(P("x^3 + y^2", "xy"), w)
    assert w.kappaF == 6 and w.kappa == (2, 3)
    assert not check_quasi_homogeneous(P("x^3 + y^2", "xy"), WeightVector([Q(1, 2)] * 2))
    w5 = WeightVector([Q(1, 5)] * 4)
    assert check_quasi_homogeneous(P("x^5 + y^5 + z^5 + w^5", "xyzw"), w5)
    assert w5.kappaF == 5


def test_check_quasi_homogeneous_errors():
    with pytest.raises(ValueError):
        check_quasi_homogeneous(P("x^3 + y^2", "xy"), WeightVector([Q(1, 3)]))
    with pytest.raises(ValueError):
        check_quasi_homogeneous(Polynomial({}, 2), WeightVector([Q(1, 3), Q(1, 2)]))


def test_weight_vector_validation():
    with pytest.raises(ValueError):
        WeightVector([Q(1, 2), Q(0)])
    with pytest.raises(ValueError):
        WeightVector([])


@given(st.lists(st.builds(Q, st.integers(1, 7), st.integers(1, 12)), min_size=1, max_size=5))
def test_kappa_invariants(ws):
    w = WeightVector(ws)
    assert all((w.kappaF * wi).denominator == 1 for wi in w.w)
    assert all(not all((k * wi).denominator == 1 for wi in w.w) for k in range(1, w.kappaF))
    assert w.kappa == tuple(int(w.kappaF * wi) for wi in w.w)


def test_infer_weights():
    assert infer_weights(P("x^3 + y^2", "xy")).w == (Q(1, 3), Q(1, 2))
    assert infer_weights(P("x^3*y + y^3", "xy")).w == (Q(2, 9), Q(1, 3))
    with pytest.raises(IndeterminateWeightsError):
        infer_weights(P("x^2*y", "xy"))
    with pytest.raises(InconsistentWeightsError):
        infer_weights(P("x^2 + x^3", "x"))


def test_ell_value():
    w = WeightVector([Q(1, 3), Q(1, 2)])
    assert ell_value((0, 0), w) == Q(5, 6)
    assert ell_value((1, 0), w) == Q(7, 6)


@given(st.lists(st.builds(Q, st.integers(1, 5), st.integers(2, 9)), min_size=1, max_size=4))
def test_ell_of_zero_is_weight_sum(ws):
    w = WeightVector(ws)
    assert ell_value((0,) * len(ws), w) == sum(w.w)


# -- Groebner bases --------------------------------------------------------------

def test_groebner_examples():
    order = grevlex(2)
    basis = groebner_basis([P("3*x^2", "xy"), P("2*y", "xy")], order)
    assert basis == [P("y", "xy"), P("x^2", "xy")]
    assert groebner_basis([Polynomial.constant(1, 2)], order) == [Polynomial.constant(1, 2)]


def test_groebner_seven_standard_monomials():
    F = P("x^2*y", "xy"), P("x^3 + 3*y^2", "xy")
    order = grevlex(2)
    basis = groebner_basis(F, order)
    assert is_groebner(basis, order) and is_reduced(basis, order)
    lms = [g.leading_monomial(order) for g in basis]
    assert len(standard_monomials(lms, 2)) == 7
    assert (Q(9, 2) - 1) * (3 - 1) == 7   # Milnor-Orlik for weights (2/9, 1/3)


def test_groebner_zero_generators():
    order = grevlex(2)
    assert groebner_basis([Polynomial({}, 2), P("x", "xy")], order) == [P("x", "xy")]
    with pytest.raises(ValueError):
        groebner_basis([Polynomial({}, 2)], order)


def test_ideal_membership_after_groebner():
    order = grevlex(3)
    gens = [P("x^2 - y*z"), P("y^2 - x*z"), P("z^2 - x*y")]
    basis = groebner_basis(gens, order)
    for g in gens:
        assert not reduce_polynomial(g, basis, order)
    assert reduce_polynomial(P("x"), basis, order) == P("x")


def _sympy_basis(gens, nvars):
    sympy = pytest.importorskip("sympy")
    syms = sympy.symbols(f"v0:{nvars}")
    exprs = [
        sum(sympy.Rational(c.numerator, c.denominator) * sympy.prod([s**e for s, e in zip(syms, m)])
            for m, c in g.terms.items())
        for g in gens
    ]
    G = sympy.groebner(exprs, *syms, order="grevlex", domain="QQ")
    out = set()
    for expr in G.exprs:
        poly = sympy.Poly(expr, *syms)
        out.add(Polynomial({m: Q(int(c.p), int(c.q)) for m, c in poly.terms()}, nvars))
    return out


@pytest.mark.parametrize("seed", range(8))
def test_groebner_matches_sympy(seed):
    rng = seeded(1000 + seed)
    F, _ = random_quasi_homogeneous(rng, max_vars=3, max_exp=4)
    gens = F.jacobian_generators()
    order = grevlex(F.nvars)
    ours = groebner_basis(gens, order)
    assert set(ours) == _sympy_basis(gens, F.nvars)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)),
                                st.integers(-3, 3), min_size=1, max_size=3),
                min_size=1, max_size=3))
def test_groebner_is_reduced_basis(raw):
    gens = [Polynomial({m: Q(c) for m, c in d.items()}, 2) for d in raw]
    gens = [g for g in gens if g]
    if not gens:
        return
    order = grevlex(2)
    basis = groebner_basis(gens, order)
    assert is_groebner(basis, order)
    assert is_reduced(basis, order)
    for g in gens:
        assert not reduce_polynomial(g, basis, order)


# -- Jacobian ring bases ----------------------------------------------------------

def test_standard_monomial_basis_examples():
    basis = standard_monomial_basis(P("x^3 + y^2", "xy"), WeightVector([Q(1, 3), Q(1, 2)]))
    assert sorted(basis) == [(0, 0), (1, 0)] and basis.milnor_number == 2
    basis = standard_monomial_basis(P("x^3 + y^3", "xy"), WeightVector([Q(1, 3)] * 2))
    assert sorted(basis) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_standard_monomial_basis_errors():
    with pytest.raises(NonIsolatedSingularityError):
        standard_monomial_basis(P("x^2*y^2", "xy"), WeightVector([Q(1, 4)] * 2))
    with pytest.raises(NotQuasiHomogeneousError):
        standard_monomial_basis(P("x^3 + y^2", "xy"), WeightVector([Q(1, 2)] * 2))
    with pytest.raises(SmoothPointError):
        standard_monomial_basis(P("x", "x"), WeightVector([Q(1)]))


@pytest.mark.parametrize("lambdas", [(2, 2), (3, 4), (2, 3, 5), (4, 4, 4), (2, 2, 2, 6)])
def test_brieskorn_pham_box_basis(lambdas):
    F, w = bp_polynomial(lambdas)
    basis = standard_monomial_basis(F, w)
    assert sorted(basis) == sorted(itertools.product(*(range(lam - 1) for lam in lambdas)))


@pytest.mark.parametrize("seed", range(15))
def test_milnor_orlik(seed):
    F, w = random_quasi_homogeneous(seeded(seed))
    assert milnor_number(F, w) == w.milnor_orlik()


@pytest.mark.parametrize("seed", range(15))
def test_tiebreak_invariance(seed):
    F, w = random_quasi_homogeneous(seeded(100 + seed))
    a = standard_monomial_basis(F, w, weighted_revlex(w.kappa))
    b = standard_monomial_basis(F, w, weighted_lex(w.kappa))
    assert Counter(ell_value(m, w) for m in a) == Counter(ell_value(m, w) for m in b)


@pytest.mark.parametrize("seed", range(10))
def test_basis_is_pairwise_distinct_and_standard(seed):
    F, w = random_quasi_homogeneous(seeded(200 + seed))
    order = w.order()
    basis = standard_monomial_basis(F, w, order)
    gb = groebner_basis(F.jacobian_generators(), order)
    lms = [g.leading_monomial(order) for g in gb]
    assert len(set(basis)) == len(basis)
    for m in basis:
        assert not any(all(a <= b for a, b in zip(lm, m)) for lm in lms)
