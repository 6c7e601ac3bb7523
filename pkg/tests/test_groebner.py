import itertools
import random
from fractions import Fraction

import pytest

from nashblowup.groebner import (
    BudgetExceededError,
    Ideal,
    buchberger,
    eliminate,
    ideal_equal,
    ideal_membership,
    normal_form,
    radical_membership,
    s_polynomial,
)
from nashblowup.polynomial import Polynomial, grevlex, grlex, lex

from conftest import P

RING2 = ("x", "y")
RING3 = ("x", "y", "z")


# -- normal form ----------------------------------------------------------


def test_normal_form_fixtures():
    order = lex()
    G = [P("x^2 - y", RING2), P("y^2 - 1", RING2)]
    assert normal_form(P("x^4", RING2), G, order) == P("1", RING2)
    assert normal_form(P("x^2*y", RING2), G, order) == P("y^2", RING2) or \
        normal_form(P("x^2*y", RING2), G, order) == P("1", RING2)
    # remainder has no term divisible by any leading term
    f = P("x^3*y^2 + x*y + 1", RING2)
    r = normal_form(f, G, order)
    lts = [g.leading_monomial(order) for g in G]
    for m in r.terms:
        assert not any(all(a >= b for a, b in zip(m, lt)) for lt in lts)


def test_normal_form_membership_witness():
    order = grevlex()
    G = [P("x - y", RING2)]
    assert normal_form(P("x^3 - y^3", RING2), G, order).is_zero()
    assert not normal_form(P("x + y", RING2), G, order).is_zero()


def test_normal_form_zero_and_empty():
    assert normal_form(Polynomial.zero(RING2), [], grevlex()).is_zero()
    f = P("x + 1", RING2)
    assert normal_form(f, [], grevlex()) == f


# -- s-polynomials -----------------------------------------------------------


def test_s_polynomial_fixture():
    f = P("x^2 - y", RING2)
    g = P("x*y - 1", RING2)
    s = s_polynomial(f, g, lex())
    # lcm(x^2, xy) = x^2 y: y*f - x*g = -y^2 + x
    assert s == P("x - y^2", RING2)


def test_s_polynomial_coprime_leading_terms():
    # Buchberger's first criterion case: S-poly reduces to zero by {f, g}
    f = P("x^2 + 1", RING2)
    g = P("y^2 + 1", RING2)
    s = s_polynomial(f, g, lex())
    assert normal_form(s, [f, g], lex()).is_zero()


def test_s_polynomial_of_zero_rejected():
    with pytest.raises(ValueError):
        s_polynomial(Polynomial.zero(RING2), P("x", RING2))


# -- buchberger ---------------------------------------------------------------


def is_reduced_basis(basis, order):
    for g in basis:
        lt = g.leading_monomial(order)
        assert g.terms[lt] == 1  # monic
        for h in basis:
            if h is g:
                continue
            hlt = h.leading_monomial(order)
            for m in g.terms:
                assert not all(a >= b for a, b in zip(m, hlt))
    return True


def test_buchberger_principal():
    basis = buchberger([P("3*x", RING2)], grevlex(), RING2)
    assert list(basis) == [P("x", RING2)]


def test_buchberger_twisted_cubic():
    basis = buchberger([P("x^2 - y", RING3), P("x^3 - z", RING3)],
                       lex(), RING3)
    assert P("y^3 - z^2", RING3) in list(basis)
    assert is_reduced_basis(basis, lex())


def test_buchberger_every_spoly_reduces():
    cases = [
        ([P("x^2 - y", RING3), P("x^3 - z", RING3)], lex()),
        ([P("x^3 - y^2", RING2), P("3*x^2", RING2), P("-2*y", RING2)], grevlex()),
        ([P("x*y - z^4", RING3), P("x + y + z", RING3)], grlex()),
    ]
    for gens, order in cases:
        ring = gens[0].ring
        basis = buchberger(gens, order, ring)
        for f, g in itertools.combinations(basis, 2):
            s = s_polynomial(f, g, order)
            assert normal_form(s, basis, order).is_zero()


def test_reduced_basis_permutation_invariant():
    gens = [P("x^2 + y", RING3), P("x*y + z", RING3), P("y^3 - z^2", RING3)]
    rng = random.Random(3)
    reference = buchberger(gens, grevlex(), RING3)
    for _ in range(4):
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert buchberger(shuffled, grevlex(), RING3) == reference


def test_basis_generates_same_ideal():
    gens = [P("x^2 - y", RING2), P("x*y - 1", RING2)]
    I = Ideal(RING2, gens)
    basis = I.groebner_basis(lex())
    # each original generator reduces to zero by the basis, and vice versa
    for g in gens:
        assert normal_form(g, basis, lex()).is_zero()
    J = Ideal(RING2, list(basis))
    for b in basis:
        assert ideal_membership(b, I, lex())
    assert ideal_equal(I, J, lex())


def test_budget_exceeded():
    gens = [P("x^5*y^4 - z^3", RING3), P("x*y^6 + z^5 - y", RING3),
            P("y^2*z^4 - x^3 - 1", RING3)]
    with pytest.raises(BudgetExceededError):
        buchberger(gens, lex(), RING3, max_pairs=2)
    with pytest.raises(BudgetExceededError):
        buchberger(gens, lex(), RING3, max_reductions=5)


# -- elimination ----------------------------------------------------------------


def test_eliminate_twisted_cubic():
    I = Ideal(RING3, [P("x^2 - y", RING3), P("x^3 - z", RING3)])
    J = eliminate(I, ("x",))
    assert J.ring == ("y", "z")
    expected = Ideal(("y", "z"), [P("y^3 - z^2", ("y", "z"))])
    assert ideal_equal(J, expected)


def test_eliminate_block_and_lex_agree():
    I = Ideal(RING3, [P("x^2 - y", RING3), P("x^3 - z", RING3)])
    assert ideal_equal(eliminate(I, ("x",), style="block"),
                       eliminate(I, ("x",), style="lex"))


def test_eliminate_to_zero_ideal():
    ring = ("t", "x")
    I = Ideal(ring, [P("t*x - 1", ring)])
    J = eliminate(I, ("t",))
    assert J.generators == ()


def test_eliminate_rejects_bad_input():
    I = Ideal(RING2, [P("x", RING2)])
    with pytest.raises(ValueError):
        eliminate(I, ("q",))
    with pytest.raises(ValueError):
        eliminate(I, ("x", "y"))
    with pytest.raises(ValueError):
        eliminate(I, ("x",), style="weird")


# -- membership and radicals -----------------------------------------------


def test_ideal_membership_fixtures():
    I = Ideal(RING2, [P("x^2 - y", RING2), P("y^2 - x", RING2)])
    assert ideal_membership(P("x^4 - x", RING2), I)
    assert not ideal_membership(P("x", RING2), I)
    assert ideal_membership(Polynomial.zero(RING2), I)


def test_ideal_equal_fixtures():
    I = Ideal(RING2, [P("x + y", RING2), P("x - y", RING2)])
    J = Ideal(RING2, [P("x", RING2), P("y", RING2)])
    assert ideal_equal(I, J)
    assert not ideal_equal(I, Ideal(RING2, [P("x", RING2)]))
    with pytest.raises(ValueError):
        ideal_equal(I, Ideal(RING3, [P("x", RING3)]))


def test_radical_membership_fixtures():
    I = Ideal(RING2, [P("x^2", RING2)])
    assert radical_membership(P("x", RING2), I)
    assert not radical_membership(P("y", RING2), I)
    J = Ideal(RING2, [P("x^2", RING2), P("y^3", RING2)])
    assert radical_membership(P("x*y", RING2), J)
    # V(J) is the origin, so the radical is <x, y>
    assert radical_membership(P("x + y", RING2), J)
    assert not radical_membership(P("x + 1", RING2), J)
    assert radical_membership(Polynomial.zero(RING2), I)


def test_radical_membership_not_plain_membership():
    I = Ideal(RING2, [P("x^2", RING2)])
    assert not ideal_membership(P("x", RING2), I)
    assert radical_membership(P("x", RING2), I)


def test_groebner_basis_cache():
    I = Ideal(RING2, [P("x^2 - y", RING2)])
    b1 = I.groebner_basis(lex())
    b2 = I.groebner_basis(lex())
    assert b1 is b2


def test_coefficient_arithmetic_stays_exact():
    # fractions with growing denominators must not lose precision
    f = P("1/3*x^2 - 1/7*y", RING2)
    g = P("1/11*x*y - 5", RING2)
    basis = buchberger([f, g], lex(), RING2)
    for b in basis:
        for c in b.terms.values():
            assert isinstance(c, Fraction) or c == int(c)
    assert normal_form(f, basis, lex()).is_zero()
    assert normal_form(g, basis, lex()).is_zero()
