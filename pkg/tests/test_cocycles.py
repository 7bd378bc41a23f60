"""Hamiltonian fields, brackets, and the degree-two cocycles on
symplectic and volume presets: exact values, exact cocycle conditions,
and the duality between cycle and form pictures."""

import random
from fractions import Fraction

import pytest

from preqlat.exact import ExactScalar
from preqlat.toruscalc import (
    CoordinateCycle,
    TorusForm,
    TorusVectorField,
    TrigPoly,
    cocycle_residual,
    contract,
    exact_field_from_potential,
    exterior_derivative,
    hamiltonian_field,
    infinitesimal_flux,
    integrate_over_cycle,
    is_exact_field,
    kappa_pullback_roger,
    kappa_pullback_singular,
    kappa_rho,
    ks_cocycle,
    lichnerowicz_eta,
    lichnerowicz_singular,
    mean_against_volume,
    poincare_dual_form,
    poisson_bracket,
    roger_cocycle,
    singular_cocycle,
    standard_symplectic,
    unit_volume_form,
    vf_bracket,
)

from util import (
    random_closed_oneform,
    random_form,
    random_fraction,
    random_real_trigpoly,
)

T2 = standard_symplectic(1)


def zero_mean_poly_in_axis(rng, dim, axis, max_deg=3):
    f = TrigPoly.zero(dim)
    for j in range(1, max_deg + 1):
        if rng.random() < 0.6:
            f = f + TrigPoly.cos_axis(dim, axis, j, random_fraction(rng))
        if rng.random() < 0.6:
            f = f + TrigPoly.sin_axis(dim, axis, j, random_fraction(rng))
    if f.is_zero():
        f = TrigPoly.cos_axis(dim, axis, 1)
    return f


# -- Hamiltonian fields -------------------------------------------------------

def test_hamiltonian_field_examples():
    g = TrigPoly.sin_axis(2, 1)  # sin y
    xg = hamiltonian_field(g, T2)
    assert xg.components[0] == -TrigPoly.cos_axis(2, 1)
    assert xg.components[1].is_zero()
    f = TrigPoly.sin_axis(2, 0)  # sin x
    xf = hamiltonian_field(f, T2)
    assert xf.components[1] == TrigPoly.cos_axis(2, 0)
    assert hamiltonian_field(TrigPoly.const(2, 7), T2).is_zero()


def test_hamiltonian_field_defining_equation():
    rng = random.Random(50)
    for scales in ([1], [2], [Fraction(1, 3)]):
        omega = standard_symplectic(1, scales)
        for _ in range(8):
            f = random_real_trigpoly(rng, 2)
            xf = hamiltonian_field(f, omega)
            df = exterior_derivative(TorusForm.function(2, f))
            assert (contract(xf, omega) + df).is_zero()


def test_hamiltonian_field_t4():
    rng = random.Random(51)
    omega = standard_symplectic(2, [1, 3])
    for _ in range(5):
        f = random_real_trigpoly(rng, 4, max_deg=1, n_modes=2)
        xf = hamiltonian_field(f, omega)
        df = exterior_derivative(TorusForm.function(4, f))
        assert (contract(xf, omega) + df).is_zero()


def test_degenerate_form_rejected():
    bad = TorusForm(2, 2, {})  # zero form
    with pytest.raises(ValueError, match="degenerate"):
        hamiltonian_field(TrigPoly.sin_axis(2, 0), bad)


# -- Poisson bracket and the point cocycle -------------------------------------

def test_poisson_bracket_example():
    f = TrigPoly.sin_axis(2, 0)
    g = TrigPoly.sin_axis(2, 1)
    pb = poisson_bracket(f, g, T2)
    assert pb == TrigPoly.cos_axis(2, 0) * TrigPoly.cos_axis(2, 1)
    assert ks_cocycle(f, g, T2, (0, 0)) == 1


def test_ks_antisymmetry_and_float_mode():
    f = TrigPoly.sin_axis(2, 0) + TrigPoly.cos_axis(2, 1)
    assert ks_cocycle(f, f, T2, (1, 2)) == 0
    g = TrigPoly.sin_axis(2, 1)
    exact = ks_cocycle(f, g, T2, (0, 0))
    approx = ks_cocycle(f, g, T2, (0.0, 0.0))
    assert abs(float(exact) - approx) < 1e-12


def test_jacobi_identity_exact():
    rng = random.Random(52)
    for _ in range(25):
        f = random_real_trigpoly(rng, 2, n_modes=2)
        g = random_real_trigpoly(rng, 2, n_modes=2)
        h = random_real_trigpoly(rng, 2, n_modes=2)
        acc = (
            poisson_bracket(f, poisson_bracket(g, h, T2), T2)
            + poisson_bracket(g, poisson_bracket(h, f, T2), T2)
            + poisson_bracket(h, poisson_bracket(f, g, T2), T2)
        )
        assert acc.is_zero()


def test_bracket_leibniz():
    rng = random.Random(53)
    for _ in range(10):
        f = random_real_trigpoly(rng, 2, n_modes=2)
        g = random_real_trigpoly(rng, 2, n_modes=2)
        h = random_real_trigpoly(rng, 2, n_modes=2)
        lhs = poisson_bracket(f, g * h, T2)
        rhs = poisson_bracket(f, g, T2) * h + g * poisson_bracket(f, h, T2)
        assert (lhs - rhs).is_zero()


# -- degree-one-form cocycle ----------------------------------------------------

def test_roger_frozen_value():
    alpha = TorusForm.basis(2, (0,))  # dx
    f = TrigPoly.cos_axis(2, 1)
    g = TrigPoly.sin_axis(2, 1)
    # integrand is -cos^2 y over the unit-scaled torus
    assert roger_cocycle(alpha, f, g, T2) == ExactScalar(Fraction(-1, 2), 2)


def test_roger_vanishes_on_constants():
    alpha = TorusForm.basis(2, (0,))
    f = random_real_trigpoly(random.Random(1), 2)
    assert roger_cocycle(alpha, f, TrigPoly.const(2, 5), T2).is_zero()


def test_roger_rejects_non_closed():
    alpha = TorusForm(2, 1, {(0,): TrigPoly.sin_axis(2, 1)})
    with pytest.raises(ValueError, match="not closed"):
        roger_cocycle(alpha, TrigPoly.const(2, 1), TrigPoly.const(2, 1), T2)


def test_roger_antisymmetric_exactly():
    rng = random.Random(54)
    for _ in range(15):
        alpha = random_closed_oneform(rng, 2)
        f = random_real_trigpoly(rng, 2, n_modes=2)
        g = random_real_trigpoly(rng, 2, n_modes=2)
        assert roger_cocycle(alpha, f, g, T2) == -roger_cocycle(alpha, g, f, T2)


def test_singular_frozen_value():
    cycle = CoordinateCycle.circle(2, 0, offsets={1: 0})
    f = TrigPoly.sin_axis(2, 0)
    g = TrigPoly.cos_axis(2, 0)
    assert singular_cocycle(cycle, f, g, T2) == ExactScalar(Fraction(1, 2), 1)
    assert singular_cocycle(cycle, TrigPoly.const(2, 3), g, T2).is_zero()


def test_singular_dimension_check():
    with pytest.raises(ValueError, match="2n-1"):
        singular_cocycle(CoordinateCycle.full(2), TrigPoly.const(2, 1),
                         TrigPoly.const(2, 1), T2)


# -- cocycle conditions -----------------------------------------------------------

def test_cocycle_condition_roger():
    rng = random.Random(55)
    for _ in range(10):
        alpha = random_closed_oneform(rng, 2)
        f, g, h = (random_real_trigpoly(rng, 2, n_modes=2) for _ in range(3))
        res = cocycle_residual("roger", {"alpha": alpha, "omega": T2}, f, g, h)
        assert res.is_zero()


def test_cocycle_condition_singular():
    rng = random.Random(56)
    for _ in range(10):
        cycle = CoordinateCycle.circle(2, 0, offsets={1: rng.randrange(4)})
        f, g, h = (random_real_trigpoly(rng, 2, n_modes=2) for _ in range(3))
        res = cocycle_residual("singular", {"cycle": cycle, "omega": T2}, f, g, h)
        assert res.is_zero()


def test_cocycle_condition_ks():
    rng = random.Random(57)
    for _ in range(10):
        pt = tuple(rng.randrange(4) for _ in range(2))
        f, g, h = (random_real_trigpoly(rng, 2, n_modes=2) for _ in range(3))
        res = cocycle_residual("ks", {"omega": T2, "point": pt}, f, g, h)
        assert res.is_zero()


def test_unknown_kind_rejected():
    with pytest.raises(ValueError, match="unknown cocycle kind"):
        cocycle_residual("mystery", {}, None, None, None)


# -- volume side ---------------------------------------------------------------------

def test_unit_volume_normalization():
    nu = unit_volume_form(3)
    assert integrate_over_cycle(nu, CoordinateCycle.full(3)) == ExactScalar(Fraction(1), 0)


def test_exact_field_from_potential_solves():
    # potential -sin z dy: d(alpha) = cos z dy ^ dz, so the field is the
    # (2 pi)^3-scaled cos z d/dx
    alpha = TorusForm(3, 1, {(1,): -TrigPoly.sin_axis(3, 2)})
    x = exact_field_from_potential(alpha)
    assert x.pi_power == 3
    assert x.components[0] == TrigPoly.cos_axis(3, 2)
    assert x.components[1].is_zero() and x.components[2].is_zero()
    nu = unit_volume_form(3)
    assert (contract(x, nu) - exterior_derivative(alpha)).is_zero()


def test_exact_field_random_potentials():
    rng = random.Random(58)
    nu = unit_volume_form(3)
    for _ in range(10):
        alpha = random_form(rng, 3, 1, max_deg=2, n_terms=2)
        x = exact_field_from_potential(alpha)
        assert (contract(x, nu) - exterior_derivative(alpha)).is_zero()
        flux = infinitesimal_flux(x)
        assert all(v.is_zero() for v in flux.values())
        assert is_exact_field(x)


def test_flux_of_coordinate_field():
    flux = infinitesimal_flux(TorusVectorField.coordinate(3, 0))
    assert flux[(1, 2)] == ExactScalar(Fraction(1), -3)
    assert flux[(0, 1)].is_zero() and flux[(0, 2)].is_zero()


def test_lichnerowicz_equal_for_dual_pair():
    x = TorusVectorField(3, [TrigPoly.cos_axis(3, 2), TrigPoly.zero(3), TrigPoly.zero(3)])
    y = TorusVectorField(3, [TrigPoly.zero(3), TrigPoly.cos_axis(3, 2), TrigPoly.zero(3)])
    assert vf_bracket(x, y).is_zero()
    assert is_exact_field(x) and is_exact_field(y)
    q = CoordinateCycle.circle(3, 2)
    lam_q = lichnerowicz_singular(q, x, y)
    lam_eta = lichnerowicz_eta(poincare_dual_form(q), x, y)
    assert lam_q == lam_eta == ExactScalar(Fraction(1, 2), -2)


def test_lichnerowicz_alternation():
    x = TorusVectorField(3, [TrigPoly.cos_axis(3, 2), TrigPoly.sin_axis(3, 2),
                             TrigPoly.zero(3)])
    q = CoordinateCycle.circle(3, 2)
    assert lichnerowicz_singular(q, x, x).is_zero()


def test_lichnerowicz_duality_commuting_random():
    rng = random.Random(59)
    for axis, c1, c2 in [(2, 0, 1), (0, 1, 2), (1, 0, 2)]:
        q = CoordinateCycle.circle(
            3, axis, offsets={a: rng.randrange(4) for a in range(3) if a != axis}
        )
        eta = poincare_dual_form(q)
        for _ in range(8):
            x = TorusVectorField(3, _axis_field(rng, axis, c1, c2))
            y = TorusVectorField(3, _axis_field(rng, axis, c1, c2))
            assert vf_bracket(x, y).is_zero()
            assert is_exact_field(x) and is_exact_field(y)
            assert lichnerowicz_singular(q, x, y) == lichnerowicz_eta(eta, x, y)


def _axis_field(rng, axis, c1, c2):
    comps = [TrigPoly.zero(3)] * 3
    comps[c1] = zero_mean_poly_in_axis(rng, 3, axis)
    comps[c2] = zero_mean_poly_in_axis(rng, 3, axis)
    return comps


def test_cocycle_condition_lichnerowicz():
    rng = random.Random(60)
    nu = unit_volume_form(3)
    q = CoordinateCycle.circle(3, 2)
    eta = poincare_dual_form(q)
    for _ in range(4):
        fields = [
            exact_field_from_potential(random_form(rng, 3, 1, max_deg=1, n_terms=2))
            for _ in range(3)
        ]
        res = cocycle_residual("lichnerowicz_q", {"cycle": q, "nu": nu}, *fields)
        assert res.is_zero()
        res = cocycle_residual("lichnerowicz_eta", {"eta": eta, "nu": nu}, *fields)
        assert res.is_zero()


# -- splitting maps ------------------------------------------------------------------

def test_mean_projection_values():
    assert mean_against_volume(TrigPoly.sin_axis(2, 0), T2) == 0
    assert mean_against_volume(TrigPoly.const(2, 1), T2) == 1
    rho, kappa = kappa_rho(TrigPoly.sin_axis(2, 0) + 3, T2)
    assert rho == 3
    assert kappa == TrigPoly.sin_axis(2, 0)


def test_kappa_pullbacks_constant_shift_invariant():
    rng = random.Random(61)
    cycle = CoordinateCycle.circle(2, 0, offsets={1: 1})
    for _ in range(15):
        alpha = random_closed_oneform(rng, 2)
        f = random_real_trigpoly(rng, 2, n_modes=2)
        g = random_real_trigpoly(rng, 2, n_modes=2)
        c1 = random_fraction(rng)
        c2 = random_fraction(rng)
        assert kappa_pullback_roger(alpha, f, g, T2) == \
            kappa_pullback_roger(alpha, f + c1, g + c2, T2)
        assert kappa_pullback_singular(cycle, f, g, T2) == \
            kappa_pullback_singular(cycle, f + c1, g + c2, T2)


def test_kappa_shift_example():
    alpha = TorusForm.basis(2, (0,))
    f = TrigPoly.cos_axis(2, 1)
    g = TrigPoly.sin_axis(2, 1)
    assert kappa_pullback_roger(alpha, f, g, T2) == \
        kappa_pullback_roger(alpha, f + 5, g + 7, T2)


# -- duality between cycle and form pictures -------------------------------------------

@pytest.mark.parametrize("axis", [0, 1])
def test_cycle_form_duality_on_commuting_pairs(axis):
    rng = random.Random(62 + axis)
    other = 1 - axis
    cycle = CoordinateCycle.circle(2, axis, offsets={other: rng.randrange(4)})
    alpha = poincare_dual_form(cycle)
    for _ in range(15):
        f = zero_mean_poly_in_axis(rng, 2, axis) + random_fraction(rng)
        g = zero_mean_poly_in_axis(rng, 2, axis) + random_fraction(rng)
        assert poisson_bracket(f, g, T2).is_zero()
        assert singular_cocycle(cycle, f, g, T2) == roger_cocycle(alpha, f, g, T2)
