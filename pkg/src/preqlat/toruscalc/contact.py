"""The non-regular contact structure on the 3-torus.

The preset contact form is theta = cos z dx + sin z dy.  Its Reeb orbits
foliate each constant-z 2-torus with constant slope, which makes the
invariant Hamiltonians exactly the functions of z among trigonometric
polynomials; the strict contact fields split into the constant span of
(d/dx, d/dy) and an exact part.  Everything here is exact, including the
identity relating the pulled-back degree-two cocycle on fields to the
cycle cocycle on invariant functions.
"""

from __future__ import annotations

from fractions import Fraction

from ..exact import ExactScalar
from .forms import (
    CoordinateCycle,
    TorusForm,
    TorusVectorField,
    contract,
    exterior_derivative,
    integrate_over_cycle,
    lie_derivative,
    wedge,
)
from .trig import TrigPoly

DIM = 3
X_AXIS, Y_AXIS, Z_AXIS = 0, 1, 2


def contact_form() -> TorusForm:
    """theta = cos z dx + sin z dy."""
    return TorusForm(
        DIM,
        1,
        {
            (X_AXIS,): TrigPoly.cos_axis(DIM, Z_AXIS),
            (Y_AXIS,): TrigPoly.sin_axis(DIM, Z_AXIS),
        },
    )


def contact_volume() -> TorusForm:
    """mu = (1/2) theta ^ d(theta); equal to -(1/2) dx ^ dy ^ dz."""
    theta = contact_form()
    return Fraction(1, 2) * wedge(theta, exterior_derivative(theta))


def reeb_field() -> TorusVectorField:
    """E = cos z d/dx + sin z d/dy: i_E theta = 1, i_E d(theta) = 0."""
    return TorusVectorField(
        DIM,
        [TrigPoly.cos_axis(DIM, Z_AXIS), TrigPoly.sin_axis(DIM, Z_AXIS), TrigPoly.zero(DIM)],
    )


def transverse_field() -> TorusVectorField:
    """V = -sin z d/dx + cos z d/dy, the rotated companion of the Reeb field."""
    return TorusVectorField(
        DIM,
        [-TrigPoly.sin_axis(DIM, Z_AXIS), TrigPoly.cos_axis(DIM, Z_AXIS), TrigPoly.zero(DIM)],
    )


def reeb_derivative(f: TrigPoly) -> TrigPoly:
    return reeb_field().apply(f)


def is_reeb_invariant(f: TrigPoly) -> bool:
    """Exact check of L_E f = 0.  Within trigonometric polynomials this
    forces f to depend on z only."""
    return reeb_derivative(f).is_zero()


def invariant_function(coeffs) -> TrigPoly:
    """Build f(z) = c_0 + sum_j (a_j cos jz + b_j sin jz) from
    coeffs = (c_0, [(a_1, b_1), (a_2, b_2), ...])."""
    c0, harmonics = coeffs
    f = TrigPoly.const(DIM, c0)
    for j, (a, b) in enumerate(harmonics, start=1):
        if a:
            f = f + TrigPoly.cos_axis(DIM, Z_AXIS, j, a)
        if b:
            f = f + TrigPoly.sin_axis(DIM, Z_AXIS, j, b)
    return f


def contact_field(f: TrigPoly) -> TorusVectorField:
    """The strict contact field of an invariant Hamiltonian.

    zeta_f = f E + (df/dz) V - V(f) d/dz  satisfies i_zeta theta = f and
    i_zeta d(theta) = -df exactly.
    """
    if not is_reeb_invariant(f):
        raise ValueError("not Reeb-invariant")
    e = reeb_field()
    v = transverse_field()
    fz = f.diff(Z_AXIS)
    vf = v.apply(f)
    comps = [
        f * e.components[0] + fz * v.components[0],
        f * e.components[1] + fz * v.components[1],
        -vf,
    ]
    return TorusVectorField(DIM, comps)


def contact_bracket(f: TrigPoly, g: TrigPoly) -> TrigPoly:
    """{f, g} = d(theta)(zeta_f, zeta_g) on invariant Hamiltonians."""
    dtheta = exterior_derivative(contact_form())
    zf = contact_field(f)
    zg = contact_field(g)
    return contract(zg, contract(zf, dtheta)).as_function()


def strict_contact_residual(x: TorusVectorField) -> TorusForm:
    """L_X theta; zero exactly when X preserves the contact form."""
    return lie_derivative(x, contact_form())


def sigma_cocycle(cycle: CoordinateCycle, f: TrigPoly, g: TrigPoly) -> ExactScalar:
    """integral over a 1-cycle of g df (the n = 1 case of g df ^ (dtheta)^{n-1})."""
    if len(cycle.axes) != 1:
        raise ValueError("cycle must be one-dimensional")
    df = exterior_derivative(TorusForm.function(DIM, f))
    return integrate_over_cycle(g * df, cycle)


def rho_cochain(cycle: CoordinateCycle, h: TrigPoly) -> ExactScalar:
    """-integral over a 1-cycle of h theta."""
    if len(cycle.axes) != 1:
        raise ValueError("cycle must be one-dimensional")
    return -integrate_over_cycle(h * contact_form(), cycle)


def contact_pullback_residual(cycle: CoordinateCycle, f: TrigPoly, g: TrigPoly) -> ExactScalar:
    """Residual of the pullback identity for the cycle cocycle.

    Evaluates  lambda_Q(zeta_f, zeta_g) - sigma_Q(f, g) - (1/2) (d rho_Q)(f, g)
    with lambda the cycle cocycle of the (unnormalized) contact volume
    mu = (1/2) theta ^ d(theta); identically zero on invariant inputs.
    """
    if not (is_reeb_invariant(f) and is_reeb_invariant(g)):
        raise ValueError("not Reeb-invariant")
    mu = contact_volume()
    zf = contact_field(f)
    zg = contact_field(g)
    lam = integrate_over_cycle(contract(zg, contract(zf, mu)), cycle)
    sig = sigma_cocycle(cycle, f, g)
    # (d rho)(f, g) = -rho({f, g}) for a 1-cochain rho
    drho = -rho_cochain(cycle, contact_bracket(f, g))
    return lam - sig - Fraction(1, 2) * drho


def contact_flux(f: TrigPoly):
    """Class of f * d(theta) in degree-two coordinates.

    Returns {(0,1): ..., (0,2): ..., (1,2): ...}: the constant modes of
    the dx^dy, dx^dz and dy^dz coefficients.  The dx^dy coordinate is
    zero for every invariant f; the image over all invariant f spans the
    other two directions.
    """
    if not is_reeb_invariant(f):
        raise ValueError("not Reeb-invariant")
    form = f * exterior_derivative(contact_form())
    return _two_form_class(form)


def contact_flux_via_field(f: TrigPoly):
    """Class of i_{zeta_f} mu, which matches contact_flux(f) coordinate
    by coordinate."""
    mu = contact_volume()
    form = contract(contact_field(f), mu)
    return _two_form_class(form)


def _two_form_class(form: TorusForm):
    out = {}
    for idx in ((0, 1), (0, 2), (1, 2)):
        mean = form.coefficient(idx).mean()
        if not mean.is_real():
            raise ValueError("class of a non-real form")
        out[idx] = ExactScalar(mean.re, form.pi_power)
    return out
