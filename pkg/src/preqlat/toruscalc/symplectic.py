"""Hamiltonian calculus on symplectic tori with constant coefficients.

The preset symplectic structures are sums of scaled coordinate planes,
omega = sum c_i dx_{2i-1} ^ dx_{2i}; Hamiltonian fields are produced by
inverting the constant coefficient matrix, so every identity downstream
(bracket values, cocycle evaluations) is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from ..exact import ExactScalar
from .forms import (
    CoordinateCycle,
    TorusForm,
    TorusVectorField,
    contract,
    exterior_derivative,
    integrate_over_cycle,
    wedge,
)
from .trig import TrigPoly


def standard_symplectic(n, scales=None) -> TorusForm:
    """sum_i c_i dx_{2i} ^ dx_{2i+1} on the 2n-torus (0-based pairs)."""
    if scales is None:
        scales = [1] * n
    if len(scales) != n:
        raise ValueError("need one scale per coordinate plane")
    dim = 2 * n
    coeffs = {}
    for i, c in enumerate(scales):
        if c == 0:
            raise ValueError("zero scale makes the form degenerate")
        coeffs[(2 * i, 2 * i + 1)] = TrigPoly.const(dim, c)
    return TorusForm(dim, 2, coeffs)


def _coefficient_matrix(omega: TorusForm):
    if omega.degree != 2:
        raise ValueError("symplectic form must have degree two")
    if omega.pi_power != 0:
        raise ValueError("symplectic preset must be (2*pi)-free")
    dim = omega.dim
    mat = [[Fraction(0)] * dim for _ in range(dim)]
    for (a, b), poly in omega.coeffs.items():
        if not poly.is_constant():
            raise ValueError("symplectic preset must have constant coefficients")
        val = poly.mean()
        if not val.is_real():
            raise ValueError("symplectic coefficients must be real")
        mat[a][b] = val.re
        mat[b][a] = -val.re
    return mat


def _invert_fraction_matrix(mat):
    n = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if piv is None:
            raise ValueError("degenerate symplectic form")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def hamiltonian_field(f: TrigPoly, omega: TorusForm) -> TorusVectorField:
    """The field X_f with i_{X_f} omega = -df, via the constant inverse."""
    mat = _coefficient_matrix(omega)
    inv = _invert_fraction_matrix(mat)
    dim = omega.dim
    grads = [f.diff(k) for k in range(dim)]
    comps = []
    for j in range(dim):
        acc = TrigPoly.zero(dim)
        for k in range(dim):
            if inv[j][k] and not grads[k].is_zero():
                acc = acc + grads[k] * inv[j][k]
        comps.append(acc)
    return TorusVectorField(dim, comps)


def poisson_bracket(f: TrigPoly, g: TrigPoly, omega: TorusForm) -> TrigPoly:
    """{f, g} = omega(X_f, X_g)."""
    xf = hamiltonian_field(f, omega)
    xg = hamiltonian_field(g, omega)
    return contract(xg, contract(xf, omega)).as_function()


def ks_cocycle(f, g, omega, point):
    """{f, g} evaluated at a point.

    Integer entries are quarter turns of pi/2 and evaluate exactly to a
    Fraction; float entries evaluate in binary64 (tolerance 1e-12 on the
    discarded imaginary part).
    """
    pb = poisson_bracket(f, g, omega)
    if all(isinstance(x, int) for x in point):
        val = pb.eval_quarter(point)
        if not val.is_real():
            raise ValueError("bracket of non-real inputs at this point")
        return val.re
    val = pb.eval_float([float(x) for x in point])
    if abs(val.imag) > 1e-12:
        raise ValueError("bracket evaluation has a non-negligible imaginary part")
    return val.real


def liouville_power(omega: TorusForm, n=None) -> TorusForm:
    """omega^n / n! (the Liouville volume form of the preset)."""
    if n is None:
        n = omega.dim // 2
    acc = TorusForm.function(omega.dim, TrigPoly.const(omega.dim, 1))
    for _ in range(n):
        acc = wedge(acc, omega)
    return acc * Fraction(1, factorial(n))


def roger_cocycle(alpha: TorusForm, f: TrigPoly, g: TrigPoly, omega: TorusForm) -> ExactScalar:
    """integral of  f * alpha(X_g) * omega^n/n!  for a closed 1-form."""
    if alpha.degree != 1:
        raise ValueError("need a 1-form")
    if not exterior_derivative(alpha).is_zero():
        raise ValueError("1-form is not closed")
    dim = omega.dim
    n = dim // 2
    xg = hamiltonian_field(g, omega)
    paired = contract(xg, alpha)   # degree 0, carries alpha's (2*pi) power
    poly = paired.coefficient(())
    integrand = (f * poly) * liouville_power(omega, n)
    integrand = integrand.scale_pi(paired.pi_power)
    return integrate_over_cycle(integrand, CoordinateCycle.full(dim))


def singular_cocycle(cycle: CoordinateCycle, f: TrigPoly, g: TrigPoly,
                     omega: TorusForm) -> ExactScalar:
    """integral over the cycle of  g df ^ omega^{n-1}/(n-1)!."""
    dim = omega.dim
    n = dim // 2
    if len(cycle.axes) != 2 * n - 1:
        raise ValueError("cycle dimension must be 2n-1")
    df = exterior_derivative(TorusForm.function(dim, f))
    form = g * wedge(df, liouville_power(omega, n - 1))
    return integrate_over_cycle(form, cycle)


def mean_against_volume(f: TrigPoly, omega: TorusForm) -> Fraction:
    """(1/vol) integral of f omega^n/n!; the constants-part projection."""
    dim = omega.dim
    voln = liouville_power(omega, dim // 2)
    full = CoordinateCycle.full(dim)
    vol = integrate_over_cycle(voln, full)
    num = integrate_over_cycle(f * voln, full)
    return (num / vol).q


def kappa_rho(f: TrigPoly, omega: TorusForm):
    """Split a Hamiltonian into its mean and its mean-free part.

    Returns (rho(f), kappa(X_f)) = (mean, f - mean)."""
    rho = mean_against_volume(f, omega)
    return rho, f - rho


def kappa_pullback_roger(alpha, f, g, omega) -> ExactScalar:
    """The degree-one cocycle pulled back to Hamiltonian fields.

    Equals the integral of f * alpha(X_g) * omega^n/n! and depends only
    on X_f, X_g: constant shifts of f and g do not change the value.
    """
    return roger_cocycle(alpha, f, g, omega)


def kappa_pullback_singular(cycle, f, g, omega) -> ExactScalar:
    """Cycle cocycle pulled back to Hamiltonian fields; constant-shift
    invariant for the same reason."""
    return singular_cocycle(cycle, f, g, omega)
