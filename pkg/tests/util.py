"""Shared generators and the float-grid quadrature oracle.

Uniform-grid trapezoidal sums on the periodic torus integrate any
trigonometric polynomial of per-axis degree < N exactly, so they give an
independent numerical check of the exact integrals.
"""

import math
from fractions import Fraction

from preqlat.exact import ExactScalar
from preqlat.toruscalc import CoordinateCycle, TorusForm, TorusVectorField, TrigPoly


def random_fraction(rng, num=5, den=3):
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_real_trigpoly(rng, dim, max_deg=2, n_modes=3, allow_const=True):
    f = TrigPoly.const(dim, random_fraction(rng)) if allow_const else TrigPoly.zero(dim)
    for _ in range(n_modes):
        k = [rng.randint(-max_deg, max_deg) for _ in range(dim)]
        if not any(k):
            k[rng.randrange(dim)] = rng.randint(1, max_deg)
        f = f + TrigPoly.cosine(dim, k, random_fraction(rng))
        f = f + TrigPoly.sine(dim, k, random_fraction(rng))
    return f


def random_form(rng, dim, degree, max_deg=2, n_terms=2):
    from preqlat.combinat import degree_tuples

    coeffs = {}
    tuples = degree_tuples(dim, degree)
    for idx in rng.sample(tuples, min(n_terms, len(tuples))):
        coeffs[idx] = random_real_trigpoly(rng, dim, max_deg, n_modes=2)
    return TorusForm(dim, degree, coeffs)


def random_field(rng, dim, max_deg=2):
    return TorusVectorField(
        dim, [random_real_trigpoly(rng, dim, max_deg, n_modes=2) for _ in range(dim)]
    )


def random_invariant(rng, max_deg=6, zero_mean=False):
    """Random trigonometric polynomial in z on the 3-torus."""
    f = TrigPoly.zero(3) if zero_mean else TrigPoly.const(3, random_fraction(rng))
    for j in range(1, max_deg + 1):
        if rng.random() < 0.5:
            f = f + TrigPoly.cos_axis(3, 2, j, random_fraction(rng))
        if rng.random() < 0.5:
            f = f + TrigPoly.sin_axis(3, 2, j, random_fraction(rng))
    return f


def random_closed_oneform(rng, dim, omega=None):
    """Constant 1-form plus an exact piece: always closed."""
    from preqlat.toruscalc import exterior_derivative

    coeffs = {
        (i,): TrigPoly.const(dim, random_fraction(rng)) for i in range(dim)
    }
    alpha = TorusForm(dim, 1, coeffs)
    df = exterior_derivative(
        TorusForm.function(dim, random_real_trigpoly(rng, dim, max_deg=1, n_modes=1))
    )
    return alpha + df


def random_exact_field(rng, dim, max_deg=1):
    """Field with a potential: build one from a random (m-2)-form."""
    from preqlat.toruscalc import exact_field_from_potential

    alpha = random_form(rng, dim, dim - 2, max_deg=max_deg, n_terms=2)
    return exact_field_from_potential(alpha)


def quadrature_oracle(form: TorusForm, cycle: CoordinateCycle, n_grid=None) -> float:
    """Trapezoidal integral over the cycle; exact for degree < n_grid."""
    max_deg = max(
        (poly.max_degree() for poly in form.coeffs.values()), default=0
    )
    n = n_grid or max(2 * max_deg + 2, 4)
    axes = sorted(cycle.axes)
    if form.degree != len(axes):
        raise ValueError("degree mismatch")
    from preqlat.combinat import sort_sign

    sign = sort_sign(cycle.axes) * cycle.orientation
    poly = form.coeffs.get(tuple(axes))
    if poly is None:
        return 0.0
    base = [cycle.offsets.get(a, 0) * math.pi / 2 for a in range(form.dim)]
    total = 0.0
    steps = [0] * len(axes)

    def rec(level):
        nonlocal total
        if level == len(axes):
            pt = list(base)
            for a, s in zip(axes, steps):
                pt[a] = 2 * math.pi * s / n
            total += poly.eval_float(pt).real
            return
        for s in range(n):
            steps[level] = s
            rec(level + 1)

    rec(0)
    cell = (2 * math.pi / n) ** len(axes)
    return sign * total * cell * (2 * math.pi) ** form.pi_power


def close(exact: ExactScalar, approx: float, tol=1e-9):
    return math.isclose(float(exact), approx, rel_tol=tol, abs_tol=tol)
