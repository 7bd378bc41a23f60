"""Differential forms, vector fields and coordinate cycles on the torus.

Coefficients are trigonometric polynomials; a whole form additionally
carries an integer power of (2*pi), so normalized objects like the unit
volume form dx_1^...^dx_m/(2*pi)^m stay exact.  Addition requires equal
powers; products add them.  Integrals land in ExactScalar.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..combinat import merge_tuples, remove_index, sort_sign
from ..exact import ExactScalar
from .complexq import ComplexRational
from .trig import TrigPoly


class TorusForm:
    __slots__ = ("dim", "degree", "coeffs", "pi_power")

    def __init__(self, dim, degree, coeffs=None, pi_power=0):
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "degree", degree)
        clean = {}
        for idx, poly in (coeffs or {}).items():
            idx = tuple(idx)
            if len(idx) != degree:
                raise ValueError(f"index tuple {idx} has wrong length for degree {degree}")
            if list(idx) != sorted(set(idx)):
                raise ValueError(f"index tuple {idx} must be strictly increasing")
            if any(not 0 <= i < dim for i in idx):
                raise ValueError(f"index {idx} out of range")
            if not isinstance(poly, TrigPoly):
                poly = TrigPoly.const(dim, poly)
            if not poly.is_zero():
                clean[idx] = poly
        object.__setattr__(self, "coeffs", clean)
        object.__setattr__(self, "pi_power", pi_power if clean else 0)

    def __setattr__(self, *args):
        raise AttributeError("TorusForm is immutable")

    @staticmethod
    def zero(dim, degree):
        return TorusForm(dim, degree, {})

    @staticmethod
    def basis(dim, idx, poly=1, pi_power=0):
        idx = tuple(idx)
        if not isinstance(poly, TrigPoly):
            poly = TrigPoly.const(dim, poly)
        return TorusForm(dim, len(idx), {idx: poly}, pi_power)

    @staticmethod
    def function(dim, poly):
        if not isinstance(poly, TrigPoly):
            poly = TrigPoly.const(dim, poly)
        return TorusForm(dim, 0, {(): poly})

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, TorusForm):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.degree == other.degree
            and self.pi_power == other.pi_power
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return (
            f"TorusForm(dim={self.dim}, degree={self.degree}, "
            f"terms={len(self.coeffs)}, pi_power={self.pi_power})"
        )

    def coefficient(self, idx) -> TrigPoly:
        return self.coeffs.get(tuple(idx), TrigPoly.zero(self.dim))

    def as_function(self) -> TrigPoly:
        """The coefficient of a degree-zero form (pi_power must be 0)."""
        if self.degree != 0:
            raise ValueError("not a degree-zero form")
        if self.pi_power != 0:
            raise ValueError("degree-zero form carries a (2*pi) power")
        return self.coefficient(())

    def __add__(self, other):
        if not isinstance(other, TorusForm):
            return NotImplemented
        if self.dim != other.dim or self.degree != other.degree:
            raise ValueError("forms live in different spaces")
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.pi_power != other.pi_power:
            raise ValueError(
                f"cannot add forms with (2*pi) powers {self.pi_power} and {other.pi_power}"
            )
        coeffs = dict(self.coeffs)
        for idx, p in other.coeffs.items():
            coeffs[idx] = coeffs.get(idx, TrigPoly.zero(self.dim)) + p
        return TorusForm(self.dim, self.degree, coeffs, self.pi_power)

    def __neg__(self):
        return TorusForm(
            self.dim, self.degree, {i: -p for i, p in self.coeffs.items()}, self.pi_power
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Scale by a rational, an ExactScalar, or a function."""
        if isinstance(other, ExactScalar):
            return TorusForm(
                self.dim,
                self.degree,
                {i: p * other.q for i, p in self.coeffs.items()},
                self.pi_power + other.pi_power,
            )
        if isinstance(other, (int, Fraction)):
            return TorusForm(
                self.dim, self.degree,
                {i: p * other for i, p in self.coeffs.items()}, self.pi_power,
            )
        if isinstance(other, TrigPoly):
            return TorusForm(
                self.dim, self.degree,
                {i: p * other for i, p in self.coeffs.items()}, self.pi_power,
            )
        return NotImplemented

    __rmul__ = __mul__

    def scale_pi(self, d):
        """Multiply by (2*pi)**d."""
        if self.is_zero():
            return self
        return TorusForm(self.dim, self.degree, self.coeffs, self.pi_power + d)


class TorusVectorField:
    __slots__ = ("dim", "components", "pi_power")

    def __init__(self, dim, components, pi_power=0):
        comps = []
        for c in components:
            if not isinstance(c, TrigPoly):
                c = TrigPoly.const(dim, c)
            comps.append(c)
        if len(comps) != dim:
            raise ValueError("need one component per coordinate")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "components", tuple(comps))
        if all(c.is_zero() for c in comps):
            pi_power = 0
        object.__setattr__(self, "pi_power", pi_power)

    def __setattr__(self, *args):
        raise AttributeError("TorusVectorField is immutable")

    @staticmethod
    def coordinate(dim, axis, poly=1):
        comps = [TrigPoly.zero(dim)] * dim
        comps[axis] = poly if isinstance(poly, TrigPoly) else TrigPoly.const(dim, poly)
        return TorusVectorField(dim, comps)

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

    def __eq__(self, other):
        if not isinstance(other, TorusVectorField):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.pi_power == other.pi_power
            and self.components == other.components
        )

    def __add__(self, other):
        if self.dim != other.dim:
            raise ValueError("fields live on different tori")
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.pi_power != other.pi_power:
            raise ValueError("cannot add fields with different (2*pi) powers")
        return TorusVectorField(
            self.dim,
            [a + b for a, b in zip(self.components, other.components)],
            self.pi_power,
        )

    def __neg__(self):
        return TorusVectorField(self.dim, [-c for c in self.components], self.pi_power)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, (int, Fraction, TrigPoly)):
            return TorusVectorField(
                self.dim, [c * scalar for c in self.components], self.pi_power
            )
        return NotImplemented

    __rmul__ = __mul__

    def apply(self, f: TrigPoly) -> TrigPoly:
        """Directional derivative X(f); requires a (2*pi)-free field."""
        if self.pi_power != 0:
            raise ValueError("field carries a (2*pi) power; scale it away first")
        out = TrigPoly.zero(self.dim)
        for axis, comp in enumerate(self.components):
            if not comp.is_zero():
                out = out + comp * f.diff(axis)
        return out


def vf_bracket(x: TorusVectorField, y: TorusVectorField) -> TorusVectorField:
    """Lie bracket [X, Y] of vector fields."""
    if x.dim != y.dim:
        raise ValueError("fields live on different tori")
    dim = x.dim
    comps = []
    for k in range(dim):
        acc = TrigPoly.zero(dim)
        for j in range(dim):
            if not x.components[j].is_zero():
                acc = acc + x.components[j] * y.components[k].diff(j)
            if not y.components[j].is_zero():
                acc = acc - y.components[j] * x.components[k].diff(j)
        comps.append(acc)
    return TorusVectorField(dim, comps, x.pi_power + y.pi_power)


def exterior_derivative(f: TorusForm) -> TorusForm:
    out = {}
    for idx, poly in f.coeffs.items():
        for axis in range(f.dim):
            if axis in idx:
                continue
            dp = poly.diff(axis)
            if dp.is_zero():
                continue
            new_idx, sign = merge_tuples((axis,), idx)
            prev = out.get(new_idx, TrigPoly.zero(f.dim))
            out[new_idx] = prev + (dp if sign > 0 else -dp)
    return TorusForm(f.dim, f.degree + 1, out, f.pi_power)


def wedge(f: TorusForm, g: TorusForm) -> TorusForm:
    if f.dim != g.dim:
        raise ValueError("forms live on different tori")
    degree = f.degree + g.degree
    if degree > f.dim:
        return TorusForm.zero(f.dim, degree)
    out = {}
    for ia, pa in f.coeffs.items():
        for ib, pb in g.coeffs.items():
            merged = merge_tuples(ia, ib)
            if merged is None:
                continue
            idx, sign = merged
            term = pa * pb
            if sign < 0:
                term = -term
            prev = out.get(idx)
            out[idx] = term if prev is None else prev + term
    return TorusForm(f.dim, degree, out, f.pi_power + g.pi_power)


def contract(x: TorusVectorField, f: TorusForm) -> TorusForm:
    """Interior product i_X f."""
    if x.dim != f.dim:
        raise ValueError("field and form live on different tori")
    if f.degree == 0:
        return TorusForm.zero(f.dim, 0)
    out = {}
    for idx, poly in f.coeffs.items():
        for axis in idx:
            comp = x.components[axis]
            if comp.is_zero():
                continue
            rest, sign = remove_index(axis, idx)
            term = comp * poly
            if sign < 0:
                term = -term
            prev = out.get(rest)
            out[rest] = term if prev is None else prev + term
    return TorusForm(f.dim, f.degree - 1, out, f.pi_power + x.pi_power)


def lie_derivative(x: TorusVectorField, f: TorusForm) -> TorusForm:
    """Cartan formula L_X = i_X d + d i_X."""
    first = contract(x, exterior_derivative(f))
    if f.degree == 0:
        return first
    return first + exterior_derivative(contract(x, f))


@dataclass(frozen=True)
class CoordinateCycle:
    """An oriented coordinate subtorus.

    ``axes`` lists the coordinates of the cycle in integration order;
    remaining coordinates are frozen at ``offsets[axis] * pi/2`` (quarter
    turns keep restriction exact).  ``orientation`` flips the sign.
    """

    dim: int
    axes: tuple
    offsets: dict = field(default_factory=dict)
    orientation: int = 1

    def __post_init__(self):
        axes = tuple(self.axes)
        if len(set(axes)) != len(axes):
            raise ValueError("cycle axes must be distinct")
        if any(not 0 <= a < self.dim for a in axes):
            raise ValueError("cycle axis out of range")
        offs = {}
        for a, q in self.offsets.items():
            if a in axes:
                raise ValueError(f"axis {a} is integrated over; it cannot carry an offset")
            if not 0 <= a < self.dim:
                raise ValueError("offset axis out of range")
            offs[a] = int(q) % 4
        if self.orientation not in (1, -1):
            raise ValueError("orientation must be +1 or -1")
        object.__setattr__(self, "axes", axes)
        object.__setattr__(self, "offsets", offs)

    @staticmethod
    def full(dim):
        return CoordinateCycle(dim, tuple(range(dim)))

    @staticmethod
    def circle(dim, axis, offsets=None, orientation=1):
        return CoordinateCycle(dim, (axis,), offsets or {}, orientation)


def integrate_over_cycle(f: TorusForm, cycle: CoordinateCycle) -> ExactScalar:
    """Exact integral of a real form over a coordinate cycle.

    The form restricts by evaluating frozen coordinates at the quarter
    offsets; only the constant mode along the cycle axes survives, scaled
    by (2*pi) per integrated axis.
    """
    if f.dim != cycle.dim:
        raise ValueError("form and cycle live on different tori")
    if f.degree != len(cycle.axes):
        raise ValueError("degree mismatch between form and cycle")
    axes_sorted = tuple(sorted(cycle.axes))
    sign = sort_sign(cycle.axes) * cycle.orientation
    poly = f.coeffs.get(axes_sorted)
    if poly is None:
        return ExactScalar.zero()
    total = ComplexRational(0)
    frozen = [a for a in range(f.dim) if a not in axes_sorted]
    for k, c in poly.modes.items():
        if any(k[a] for a in axes_sorted):
            continue
        power = sum(k[a] * cycle.offsets.get(a, 0) for a in frozen)
        total = total + c.times_i_power(power)
    if not total.is_real():
        raise ValueError("integral of a non-real form")
    return ExactScalar(sign * total.re, f.pi_power + len(cycle.axes))


def poincare_dual_form(cycle: CoordinateCycle) -> TorusForm:
    """The constant form eta with  integral_C gamma = integral eta ^ gamma
    for every closed gamma.

    The sign and the (2*pi) normalization are computed by evaluating both
    sides on the coordinate form along the cycle.
    """
    m = cycle.dim
    axes_sorted = tuple(sorted(cycle.axes))
    complement = tuple(a for a in range(m) if a not in axes_sorted)
    probe = TorusForm.basis(m, axes_sorted)
    lhs = integrate_over_cycle(probe, cycle)
    candidate = TorusForm.basis(m, complement)
    rhs = integrate_over_cycle(wedge(candidate, probe), CoordinateCycle.full(m))
    scale = lhs / rhs
    return candidate * scale
