"""Integral cohomology of finite free cochain complexes, with cup
products, torsion and the fundamental-class pairing.

The engine turns a complex of integer matrices into, per degree: the free
rank, the invariant factors, representative cocycles, and an exact
reduction map sending any cocycle to its (free, torsion) coordinates.
Presets cover the complexes the lattice computations need: nilmanifold
presentations, tori, and compact orientable surfaces (whose ring is
installed directly, since a genus >= 2 surface is not a nilmanifold).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import intlinalg as lin
from .cealg import (
    Cochain,
    LieAlgebraPresentation,
    abelian,
    ce_differential,
    complex_matrices,
    heisenberg_times_line,
    validate_presentation,
    wedge,
)
from .combinat import degree_tuples


@dataclass(frozen=True)
class CohomClass:
    """Coordinates of a cohomology class: free part and torsion part.

    Torsion coordinates are reduced into [0, d_i) for the invariant
    factors d_i of the degree.
    """

    degree: int
    free: tuple
    torsion: tuple

    def is_zero(self):
        return all(x == 0 for x in self.free) and all(x == 0 for x in self.torsion)


@dataclass
class DegreeData:
    degree: int
    basis: list                      # increasing index tuples of the cochain space
    betti: int
    torsion: list                    # invariant factors > 1
    free_reps: list                  # Cochain
    torsion_reps: list               # Cochain
    reduce_free: list                # betti x N Fraction rows
    reduce_torsion: list             # len(torsion) x N Fraction rows


class GradedCohomology:
    """Per-degree cohomology data of a cochain complex on dim generators."""

    def __init__(self, dim, conames, degrees, matrices=None):
        self.dim = dim
        self.conames = tuple(conames)
        self.degrees = degrees
        self.matrices = matrices

    def data(self, k) -> DegreeData:
        if not 0 <= k < len(self.degrees):
            raise ValueError(f"no degree {k} in this complex")
        return self.degrees[k]

    def betti(self, k):
        return self.data(k).betti if 0 <= k < len(self.degrees) else 0

    def torsion(self, k):
        return list(self.data(k).torsion) if 0 <= k < len(self.degrees) else []

    def is_closed(self, c: Cochain) -> bool:
        if self.matrices is None or c.degree >= len(self.matrices):
            return True
        vec = self._coords(c)
        mat = self.matrices[c.degree]
        return all(sum(row[j] * vec[j] for j in range(len(vec))) == 0 for row in mat)

    def _coords(self, c: Cochain):
        dd = self.data(c.degree)
        pos = {t: i for i, t in enumerate(dd.basis)}
        vec = [Fraction(0)] * len(dd.basis)
        for idx, coef in c.coeffs.items():
            vec[pos[idx]] = coef
        return vec

    def reduce(self, c: Cochain) -> CohomClass:
        """Coordinates of the class of a closed cochain.

        Integer cochains get integer free coordinates and torsion
        coordinates mod the invariant factors; rational cochains (real
        classes) get rational free coordinates with torsion dropped.
        """
        if not self.is_closed(c):
            raise ValueError("not a cocycle")
        dd = self.data(c.degree)
        vec = self._coords(c)
        integral = all(x.denominator == 1 for x in vec)
        free = []
        for row in dd.reduce_free:
            val = sum(r * x for r, x in zip(row, vec))
            if integral:
                if val.denominator != 1:
                    raise ValueError("integer cocycle reduced to non-integer coordinate")
                val = int(val)
            free.append(val)
        torsion = []
        for row, d in zip(dd.reduce_torsion, dd.torsion):
            if not integral:
                torsion.append(0)
                continue
            val = sum(r * x for r, x in zip(row, vec))
            if val.denominator != 1:
                raise ValueError("integer cocycle reduced to non-integer coordinate")
            torsion.append(int(val) % d)
        return CohomClass(c.degree, tuple(free), tuple(torsion))

    def representative(self, cls: CohomClass) -> Cochain:
        dd = self.data(cls.degree)
        if len(cls.free) != dd.betti or len(cls.torsion) != len(dd.torsion):
            raise ValueError("class coordinates do not match the degree data")
        out = Cochain.zero(self.dim, cls.degree)
        for coef, rep in zip(cls.free, dd.free_reps):
            if coef:
                out = out + coef * rep
        for coef, rep in zip(cls.torsion, dd.torsion_reps):
            if coef:
                out = out + coef * rep
        return out


def integral_cohomology(matrices, dim, conames) -> GradedCohomology:
    """Cohomology of the complex 0 -> Z^{N_0} -> ... -> Z^{N_m} -> 0.

    ``matrices[k]`` is d_k in the lexicographic increasing-tuple bases.
    Raises ``ValueError('not a complex')`` unless d_{k+1} d_k = 0.
    """
    m = dim
    for k in range(len(matrices) - 1):
        if matrices[k] and matrices[k + 1]:
            comp = lin.mat_mul(matrices[k + 1], matrices[k])
            if any(any(row) for row in comp):
                raise ValueError("not a complex")
    for mat in matrices:
        for row in mat:
            for x in row:
                if isinstance(x, Fraction) and x.denominator != 1:
                    raise ValueError("non-integral basis")

    degrees = []
    for k in range(m + 1):
        basis = degree_tuples(m, k)
        n_k = len(basis)
        d_k = matrices[k] if k < len(matrices) else [[] for _ in range(0)]
        kercols = lin.kernel_basis(d_k, ncols=n_k) if k < len(matrices) else \
            [[1 if i == j else 0 for i in range(n_k)] for j in range(n_k)]
        s = len(kercols)
        prev_cols = []
        if k >= 1 and matrices[k - 1] and matrices[k - 1][0]:
            dm = matrices[k - 1]
            prev_cols = [[dm[i][j] for i in range(len(dm))] for j in range(len(dm[0]))]
            prev_cols = [c for c in prev_cols if any(c)]
        degrees.append(_degree_data(k, basis, kercols, prev_cols, n_k, dim))
    return GradedCohomology(dim, conames, degrees, matrices=matrices)


def _degree_data(k, basis, kercols, prev_cols, n_k, dim):
    s = len(kercols)
    if s == 0:
        return DegreeData(k, basis, 0, [], [], [], [], [])
    solver = lin.rational_solver(kercols, n_k)  # s x N

    # coboundary image in kernel coordinates; integral because the kernel
    # lattice is saturated
    x_cols = []
    for col in prev_cols:
        coords = lin.solve_in_lattice(kercols, col, n_k)
        if coords is None or any(isinstance(c, Fraction) and c.denominator != 1 for c in coords):
            raise ValueError("not a complex")
        x_cols.append([int(c) for c in coords])

    if x_cols:
        x_mat = [[c[i] for c in x_cols] for i in range(s)]
        snf = lin.smith_normal_form(x_mat)
        diag = snf.diagonal + [0] * (s - len(snf.diagonal))
        u = snf.u
        uinv = snf.uinv
    else:
        diag = [0] * s
        u = lin.identity(s)
        uinv = lin.identity(s)

    reduce_full = lin.mat_mul_frac(
        [[Fraction(x) for x in row] for row in uinv], solver
    )  # s x N

    free_idx = [i for i in range(s) if i >= len(diag) or diag[i] == 0]
    tors_idx = [i for i in range(s) if i < len(diag) and diag[i] > 1]
    torsion = [diag[i] for i in tors_idx]

    def rep_col(i):
        return [sum(kercols[j][row] * u[j][i] for j in range(s)) for row in range(n_k)]

    free_cols = [rep_col(i) for i in free_idx]
    reduce_free = [reduce_full[i] for i in free_idx]
    if free_cols:
        hnf_cols = lin.column_style_hermite(free_cols, n_k)
        t_mat_cols = [lin.solve_in_lattice(free_cols, h, n_k) for h in hnf_cols]
        t_mat = [[c[i] for c in t_mat_cols] for i in range(len(free_cols))]
        t_inv = lin.int_inverse(t_mat)
        reduce_free = lin.mat_mul_frac(
            [[Fraction(x) for x in row] for row in t_inv], reduce_free
        )
        free_cols = hnf_cols

    tors_cols = [rep_col(i) for i in tors_idx]
    reduce_torsion = [reduce_full[i] for i in tors_idx]
    for j, col in enumerate(tors_cols):
        lead = next((x for x in col if x), 0)
        if lead < 0:
            tors_cols[j] = [-x for x in col]
            reduce_torsion[j] = [-x for x in reduce_torsion[j]]

    def to_cochain(col):
        return Cochain(dim, k, {basis[i]: Fraction(col[i]) for i in range(n_k) if col[i]})

    return DegreeData(
        degree=k,
        basis=basis,
        betti=len(free_idx),
        torsion=torsion,
        free_reps=[to_cochain(c) for c in free_cols],
        torsion_reps=[to_cochain(c) for c in tors_cols],
        reduce_free=reduce_free,
        reduce_torsion=reduce_torsion,
    )


class CohomologyRing:
    """Graded cohomology with cup products and an orientation.

    ``cup`` wedges chosen representatives and reduces; for table-driven
    presets (surfaces) the custom reduction encodes the ring structure.
    """

    def __init__(self, cohomology: GradedCohomology, top_degree, preset=None, lie=None):
        self.cohomology = cohomology
        self.top_degree = top_degree
        self.preset = preset
        self.lie = lie
        self._orient()

    def _orient(self):
        top = self.cohomology.data(self.top_degree)
        if top.betti != 1:
            raise ValueError("top cohomology is not of rank one; no orientation")
        mono = Cochain.basis(self.cohomology.dim, tuple(range(self.cohomology.dim))) \
            if self.cohomology.dim == self.top_degree else None
        if mono is None:
            # formal presets: keep the installed generator
            return
        coord = self.reduce(mono).free[0]
        if coord not in (1, -1):
            raise ValueError("top monomial does not generate the orientation line")
        if coord == -1:
            top.free_reps[0] = -top.free_reps[0]
            top.reduce_free[0] = [-x for x in top.reduce_free[0]]

    # -- class-level operations -------------------------------------------

    def betti(self, k):
        return self.cohomology.betti(k)

    def torsion(self, k):
        return self.cohomology.torsion(k)

    def reduce(self, c: Cochain) -> CohomClass:
        return self.cohomology.reduce(c)

    def representative(self, cls: CohomClass) -> Cochain:
        return self.cohomology.representative(cls)

    def zero_class(self, degree):
        if degree >= len(self.cohomology.degrees):
            return CohomClass(degree, (), ())
        dd = self.cohomology.data(degree)
        return CohomClass(degree, (0,) * dd.betti, (0,) * len(dd.torsion))

    def unit(self) -> CohomClass:
        return CohomClass(0, (1,), ())

    def orientation_class(self) -> CohomClass:
        dd = self.cohomology.data(self.top_degree)
        return CohomClass(self.top_degree, (1,), (0,) * len(dd.torsion))

    def cup(self, u: CohomClass, v: CohomClass) -> CohomClass:
        degree = u.degree + v.degree
        if degree > self.cohomology.dim or u.degree > self.cohomology.dim \
                or v.degree > self.cohomology.dim:
            return CohomClass(degree, (), ())
        w = wedge(self.representative(u), self.representative(v))
        return self.reduce(w)

    def fundamental_pairing(self, t):
        """Coefficient of a top-degree class (or cocycle) against the
        orientation generator."""
        if isinstance(t, Cochain):
            t = self.reduce(t)
        if t.degree != self.top_degree:
            raise ValueError("pairing needs a top-degree class")
        return t.free[0]

    def class_display(self, cls: CohomClass) -> str:
        rep = self.representative(cls)
        return rep.render(self.cohomology.conames, star="")

    def report_fragment(self, k) -> dict:
        dd = self.cohomology.data(k)
        gens = [c.render(self.cohomology.conames, star="") for c in dd.free_reps]
        gens += [c.render(self.cohomology.conames, star="") for c in dd.torsion_reps]
        return {
            "degree": k,
            "betti": dd.betti,
            "torsion": list(dd.torsion),
            "generators": gens,
        }


# -- presets ---------------------------------------------------------------

def nilmanifold_ring(lie: LieAlgebraPresentation) -> CohomologyRing:
    """Ring of the cochain complex of an integral nilpotent presentation.

    The output is the cohomology of the presentation's cochain complex
    over the integers; for the shipped presets this agrees with the
    integral cohomology of the associated compact quotient.
    """
    report = validate_presentation(lie)
    if not report.jacobi_ok:
        raise ValueError(f"Jacobi identity fails on basis triple {report.jacobi_witness}")
    if not report.nilpotent:
        raise ValueError("presentation is not nilpotent")
    mats = complex_matrices(lie, require_integral=True)
    conames = tuple(f"{n}*" for n in lie.basis_names)
    groups = integral_cohomology(mats, lie.dim, conames)
    return CohomologyRing(groups, top_degree=lie.dim, preset=("nilmanifold",), lie=lie)


def torus_ring(m) -> CohomologyRing:
    if m < 1:
        raise ValueError("torus dimension must be >= 1")
    lie = abelian(m, names=tuple(f"dx{i+1}" for i in range(m)))
    mats = complex_matrices(lie)
    groups = integral_cohomology(mats, m, lie.basis_names)
    ring = CohomologyRing(groups, top_degree=m, preset=("torus", m), lie=lie)
    return ring


def surface_ring(genus) -> CohomologyRing:
    """Cohomology ring of the closed orientable surface of a given genus.

    Installed directly on a formal exterior model with 2*genus degree-one
    generators a_i, b_i: H^0 = Z, H^1 = Z^{2g} with the symplectic cup
    pairing cup(a_i, b_j) = delta_ij * orientation, H^2 = Z, and nothing
    above degree two.  The genus-zero sphere keeps two formal generators
    u, v whose product represents the orientation while H^1 = 0.
    """
    if genus < 0:
        raise ValueError("genus must be >= 0")
    g = genus
    if g == 0:
        names = ("u", "v")
        dim = 2
        one_reps, one_reduce = [], []
    else:
        names = tuple(f"a{i+1}" for i in range(g)) + tuple(f"b{i+1}" for i in range(g))
        dim = 2 * g
        one_reps = [Cochain.basis(dim, (i,)) for i in range(dim)]
        one_reduce = [
            [Fraction(1 if i == j else 0) for j in range(dim)] for i in range(dim)
        ]

    degrees = []
    for k in range(dim + 1):
        basis = degree_tuples(dim, k)
        if k == 0:
            dd = DegreeData(0, basis, 1, [], [Cochain.basis(dim, ())], [],
                            [[Fraction(1)]], [])
        elif k == 1:
            dd = DegreeData(1, basis, len(one_reps), [], list(one_reps), [],
                            [list(r) for r in one_reduce], [])
        elif k == 2:
            # the symplectic contraction: only the coefficients on the
            # paired tuples (a_i, b_i) survive, and they all agree in H^2
            row = [Fraction(0)] * len(basis)
            pos = {t: i for i, t in enumerate(basis)}
            if g == 0:
                row[pos[(0, 1)]] = Fraction(1)
                rep = Cochain.basis(dim, (0, 1))
            else:
                for i in range(g):
                    row[pos[(i, g + i)]] = Fraction(1)
                rep = Cochain.basis(dim, (0, g))
            dd = DegreeData(2, basis, 1, [], [rep], [], [row], [])
        else:
            dd = DegreeData(k, basis, 0, [], [], [], [], [])
        degrees.append(dd)

    groups = GradedCohomology(dim, names, degrees, matrices=None)
    return CohomologyRing(groups, top_degree=2, preset=("surface", g))


def ring_from_preset(preset_id, **params) -> CohomologyRing:
    """Presets: nilmanifold(presentation=...), thurston(r=...), torus(m=...),
    surface(g=...)."""
    if preset_id == "nilmanifold":
        return nilmanifold_ring(params["presentation"])
    if preset_id == "thurston":
        return nilmanifold_ring(heisenberg_times_line(params.get("r", 1)))
    if preset_id == "torus":
        return torus_ring(params["m"])
    if preset_id == "surface":
        return surface_ring(params["g"])
    raise ValueError(f"unknown preset {preset_id!r}")


def coboundary(ring: CohomologyRing, c: Cochain) -> Cochain:
    """Differential of a cochain in the ring's complex (zero for direct
    presets); handy for wedging-coboundary well-definedness checks."""
    if ring.lie is None:
        return Cochain.zero(ring.cohomology.dim, c.degree + 1)
    return ce_differential(c, ring.lie)
