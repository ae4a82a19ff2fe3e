"""Liouville structures on the standard symplectic vector space.

A structure is determined by a vector ``a``, a degree ``d >= 0`` and a
sign, through the scalar monomial

    psi(z) = sign * (1 / (2 d)) * Omega(a, z)**d        (zero when d = 0),

whose differential shifts the canonical potential.  Degree 0 or a = 0
both denote the canonical structure.  Everything the structure induces
is expressed through the shifted position

    W(z) = z + sign * Omega(a, z)**(d - 1) * a          (W = z when canonical):

    potential one-form:  theta_z(v) = (1/2) Omega(W(z), v)
    Liouville field:     zeta(z)    = (1/2) W(z)
    exterior derivative: d theta = Omega   (exactly, every degree and sign)

The sign only matters for even degree: for odd degree, flipping it is the
same as replacing ``a`` by ``-a``.

Flows are the one exception to exactness: the time factor exp(t/2) is
irrational, so the closed-form flow is evaluated in floats and is
cross-checked against a fixed-step RK4 integration of the polynomial
Liouville field.  Batched variants integrate many initial conditions at
once; the scalar functions are thin wrappers over them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .ratpoly import Polynomial, PolyMap, _as_rational
from .symplectic import SymplecticSpace, omega_linear_form

__all__ = [
    "LiouvilleStructure",
    "OneForm",
    "TwoForm",
    "VectorField",
    "monomial",
    "potential_form",
    "liouville_field",
    "omega_two_form",
    "exterior_derivative",
    "pullback_one_form",
    "flow_closed_form",
    "flow_numeric",
    "flow_closed_form_batch",
    "flow_numeric_batch",
    "compile_float_map",
]


@dataclass(frozen=True)
class LiouvilleStructure:
    """The data (a, degree, sign) defining a monomial Liouville structure."""

    space: SymplecticSpace
    vector: tuple
    degree: int
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "vector", self.space.coerce_vector(self.vector))
        if not isinstance(self.degree, int) or self.degree < 0:
            raise ValueError("degree must be a non-negative integer")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @classmethod
    def canonical(cls, space: SymplecticSpace) -> "LiouvilleStructure":
        return cls(space, space.zero_vector(), 0)

    @property
    def is_canonical(self) -> bool:
        return self.degree == 0 or not any(self.vector)


@dataclass(frozen=True)
class OneForm:
    """Polynomial one-form; coefficients[i] multiplies dz_i."""

    space: SymplecticSpace
    coefficients: tuple

    def __post_init__(self):
        if len(self.coefficients) != self.space.dim:
            raise ValueError("a one-form needs one coefficient per coordinate")


@dataclass(frozen=True)
class TwoForm:
    """Polynomial two-form; coefficients[i][j] is the value on (d/dz_i, d/dz_j)."""

    space: SymplecticSpace
    coefficients: tuple

    def __post_init__(self):
        n = self.space.dim
        if len(self.coefficients) != n or any(len(row) != n for row in self.coefficients):
            raise ValueError("a two-form needs a square coefficient matrix")
        for i in range(n):
            for j in range(i, n):
                if self.coefficients[i][j] != -self.coefficients[j][i]:
                    raise ValueError("two-form coefficients must be exactly antisymmetric")


@dataclass(frozen=True)
class VectorField:
    """Polynomial vector field, stored as the map z -> field components."""

    space: SymplecticSpace
    components: PolyMap

    def __post_init__(self):
        if (
            self.components.num_vars != self.space.dim
            or len(self.components.components) != self.space.dim
        ):
            raise ValueError("field components must form a self-map of the space")


def _shifted_position(structure: LiouvilleStructure) -> list:
    """The polynomial vector W(z) = z + sign * Omega(a, z)**(d-1) * a."""
    space = structure.space
    nv = space.dim
    coords = [Polynomial.variable(nv, j) for j in range(nv)]
    if structure.is_canonical:
        return coords
    scale = omega_linear_form(space, structure.vector) ** (structure.degree - 1)
    scale = scale * structure.sign
    return [coords[j] + scale * structure.vector[j] for j in range(nv)]


def monomial(structure: LiouvilleStructure) -> Polynomial:
    """The scalar monomial sign/(2d) * Omega(a, z)**d; zero for the canonical structure."""
    if structure.is_canonical:
        return Polynomial.zero(structure.space.dim)
    base = omega_linear_form(structure.space, structure.vector) ** structure.degree
    return base * Fraction(structure.sign, 2 * structure.degree)


def potential_form(structure: LiouvilleStructure) -> OneForm:
    """The potential theta_z(v) = (1/2) Omega(W(z), v) as a polynomial one-form."""
    space = structure.space
    J = space.omega_matrix()
    shifted = _shifted_position(structure)
    half = Fraction(1, 2)
    coefficients = []
    for i in range(space.dim):
        total = Polynomial.zero(space.dim)
        for j in range(space.dim):
            if J[j][i]:
                total = total + shifted[j] * (J[j][i] * half)
        coefficients.append(total)
    return OneForm(space, tuple(coefficients))


def liouville_field(structure: LiouvilleStructure) -> VectorField:
    """The field zeta(z) = (1/2) W(z); contracts with Omega to the potential."""
    half = Fraction(1, 2)
    components = [p * half for p in _shifted_position(structure)]
    return VectorField(structure.space, PolyMap(components))


def omega_two_form(space: SymplecticSpace) -> TwoForm:
    """The symplectic form as a constant-coefficient two-form."""
    J = space.omega_matrix()
    rows = tuple(
        tuple(Polynomial.constant(space.dim, J[i][j]) if J[i][j] else Polynomial.zero(space.dim)
              for j in range(space.dim))
        for i in range(space.dim)
    )
    return TwoForm(space, rows)


def exterior_derivative(form: OneForm) -> TwoForm:
    """d(sum f_i dz_i), with value df_j/dz_i - df_i/dz_j on the slot (i, j)."""
    n = form.space.dim
    f = form.coefficients
    rows = tuple(
        tuple(f[j].partial(i) - f[i].partial(j) for j in range(n)) for i in range(n)
    )
    return TwoForm(form.space, rows)


def pullback_one_form(mapping: PolyMap, form: OneForm) -> OneForm:
    """The exact pullback: (g* f)_i = sum_j f_j(g(z)) * dg_j/dz_i."""
    n = form.space.dim
    if mapping.num_vars != n or len(mapping.components) != n:
        raise ValueError("the map must be a self-map of the form's space")
    jac = mapping.jacobian()
    composed = [form.coefficients[j].substitute(mapping.components) for j in range(n)]
    coefficients = []
    for i in range(n):
        total = Polynomial.zero(n)
        for j in range(n):
            if jac[j][i].terms and composed[j].terms:
                total = total + composed[j] * jac[j][i]
        coefficients.append(total)
    return OneForm(form.space, tuple(coefficients))


# -- flows (float path) ------------------------------------------------------


def _float_vector(structure: LiouvilleStructure) -> np.ndarray:
    return np.array([float(x) for x in structure.vector])


def _omega_row_covector(structure: LiouvilleStructure) -> np.ndarray:
    """Float covector w with Omega(a, z) = w . z."""
    m = structure.space.m
    a = _float_vector(structure)
    w = np.empty(2 * m)
    w[m:] = a[:m]
    w[:m] = -a[m:]
    return w


def flow_closed_form_batch(
    structure: LiouvilleStructure, times: Sequence, points: Sequence
) -> np.ndarray:
    """Closed-form Liouville flow for a batch: times (N,), points (N, 2m)."""
    T = np.asarray(times, dtype=float)
    Z = np.asarray(points, dtype=float)
    if Z.ndim != 2 or Z.shape[1] != structure.space.dim or Z.shape[0] != T.shape[0]:
        raise ValueError("points must be (N, 2m) with one time per row")
    growth = np.exp(0.5 * T)[:, None]
    if structure.is_canonical:
        return growth * Z
    a = _float_vector(structure)
    eps = float(structure.sign)
    pairing = Z @ _omega_row_covector(structure)  # Omega(a, z) per row
    d = structure.degree
    if d == 1:
        return growth * (Z + eps * a) - eps * a
    if d == 2:
        return growth * (Z + (0.5 * eps * T * pairing)[:, None] * a)
    n = d - 2
    coeff = eps * pairing ** (n + 1) / n
    along = np.exp(0.5 * (n + 1) * T) * coeff
    return growth * (Z - coeff[:, None] * a) + along[:, None] * a


def flow_closed_form(structure: LiouvilleStructure, t: float, point: Sequence) -> tuple:
    """Closed-form flow of the Liouville field at time t, evaluated in floats."""
    z = [float(x) for x in point]
    if len(z) != structure.space.dim:
        raise ValueError("point dimension does not match the space")
    out = flow_closed_form_batch(structure, [float(t)], [z])
    return tuple(float(x) for x in out[0])


def compile_float_map(mapping: PolyMap):
    """Compile a polynomial map to a vectorized float evaluator (N, nv) -> (N, k)."""
    nv = mapping.num_vars
    parts = []
    for component in mapping.components:
        if component.terms:
            exps = np.array(list(component.terms.keys()), dtype=np.int64)
            coeffs = np.array([float(c) for c in component.terms.values()])
        else:
            exps = np.zeros((0, nv), dtype=np.int64)
            coeffs = np.zeros(0)
        parts.append((exps, coeffs))

    def evaluate(Z: np.ndarray) -> np.ndarray:
        cols = []
        for exps, coeffs in parts:
            if coeffs.size == 0:
                cols.append(np.zeros(Z.shape[0]))
            else:
                cols.append((Z[:, None, :] ** exps[None, :, :]).prod(axis=2) @ coeffs)
        return np.stack(cols, axis=1)

    return evaluate


def _rk4(field_eval, points: np.ndarray, times: np.ndarray, steps: int) -> np.ndarray:
    Z = points
    h = (times / steps)[:, None]
    for _ in range(steps):
        k1 = field_eval(Z)
        k2 = field_eval(Z + 0.5 * h * k1)
        k3 = field_eval(Z + 0.5 * h * k2)
        k4 = field_eval(Z + h * k3)
        Z = Z + (h / 6.0) * (k1 + 2.0 * (k2 + k3) + k4)
    return Z


def flow_numeric_batch(
    structure: LiouvilleStructure, times: Sequence, points: Sequence, steps: int
) -> np.ndarray:
    """Fixed-step RK4 integration of the polynomial Liouville field, batched."""
    if not isinstance(steps, int) or steps < 1:
        raise ValueError("steps must be a positive integer")
    T = np.asarray(times, dtype=float)
    Z = np.asarray(points, dtype=float)
    if Z.ndim != 2 or Z.shape[1] != structure.space.dim or Z.shape[0] != T.shape[0]:
        raise ValueError("points must be (N, 2m) with one time per row")
    field_eval = compile_float_map(liouville_field(structure).components)
    return _rk4(field_eval, Z, T, steps)


def flow_numeric(structure: LiouvilleStructure, t: float, point: Sequence, steps: int) -> tuple:
    """RK4 value of the flow at time t; the independent oracle for the closed form."""
    z = [float(x) for x in point]
    if len(z) != structure.space.dim:
        raise ValueError("point dimension does not match the space")
    out = flow_numeric_batch(structure, [float(t)], [z], steps)
    return tuple(float(x) for x in out[0])
