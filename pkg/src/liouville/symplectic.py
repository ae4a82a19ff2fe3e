"""The standard symplectic vector space (R^{2m}, Omega) over exact rationals.

Coordinates are ordered z = (p_1, ..., p_m, q_1, ..., q_m) and the form is

    Omega(x, y) = sum_i (x_{p_i} * y_{q_i} - x_{q_i} * y_{p_i}),

with matrix J satisfying J[i][m+i] = 1 and J[m+i][i] = -1.  The overall
sign is a convention; it is pinned here so that the canonical potential
(built in `structures`) differentiates exactly to this Omega, and the
test suite asserts that rather than assuming it.

Symplectic linear maps are sampled as products of transvections
z -> z + c * Omega(u, z) * u, which preserve Omega for every u and c and
generate the whole group over the rationals.  Every sampler re-checks its
output with `is_symplectic`, so a sampling bug cannot pass silently.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .ratpoly import Polynomial, PolyMap, _as_rational

__all__ = [
    "SymplecticSpace",
    "LinearMap",
    "omega",
    "omega_linear_form",
    "is_symplectic",
    "transvection",
    "random_rational",
    "random_vector",
    "random_symplectic",
    "map_vector_to_vector",
    "stabilizer_sample",
    "derive_rng",
    "vector_to_text",
    "matrix_to_text",
]

Vector = tuple  # 2m Fractions

# Sampler value bounds: numerators in [-9, 9], denominators in {1, 2, 3}.
# Small enough to keep degree-6 pullback coefficients manageable while still
# exercising non-integer arithmetic.
_NUMERATOR_BOUND = 9
_DENOMINATORS = (1, 2, 3)


@lru_cache(maxsize=None)
def _omega_rows(m: int) -> tuple:
    rows = [[Fraction(0)] * (2 * m) for _ in range(2 * m)]
    for i in range(m):
        rows[i][m + i] = Fraction(1)
        rows[m + i][i] = Fraction(-1)
    return tuple(tuple(row) for row in rows)


@dataclass(frozen=True)
class SymplecticSpace:
    """R^{2m} with the standard symplectic form in (p, q) coordinate order."""

    m: int

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError("the half-dimension m must be a positive integer")

    @property
    def dim(self) -> int:
        return 2 * self.m

    def omega_matrix(self) -> tuple:
        return _omega_rows(self.m)

    def zero_vector(self) -> Vector:
        return (Fraction(0),) * self.dim

    def basis_vector(self, index: int) -> Vector:
        if not 0 <= index < self.dim:
            raise ValueError(f"basis index {index} out of range for dimension {self.dim}")
        return tuple(Fraction(1 if i == index else 0) for i in range(self.dim))

    def coerce_vector(self, entries: Sequence) -> Vector:
        vector = tuple(_as_rational(x) for x in entries)
        if len(vector) != self.dim:
            raise ValueError(f"vector has {len(vector)} entries, space has dimension {self.dim}")
        return vector


class LinearMap:
    """A square rational matrix acting on column vectors."""

    __slots__ = ("matrix",)

    def __init__(self, rows: Sequence[Sequence]):
        matrix = tuple(tuple(_as_rational(x) for x in row) for row in rows)
        n = len(matrix)
        if n == 0 or any(len(row) != n for row in matrix):
            raise ValueError("a linear map needs a square, nonempty matrix")
        self.matrix = matrix

    @classmethod
    def identity(cls, dim: int) -> "LinearMap":
        return cls([[1 if i == j else 0 for j in range(dim)] for i in range(dim)])

    @classmethod
    def minus_identity(cls, dim: int) -> "LinearMap":
        return cls([[-1 if i == j else 0 for j in range(dim)] for i in range(dim)])

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.matrix)

    def __call__(self, vector: Sequence) -> Vector:
        v = tuple(_as_rational(x) for x in vector)
        if len(v) != self.dim:
            raise ValueError(f"vector has {len(v)} entries, map has dimension {self.dim}")
        return tuple(sum(row[j] * v[j] for j in range(self.dim)) for row in self.matrix)

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        if not isinstance(other, LinearMap):
            return NotImplemented
        if self.dim != other.dim:
            raise ValueError("cannot compose maps of different dimensions")
        n = self.dim
        cols = [other.column(j) for j in range(n)]
        return LinearMap(
            [[sum(self.matrix[i][k] * cols[j][k] for k in range(n)) for j in range(n)]
             for i in range(n)]
        )

    def transpose(self) -> "LinearMap":
        n = self.dim
        return LinearMap([[self.matrix[j][i] for j in range(n)] for i in range(n)])

    def to_poly_map(self) -> PolyMap:
        return PolyMap.affine(self.matrix)

    def __eq__(self, other) -> bool:
        if isinstance(other, LinearMap):
            return self.matrix == other.matrix
        return NotImplemented

    def __repr__(self) -> str:
        return f"LinearMap({[[str(x) for x in row] for row in self.matrix]})"


def omega(space: SymplecticSpace, x: Sequence, y: Sequence) -> Fraction:
    """Omega(x, y) = sum_i (x_{p_i} y_{q_i} - x_{q_i} y_{p_i}), exact."""
    a = space.coerce_vector(x)
    b = space.coerce_vector(y)
    m = space.m
    total = Fraction(0)
    for i in range(m):
        total += a[i] * b[m + i] - a[m + i] * b[i]
    return total


def omega_linear_form(space: SymplecticSpace, vector: Sequence) -> Polynomial:
    """Omega(vector, .) as a degree-1 polynomial in the coordinates."""
    v = space.coerce_vector(vector)
    nv = space.dim
    terms = {}
    m = space.m
    for i in range(m):
        if v[i]:
            terms[tuple(1 if k == m + i else 0 for k in range(nv))] = v[i]
        if v[m + i]:
            terms[tuple(1 if k == i else 0 for k in range(nv))] = -v[m + i]
    return Polynomial(nv, terms)


def is_symplectic(space: SymplecticSpace, candidate: LinearMap) -> bool:
    """True iff M^T J M = J exactly, i.e. Omega(M e_i, M e_j) = J_ij for all i, j."""
    if candidate.dim != space.dim:
        return False
    J = space.omega_matrix()
    cols = [candidate.column(j) for j in range(space.dim)]
    for i in range(space.dim):
        for j in range(i + 1, space.dim):
            if omega(space, cols[i], cols[j]) != J[i][j]:
                return False
    return True


def transvection(space: SymplecticSpace, direction: Sequence, coefficient) -> LinearMap:
    """The map z -> z + c * Omega(u, z) * u; symplectic for every u and c."""
    u = space.coerce_vector(direction)
    c = _as_rational(coefficient)
    n = space.dim
    # row covector of Omega(u, .): entry j is Omega(u, e_j)
    w = tuple(omega(space, u, space.basis_vector(j)) for j in range(n))
    rows = [
        [(Fraction(1) if i == j else Fraction(0)) + c * u[i] * w[j] for j in range(n)]
        for i in range(n)
    ]
    return LinearMap(rows)


def derive_rng(seed, *labels) -> random.Random:
    """Deterministic RNG stream keyed by a seed and labels.

    SHA-256 keeps the stream stable across platforms and Python versions;
    the salted builtin ``hash`` must never leak in here.
    """
    material = "|".join([str(seed), *map(str, labels)]).encode()
    digest = hashlib.sha256(material).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-_NUMERATOR_BOUND, _NUMERATOR_BOUND), rng.choice(_DENOMINATORS))


def random_vector(
    space: SymplecticSpace,
    rng: random.Random,
    max_support: int | None = None,
    nonzero: bool = False,
) -> Vector:
    """Random small-rational vector, optionally restricted to a random support.

    Bounding the support keeps high-degree pullback polynomials sparse enough
    for exact arithmetic in higher dimensions.
    """
    dim = space.dim
    if max_support is not None and max_support < dim:
        support = sorted(rng.sample(range(dim), max_support))
    else:
        support = list(range(dim))
    while True:
        entries = [Fraction(0)] * dim
        for i in support:
            entries[i] = random_rational(rng)
        vector = tuple(entries)
        if not nonzero or any(vector):
            return vector


def random_symplectic(space: SymplecticSpace, seed, count: int) -> LinearMap:
    """Product of ``count`` random transvections; exactly symplectic by construction."""
    if count < 0:
        raise ValueError("count must be non-negative")
    rng = derive_rng(seed, "sp", space.m, count)
    result = LinearMap.identity(space.dim)
    for _ in range(count):
        u = random_vector(space, rng)
        c = random_rational(rng)
        result = transvection(space, u, c) @ result
    assert is_symplectic(space, result)
    return result


def _route_candidates(space: SymplecticSpace) -> Iterator[Vector]:
    # Single basis vectors first, then pairwise sums: for any nonzero a, b some
    # candidate w has Omega(a, w) != 0 and Omega(w, b) != 0 (take e_i pairing
    # with a, e_j pairing with b; if neither single works, e_i + e_j does).
    dim = space.dim
    for i in range(dim):
        yield space.basis_vector(i)
    for i in range(dim):
        e_i = space.basis_vector(i)
        for j in range(i + 1, dim):
            e_j = space.basis_vector(j)
            yield tuple(x + y for x, y in zip(e_i, e_j))


def map_vector_to_vector(space: SymplecticSpace, start: Sequence, target: Sequence) -> LinearMap:
    """A symplectic map sending ``start`` to ``target`` (both nonzero), exactly.

    Uses one transvection when Omega(start, target) != 0 and otherwise routes
    through a deterministic intermediate vector with two transvections.
    """
    a = space.coerce_vector(start)
    b = space.coerce_vector(target)
    if not any(a) or not any(b):
        raise ValueError("transitivity holds on nonzero vectors only")
    if a == b:
        return LinearMap.identity(space.dim)

    def _send(src: Vector, dst: Vector) -> LinearMap:
        u = tuple(x - y for x, y in zip(dst, src))
        pairing = omega(space, u, src)
        result = transvection(space, u, 1 / pairing)
        return result

    if omega(space, a, b) != 0:
        gamma = _send(a, b)
    else:
        for w in _route_candidates(space):
            if omega(space, a, w) != 0 and omega(space, w, b) != 0:
                gamma = _send(w, b) @ _send(a, w)
                break
        else:  # unreachable: a route candidate always exists
            raise RuntimeError("no intermediate route vector found")
    assert gamma(a) == b and is_symplectic(space, gamma)
    return gamma


def stabilizer_sample(
    space: SymplecticSpace,
    fixed: Sequence,
    seed,
    sign: int,
    count: int = 6,
) -> LinearMap:
    """A random symplectic map sending ``fixed`` to ``sign * fixed`` exactly.

    Transvections whose direction u satisfies Omega(u, fixed) = 0 fix the
    vector; a trailing -identity realizes sign = -1.
    """
    a = space.coerce_vector(fixed)
    if not any(a):
        raise ValueError("the stabilized vector must be nonzero")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if count < 0:
        raise ValueError("count must be non-negative")
    rng = derive_rng(seed, "stab", space.m, sign, count)
    anchor = next(
        space.basis_vector(i) for i in range(space.dim)
        if omega(space, space.basis_vector(i), a) != 0
    )
    anchor_pairing = omega(space, anchor, a)
    result = LinearMap.identity(space.dim)
    for _ in range(count):
        u = random_vector(space, rng)
        correction = omega(space, u, a) / anchor_pairing
        u = tuple(x - correction * y for x, y in zip(u, anchor))
        result = transvection(space, u, random_rational(rng)) @ result
    if sign == -1:
        result = LinearMap.minus_identity(space.dim) @ result
    expected = tuple(sign * x for x in a)
    assert result(a) == expected and is_symplectic(space, result)
    return result


def vector_to_text(vector: Sequence) -> list:
    from .ratpoly import rational_to_text

    return [rational_to_text(_as_rational(x)) for x in vector]


def matrix_to_text(linear_map: LinearMap) -> list:
    from .ratpoly import rational_to_text

    return [[rational_to_text(x) for x in row] for row in linear_map.matrix]
