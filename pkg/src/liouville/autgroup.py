"""Automorphisms and isomorphisms of monomial Liouville structures.

The classification realized here, with d the structure degree:

    d = 0 (canonical)   every symplectic linear map, and nothing else
    d = 1               z -> gamma(z + a') - a' with gamma symplectic,
                        where a' = sign * a; every such map fixes -a'
    d = 2               symplectic gamma with gamma(a) = a or -a
    d >= 3              f gamma f^{-1}, with f the conjugating map
                        z -> z + (sign/n) * Omega(a, z)**(n+1) * a, n = d - 2

Constructors build the maps from a symplectic witness gamma;
`decompose` inverts them, recovering the witness from a map that passes
the exact pullback test.  A map passing that test whose extracted
witness is not linear-symplectic would contradict the classification,
so `decompose` raises `InternalConsistencyError` rather than guessing.

Isomorphisms follow the same pattern between two structures of equal
degree and sign.  Opposite-sign quadratic structures admit none: a
witness would have to satisfy lambda**2 = -1 over the reals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .ratpoly import Polynomial, PolyMap, rational_to_text
from .symplectic import (
    LinearMap,
    SymplecticSpace,
    is_symplectic,
    matrix_to_text,
    omega_linear_form,
)
from .structures import LiouvilleStructure, potential_form, pullback_one_form

__all__ = [
    "NotAnAutomorphismError",
    "UnsupportedPairError",
    "SignObstructionError",
    "InternalConsistencyError",
    "DecompositionResult",
    "structure_case",
    "translation_map",
    "conjugating_map",
    "conjugating_map_inverse",
    "make_automorphism",
    "make_isomorphism",
    "is_exact_pullback_equal",
    "decompose",
    "decomposition_to_json",
]


class NotAnAutomorphismError(ValueError):
    """The map fails the exact pullback test it was claimed to satisfy."""


class UnsupportedPairError(ValueError):
    """The structure pair is outside the certified catalogue (e.g. cross-degree)."""


class SignObstructionError(UnsupportedPairError):
    """Opposite-sign quadratic pair: a witness would need lambda**2 = -1."""


class InternalConsistencyError(RuntimeError):
    """An extracted witness violates the classification; abort loudly."""


@dataclass(frozen=True)
class DecompositionResult:
    """The symplectic witness extracted from an automorphism."""

    gamma: LinearMap
    case_tag: str  # canonical | linear | quadratic | higher
    lam: Fraction | None = None  # quadratic case only: gamma(a) = lam * a


def structure_case(structure: LiouvilleStructure) -> str:
    if structure.is_canonical:
        return "canonical"
    if structure.degree == 1:
        return "linear"
    if structure.degree == 2:
        return "quadratic"
    return "higher"


def translation_map(space: SymplecticSpace, offset: Sequence) -> PolyMap:
    """The affine map z -> z + offset."""
    shift = space.coerce_vector(offset)
    nv = space.dim
    return PolyMap([Polynomial.variable(nv, i) + shift[i] for i in range(nv)])


def conjugating_map(space: SymplecticSpace, vector: Sequence, degree: int, sign: int = 1) -> PolyMap:
    """z -> z + (sign/n) * Omega(a, z)**(n+1) * a with n = degree - 2; degree >= 3 only.

    Pulls the degree-d potential of (a, sign) back to the canonical one.
    """
    return _bump_map(space, vector, degree, sign, inverse=False)


def conjugating_map_inverse(
    space: SymplecticSpace, vector: Sequence, degree: int, sign: int = 1
) -> PolyMap:
    """Exact two-sided inverse of `conjugating_map`: the same map with the bump negated.

    Inversion works because Omega(a, f(z)) = Omega(a, z): the bump is along a
    and Omega(a, a) = 0.
    """
    return _bump_map(space, vector, degree, sign, inverse=True)


def _bump_map(
    space: SymplecticSpace, vector: Sequence, degree: int, sign: int, inverse: bool
) -> PolyMap:
    if degree < 3:
        raise ValueError("the conjugating map exists for degree >= 3 structures only")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    a = space.coerce_vector(vector)
    n = degree - 2
    scale = Fraction(-sign if inverse else sign, n)
    bump = omega_linear_form(space, a) ** (n + 1) * scale
    nv = space.dim
    return PolyMap([Polynomial.variable(nv, k) + bump * a[k] for k in range(nv)])


def _require_symplectic(space: SymplecticSpace, gamma: LinearMap) -> None:
    if not is_symplectic(space, gamma):
        raise ValueError("gamma must preserve Omega exactly (symplectic witness required)")


def _negate(vector: tuple) -> tuple:
    return tuple(-x for x in vector)


def _scaled(vector: tuple, scalar) -> tuple:
    return tuple(scalar * x for x in vector)


def make_automorphism(structure: LiouvilleStructure, gamma: LinearMap) -> PolyMap:
    """The automorphism of the structure built from the symplectic witness gamma."""
    space = structure.space
    _require_symplectic(space, gamma)
    case = structure_case(structure)
    if case in ("canonical", "quadratic"):
        if case == "quadratic":
            image = gamma(structure.vector)
            if image != structure.vector and image != _negate(structure.vector):
                raise ValueError(
                    "a quadratic-structure automorphism must send the defining vector "
                    "to itself or its negative"
                )
        return gamma.to_poly_map()
    if case == "linear":
        base = _scaled(structure.vector, structure.sign)
        offset = tuple(x - y for x, y in zip(gamma(base), base))
        return PolyMap.affine(gamma.matrix, offset)
    forward = conjugating_map(space, structure.vector, structure.degree, structure.sign)
    backward = conjugating_map_inverse(space, structure.vector, structure.degree, structure.sign)
    return forward.compose(gamma.to_poly_map().compose(backward))


def make_isomorphism(
    source: LiouvilleStructure, target: LiouvilleStructure, gamma: LinearMap
) -> PolyMap:
    """A map pulling the target potential back to the source potential, exactly."""
    if source.space != target.space:
        raise ValueError("isomorphisms require structures on the same space")
    if source.degree != target.degree:
        raise UnsupportedPairError(
            "isomorphisms are certified between equal-degree structures only"
        )
    space = source.space
    _require_symplectic(space, gamma)
    if not source.is_canonical and not target.is_canonical and source.sign != target.sign:
        if source.degree == 2:
            raise SignObstructionError(
                "opposite-sign quadratic structures are not isomorphic: a witness "
                "would satisfy lambda**2 = -1, which has no real solution"
            )
        raise UnsupportedPairError(
            "opposite-sign structures are not paired directly; negate the defining "
            "vector instead (the monomial is odd in it)"
        )
    degree = source.degree
    if degree == 0 or (source.is_canonical and target.is_canonical):
        return gamma.to_poly_map()
    if degree == 1:
        base_src = _scaled(source.vector, source.sign)
        base_dst = _scaled(target.vector, target.sign)
        offset = tuple(x - y for x, y in zip(gamma(base_src), base_dst))
        return PolyMap.affine(gamma.matrix, offset)
    if degree == 2:
        image = gamma(source.vector)
        if image != target.vector and image != _negate(target.vector):
            raise ValueError(
                "a quadratic-structure isomorphism must send the source vector to "
                "the target vector or its negative"
            )
        return gamma.to_poly_map()
    forward = conjugating_map(space, target.vector, target.degree, target.sign)
    backward = conjugating_map_inverse(space, source.vector, source.degree, source.sign)
    return forward.compose(gamma.to_poly_map().compose(backward))


def is_exact_pullback_equal(
    mapping: PolyMap, source: LiouvilleStructure, target: LiouvilleStructure
) -> bool:
    """True iff the pullback of the target potential equals the source potential."""
    if source.space != target.space:
        raise ValueError("structures must live on the same space")
    return pullback_one_form(mapping, potential_form(target)) == potential_form(source)


def _linear_part(mapping: PolyMap, space: SymplecticSpace) -> LinearMap | None:
    """Matrix of a degree-<=1, zero-constant-term map; None when it is not one."""
    nv = space.dim
    if mapping.num_vars != nv or len(mapping.components) != nv:
        return None
    units = [tuple(1 if k == j else 0 for k in range(nv)) for j in range(nv)]
    rows = []
    for component in mapping.components:
        if component.degree() > 1 or component.constant_term():
            return None
        rows.append([component.coefficient(unit) for unit in units])
    return LinearMap(rows)


def decompose(structure: LiouvilleStructure, mapping: PolyMap) -> DecompositionResult:
    """Recover the symplectic witness gamma from an automorphism of the structure."""
    if not is_exact_pullback_equal(mapping, structure, structure):
        raise NotAnAutomorphismError(
            "the map does not pull the structure's potential back to itself"
        )
    space = structure.space
    case = structure_case(structure)
    if case in ("canonical", "quadratic"):
        candidate = mapping
    elif case == "linear":
        base = _scaled(structure.vector, structure.sign)
        candidate = translation_map(space, base).compose(
            mapping.compose(translation_map(space, _negate(base)))
        )
    else:
        forward = conjugating_map(space, structure.vector, structure.degree, structure.sign)
        backward = conjugating_map_inverse(
            space, structure.vector, structure.degree, structure.sign
        )
        candidate = backward.compose(mapping.compose(forward))

    gamma = _linear_part(candidate, space)
    if gamma is None:
        raise InternalConsistencyError(
            "extracted witness is not linear with zero constant term; this "
            "contradicts the classification of these automorphisms"
        )
    if not is_symplectic(space, gamma):
        raise InternalConsistencyError(
            "extracted witness is linear but not symplectic; this contradicts "
            "the classification of these automorphisms"
        )
    lam = None
    if case == "quadratic":
        a = structure.vector
        image = gamma(a)
        pivot = next(i for i, x in enumerate(a) if x)
        lam = image[pivot] / a[pivot]
        if image != _scaled(a, lam) or lam not in (1, -1):
            raise InternalConsistencyError(
                "quadratic witness does not scale the defining vector by +1 or -1"
            )
    return DecompositionResult(gamma=gamma, case_tag=case, lam=lam)


def decomposition_to_json(result: DecompositionResult) -> dict:
    return {
        "case_tag": result.case_tag,
        "gamma": matrix_to_text(result.gamma),
        "lambda": rational_to_text(result.lam) if result.lam is not None else None,
    }
