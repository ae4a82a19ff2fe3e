"""Deterministic verification suite over the structure identities.

Each check exercises one invariant of the structures/automorphism modules
and reports pass/fail with a serialized counterexample on failure.  All
randomness derives from (config.seed, check name, cell labels) through
SHA-256, so a report is byte-stable for a fixed config regardless of
execution order.

Exact checks run in rational polynomial arithmetic.  Composite-map
pullbacks (degree up to (d-1)^2 = 25) grow too large for dense random
vectors beyond two dimensions, so those checks draw support-bounded
vectors at higher m; the schedule lives in `_composite_cells`.  Flow
checks run in floats against pinned tolerances, batched through numpy.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from ._version import __version__
from .ratpoly import PolyMap, Polynomial
from .symplectic import (
    LinearMap,
    SymplecticSpace,
    derive_rng,
    is_symplectic,
    map_vector_to_vector,
    matrix_to_text,
    omega,
    random_rational,
    random_symplectic,
    random_vector,
    stabilizer_sample,
    vector_to_text,
)
from .structures import (
    LiouvilleStructure,
    compile_float_map,
    exterior_derivative,
    flow_closed_form_batch,
    flow_numeric_batch,
    liouville_field,
    monomial,
    omega_two_form,
    potential_form,
    pullback_one_form,
)
from .autgroup import (
    SignObstructionError,
    decompose,
    is_exact_pullback_equal,
    make_automorphism,
    make_isomorphism,
    structure_case,
    translation_map,
    conjugating_map,
)

__all__ = ["VerifyConfig", "CheckResult", "CHECKS", "run_verification_suite", "report_to_json"]

# Tolerances pinned by the acceptance contract (not configurable).
GROUP_LAW_TOL = 1e-9
CANONICAL_FLOW_TOL = 1e-10
GENERATOR_STEP = 1e-6
GENERATOR_TOL = 1e-5
JACOBIAN_STEP = 1e-6
SCALING_TIMES = (-1.0, 0.5, 1.0)

_SP_FACTORS = 8  # transvections per sampled symplectic map


@dataclass
class VerifyConfig:
    """Suite configuration; defaults match the standard CLI run."""

    m_list: tuple = (1, 2)
    degrees: tuple = (0, 1, 2, 3, 4, 5, 6)
    signs: tuple = (1, -1)
    trials: int = 50
    seed: int = 42
    float_tol_flow: float = 1e-8
    float_tol_scaling: float = 1e-5
    rk4_steps: int = 2000
    inject_fault: bool = False

    def __post_init__(self):
        self.m_list = tuple(self.m_list)
        self.degrees = tuple(self.degrees)
        self.signs = tuple(self.signs)

    def validate(self) -> None:
        if not self.m_list or any(not isinstance(m, int) or m < 1 for m in self.m_list):
            raise ValueError("m_list must be nonempty positive integers")
        if not self.degrees or any(not isinstance(d, int) or d < 0 for d in self.degrees):
            raise ValueError("degrees must be nonempty non-negative integers")
        if not self.signs or any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be a nonempty subset of {+1, -1}")
        if not isinstance(self.trials, int) or self.trials < 1:
            raise ValueError("trials must be a positive integer")
        if not (self.float_tol_flow > 0 and self.float_tol_scaling > 0):
            raise ValueError("tolerances must be positive")
        if not isinstance(self.rk4_steps, int) or self.rk4_steps < 1:
            raise ValueError("rk4_steps must be a positive integer")

    def to_json(self) -> dict:
        return {
            "m_list": list(self.m_list),
            "degrees": list(self.degrees),
            "signs": list(self.signs),
            "trials": self.trials,
            "seed": self.seed,
            "float_tol_flow": self.float_tol_flow,
            "float_tol_scaling": self.float_tol_scaling,
            "rk4_steps": self.rk4_steps,
            "inject_fault": self.inject_fault,
        }


@dataclass
class CheckResult:
    name: str
    parameters: dict
    status: str  # pass | fail | error
    witness: dict | None = None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "parameters": self.parameters,
            "status": self.status,
            "witness": self.witness,
        }


def _passed(name: str, parameters: dict) -> CheckResult:
    return CheckResult(name=name, parameters=parameters, status="pass")


def _failed(name: str, parameters: dict, witness: dict) -> CheckResult:
    return CheckResult(name=name, parameters=parameters, status="fail", witness=witness)


# -- sampling schedule --------------------------------------------------------


def _support_cap(m: int, degree: int) -> int | None:
    """Support bound for random vectors in composite-pullback checks.

    Dense vectors are fine in two dimensions; beyond that the composite
    pullback polynomials (degree up to (d-1)^2) force a small support.
    """
    if m == 1 or degree <= 2:
        return None
    return 3 if degree == 3 else 2


def _composite_cells(config: VerifyConfig) -> list:
    """(m, degree) cells for checks that pull back through degree-(d-1)^2 maps.

    Every configured degree runs at m = 1; higher m joins where exact
    arithmetic stays affordable (all m at d = 3, m <= 2 at d = 4).
    """
    cells = []
    for degree in config.degrees:
        if degree < 3:
            continue
        for m in config.m_list:
            if m == 1 or degree == 3 or (degree == 4 and m <= 2):
                cells.append((m, degree))
    return cells


def _wide_higher_cells(config: VerifyConfig) -> list:
    """All (m, degree >= 3) cells; usable when no dense sampled map is involved."""
    return [(m, d) for d in config.degrees if d >= 3 for m in config.m_list]


def _sub_seed(rng) -> int:
    return rng.getrandbits(63)


def _flow_vector(space: SymplecticSpace, rng, degree: int) -> tuple:
    """Small defining vector for float flow checks.

    Kept below 1 in magnitude (below 1/2 for degree >= 5) so trajectories on
    the test box stay tame enough for the pinned RK4 tolerance.
    """
    denominators = (2, 3) if degree >= 5 else (1, 2, 3)
    while True:
        entries = tuple(
            Fraction(rng.randint(-1, 1), rng.choice(denominators)) for _ in range(space.dim)
        )
        if any(entries):
            return entries


def _float_points(rng, count: int, dim: int, bound: float = 2.0) -> np.ndarray:
    return np.array([[rng.uniform(-bound, bound) for _ in range(dim)] for _ in range(count)])


def _fault_target(config: VerifyConfig) -> str | None:
    """Which check absorbs the deliberate fault (a perturbed map coefficient)."""
    if not config.inject_fault:
        return None
    if any(d >= 3 for d in config.degrees):
        return "conjugation_f_map"
    return "conjugation_translation"


def _perturb_first_component(mapping: PolyMap) -> PolyMap:
    bumped = mapping.components[0] + 1
    return PolyMap((bumped,) + mapping.components[1:])


# -- exact form checks --------------------------------------------------------


def _check_exact_potential_two_form(config: VerifyConfig) -> CheckResult:
    name = "exact_potential_two_form"
    params = {
        "m_list": list(config.m_list),
        "degrees": list(config.degrees),
        "signs": list(config.signs),
        "trials_per_cell": config.trials,
    }
    for m in config.m_list:
        space = SymplecticSpace(m)
        expected = omega_two_form(space)
        for degree in config.degrees:
            for sign in config.signs:
                rng = derive_rng(config.seed, name, m, degree, sign)
                for trial in range(config.trials):
                    a = random_vector(space, rng)
                    structure = LiouvilleStructure(space, a, degree, sign)
                    if exterior_derivative(potential_form(structure)) != expected:
                        return _failed(name, params, {
                            "m": m, "degree": degree, "sign": sign, "trial": trial,
                            "vector": vector_to_text(a),
                        })
    return _passed(name, params)


def _check_contraction_identity(config: VerifyConfig) -> CheckResult:
    name = "contraction_identity"
    params = {
        "m_list": list(config.m_list),
        "degrees": list(config.degrees),
        "signs": list(config.signs),
        "trials_per_cell": config.trials,
    }
    for m in config.m_list:
        space = SymplecticSpace(m)
        J = space.omega_matrix()
        for degree in config.degrees:
            for sign in config.signs:
                rng = derive_rng(config.seed, name, m, degree, sign)
                for trial in range(config.trials):
                    a = random_vector(space, rng)
                    structure = LiouvilleStructure(space, a, degree, sign)
                    theta = potential_form(structure)
                    zeta = liouville_field(structure).components.components
                    # omega(zeta(z), v) = theta_z(v) iff coefficientwise
                    # theta_i = sum_j J[j][i] zeta_j
                    for i in range(space.dim):
                        contracted = Polynomial.zero(space.dim)
                        for j in range(space.dim):
                            if J[j][i]:
                                contracted = contracted + zeta[j] * J[j][i]
                        if contracted != theta.coefficients[i]:
                            return _failed(name, params, {
                                "m": m, "degree": degree, "sign": sign, "trial": trial,
                                "vector": vector_to_text(a), "slot": i,
                            })
    return _passed(name, params)


def _check_canonical_sp_invariance(config: VerifyConfig) -> CheckResult:
    name = "canonical_sp_invariance"
    params = {"m_list": list(config.m_list), "trials_per_m": config.trials}
    for m in config.m_list:
        space = SymplecticSpace(m)
        theta0 = potential_form(LiouvilleStructure.canonical(space))
        rng = derive_rng(config.seed, name, m)
        for trial in range(config.trials):
            gamma = random_symplectic(space, _sub_seed(rng), _SP_FACTORS)
            if pullback_one_form(gamma.to_poly_map(), theta0) != theta0:
                return _failed(name, params, {
                    "m": m, "trial": trial, "gamma": matrix_to_text(gamma),
                })
    return _passed(name, params)


def _check_conjugation_f_map(config: VerifyConfig) -> CheckResult:
    name = "conjugation_f_map"
    cells = _wide_higher_cells(config)
    params = {"cells": [list(c) for c in cells], "trials_per_cell": config.trials}
    if not cells:
        return _passed(name, params)
    fault_here = _fault_target(config) == name
    for m, degree in cells:
        space = SymplecticSpace(m)
        theta0 = potential_form(LiouvilleStructure.canonical(space))
        rng = derive_rng(config.seed, name, m, degree)
        for trial in range(config.trials):
            sign = config.signs[trial % len(config.signs)]
            a = random_vector(space, rng, max_support=_support_cap(m, degree))
            forward = conjugating_map(space, a, degree, sign)
            injected = fault_here and (m, degree) == cells[0] and trial == 0
            if injected:
                forward = _perturb_first_component(forward)
            structure = LiouvilleStructure(space, a, degree, sign)
            if pullback_one_form(forward, potential_form(structure)) != theta0:
                witness = {
                    "m": m, "degree": degree, "sign": sign, "trial": trial,
                    "vector": vector_to_text(a),
                }
                if injected:
                    witness["note"] = "deliberate fault injected into one map coefficient"
                return _failed(name, params, witness)
    return _passed(name, params)


def _check_conjugation_translation(config: VerifyConfig) -> CheckResult:
    name = "conjugation_translation"
    params = {"m_list": list(config.m_list), "trials_per_m": config.trials}
    fault_here = _fault_target(config) == name
    for m in config.m_list:
        space = SymplecticSpace(m)
        theta0 = potential_form(LiouvilleStructure.canonical(space))
        rng = derive_rng(config.seed, name, m)
        for trial in range(config.trials):
            sign = config.signs[trial % len(config.signs)]
            a = random_vector(space, rng)
            tau = translation_map(space, tuple(sign * x for x in a))
            injected = fault_here and m == config.m_list[0] and trial == 0
            if injected:
                tau = _perturb_first_component(tau)
            structure = LiouvilleStructure(space, a, 1, sign)
            if pullback_one_form(tau, theta0) != potential_form(structure):
                witness = {"m": m, "sign": sign, "trial": trial, "vector": vector_to_text(a)}
                if injected:
                    witness["note"] = "deliberate fault injected into one map coefficient"
                return _failed(name, params, witness)
    return _passed(name, params)


# -- automorphism checks ------------------------------------------------------


def _automorphism_cases(config: VerifyConfig) -> list:
    cases = []
    if 0 in config.degrees:
        cases.append("canonical")
    if 1 in config.degrees:
        cases.append("linear")
    if 2 in config.degrees:
        cases.append("quadratic")
    if _composite_cells(config):
        cases.append("higher")
    return cases


def _automorphism_samples(config: VerifyConfig, check_name: str, case: str):
    """Per-trial (structure, gamma, stabilizer_sign) samples for one case."""
    composite = _composite_cells(config)
    rng = derive_rng(config.seed, check_name, case)
    for trial in range(config.trials):
        sign = config.signs[trial % len(config.signs)]
        if case == "higher":
            m, degree = composite[trial % len(composite)]
        else:
            m = config.m_list[trial % len(config.m_list)]
        space = SymplecticSpace(m)
        stab_sign = None
        if case == "canonical":
            structure = LiouvilleStructure.canonical(space)
            gamma = random_symplectic(space, _sub_seed(rng), _SP_FACTORS)
        elif case == "linear":
            a = random_vector(space, rng, nonzero=True)
            structure = LiouvilleStructure(space, a, 1, sign)
            gamma = random_symplectic(space, _sub_seed(rng), _SP_FACTORS)
        elif case == "quadratic":
            a = random_vector(space, rng, nonzero=True)
            structure = LiouvilleStructure(space, a, 2, sign)
            stab_sign = 1 if trial % 2 == 0 else -1
            gamma = stabilizer_sample(space, a, _sub_seed(rng), stab_sign, 6)
        else:
            a = random_vector(space, rng, max_support=_support_cap(m, degree), nonzero=True)
            structure = LiouvilleStructure(space, a, degree, sign)
            gamma = random_symplectic(space, _sub_seed(rng), _SP_FACTORS)
        yield trial, structure, gamma, stab_sign


def _sample_witness(structure: LiouvilleStructure, gamma: LinearMap, trial: int) -> dict:
    return {
        "m": structure.space.m,
        "degree": structure.degree,
        "sign": structure.sign,
        "trial": trial,
        "vector": vector_to_text(structure.vector),
        "gamma": matrix_to_text(gamma),
    }


def _check_automorphism_soundness(config: VerifyConfig) -> CheckResult:
    name = "automorphism_soundness"
    cases = _automorphism_cases(config)
    params = {"cases": cases, "trials_per_case": config.trials,
              "composite_cells": [list(c) for c in _composite_cells(config)]}
    for case in cases:
        for trial, structure, gamma, _ in _automorphism_samples(config, name, case):
            mapping = make_automorphism(structure, gamma)
            if not is_exact_pullback_equal(mapping, structure, structure):
                return _failed(name, params, _sample_witness(structure, gamma, trial))
    return _passed(name, params)


def _check_decomposition_round_trip(config: VerifyConfig) -> CheckResult:
    name = "decomposition_round_trip"
    cases = _automorphism_cases(config)
    params = {"cases": cases, "trials_per_case": config.trials,
              "composite_cells": [list(c) for c in _composite_cells(config)]}
    for case in cases:
        for trial, structure, gamma, stab_sign in _automorphism_samples(config, name, case):
            result = decompose(structure, make_automorphism(structure, gamma))
            ok = result.gamma == gamma and result.case_tag == structure_case(structure)
            if ok and case == "quadratic":
                ok = result.lam == stab_sign
            if not ok:
                witness = _sample_witness(structure, gamma, trial)
                witness["recovered"] = matrix_to_text(result.gamma)
                return _failed(name, params, witness)
    return _passed(name, params)


def _check_automorphism_group_closure(config: VerifyConfig) -> CheckResult:
    name = "automorphism_group_closure"
    cases = _automorphism_cases(config)
    params = {"cases": cases, "trials_per_case": config.trials}
    for case in cases:
        first = _automorphism_samples(config, name + "/left", case)
        second = _automorphism_samples(config, name + "/right", case)
        for (trial, structure, gamma1, _), (_, _, gamma2, _) in zip(first, second):
            # both factors must act on the same structure
            g2 = make_automorphism(structure, gamma2)
            g1 = make_automorphism(structure, gamma1)
            composite = g1.compose(g2)
            if not is_exact_pullback_equal(composite, structure, structure):
                return _failed(name, params, _sample_witness(structure, gamma1, trial))
            recovered = decompose(structure, composite)
            if recovered.gamma != gamma1 @ gamma2:
                witness = _sample_witness(structure, gamma1, trial)
                witness["recovered"] = matrix_to_text(recovered.gamma)
                return _failed(name, params, witness)
    return _passed(name, params)


def _check_linear_fixed_point(config: VerifyConfig) -> CheckResult:
    name = "linear_fixed_point"
    params = {"m_list": list(config.m_list), "trials": config.trials}
    if 1 not in config.degrees:
        return _passed(name, params)
    for trial, structure, gamma, _ in _automorphism_samples(config, name, "linear"):
        mapping = make_automorphism(structure, gamma)
        fixed = tuple(-structure.sign * x for x in structure.vector)
        if mapping(fixed) != fixed:
            return _failed(name, params, _sample_witness(structure, gamma, trial))
    return _passed(name, params)


def _check_quadratic_axis_preservation(config: VerifyConfig) -> CheckResult:
    name = "quadratic_axis_preservation"
    params = {"m_list": list(config.m_list), "trials": config.trials}
    if 2 not in config.degrees:
        return _passed(name, params)
    for trial, structure, gamma, stab_sign in _automorphism_samples(config, name, "quadratic"):
        mapping = make_automorphism(structure, gamma)
        expected = tuple(stab_sign * x for x in structure.vector)
        if mapping(structure.vector) != expected:
            return _failed(name, params, _sample_witness(structure, gamma, trial))
    return _passed(name, params)


# -- falsification checks -----------------------------------------------------


def _check_falsification_translation(config: VerifyConfig) -> CheckResult:
    name = "falsification_translation"
    params = {"m_list": list(config.m_list), "trials": config.trials}
    for trial in range(config.trials):
        m = config.m_list[trial % len(config.m_list)]
        space = SymplecticSpace(m)
        rng = derive_rng(config.seed, name, m, trial)
        a = random_vector(space, rng, nonzero=True)
        canonical = LiouvilleStructure.canonical(space)
        if is_exact_pullback_equal(translation_map(space, a), canonical, canonical):
            return _failed(name, params, {"m": m, "trial": trial, "vector": vector_to_text(a)})
    return _passed(name, params)


def _check_falsification_quadratic_offaxis(config: VerifyConfig) -> CheckResult:
    name = "falsification_quadratic_offaxis"
    params = {"m_list": list(config.m_list), "trials": config.trials}
    if 2 not in config.degrees:
        return _passed(name, params)
    for trial in range(config.trials):
        m = config.m_list[trial % len(config.m_list)]
        sign = config.signs[trial % len(config.signs)]
        space = SymplecticSpace(m)
        rng = derive_rng(config.seed, name, m, trial)
        a = random_vector(space, rng, nonzero=True)
        structure = LiouvilleStructure(space, a, 2, sign)
        gamma = None
        for _ in range(50):
            candidate = random_symplectic(space, _sub_seed(rng), _SP_FACTORS)
            image = candidate(a)
            if image != a and image != tuple(-x for x in a):
                gamma = candidate
                break
        if gamma is None:
            continue  # all candidates stabilized the axis; vanishing probability
        if is_exact_pullback_equal(gamma.to_poly_map(), structure, structure):
            return _failed(name, params, {
                "m": m, "trial": trial, "vector": vector_to_text(a),
                "gamma": matrix_to_text(gamma),
            })
    return _passed(name, params)


def _check_quadratic_sign_obstruction(config: VerifyConfig) -> CheckResult:
    name = "quadratic_sign_obstruction"
    params = {"m_list": list(config.m_list), "trials": config.trials}
    if 2 not in config.degrees:
        return _passed(name, params)
    for trial in range(config.trials):
        m = config.m_list[trial % len(config.m_list)]
        space = SymplecticSpace(m)
        rng = derive_rng(config.seed, name, m, trial)
        a = random_vector(space, rng, nonzero=True)
        plus = LiouvilleStructure(space, a, 2, 1)
        minus = LiouvilleStructure(space, a, 2, -1)
        stab_sign = 1 if trial % 2 == 0 else -1
        gamma = stabilizer_sample(space, a, _sub_seed(rng), stab_sign, 6)
        if is_exact_pullback_equal(gamma.to_poly_map(), plus, minus):
            return _failed(name, params, {
                "m": m, "trial": trial, "vector": vector_to_text(a),
                "gamma": matrix_to_text(gamma),
            })
        try:
            make_isomorphism(plus, minus, gamma)
        except SignObstructionError:
            pass
        else:
            return _failed(name, params, {
                "m": m, "trial": trial, "vector": vector_to_text(a),
                "note": "constructor accepted an opposite-sign quadratic pair",
            })
    return _passed(name, params)


def _check_falsification_higher_conjugate(config: VerifyConfig) -> CheckResult:
    name = "falsification_higher_conjugate"
    cells = _composite_cells(config)
    params = {"cells": [list(c) for c in cells], "trials": config.trials,
              "witnesses_per_trial": 3}
    if not cells:
        return _passed(name, params)
    for trial in range(config.trials):
        m, degree = cells[trial % len(cells)]
        sign = config.signs[trial % len(config.signs)]
        space = SymplecticSpace(m)
        rng = derive_rng(config.seed, name, m, degree, trial)
        cap = _support_cap(m, degree)
        a = random_vector(space, rng, max_support=cap, nonzero=True)
        structure_a = LiouvilleStructure(space, a, degree, sign)
        form_a = potential_form(structure_a)
        while True:
            b = random_vector(space, rng, max_support=cap, nonzero=True)
            structure_b = LiouvilleStructure(space, b, degree, sign)
            if potential_form(structure_b) != form_a:
                break
        # wrong-structure conjugates may coincidentally preserve the potential
        # for special triples, so demand only one failing witness per trial
        found_failure = False
        for _ in range(3):
            gamma = random_symplectic(space, _sub_seed(rng), _SP_FACTORS)
            wrong = make_automorphism(structure_b, gamma)
            if not is_exact_pullback_equal(wrong, structure_a, structure_a):
                found_failure = True
                break
        if not found_failure:
            return _failed(name, params, {
                "m": m, "degree": degree, "sign": sign, "trial": trial,
                "vector_a": vector_to_text(a), "vector_b": vector_to_text(b),
            })
    return _passed(name, params)


# -- isomorphism catalogue ------------------------------------------------------


def _check_isomorphism_catalogue_linear(config: VerifyConfig) -> CheckResult:
    name = "isomorphism_catalogue_linear"
    params = {"m_list": list(config.m_list), "trials": config.trials}
    if 1 not in config.degrees:
        return _passed(name, params)
    for trial in range(config.trials):
        m = config.m_list[trial % len(config.m_list)]
        sign = config.signs[trial % len(config.signs)]
        space = SymplecticSpace(m)
        rng = derive_rng(config.seed, name, m, trial)
        a = random_vector(space, rng)
        b = random_vector(space, rng)
        source = LiouvilleStructure(space, a, 1, sign)
        target = LiouvilleStructure(space, b, 1, sign)
        gamma = random_symplectic(space, _sub_seed(rng), _SP_FACTORS)
        if not is_exact_pullback_equal(make_isomorphism(source, target, gamma), source, target):
            return _failed(name, params, {
                "m": m, "sign": sign, "trial": trial,
                "vector_a": vector_to_text(a), "vector_b": vector_to_text(b),
                "gamma": matrix_to_text(gamma),
            })
        identity = LinearMap.identity(space.dim)
        distinguished = make_isomorphism(source, target, identity)
        shift = tuple(sign * (x - y) for x, y in zip(a, b))
        if distinguished != translation_map(space, shift):
            return _failed(name, params, {
                "m": m, "sign": sign, "trial": trial,
                "note": "distinguished linear isomorphism is not the expected translation",
            })
        canonical_as_linear = LiouvilleStructure(space, space.zero_vector(), 1, sign)
        tau = translation_map(space, tuple(sign * x for x in a))
        if not is_exact_pullback_equal(tau, source, canonical_as_linear):
            return _failed(name, params, {
                "m": m, "sign": sign, "trial": trial,
                "note": "translation by the defining vector is not an isomorphism to canonical",
            })
    return _passed(name, params)


def _check_isomorphism_catalogue_quadratic(config: VerifyConfig) -> CheckResult:
    name = "isomorphism_catalogue_quadratic"
    params = {"m_list": list(config.m_list), "trials": config.trials}
    if 2 not in config.degrees:
        return _passed(name, params)
    for trial in range(config.trials):
        m = config.m_list[trial % len(config.m_list)]
        sign = config.signs[trial % len(config.signs)]
        space = SymplecticSpace(m)
        rng = derive_rng(config.seed, name, m, trial)
        a = random_vector(space, rng, nonzero=True)
        b = random_vector(space, rng, nonzero=True)
        source = LiouvilleStructure(space, a, 2, sign)
        target = LiouvilleStructure(space, b, 2, sign)
        for witness_target in (b, tuple(-x for x in b)):
            gamma = map_vector_to_vector(space, a, witness_target)
            mapping = make_isomorphism(source, target, gamma)
            if not is_exact_pullback_equal(mapping, source, target):
                return _failed(name, params, {
                    "m": m, "sign": sign, "trial": trial,
                    "vector_a": vector_to_text(a), "vector_b": vector_to_text(b),
                    "gamma": matrix_to_text(gamma),
                })
    return _passed(name, params)


def _check_isomorphism_catalogue_higher(config: VerifyConfig) -> CheckResult:
    name = "isomorphism_catalogue_higher"
    wide = _wide_higher_cells(config)
    narrow = _composite_cells(config)
    params = {"distinguished_cells": [list(c) for c in wide],
              "sampled_cells": [list(c) for c in narrow], "trials": config.trials}
    if not wide:
        return _passed(name, params)
    for trial in range(config.trials):
        m, degree = wide[trial % len(wide)]
        sign = config.signs[trial % len(config.signs)]
        space = SymplecticSpace(m)
        rng = derive_rng(config.seed, name, m, degree, trial)
        cap = 2 if m > 1 else None
        a = random_vector(space, rng, max_support=cap, nonzero=True)
        b = random_vector(space, rng, max_support=cap, nonzero=True)
        source = LiouvilleStructure(space, a, degree, sign)
        target = LiouvilleStructure(space, b, degree, sign)
        identity = LinearMap.identity(space.dim)
        distinguished = make_isomorphism(source, target, identity)
        if not is_exact_pullback_equal(distinguished, source, target):
            return _failed(name, params, {
                "m": m, "degree": degree, "sign": sign, "trial": trial,
                "vector_a": vector_to_text(a), "vector_b": vector_to_text(b),
                "note": "distinguished higher isomorphism failed",
            })
    for trial in range(config.trials):
        if not narrow:
            break
        m, degree = narrow[trial % len(narrow)]
        sign = config.signs[trial % len(config.signs)]
        space = SymplecticSpace(m)
        rng = derive_rng(config.seed, name + "/sampled", m, degree, trial)
        cap = _support_cap(m, degree)
        a = random_vector(space, rng, max_support=cap, nonzero=True)
        b = random_vector(space, rng, max_support=cap, nonzero=True)
        source = LiouvilleStructure(space, a, degree, sign)
        target = LiouvilleStructure(space, b, degree, sign)
        gamma = random_symplectic(space, _sub_seed(rng), _SP_FACTORS)
        mapping = make_isomorphism(source, target, gamma)
        if not is_exact_pullback_equal(mapping, source, target):
            return _failed(name, params, {
                "m": m, "degree": degree, "sign": sign, "trial": trial,
                "vector_a": vector_to_text(a), "vector_b": vector_to_text(b),
                "gamma": matrix_to_text(gamma),
            })
    return _passed(name, params)


# -- degeneracy and sign identities ---------------------------------------------


def _check_degeneracy_zero_vector(config: VerifyConfig) -> CheckResult:
    name = "degeneracy_zero_vector"
    params = {"m_list": list(config.m_list), "degrees": list(config.degrees),
              "signs": list(config.signs)}
    for m in config.m_list:
        space = SymplecticSpace(m)
        canonical = LiouvilleStructure.canonical(space)
        base_form = potential_form(canonical)
        base_field = liouville_field(canonical)
        rng = derive_rng(config.seed, name, m)
        z = [rng.uniform(-2.0, 2.0) for _ in range(space.dim)]
        t = rng.uniform(-1.0, 1.0)
        base_flow = flow_closed_form_batch(canonical, [t], [z])
        base_rk4 = flow_numeric_batch(canonical, [t], [z], 50)
        gamma = random_symplectic(space, _sub_seed(rng), _SP_FACTORS)
        base_auto = make_automorphism(canonical, gamma)
        for degree in config.degrees:
            if degree == 0:
                continue
            for sign in config.signs:
                zeroed = LiouvilleStructure(space, space.zero_vector(), degree, sign)
                checks = {
                    "monomial": monomial(zeroed).is_zero(),
                    "potential": potential_form(zeroed) == base_form,
                    "field": liouville_field(zeroed) == base_field,
                    "flow": bool(np.array_equal(
                        flow_closed_form_batch(zeroed, [t], [z]), base_flow)),
                    "rk4": bool(np.array_equal(
                        flow_numeric_batch(zeroed, [t], [z], 50), base_rk4)),
                    "automorphism": make_automorphism(zeroed, gamma) == base_auto,
                    "case_tag": structure_case(zeroed) == "canonical",
                }
                for label, ok in checks.items():
                    if not ok:
                        return _failed(name, params, {
                            "m": m, "degree": degree, "sign": sign, "operation": label,
                        })
    return _passed(name, params)


def _check_monomial_sign_symmetry(config: VerifyConfig) -> CheckResult:
    name = "monomial_sign_symmetry"
    params = {"m_list": list(config.m_list), "degrees": list(config.degrees),
              "trials_per_m": config.trials}
    odd_degrees = [d for d in config.degrees if d % 2 == 1]
    for m in config.m_list:
        space = SymplecticSpace(m)
        rng = derive_rng(config.seed, name, m)
        for trial in range(config.trials):
            a = random_vector(space, rng, nonzero=True)
            neg = tuple(-x for x in a)
            if 2 in config.degrees:
                if monomial(LiouvilleStructure(space, a, 2, 1)) != monomial(
                    LiouvilleStructure(space, neg, 2, 1)
                ):
                    return _failed(name, params, {
                        "m": m, "trial": trial, "vector": vector_to_text(a),
                        "identity": "quadratic monomial must be even in the vector",
                    })
            for degree in odd_degrees:
                flipped = monomial(LiouvilleStructure(space, neg, degree, 1))
                negated = -monomial(LiouvilleStructure(space, a, degree, 1))
                if flipped != negated:
                    return _failed(name, params, {
                        "m": m, "degree": degree, "trial": trial,
                        "vector": vector_to_text(a),
                        "identity": "odd monomial must be odd in the vector",
                    })
                opposite = potential_form(LiouvilleStructure(space, a, degree, -1))
                renamed = potential_form(LiouvilleStructure(space, neg, degree, 1))
                if opposite != renamed:
                    return _failed(name, params, {
                        "m": m, "degree": degree, "trial": trial,
                        "vector": vector_to_text(a),
                        "identity": "odd-degree sign flip must equal vector negation",
                    })
    return _passed(name, params)


# -- flow checks ----------------------------------------------------------------


def _flow_cells(config: VerifyConfig) -> list:
    return [
        (m, degree, sign)
        for m in config.m_list
        for degree in config.degrees
        for sign in config.signs
    ]


def _flow_structure(space: SymplecticSpace, rng, degree: int, sign: int) -> LiouvilleStructure:
    if degree == 0:
        return LiouvilleStructure.canonical(space)
    return LiouvilleStructure(space, _flow_vector(space, rng, degree), degree, sign)


def _check_flow_closed_vs_rk4(config: VerifyConfig) -> CheckResult:
    name = "flow_closed_vs_rk4"
    params = {"cells": [list(c) for c in _flow_cells(config)],
              "trials_per_cell": config.trials, "rk4_steps": config.rk4_steps,
              "tolerance": config.float_tol_flow}
    batches = 4
    for m, degree, sign in _flow_cells(config):
        space = SymplecticSpace(m)
        rng = derive_rng(config.seed, name, m, degree, sign)
        per_batch = -(-config.trials // batches)  # ceil
        for batch in range(batches):
            structure = _flow_structure(space, rng, degree, sign)
            times = np.array([rng.uniform(-1.0, 1.0) for _ in range(per_batch)])
            points = _float_points(rng, per_batch, space.dim)
            closed = flow_closed_form_batch(structure, times, points)
            numeric = flow_numeric_batch(structure, times, points, config.rk4_steps)
            err = float(np.max(np.abs(closed - numeric)))
            if err > config.float_tol_flow:
                return _failed(name, params, {
                    "m": m, "degree": degree, "sign": sign, "batch": batch,
                    "vector": vector_to_text(structure.vector), "max_error": err,
                })
    return _passed(name, params)


def _check_flow_group_law(config: VerifyConfig) -> CheckResult:
    name = "flow_group_law"
    params = {"cells": [list(c) for c in _flow_cells(config)],
              "trials_per_cell": config.trials, "tolerance": GROUP_LAW_TOL}
    for m, degree, sign in _flow_cells(config):
        space = SymplecticSpace(m)
        rng = derive_rng(config.seed, name, m, degree, sign)
        structure = _flow_structure(space, rng, degree, sign)
        s_times = np.array([rng.uniform(-1.0, 1.0) for _ in range(config.trials)])
        t_times = np.array([rng.uniform(-1.0, 1.0) for _ in range(config.trials)])
        points = _float_points(rng, config.trials, space.dim)
        joint = flow_closed_form_batch(structure, s_times + t_times, points)
        staged = flow_closed_form_batch(
            structure, s_times, flow_closed_form_batch(structure, t_times, points)
        )
        err = float(np.max(np.abs(joint - staged)))
        if err > GROUP_LAW_TOL:
            return _failed(name, params, {
                "m": m, "degree": degree, "sign": sign,
                "vector": vector_to_text(structure.vector), "max_error": err,
            })
    return _passed(name, params)


def _check_flow_canonical_exponential(config: VerifyConfig) -> CheckResult:
    name = "flow_canonical_exponential"
    params = {"m_list": list(config.m_list), "trials_per_m": config.trials,
              "rk4_steps": config.rk4_steps, "tolerance": CANONICAL_FLOW_TOL}
    for m in config.m_list:
        space = SymplecticSpace(m)
        rng = derive_rng(config.seed, name, m)
        canonical = LiouvilleStructure.canonical(space)
        points = _float_points(rng, config.trials, space.dim)
        times = np.ones(config.trials)
        numeric = flow_numeric_batch(canonical, times, points, config.rk4_steps)
        exact = math.exp(0.5) * points
        err = float(np.max(np.abs(numeric - exact)))
        if err > CANONICAL_FLOW_TOL:
            return _failed(name, params, {"m": m, "max_error": err})
    return _passed(name, params)


def _check_flow_generator(config: VerifyConfig) -> CheckResult:
    name = "flow_generator"
    params = {"cells": [list(c) for c in _flow_cells(config)],
              "trials_per_cell": config.trials, "step": GENERATOR_STEP,
              "tolerance": GENERATOR_TOL}
    for m, degree, sign in _flow_cells(config):
        space = SymplecticSpace(m)
        rng = derive_rng(config.seed, name, m, degree, sign)
        structure = _flow_structure(space, rng, degree, sign)
        field_eval = compile_float_map(liouville_field(structure).components)
        points = _float_points(rng, config.trials, space.dim)
        times = np.full(config.trials, GENERATOR_STEP)
        moved = flow_closed_form_batch(structure, times, points)
        difference_quotient = (moved - points) / GENERATOR_STEP
        err = float(np.max(np.abs(difference_quotient - field_eval(points))))
        if err > GENERATOR_TOL:
            return _failed(name, params, {
                "m": m, "degree": degree, "sign": sign,
                "vector": vector_to_text(structure.vector), "max_error": err,
            })
    return _passed(name, params)


def _fd_jacobian(structure: LiouvilleStructure, t: float, points: np.ndarray) -> np.ndarray:
    """Central finite-difference Jacobian of the time-t flow at each point."""
    n_points, dim = points.shape
    h = JACOBIAN_STEP
    jac = np.empty((n_points, dim, dim))
    times = np.full(n_points, t)
    for j in range(dim):
        offset = np.zeros(dim)
        offset[j] = h
        plus = flow_closed_form_batch(structure, times, points + offset)
        minus = flow_closed_form_batch(structure, times, points - offset)
        jac[:, :, j] = (plus - minus) / (2.0 * h)
    return jac


def _check_flow_scaling_law(config: VerifyConfig) -> CheckResult:
    name = "flow_scaling_law"
    cells = [(m, d, s) for (m, d, s) in _flow_cells(config) if d <= 4]
    params = {"cells": [list(c) for c in cells], "times": list(SCALING_TIMES),
              "trials_per_cell": config.trials, "step": JACOBIAN_STEP,
              "tolerance": config.float_tol_scaling}
    for m, degree, sign in cells:
        space = SymplecticSpace(m)
        J_omega = np.array([[float(x) for x in row] for row in space.omega_matrix()])
        rng = derive_rng(config.seed, name, m, degree, sign)
        structure = _flow_structure(space, rng, degree, sign)
        points = _float_points(rng, config.trials, space.dim)
        for t in SCALING_TIMES:
            jac = _fd_jacobian(structure, t, points)
            pulled = np.einsum("nji,jk,nkl->nil", jac, J_omega, jac)
            err = float(np.max(np.abs(pulled - math.exp(t) * J_omega)))
            if err > config.float_tol_scaling:
                return _failed(name, params, {
                    "m": m, "degree": degree, "sign": sign, "time": t,
                    "vector": vector_to_text(structure.vector), "max_error": err,
                })
    return _passed(name, params)


# -- registry and runner --------------------------------------------------------


CHECKS: tuple = (
    ("exact_potential_two_form", _check_exact_potential_two_form),
    ("contraction_identity", _check_contraction_identity),
    ("canonical_sp_invariance", _check_canonical_sp_invariance),
    ("conjugation_f_map", _check_conjugation_f_map),
    ("conjugation_translation", _check_conjugation_translation),
    ("automorphism_soundness", _check_automorphism_soundness),
    ("decomposition_round_trip", _check_decomposition_round_trip),
    ("automorphism_group_closure", _check_automorphism_group_closure),
    ("linear_fixed_point", _check_linear_fixed_point),
    ("quadratic_axis_preservation", _check_quadratic_axis_preservation),
    ("falsification_translation", _check_falsification_translation),
    ("falsification_quadratic_offaxis", _check_falsification_quadratic_offaxis),
    ("quadratic_sign_obstruction", _check_quadratic_sign_obstruction),
    ("falsification_higher_conjugate", _check_falsification_higher_conjugate),
    ("isomorphism_catalogue_linear", _check_isomorphism_catalogue_linear),
    ("isomorphism_catalogue_quadratic", _check_isomorphism_catalogue_quadratic),
    ("isomorphism_catalogue_higher", _check_isomorphism_catalogue_higher),
    ("degeneracy_zero_vector", _check_degeneracy_zero_vector),
    ("monomial_sign_symmetry", _check_monomial_sign_symmetry),
    ("flow_closed_vs_rk4", _check_flow_closed_vs_rk4),
    ("flow_group_law", _check_flow_group_law),
    ("flow_canonical_exponential", _check_flow_canonical_exponential),
    ("flow_generator", _check_flow_generator),
    ("flow_scaling_law", _check_flow_scaling_law),
)


def run_check(name: str, config: VerifyConfig) -> CheckResult:
    """Run a single registered check by name."""
    for check_name, fn in CHECKS:
        if check_name == name:
            return fn(config)
    raise ValueError(f"unknown check: {name}")


def run_verification_suite(config: VerifyConfig) -> dict:
    """Run every registered check and assemble the deterministic report."""
    config.validate()
    results = []
    counts = {"pass": 0, "fail": 0, "error": 0}
    for name, fn in CHECKS:
        try:
            result = fn(config)
        except Exception as exc:  # a crashed check becomes an error row, not a crash
            result = CheckResult(
                name=name,
                parameters={},
                status="error",
                witness={"exception": f"{type(exc).__name__}: {exc}"},
            )
        counts[result.status] += 1
        results.append(result)
    return {
        "version": __version__,
        "config": config.to_json(),
        "checks": [r.to_json() for r in results],
        "summary": {**counts, "total": len(results)},
    }


def report_is_clean(report: dict) -> bool:
    return report["summary"]["fail"] == 0 and report["summary"]["error"] == 0


def report_to_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"
