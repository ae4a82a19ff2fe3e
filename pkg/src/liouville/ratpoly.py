"""Exact sparse multivariate polynomial algebra over the rationals.

Scalars are `fractions.Fraction` values, which already enforce the
canonical form needed here: reduced fraction, positive denominator,
arbitrary-precision integers.  A polynomial stores its terms as a map
from dense exponent tuples to nonzero coefficients, so two polynomials
are equal exactly when their term maps are equal.  All operations are
pure and no instance is mutated after construction.

Serialized text lists terms in descending graded-lexicographic order,
so equal polynomials always print identically.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

__all__ = ["Rational", "Polynomial", "PolyMap", "rational_to_text"]

# The scalar field: exact rationals from the standard library.
Rational = Fraction


def _as_rational(value) -> Fraction:
    """Coerce ints to Fraction; reject floats, whose use would silently lose exactness."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


def rational_to_text(value: Fraction) -> str:
    """``num/den``, with the denominator omitted when it is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _graded_lex_key(exponents: tuple) -> tuple:
    return (sum(exponents), exponents)


class Polynomial:
    """A polynomial in ``num_vars`` variables with Fraction coefficients.

    ``terms`` maps exponent tuples (dense, length ``num_vars``) to nonzero
    coefficients.  The zero polynomial has an empty term map and, by
    convention, degree -1.
    """

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Mapping[tuple, Fraction] | None = None):
        if not isinstance(num_vars, int) or num_vars < 1:
            raise ValueError("num_vars must be a positive integer")
        clean: dict[tuple, Fraction] = {}
        for exponents, coefficient in (terms or {}).items():
            exponents = tuple(exponents)
            if len(exponents) != num_vars:
                raise ValueError(
                    f"exponent tuple {exponents} does not have {num_vars} entries"
                )
            if any(not isinstance(e, int) or e < 0 for e in exponents):
                raise ValueError(f"exponents must be non-negative integers: {exponents}")
            coefficient = _as_rational(coefficient)
            if coefficient:
                clean[exponents] = coefficient
        self.num_vars = num_vars
        self.terms = clean

    @classmethod
    def _make(cls, num_vars: int, terms: dict) -> "Polynomial":
        # Internal fast path: terms are already clean (tuple keys, nonzero Fractions).
        poly = object.__new__(cls)
        poly.num_vars = num_vars
        poly.terms = terms
        return poly

    @classmethod
    def zero(cls, num_vars: int) -> "Polynomial":
        return cls(num_vars)

    @classmethod
    def constant(cls, num_vars: int, value) -> "Polynomial":
        return cls(num_vars, {(0,) * num_vars: _as_rational(value)})

    @classmethod
    def variable(cls, num_vars: int, index: int) -> "Polynomial":
        if not 0 <= index < num_vars:
            raise ValueError(f"variable index {index} out of range for {num_vars} variables")
        exponents = tuple(1 if i == index else 0 for i in range(num_vars))
        return cls._make(num_vars, {exponents: Fraction(1)})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(exponents) for exponents in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.num_vars, Fraction(0))

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exponents), Fraction(0))

    # -- arithmetic --------------------------------------------------------

    def _check_same_space(self, other: "Polynomial") -> None:
        if self.num_vars != other.num_vars:
            raise ValueError(
                f"polynomials live in different spaces: {self.num_vars} vs {other.num_vars} variables"
            )

    def _coerce_operand(self, other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            self._check_same_space(other)
            return other
        if isinstance(other, (int, Fraction)):
            value = _as_rational(other)
            if not value:
                return Polynomial._make(self.num_vars, {})
            return Polynomial._make(self.num_vars, {(0,) * self.num_vars: value})
        return None

    def __add__(self, other) -> "Polynomial":
        operand = self._coerce_operand(other)
        if operand is None:
            return NotImplemented
        out = dict(self.terms)
        for exponents, coefficient in operand.terms.items():
            current = out.get(exponents)
            if current is None:
                out[exponents] = coefficient
            else:
                current = current + coefficient
                if current:
                    out[exponents] = current
                else:
                    del out[exponents]
        return Polynomial._make(self.num_vars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._make(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        operand = self._coerce_operand(other)
        if operand is None:
            return NotImplemented
        return self + (-operand)

    def __rsub__(self, other) -> "Polynomial":
        operand = self._coerce_operand(other)
        if operand is None:
            return NotImplemented
        return operand + (-self)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check_same_space(other)
            out: dict[tuple, Fraction] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    exponents = tuple(x + y for x, y in zip(e1, e2))
                    current = out.get(exponents)
                    if current is None:
                        out[exponents] = c1 * c2
                    else:
                        current = current + c1 * c2
                        if current:
                            out[exponents] = current
                        else:
                            del out[exponents]
            return Polynomial._make(self.num_vars, out)
        if isinstance(other, (int, Fraction)):
            scalar = _as_rational(other)
            if not scalar:
                return Polynomial._make(self.num_vars, {})
            return Polynomial._make(
                self.num_vars, {e: c * scalar for e, c in self.terms.items()}
            )
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers take non-negative integer exponents")
        result = Polynomial.constant(self.num_vars, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- calculus and evaluation -------------------------------------------

    def evaluate(self, point: Sequence) -> Fraction:
        """Exact value at a rational point."""
        values = tuple(_as_rational(v) for v in point)
        if len(values) != self.num_vars:
            raise ValueError(
                f"point has {len(values)} entries, polynomial has {self.num_vars} variables"
            )
        total = Fraction(0)
        for exponents, coefficient in self.terms.items():
            term = coefficient
            for value, exponent in zip(values, exponents):
                if exponent:
                    term *= value**exponent
            total += term
        return total

    def substitute(self, replacements: Sequence["Polynomial"]) -> "Polynomial":
        """The polynomial z -> p(g(z)) where g_i = replacements[i]."""
        reps = tuple(replacements)
        if len(reps) != self.num_vars:
            raise ValueError(
                f"need {self.num_vars} replacement polynomials, got {len(reps)}"
            )
        if not all(isinstance(r, Polynomial) for r in reps):
            raise TypeError("replacements must be Polynomial instances")
        nv = reps[0].num_vars
        if any(r.num_vars != nv for r in reps):
            raise ValueError("replacement polynomials must share num_vars")

        power_cache: list[list[Polynomial]] = [[] for _ in reps]

        def power(i: int, e: int) -> Polynomial:
            cache = power_cache[i]
            if not cache:
                cache.append(Polynomial.constant(nv, 1))
            while len(cache) <= e:
                cache.append(cache[-1] * reps[i])
            return cache[e]

        acc: dict[tuple, Fraction] = {}
        for exponents, coefficient in self.terms.items():
            term = Polynomial.constant(nv, coefficient)
            for i, e in enumerate(exponents):
                if e:
                    term = term * power(i, e)
            for exps, c in term.terms.items():
                current = acc.get(exps)
                if current is None:
                    acc[exps] = c
                else:
                    current = current + c
                    if current:
                        acc[exps] = current
                    else:
                        del acc[exps]
        return Polynomial._make(nv, acc)

    def partial(self, index: int) -> "Polynomial":
        """Exact partial derivative with respect to variable ``index``."""
        if not 0 <= index < self.num_vars:
            raise ValueError(f"variable index {index} out of range for {self.num_vars} variables")
        out: dict[tuple, Fraction] = {}
        for exponents, coefficient in self.terms.items():
            e = exponents[index]
            if e:
                lowered = exponents[:index] + (e - 1,) + exponents[index + 1 :]
                # decrementing one slot is injective, so no key collisions here
                out[lowered] = coefficient * e
        return Polynomial._make(self.num_vars, out)

    # -- identity and text ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.num_vars == other.num_vars and self.terms == other.terms
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.terms)

    def to_text(self) -> str:
        """Terms in descending graded-lex order, ``c * x1^e1 x2^e2 ...``."""
        if not self.terms:
            return "0"
        parts = []
        for exponents in sorted(self.terms, key=_graded_lex_key, reverse=True):
            factors = " ".join(f"x{i + 1}^{e}" for i, e in enumerate(exponents) if e)
            coefficient = rational_to_text(self.terms[exponents])
            parts.append(f"{coefficient} * {factors}" if factors else coefficient)
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self.num_vars}, {self.to_text()!r})"


class PolyMap:
    """A polynomial map given componentwise; here always a self-map of R^{2m}."""

    __slots__ = ("num_vars", "components")

    def __init__(self, components: Sequence[Polynomial]):
        comps = tuple(components)
        if not comps:
            raise ValueError("a polynomial map needs at least one component")
        if not all(isinstance(c, Polynomial) for c in comps):
            raise TypeError("components must be Polynomial instances")
        nv = comps[0].num_vars
        if any(c.num_vars != nv for c in comps):
            raise ValueError("components must share num_vars")
        self.num_vars = nv
        self.components = comps

    @classmethod
    def identity(cls, num_vars: int) -> "PolyMap":
        return cls(tuple(Polynomial.variable(num_vars, i) for i in range(num_vars)))

    @classmethod
    def affine(cls, matrix: Sequence[Sequence], offset: Sequence | None = None) -> "PolyMap":
        """The map z -> M z + b from rational rows ``matrix`` and optional ``b``."""
        rows = [tuple(_as_rational(x) for x in row) for row in matrix]
        if not rows:
            raise ValueError("affine map needs a nonempty matrix")
        nv = len(rows[0])
        if any(len(row) != nv for row in rows):
            raise ValueError("matrix rows must have equal length")
        shift = None
        if offset is not None:
            shift = tuple(_as_rational(x) for x in offset)
            if len(shift) != len(rows):
                raise ValueError("offset length must match the number of rows")
        components = []
        for i, row in enumerate(rows):
            terms: dict[tuple, Fraction] = {}
            for j, value in enumerate(row):
                if value:
                    terms[tuple(1 if k == j else 0 for k in range(nv))] = value
            if shift is not None and shift[i]:
                terms[(0,) * nv] = shift[i]
            components.append(Polynomial._make(nv, terms))
        return cls(components)

    def __call__(self, point: Sequence) -> tuple:
        return tuple(component.evaluate(point) for component in self.components)

    def compose(self, inner: "PolyMap") -> "PolyMap":
        """The composite self after inner: z -> self(inner(z))."""
        if not isinstance(inner, PolyMap):
            raise TypeError("can only compose with another PolyMap")
        if len(inner.components) != self.num_vars:
            raise ValueError(
                f"inner map has {len(inner.components)} components, outer expects {self.num_vars}"
            )
        return PolyMap(tuple(c.substitute(inner.components) for c in self.components))

    def jacobian(self) -> tuple:
        """Matrix of partials; entry (i, j) is d components[i] / d x_j."""
        return tuple(
            tuple(component.partial(j) for j in range(self.num_vars))
            for component in self.components
        )

    def degree(self) -> int:
        return max(component.degree() for component in self.components)

    def __eq__(self, other) -> bool:
        if isinstance(other, PolyMap):
            return self.num_vars == other.num_vars and self.components == other.components
        return NotImplemented

    def __repr__(self) -> str:
        body = ", ".join(c.to_text() for c in self.components)
        return f"PolyMap([{body}])"
