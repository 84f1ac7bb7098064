"""Multivariate polynomials over Gaussian rationals.

The variable set is fixed by a :class:`VarSpace`: coordinates ``x1..xD``
with ``D`` in {3, 4}.  Three-dimensional fields may carry normal time
``t`` as one extra formal variable (axis 4 of the exponent tuple); it is
never a coordinate axis of the differential operators, which only touch
``x1..xD``.  Terms map exponent tuples to nonzero coefficients, so
structural equality coincides with mathematical equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionError, ShapeError, ValidationError
from .rationals import GaussianRational, ZERO


@dataclass(frozen=True)
class VarSpace:
    """The formal variable set of a polynomial: x1..xD plus optional t."""

    dim: int
    with_time: bool = False

    def __post_init__(self):
        if self.dim not in (3, 4):
            raise DimensionError(f"unsupported dimension {self.dim}; expected 3 or 4")
        if self.with_time and self.dim != 3:
            raise ValidationError("the time variable is only available in 3D mode")

    @property
    def nvars(self) -> int:
        return self.dim + (1 if self.with_time else 0)

    @property
    def names(self) -> tuple[str, ...]:
        names = tuple(f"x{k}" for k in range(1, self.dim + 1))
        return names + ("t",) if self.with_time else names


SPACE3 = VarSpace(3)
SPACE3T = VarSpace(3, with_time=True)
SPACE4 = VarSpace(4)


class MultiPoly:
    """Dense-exponent sparse-term polynomial with GaussianRational coefficients."""

    __slots__ = ("space", "terms")

    def __init__(self, space: VarSpace, terms=None):
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != space.nvars or any(e < 0 for e in exps):
                raise ShapeError(f"bad exponent tuple {exps} for {space.names}")
            coeff = GaussianRational.coerce(coeff)
            if coeff:
                acc = clean.get(exps)
                clean[exps] = coeff if acc is None else acc + coeff
                if not clean[exps]:
                    del clean[exps]
        self.space = space
        self.terms = clean

    # constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, space: VarSpace) -> "MultiPoly":
        return cls(space)

    @classmethod
    def constant(cls, space: VarSpace, value) -> "MultiPoly":
        return cls(space, {(0,) * space.nvars: GaussianRational.coerce(value)})

    @classmethod
    def variable(cls, space: VarSpace, axis: int) -> "MultiPoly":
        if not 1 <= axis <= space.nvars:
            raise IndexError(f"axis {axis} out of range 1..{space.nvars}")
        exps = tuple(1 if k == axis else 0 for k in range(1, space.nvars + 1))
        return cls(space, {exps: GaussianRational(1)})

    @classmethod
    def monomial(cls, space: VarSpace, exps, coeff=1) -> "MultiPoly":
        return cls(space, {tuple(exps): GaussianRational.coerce(coeff)})

    # alignment of 3D and 3D+t operands ------------------------------------

    def with_time(self) -> "MultiPoly":
        if self.space.with_time:
            return self
        if self.space.dim != 3:
            raise ShapeError("only 3D polynomials can acquire a time variable")
        return MultiPoly(SPACE3T, {exps + (0,): c for exps, c in self.terms.items()})

    def _align(self, other: "MultiPoly"):
        if self.space == other.space:
            return self, other
        if self.space.dim == other.space.dim == 3:
            return self.with_time(), other.with_time()
        raise ShapeError(f"incompatible variable sets {self.space} and {other.space}")

    # arithmetic ------------------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other, self.space)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._align(other)
        terms = dict(a.terms)
        for exps, coeff in b.terms.items():
            acc = terms.get(exps)
            total = coeff if acc is None else acc + coeff
            if total:
                terms[exps] = total
            elif acc is not None:
                del terms[exps]
        out = MultiPoly.__new__(MultiPoly)
        out.space, out.terms = a.space, terms
        return out

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other, self.space)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other, self.space)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        out = MultiPoly.__new__(MultiPoly)
        out.space = self.space
        out.terms = {exps: -c for exps, c in self.terms.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            factor = GaussianRational.coerce(other)
            if not factor:
                return MultiPoly.zero(self.space)
            out = MultiPoly.__new__(MultiPoly)
            out.space = self.space
            out.terms = {exps: c * factor for exps, c in self.terms.items()}
            return out
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._align(other)
        terms: dict = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                exps = tuple(i + j for i, j in zip(e1, e2))
                prod = c1 * c2
                acc = terms.get(exps)
                total = prod if acc is None else acc + prod
                if total:
                    terms[exps] = total
                elif acc is not None:
                    del terms[exps]
        out = MultiPoly.__new__(MultiPoly)
        out.space, out.terms = a.space, terms
        return out

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly.constant(self.space, 1)
        for _ in range(exponent):
            result = result * self
        return result

    # calculus ----------------------------------------------------------------

    def partial(self, axis: int) -> "MultiPoly":
        """Exact formal derivative along a 1-based variable axis."""
        if not 1 <= axis <= self.space.nvars:
            raise IndexError(f"axis {axis} out of range 1..{self.space.nvars}")
        k = axis - 1
        terms = {}
        for exps, coeff in self.terms.items():
            if exps[k] == 0:
                continue
            dropped = exps[:k] + (exps[k] - 1,) + exps[k + 1:]
            terms[dropped] = coeff * exps[k]
        out = MultiPoly.__new__(MultiPoly)
        out.space, out.terms = self.space, terms
        return out

    def antiderivative(self, axis: int) -> "MultiPoly":
        if not 1 <= axis <= self.space.nvars:
            raise IndexError(f"axis {axis} out of range 1..{self.space.nvars}")
        k = axis - 1
        terms = {}
        for exps, coeff in self.terms.items():
            raised = exps[:k] + (exps[k] + 1,) + exps[k + 1:]
            terms[raised] = coeff * GaussianRational(Fraction(1, exps[k] + 1))
        out = MultiPoly.__new__(MultiPoly)
        out.space, out.terms = self.space, terms
        return out

    def subs(self, axis: int, value) -> "MultiPoly":
        """Substitute an exact value for one variable (the axis stays formal)."""
        if not 1 <= axis <= self.space.nvars:
            raise IndexError(f"axis {axis} out of range 1..{self.space.nvars}")
        value = GaussianRational.coerce(value)
        k = axis - 1
        out = MultiPoly.zero(self.space)
        terms: dict = {}
        for exps, coeff in self.terms.items():
            scaled = coeff * value ** exps[k]
            if not scaled:
                continue
            pinned = exps[:k] + (0,) + exps[k + 1:]
            acc = terms.get(pinned)
            total = scaled if acc is None else acc + scaled
            if total:
                terms[pinned] = total
            elif acc is not None:
                del terms[pinned]
        out.terms = terms
        return out

    def evaluate(self, values):
        """Evaluate at a point; exact for exact inputs, complex otherwise."""
        values = tuple(values)
        if len(values) != self.space.nvars:
            raise ShapeError(f"expected {self.space.nvars} values, got {len(values)}")
        numeric = any(isinstance(v, (float, complex)) for v in values)
        if numeric:
            point = [complex(v) for v in values]
            total = 0j
            for exps, coeff in self.terms.items():
                term = coeff.to_complex()
                for v, e in zip(point, exps):
                    if e:
                        term *= v ** e
                total += term
            return total
        point = [GaussianRational.coerce(v) for v in values]
        total = ZERO
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(point, exps):
                if e:
                    term = term * v ** e
            total = total + term
        return total

    # structure -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(not any(exps) for exps in self.terms)

    def constant_value(self) -> GaussianRational:
        if not self.terms:
            return ZERO
        if not self.is_constant:
            raise ValidationError(f"polynomial is not constant: {self}")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        return max((sum(exps) for exps in self.terms), default=0)

    def degree_in(self, axis: int) -> int:
        if not 1 <= axis <= self.space.nvars:
            raise IndexError(f"axis {axis} out of range 1..{self.space.nvars}")
        return max((exps[axis - 1] for exps in self.terms), default=0)

    def sorted_terms(self):
        """Terms in descending graded-lexicographic order (canonical)."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = MultiPoly.constant(self.space, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        try:
            a, b = self._align(other)
        except ShapeError:
            return False
        return a.terms == b.terms

    def __hash__(self):
        return hash((self.space, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.space.names
        parts = []
        for exps, coeff in self.sorted_terms():
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(names, exps)
                if e
            ]
            if not factors:
                parts.append(str(coeff))
                continue
            body = "*".join(factors)
            if coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append(f"-{body}")
            else:
                text = str(coeff)
                if "+" in text[1:] or "-" in text[1:]:
                    text = f"({text})"
                parts.append(f"{text}*{body}")
        joined = parts[0]
        for part in parts[1:]:
            joined += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return joined

    def __repr__(self):
        return f"MultiPoly({self.space.names}, {self})"


def _as_poly(value, space: VarSpace):
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, (int, Fraction, GaussianRational)):
        return MultiPoly.constant(space, value)
    return NotImplemented
