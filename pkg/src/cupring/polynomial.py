"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial in ``nvars`` variables ``x1..xn`` is stored as a dict mapping
exponent tuples to nonzero coefficients.  Coefficients are Python ``int`` when
integral and :class:`fractions.Fraction` otherwise; both are exact and compare
and hash consistently, so two equal polynomials always have equal term maps.

>>> x1, x2 = Polynomial.variables(2)
>>> (x1 * x2 - x2 * x1).is_zero()
True
>>> str((x1 + x2) ** 2)
'x1^2 + 2*x1*x2 + x2^2'
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Sequence, Tuple, Union

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


def as_rational(value) -> Scalar:
    """Coerce ``value`` to an exact rational; integral values come back as int.

    Accepts ints, Fractions and strings like ``"3"`` or ``"-2/5"``.  Floats are
    refused since they would smuggle rounding into exact computations.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        q = Fraction(value.strip())
        return q.numerator if q.denominator == 1 else q
    if isinstance(value, Rational):
        q = Fraction(value.numerator, value.denominator)
        return q.numerator if q.denominator == 1 else q
    raise TypeError(f"not an exact rational: {value!r}")


def _norm(c: Scalar) -> Scalar:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def format_rational(c: Scalar) -> str:
    c = _norm(c)
    return str(c)


class Polynomial:
    """Immutable sparse polynomial over the rationals."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Dict[Exponent, Scalar] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be non-negative")
        self.nvars = nvars
        clean: Dict[Exponent, Scalar] = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(exp)
                if len(exp) != nvars:
                    raise ValueError(f"exponent {exp} has wrong length for {nvars} variables")
                if any(e < 0 for e in exp):
                    raise ValueError(f"negative exponent in {exp}")
                c = as_rational(c)
                if c:
                    clean[exp] = clean.get(exp, 0) + c
            clean = {e: _norm(c) for e, c in clean.items() if c}
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: Dict[Exponent, Scalar]) -> "Polynomial":
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value) -> "Polynomial":
        c = as_rational(value)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        """The variable ``x_{index+1}`` (``index`` is 0-based)."""
        if not 0 <= index < nvars:
            raise IndexError(f"variable index {index} out of range for {nvars} variables")
        exp = [0] * nvars
        exp[index] = 1
        return cls._raw(nvars, {tuple(exp): 1})

    @classmethod
    def variables(cls, nvars: int) -> Tuple["Polynomial", ...]:
        return tuple(cls.variable(nvars, i) for i in range(nvars))

    @classmethod
    def linear_form(cls, coeffs: Sequence) -> "Polynomial":
        """Build ``sum_i coeffs[i] * x_{i+1}``."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            c = as_rational(c)
            if c:
                exp = [0] * n
                exp[i] = 1
                terms[tuple(exp)] = c
        return cls._raw(n, terms)

    # predicates and accessors

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_linear_form(self) -> bool:
        """True for homogeneous degree-1 polynomials and for zero."""
        return all(sum(e) == 1 for e in self.terms)

    def constant_term(self) -> Scalar:
        return self.terms.get((0,) * self.nvars, 0)

    def linear_coefficients(self) -> Tuple[Scalar, ...]:
        coeffs = [0] * self.nvars
        for exp, c in self.terms.items():
            if sum(exp) == 1:
                coeffs[exp.index(1)] = c
        return tuple(coeffs)

    def __len__(self) -> int:
        return len(self.terms)

    # arithmetic

    def _check(self, other: "Polynomial") -> None:
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.nvars, other)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        out = dict(big)
        for exp, c in small.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = _norm(s)
            else:
                out.pop(exp, None)
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, 0) - c
            if s:
                out[exp] = _norm(s)
            else:
                out.pop(exp, None)
        return Polynomial._raw(self.nvars, out)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def scale(self, factor) -> "Polynomial":
        factor = as_rational(factor)
        if not factor:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(self.nvars, {e: _norm(c * factor) for e, c in self.terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return Polynomial.zero(self.nvars)
        if len(a) < len(b):
            a, b = b, a
        out: Dict[Exponent, Scalar] = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                exp = tuple([x + y for x, y in zip(ea, eb)])
                out[exp] = get(exp, 0) + ca * cb
        return Polynomial._raw(self.nvars, {e: _norm(c) for e, c in out.items() if c})

    def __rmul__(self, other) -> "Polynomial":
        return self.scale(other)

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def leading_term(self) -> Tuple[Exponent, Scalar]:
        """Leading term in lexicographic order (x1 > x2 > ...)."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms)
        return exp, self.terms[exp]

    def divide_exact(self, divisor: "Polynomial") -> "Polynomial":
        """Quotient of an exact division; raises ArithmeticError if not exact."""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_exp, lead_c = divisor.leading_term()
        rem = dict(self.terms)
        quot: Dict[Exponent, Scalar] = {}
        while rem:
            exp = max(rem)
            c = rem[exp]
            shift = tuple(x - y for x, y in zip(exp, lead_exp))
            if any(s < 0 for s in shift):
                raise ArithmeticError("division is not exact")
            q = _norm(Fraction(c) / lead_c)
            quot[shift] = q
            for de, dc in divisor.terms.items():
                e = tuple(x + y for x, y in zip(de, shift))
                v = rem.get(e, 0) - q * dc
                if v:
                    rem[e] = _norm(v)
                else:
                    rem.pop(e, None)
        return Polynomial._raw(self.nvars, quot)

    def evaluate(self, point: Sequence) -> Scalar:
        """Exact value at a rational point of length ``nvars``."""
        if len(point) != self.nvars:
            raise ValueError(f"point has length {len(point)}, expected {self.nvars}")
        pt = [as_rational(v) for v in point]
        total: Scalar = 0
        for exp, c in self.terms.items():
            term = c
            for v, e in zip(pt, exp):
                if e:
                    term *= v ** e
            total += term
        return _norm(total) if isinstance(total, Fraction) else total

    # comparison, hashing, printing

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self) -> list:
        """Terms in graded-lex order, highest first; the printing order."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(exp) if e
            )
            neg = c < 0
            mag = -c if neg else c
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            if not pieces:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {str(self)!r})"


def poly_is_zero(p: Polynomial) -> bool:
    """Symbolic zero test: canonical form has no terms."""
    return p.is_zero()


def poly_sum(polys: Iterable[Polynomial], nvars: int) -> Polynomial:
    total = Polynomial.zero(nvars)
    for p in polys:
        total = total + p
    return total
