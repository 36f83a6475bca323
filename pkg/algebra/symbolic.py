"""
Polynomial entries over Q(sqrt 2), backed by sympy

The certifier adjoins vectors whose entries depend on parameters (the
branches of a scripted case split). A SymPoly wraps an expanded sympy
expression so such entries can sit in an ExactMatrix next to QuadScalar
ones. Every operation that leaves no free symbol returns a QuadScalar, so
a SymPoly always has at least one parameter and numeric work never reaches
sympy.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Mapping, Union

import sympy
from sympy import Rational, Symbol, sqrt

from algebra.scalar import QuadScalar

logger = logging.getLogger(__name__)

ROOT2 = sqrt(2)

Entry = Union[QuadScalar, "SymPoly"]


def to_sympy(value: QuadScalar) -> sympy.Expr:
    q = QuadScalar.coerce(value)
    return (Rational(q.rat.numerator, q.rat.denominator)
            + Rational(q.irr.numerator, q.irr.denominator) * ROOT2)


def _fraction(r: sympy.Expr) -> Fraction:
    if not r.is_Rational:
        raise ValueError(f"{r} is not rational")
    return Fraction(int(r.p), int(r.q))


def quad_from_sympy(expr: sympy.Expr) -> QuadScalar:
    """
    The QuadScalar equal to a constant sympy expression

    Raises:
        ValueError: If expr has free symbols or does not lie in Q(sqrt 2)
    """
    expr = sympy.expand(expr)
    if expr.free_symbols:
        raise ValueError(f"{expr} is not a constant")
    irr = expr.coeff(ROOT2)
    rat = sympy.expand(expr - irr * ROOT2)
    return QuadScalar(_fraction(rat), _fraction(irr))


def from_sympy(expr: sympy.Expr) -> Entry:
    """
    A matrix entry from a sympy polynomial with coefficients in Q(sqrt 2)

    Raises:
        ValueError: If expr is not such a polynomial
    """
    expr = sympy.expand(expr)
    symbols = sorted(expr.free_symbols, key=str)
    if not symbols:
        return quad_from_sympy(expr)
    if not expr.is_polynomial(*symbols):
        raise ValueError(f"{expr} is not a polynomial in {[str(s) for s in symbols]}")
    for c in sympy.Poly(expr, *symbols).coeffs():
        quad_from_sympy(c)
    return SymPoly(expr)


def _result(expr: sympy.Expr) -> Entry:
    # Ring operations stay inside Q(sqrt 2)[parameters]; only constancy needs checking
    expr = sympy.expand(expr)
    if expr.free_symbols:
        return SymPoly(expr)
    return quad_from_sympy(expr)


def _lift(value) -> sympy.Expr:
    if isinstance(value, SymPoly):
        return value.expr
    return to_sympy(QuadScalar.coerce(value))


class SymPoly:
    """Nonconstant polynomial in named parameters with Q(sqrt 2) coefficients"""

    __slots__ = ("_expr",)

    def __init__(self, expr: sympy.Expr) -> None:
        self._expr = expr

    @classmethod
    def symbol(cls, name: str) -> SymPoly:
        return cls(Symbol(name))

    @property
    def expr(self) -> sympy.Expr:
        return self._expr

    def _accepts(self, other) -> bool:
        return isinstance(other, (SymPoly, QuadScalar, int, Fraction))

    # ------------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------------

    def __add__(self, other) -> Entry:
        if not self._accepts(other):
            return NotImplemented
        return _result(self._expr + _lift(other))

    __radd__ = __add__

    def __neg__(self) -> Entry:
        return _result(-self._expr)

    def __sub__(self, other) -> Entry:
        if not self._accepts(other):
            return NotImplemented
        return _result(self._expr - _lift(other))

    def __rsub__(self, other) -> Entry:
        if not self._accepts(other):
            return NotImplemented
        return _result(_lift(other) - self._expr)

    def __mul__(self, other) -> Entry:
        if not self._accepts(other):
            return NotImplemented
        return _result(self._expr * _lift(other))

    __rmul__ = __mul__

    def __truediv__(self, other) -> Entry:
        """Division by a nonzero constant only"""
        if isinstance(other, SymPoly):
            raise ValueError("SymPoly division is only defined for constant divisors")
        return self * QuadScalar.coerce(other).inverse()

    def __pow__(self, exponent: int) -> Entry:
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        return _result(self._expr ** exponent)

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return False

    def __bool__(self) -> bool:
        return True

    def variables(self) -> set:
        return {str(s) for s in self._expr.free_symbols}

    def degree(self) -> int:
        return sympy.Poly(self._expr, *sorted(self._expr.free_symbols, key=str)).total_degree()

    def evaluate(self, assignment: Mapping[str, QuadScalar]) -> QuadScalar:
        return quad_from_sympy(self._expr.subs({Symbol(k): _lift(v) for k, v in assignment.items()}))

    def substitute(self, replacements: Mapping[str, Entry]) -> Entry:
        """Replace parameters by entries; unmentioned parameters stay"""
        return _result(self._expr.subs({Symbol(k): _lift(v) for k, v in replacements.items()},
                                       simultaneous=True))

    def __eq__(self, other: object) -> bool:
        if not self._accepts(other):
            return NotImplemented
        return sympy.expand(self._expr - _lift(other)) == 0

    def __hash__(self) -> int:
        return hash(self._expr)

    def __str__(self) -> str:
        return str(self._expr)

    def __repr__(self) -> str:
        return f"SymPoly({self._expr})"


def entry(value) -> Entry:
    """Coerce a number, literal or SymPoly to a matrix entry"""
    if isinstance(value, SymPoly):
        return value
    return QuadScalar.coerce(value)


def is_constant(value: Entry) -> bool:
    return not isinstance(value, SymPoly)


def constant_value(value: Entry) -> QuadScalar:
    if isinstance(value, SymPoly):
        raise ValueError(f"{value} is not a constant")
    return QuadScalar.coerce(value)
