"""Univariate polynomials in h over an exact base field.

Besides ring arithmetic this module carries the root analysis the classifier
relies on: the distinct-root count ``deg p - deg gcd(p, p')`` and the test
whether p has a root other than a given scalar. Neither needs factorization.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence

from . import expr as _expr
from .scalar import (RATIONAL, Field, ModeError, RatFunc, Scalar, _zadd, _zmul, common_denominator,
                     field_of, from_common)

__all__ = [
    "Poly", "poly_arith", "apply_auto", "gcd", "distinct_root_count",
    "has_root_other_than", "divides", "parse_poly", "rational_roots",
]


class Poly:
    """Dense polynomial; ``coeffs[k]`` is the coefficient of ``h**k``."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, coeffs: Iterable = (), field: Field = RATIONAL):
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple, field: Field) -> "Poly":
        obj = object.__new__(cls)
        obj.field = field
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def h(cls, field: Field = RATIONAL) -> "Poly":
        return cls._raw((field.zero, field.one), field)

    @classmethod
    def const(cls, c, field: Field = RATIONAL) -> "Poly":
        c = field(c)
        return cls._raw((c,) if c else (), field)

    @classmethod
    def zero(cls, field: Field = RATIONAL) -> "Poly":
        return cls._raw((), field)

    @classmethod
    def one(cls, field: Field = RATIONAL) -> "Poly":
        return cls._raw((field.one,), field)

    @classmethod
    def from_roots(cls, roots: Sequence, field: Field = RATIONAL, lead=1) -> "Poly":
        out = cls.const(lead, field)
        h = cls.h(field)
        for r in roots:
            out = out * (h - field(r))
        return out

    # structure
    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def coeff(self, k: int) -> Scalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero

    def constant_value(self) -> Scalar:
        if len(self.coeffs) > 1:
            raise ValueError("not a constant polynomial")
        return self.coeff(0)

    # arithmetic
    def _check(self, other: "Poly"):
        if other.field is not self.field:
            raise ModeError()

    def _lift(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, RatFunc)) and not isinstance(other, bool):
            if isinstance(other, RatFunc) and not self.field.generic:
                raise ModeError()
            return Poly.const(other, self.field)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = out[i] + v
        while out and not out[-1]:
            out.pop()
        return Poly._raw(tuple(out), self.field)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(tuple(-c for c in self.coeffs), self.field)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly._raw((), self.field)
        if len(b) == 1:
            c = b[0]
            return Poly._raw(tuple(v * c for v in a), self.field)
        if len(a) == 1:
            c = a[0]
            return Poly._raw(tuple(c * v for v in b), self.field)
        if self.field.generic:
            return Poly._raw(tuple(_generic_mul(a, b)), self.field)
        out = [self.field.zero] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    if v:
                        out[i + j] = out[i + j] + u * v
        return Poly._raw(tuple(out), self.field)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Poly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "Poly":
        c = self.field(c)
        if not c:
            return Poly.zero(self.field)
        return Poly._raw(tuple(v * c for v in self.coeffs), self.field)

    def __truediv__(self, c):
        """Division by a nonzero scalar."""
        if isinstance(c, Poly):
            if c.degree > 0:
                return NotImplemented
            c = c.constant_value()
        c = self.field(c)
        if not c:
            raise ZeroDivisionError("division by zero")
        return self.scale(self.field.one / c)

    def divmod(self, d: "Poly"):
        self._check(d)
        if not d:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = d.degree
        lc_inv = self.field.one / d.lc
        quo = [self.field.zero] * max(len(rem) - dd, 0)
        while len(rem) - 1 >= dd and rem:
            shift = len(rem) - 1 - dd
            c = rem[-1] * lc_inv
            quo[shift] = c
            for i, v in enumerate(d.coeffs):
                rem[i + shift] = rem[i + shift] - c * v
            rem.pop()
            while rem and not rem[-1]:
                rem.pop()
        while quo and not quo[-1]:
            quo.pop()
        return Poly._raw(tuple(quo), self.field), Poly._raw(tuple(rem), self.field)

    def __floordiv__(self, d):
        return self.divmod(d)[0]

    def __mod__(self, d):
        return self.divmod(d)[1]

    def monic(self) -> "Poly":
        if not self:
            return self
        return self.scale(self.field.one / self.lc)

    def derivative(self) -> "Poly":
        return Poly._raw(tuple(c * k for k, c in enumerate(self.coeffs) if k), self.field)

    def __call__(self, value):
        """Horner evaluation at a scalar or at another polynomial."""
        if isinstance(value, Poly):
            self._check(value)
            result = Poly.zero(self.field)
            for c in reversed(self.coeffs):
                result = result * value + c
            return result
        result = self.field.zero
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    compose = __call__

    def substitute_affine(self, a, b) -> "Poly":
        """p(a*h + b)."""
        return self(Poly._raw(_trim_tuple((self.field(b), self.field(a))), self.field))

    # comparison and output
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field is other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, RatFunc)) and not isinstance(other, bool):
            return len(self.coeffs) <= 1 and self.coeff(0) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.name, self.coeffs))
        return self._hash

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return format_poly(self)

    def to_json(self) -> list:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data, field: Field = RATIONAL) -> "Poly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls((field.parse(str(c)) for c in data), field)


def _trim_tuple(cs):
    cs = list(cs)
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


def _top_level_sum(s: str) -> bool:
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and i > 0 and ch in "+-" and s[i - 1] == " ":
            return True
    return False


def _generic_mul(a, b):
    """Convolution over a common denominator; each output coefficient is reduced once."""
    na, da = common_denominator(a)
    nb, db = common_denominator(b)
    out = [()] * (len(a) + len(b) - 1)
    for i, u in enumerate(na):
        if u:
            for j, v in enumerate(nb):
                if v:
                    out[i + j] = _zadd(out[i + j], _zmul(u, v))
    return from_common(out, _zmul(da, db))


def format_poly(p: Poly, var: str = "h") -> str:
    if not p.coeffs:
        return "0"
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        s = str(c)
        negative = False
        if _top_level_sum(s):
            s = f"({s})"
        elif s.startswith("-"):
            negative = True
            s = s[1:]
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            body = s
        elif s == "1":
            body = mono
        else:
            body = f"{s}*{mono}"
        if not parts:
            parts.append(("-" if negative else "") + body)
        else:
            parts.append((" - " if negative else " + ") + body)
    return "".join(parts)


def parse_poly(text: str, field: Field = RATIONAL) -> Poly:
    tree = _expr.parse(text, mode=field.name, symbols=("h",))
    atoms = {"h": Poly.h(field)}
    if field.generic:
        atoms["q"] = Poly.const(RatFunc.q(), field)

    def divide(a: Poly, b: Poly) -> Poly:
        if b.degree > 0:
            raise ValueError("can only divide by a scalar")
        if not b:
            raise ZeroDivisionError("division by zero")
        return a.scale(field.one / b.constant_value())

    return _expr.evaluate(tree, atoms, lambda v: Poly.const(v, field), divide)


# -- public helpers ----------------------------------------------------------

def poly_arith(p: Poly, r: Poly, op: str) -> Poly:
    p._check(r)
    if op == "add":
        return p + r
    if op == "sub":
        return p - r
    if op == "mul":
        return p * r
    raise ValueError(f"unknown operation {op!r}")


def _affine_power(q, h0, n: int):
    """Coefficients (a, b) with sigma^n(h) = a*h + b for sigma(h) = q*h + h0."""
    a, b = q ** 0, h0 * 0
    if n >= 0:
        for _ in range(n):
            a, b = a * q, b * q + h0
    else:
        qi = q ** 0 / q
        for _ in range(-n):
            # sigma^{-1}(h) = (h - h0)/q
            a, b = a * qi, (b - h0) * qi
    return a, b


def apply_auto(p: Poly, q, h0, power: int = 1) -> Poly:
    """p composed with sigma^power, where sigma(h) = q*h + h0."""
    q, h0 = p.field(q), p.field(h0)
    if not q:
        raise ValueError("automorphism parameter must be nonzero")
    a, b = _affine_power(q, h0, power)
    return p.substitute_affine(a, b)


def gcd(p: Poly, r: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm over the base field."""
    p._check(r)
    if not p and not r:
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = p.monic(), r.monic()
    while b:
        a, b = b, a.divmod(b)[1].monic()
    return a


def squarefree_part(p: Poly) -> Poly:
    if not p:
        raise ValueError("zero polynomial has no squarefree part")
    return p.divmod(gcd(p, p.derivative()))[0].monic()


def distinct_root_count(p: Poly) -> int:
    """Number of distinct roots in an algebraic closure (characteristic zero)."""
    if p.is_constant():
        raise ValueError("root count undefined for constants")
    return p.degree - gcd(p, p.derivative()).degree


def has_root_other_than(p: Poly, lam) -> bool:
    """True unless p = c*(h - lam)^n."""
    if p.is_constant():
        raise ValueError("root test undefined for constants")
    sf = squarefree_part(p)
    return sf != Poly.h(p.field) - p.field(lam)


def divides(d: Poly, p: Poly) -> bool:
    d._check(p)
    if not d:
        raise ZeroDivisionError("divisor must be nonzero")
    return not p.divmod(d)[1]


def rational_roots(p: Poly) -> list:
    """Roots of p lying in its own base field, sorted by height.

    Uses sympy's factorization over Z (or Z[q] in generic mode); only the
    linear factors are kept.
    """
    if p.is_constant():
        return []
    import sympy

    h, q = sympy.symbols("h q")
    expr = sum(_to_sympy(c, q) * h**k for k, c in enumerate(p.coeffs))
    numer = sympy.together(expr).as_numer_denom()[0]
    gens = (h, q) if p.field.generic else (h,)
    _, factors = sympy.factor_list(sympy.Poly(numer, *gens))
    roots = []
    for f, _mult in factors:
        if f.degree(h) != 1:
            continue
        fe = f.as_expr()
        c1 = fe.coeff(h, 1)
        c0 = fe.coeff(h, 0)
        root = sympy.cancel(-c0 / c1)
        roots.append(_from_sympy(root, q, p.field))
    key = (lambda r: r.sort_key()) if p.field.generic else (
        lambda r: (max(abs(r.numerator), r.denominator), r < 0, r))
    return sorted(set(roots), key=key)


def _to_sympy(c, q):
    import sympy

    if isinstance(c, RatFunc):
        num = sum(sympy.Integer(v) * q**i for i, v in enumerate(c.num))
        den = sum(sympy.Integer(v) * q**i for i, v in enumerate(c.den))
        return num / den
    return sympy.Rational(c.numerator, c.denominator)


def _from_sympy(value, q, field: Field):
    import sympy

    if not field.generic:
        r = sympy.Rational(value)
        return Fraction(int(r.p), int(r.q))
    num, den = sympy.fraction(sympy.cancel(value))
    nc = sympy.Poly(num, q).all_coeffs()[::-1]
    dc = sympy.Poly(den, q).all_coeffs()[::-1]
    scale = sympy.ilcm(*[sympy.Rational(c).q for c in nc + dc])
    return RatFunc(tuple(int(c * scale) for c in nc), tuple(int(c * scale) for c in dc))
