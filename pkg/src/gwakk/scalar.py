"""Exact base fields: the rationals and the rational functions in a generic q.

Rational-mode scalars are plain :class:`fractions.Fraction` values. Generic-mode
scalars are :class:`RatFunc` instances whose numerator and denominator are
integer polynomials in ``q`` (coefficient tuples, lowest degree first).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd
from numbers import Rational
from typing import Union

from . import expr as _expr

__all__ = [
    "ModeError", "RatFunc", "Field", "RATIONAL", "GENERIC", "Scalar",
    "normalize", "field_arith", "is_root_of_unity", "field_of",
    "parse_scalar", "format_scalar",
]


class ModeError(ValueError):
    """Operands come from different base fields."""

    def __init__(self, message: str = "mode mismatch"):
        super().__init__(message)


# -- integer polynomials in q ------------------------------------------------

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _zadd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return _trim(out)


def _zneg(a):
    return tuple(-v for v in a)


def _zmul(a, b):
    if not a or not b:
        return ()
    if len(a) == 1:
        return tuple(a[0] * v for v in b)
    if len(b) == 1:
        return tuple(b[0] * v for v in a)
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return tuple(out)


def _content(a):
    g = 0
    for v in a:
        g = igcd(g, v)
        if g == 1:
            break
    return g


def _valuation(a):
    for i, v in enumerate(a):
        if v:
            return i
    return len(a)


def _prem(a, b):
    """Pseudo-remainder of ``a`` by ``b`` over the integers."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [v * lb for v in a]
        for i, v in enumerate(b):
            a[i + shift] -= la * v
        a = list(_trim(a))
    return tuple(a)


def _primitive(a):
    c = _content(a)
    if a[-1] < 0:
        c = -c
    return tuple(v // c for v in a)


def _zgcd(a, b):
    """Primitive gcd (positive leading coefficient) of two nonzero polynomials."""
    if len(a) == 1 or len(b) == 1:
        return (1,)
    va, vb = _valuation(a), _valuation(b)
    if len(a) - va == 1 or len(b) - vb == 1:
        # one side is a monomial: only a power of q can be shared
        return (0,) * min(va, vb) + (1,)
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, (_primitive(r) if r else r)
    return _primitive(a)


def _zdiv_exact(a, b):
    """Quotient of ``a`` by ``b`` where ``b`` divides ``a`` in Q[q] and ``b`` is primitive."""
    if len(b) == 1:
        return tuple(v // b[0] for v in a) if b[0] != 1 else a
    if b[-1] == 1 and not any(b[:-1]):
        return a[len(b) - 1:]
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    out = [0] * (len(a) - db)
    while a and len(a) - 1 >= db:
        shift = len(a) - 1 - db
        coef, rem = divmod(a[-1], lb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        out[shift] = coef
        for i, v in enumerate(b):
            a[i + shift] -= coef * v
        a = list(_trim(a))
    if a:
        raise ArithmeticError("inexact polynomial division")
    return tuple(out)


def _zformat(a, var="q"):
    if not a:
        return "0"
    parts = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


# -- rational functions ------------------------------------------------------

class RatFunc:
    """Element of Q(q) kept as a reduced quotient of integer polynomials.

    Canonical form: numerator and denominator coprime in Q[q], the combined
    integer content is 1, and the denominator has positive leading coefficient.
    Zero is ``0/1``.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=(), den=(1,)):
        if isinstance(num, int):
            num = (num,)
        if isinstance(den, int):
            den = (den,)
        n, d = _reduce(_trim(num), _trim(den))
        self.num = n
        self.den = d
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def q(cls) -> "RatFunc":
        return cls._raw((0, 1), (1,))

    @classmethod
    def coerce(cls, value) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(value, int):
            return cls._raw(((value,) if value else ()), (1,))
        if isinstance(value, Rational):
            f = Fraction(value)
            return cls._raw(((f.numerator,) if f else ()), (f.denominator,))
        raise TypeError(f"cannot interpret {value!r} as a rational function")

    # structure
    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def constant(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        return Fraction(self.num[0] if self.num else 0, self.den[0])

    # arithmetic
    def __add__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            return _make(_zadd(self.num, o.num), self.den)
        return _make(_zadd(_zmul(self.num, o.den), _zmul(o.num, self.den)),
                     _zmul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(_zneg(self.num), self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.num or not o.num:
            return RatFunc._raw((), (1,))
        return _make(_zmul(self.num, o.num), _zmul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero")
        return _make(_zmul(self.num, o.den), _zmul(self.den, o.num))

    def __rtruediv__(self, other):
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (RatFunc._raw((1,), (1,)) / self) ** (-n)
        result = RatFunc._raw((1,), (1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparison
    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        try:
            o = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant())
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        if self.den == (1,):
            return _zformat(self.num)
        if self.is_constant():
            return str(self.constant())
        n = _zformat(self.num)
        if len(self.num) > 1:
            n = f"({n})"
        return f"{n}/({_zformat(self.den)})"

    def sort_key(self):
        """Total order used only for deterministic choices (height first)."""
        height = max(map(abs, self.num + self.den))
        return (len(self.num) + len(self.den), height, self.den, self.num)


def _reduce(num, den):
    if not den:
        raise ZeroDivisionError("division by zero")
    if not num:
        return (), (1,)
    g = _zgcd(num, den)
    if g != (1,):
        num = _zdiv_exact(num, g)
        den = _zdiv_exact(den, g)
    c = igcd(_content(num), _content(den))
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = tuple(v // c for v in num)
        den = tuple(v // c for v in den)
    return num, den


def common_denominator(values):
    """Write RatFuncs over one integer denominator: returns (numerators, D)."""
    D = (1,)
    for v in values:
        d = v.den
        if d == D or d == (1,):
            continue
        if D == (1,):
            D = d
            continue
        g = _zgcd(D, d)
        D = _zmul(D, _zdiv_exact(d, g))
    nums = [v.num if v.den == D else _zmul(v.num, _zdiv_exact(D, v.den)) for v in values]
    return nums, D


def from_common(nums, D):
    return [_make(n, D) if n else RatFunc._raw((), (1,)) for n in nums]


def _make(num, den):
    n, d = _reduce(num, den)
    return RatFunc._raw(n, d)


Scalar = Union[Fraction, RatFunc]


# -- fields ------------------------------------------------------------------

class Field:
    """One of the two supported base fields; converts, parses and prints scalars."""

    def __init__(self, name: str):
        self.name = name

    def __repr__(self):
        return f"<field {self.name}>"

    def __reduce__(self):
        return (_field_by_name, (self.name,))

    @property
    def generic(self) -> bool:
        return self.name == "generic"

    def __call__(self, value) -> Scalar:
        if self.generic:
            if isinstance(value, str):
                return parse_scalar(value, self)
            return RatFunc.coerce(value)
        if isinstance(value, RatFunc):
            if value.is_constant():
                return value.constant()
            raise ModeError()
        if isinstance(value, str):
            return parse_scalar(value, self)
        if isinstance(value, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(value, (int, Rational)):
            return Fraction(value)
        raise TypeError(f"cannot interpret {value!r} as a rational")

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    @property
    def q(self) -> RatFunc:
        if not self.generic:
            raise ModeError("'q' is only available in generic mode")
        return RatFunc.q()

    def contains(self, value) -> bool:
        if self.generic:
            return isinstance(value, RatFunc)
        return isinstance(value, Fraction)

    def format(self, value) -> str:
        return format_scalar(value)

    def parse(self, text: str) -> Scalar:
        return parse_scalar(text, self)


RATIONAL = Field("rational")
GENERIC = Field("generic")


def _field_by_name(name: str) -> Field:
    return {"rational": RATIONAL, "generic": GENERIC}[name]


def field_of(value) -> Field:
    if isinstance(value, RatFunc):
        return GENERIC
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return RATIONAL
    raise TypeError(f"not a scalar: {value!r}")


def get_field(name) -> Field:
    if isinstance(name, Field):
        return name
    try:
        return _field_by_name(name)
    except KeyError:
        raise ValueError(f"unknown mode {name!r} (expected 'rational' or 'generic')") from None


# -- public helpers ----------------------------------------------------------

def normalize(num, den=1) -> Scalar:
    """Canonical scalar from an unreduced numerator/denominator pair.

    Integers give a :class:`Fraction`; coefficient sequences (integer
    polynomials in q, lowest degree first) give a :class:`RatFunc`.
    """
    if isinstance(num, int) and isinstance(den, int):
        if den == 0:
            raise ZeroDivisionError("division by zero")
        return Fraction(num, den)
    if isinstance(num, int):
        num = (num,)
    if isinstance(den, int):
        den = (den,)
    return RatFunc(tuple(num), tuple(den))


def field_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    if field_of(a) is not field_of(b):
        raise ModeError()
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise ZeroDivisionError("division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def is_root_of_unity(a: Scalar) -> bool:
    """Finite multiplicative order; over Q and Q(q) only +1 and -1 qualify."""
    if not a:
        raise ValueError("automorphism parameter must be nonzero")
    if isinstance(a, RatFunc):
        return a.is_constant() and a.constant() in (1, -1)
    return a in (1, -1)


def format_scalar(value: Scalar) -> str:
    return str(value)


def parse_scalar(text: str, field: Field = RATIONAL) -> Scalar:
    tree = _expr.parse(text, mode=field.name, symbols=())
    atoms = {"q": RatFunc.q()} if field.generic else {}

    def divide(a, b):
        if not b:
            raise ZeroDivisionError("division by zero")
        return a / b

    return field(_expr.evaluate(tree, atoms, field, divide))
