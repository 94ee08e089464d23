"""Generalized Weyl algebras K[h](sigma, P) and their normal forms.

An element is stored as a map ``degree -> polynomial``: a component ``(d, p)``
stands for ``p(h) y^d`` when d > 0, ``p(h)`` when d = 0 and ``p(h) x^-d`` when
d < 0. Multiplication rewrites with

    x p = sigma(p) x,   y p = sigma^-1(p) y,   y x = P,   x y = sigma(P)

so every product lands directly in normal form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, Mapping

from . import expr as _expr
from .poly import Poly, format_poly, parse_poly, rational_roots
from .scalar import RATIONAL, Field, ModeError, RatFunc, get_field, is_root_of_unity

__all__ = [
    "AffineAuto", "GWA", "GWAElement", "conjugate_presentation", "canonicalize",
    "Canonicalization", "ideal_generator_lambda", "is_graded_for_weights",
    "nf_add", "nf_mul", "star", "phi_k", "psi_k",
]


@dataclass(frozen=True)
class AffineAuto:
    """The automorphism of K[h] with h -> q*h + h0.

    Composition follows algebra maps: ``(s @ t)(p) == s(t(p))``.
    """

    q: object
    h0: object
    field: Field = RATIONAL

    def __post_init__(self):
        object.__setattr__(self, "q", self.field(self.q))
        object.__setattr__(self, "h0", self.field(self.h0))
        if not self.q:
            raise ValueError("automorphism parameter must be nonzero")

    @classmethod
    def identity(cls, field: Field = RATIONAL) -> "AffineAuto":
        return cls(1, 0, field)

    def is_identity(self) -> bool:
        return self.q == 1 and not self.h0

    def image_of_h(self) -> Poly:
        return Poly((self.h0, self.q), self.field)

    def __call__(self, p: Poly) -> Poly:
        if p.field is not self.field:
            raise ModeError()
        if p.is_constant():
            return p
        return p.substitute_affine(self.q, self.h0)

    def __matmul__(self, other: "AffineAuto") -> "AffineAuto":
        # s(t(h)) = t.q * s(h) + t.h0
        if other.field is not self.field:
            raise ModeError()
        return AffineAuto(other.q * self.q, other.q * self.h0 + other.h0, self.field)

    def inverse(self) -> "AffineAuto":
        qi = self.field.one / self.q
        return AffineAuto(qi, -self.h0 * qi, self.field)

    def __pow__(self, n: int) -> "AffineAuto":
        base = self if n >= 0 else self.inverse()
        out = AffineAuto.identity(self.field)
        for _ in range(abs(n)):
            out = out @ base
        return out

    def conjugate_by(self, tau: "AffineAuto") -> "AffineAuto":
        """tau sigma tau^-1."""
        return tau @ self @ tau.inverse()

    def __str__(self):
        return f"h -> {format_poly(self.image_of_h())}"


class GWA:
    """A presentation K[h](sigma, P) together with its normal-form engine."""

    def __init__(self, sigma: AffineAuto, P: Poly, name: str | None = None):
        if P.field is not sigma.field:
            raise ModeError()
        self.sigma = sigma
        self.P = P
        self.field = P.field
        self.name = name
        self._autos: Dict[int, AffineAuto] = {0: AffineAuto.identity(self.field)}
        self._phi: Dict[int, Poly] = {}
        self._psi: Dict[int, Poly] = {}
        self._shifted: Dict[tuple, Poly] = {}

    @classmethod
    def from_params(cls, q, h0, P, mode="rational", name=None) -> "GWA":
        fld = get_field(mode)
        if isinstance(P, str):
            P = parse_poly(P, fld)
        elif not isinstance(P, Poly):
            P = Poly(P, fld)
        return cls(AffineAuto(q, h0, fld), P, name=name)

    def __eq__(self, other):
        return (isinstance(other, GWA) and self.sigma == other.sigma
                and self.P == other.P)

    def __hash__(self):
        return hash((self.sigma, self.P))

    def __repr__(self):
        return f"GWA(sigma: {self.sigma}, P = {self.P}, mode={self.field.name})"

    def to_json(self) -> dict:
        return {"mode": self.field.name, "q": str(self.sigma.q),
                "h0": str(self.sigma.h0), "poly": str(self.P)}

    # automorphism powers, cached
    def auto(self, n: int) -> AffineAuto:
        a = self._autos.get(n)
        if a is None:
            a = self.sigma ** n
            self._autos[n] = a
        return a

    def shift(self, p: Poly, n: int) -> Poly:
        """sigma^n(p)."""
        if n == 0 or p.is_constant():
            return p
        key = (p, n)
        out = self._shifted.get(key)
        if out is None:
            out = self.auto(n)(p)
            if len(self._shifted) > 50000:
                self._shifted.clear()
            self._shifted[key] = out
        return out

    def phi(self, k: int) -> Poly:
        """Normal form of y^k x^k: prod_{i<k} sigma^-i(P)."""
        if k < 1:
            raise ValueError("k must be at least 1")
        out = self._phi.get(k)
        if out is None:
            out = self.P if k == 1 else self.phi(k - 1) * self.shift(self.P, -(k - 1))
            self._phi[k] = out
        return out

    def psi(self, k: int) -> Poly:
        """Normal form of x^k y^k: prod_{1<=i<=k} sigma^i(P)."""
        if k < 1:
            raise ValueError("k must be at least 1")
        out = self._psi.get(k)
        if out is None:
            step = self.shift(self.P, k)
            out = step if k == 1 else self.psi(k - 1) * step
            self._psi[k] = out
        return out

    # elements
    def element(self, components: Mapping[int, object] | None = None) -> "GWAElement":
        comps = {}
        for d, p in (components or {}).items():
            if isinstance(p, str):
                p = parse_poly(p, self.field)
            elif not isinstance(p, Poly):
                p = Poly.const(p, self.field)
            if p.field is not self.field:
                raise ModeError()
            if p:
                comps[int(d)] = p
        return GWAElement(self, comps)

    def zero(self) -> "GWAElement":
        return GWAElement(self, {})

    def one(self) -> "GWAElement":
        return GWAElement(self, {0: Poly.one(self.field)})

    def scalar(self, c) -> "GWAElement":
        return self.element({0: Poly.const(c, self.field)})

    @property
    def h(self) -> "GWAElement":
        return GWAElement(self, {0: Poly.h(self.field)})

    @property
    def x(self) -> "GWAElement":
        return GWAElement(self, {-1: Poly.one(self.field)})

    @property
    def y(self) -> "GWAElement":
        return GWAElement(self, {1: Poly.one(self.field)})

    def word_factor(self, d1: int, d2: int) -> Poly:
        """Polynomial c with w_{d1} w_{d2} = c w_{d1+d2} (w_d = y^d, 1, x^-d)."""
        if d1 >= 0 and d2 >= 0 or d1 <= 0 and d2 <= 0:
            return Poly.one(self.field)
        if d1 > 0:
            m = -d2
            if d1 >= m:
                return self.shift(self.phi(m), -(d1 - m))
            return self.phi(d1)
        m = -d1
        if m >= d2:
            return self.shift(self.psi(d2), m - d2)
        return self.psi(m)

    def mul(self, u: "GWAElement", v: "GWAElement") -> "GWAElement":
        self._own(u)
        self._own(v)
        out: Dict[int, Poly] = {}
        for d1, p in u.components.items():
            for d2, r in v.components.items():
                c = self.word_factor(d1, d2)
                term = p * self.shift(r, -d1)
                if not c.is_constant() or c.coeff(0) != 1:
                    term = term * c
                d = d1 + d2
                out[d] = out[d] + term if d in out else term
        return GWAElement(self, {d: p for d, p in out.items() if p})

    def add(self, u: "GWAElement", v: "GWAElement") -> "GWAElement":
        self._own(u)
        self._own(v)
        out = dict(u.components)
        for d, p in v.components.items():
            out[d] = out[d] + p if d in out else p
        return GWAElement(self, {d: p for d, p in out.items() if p})

    def star(self, u: "GWAElement") -> "GWAElement":
        """Anti-automorphism fixing K[h] with x <-> y: (d, p) -> (-d, sigma^d(p))."""
        self._own(u)
        return GWAElement(self, {-d: self.shift(p, d) for d, p in u.components.items()})

    def _own(self, u: "GWAElement"):
        if u.algebra is not self and u.algebra != self:
            if u.algebra.field is not self.field:
                raise ModeError()
            raise ValueError("element belongs to a different presentation")

    def parse(self, text: str) -> "GWAElement":
        return eval_to_normal_form(_expr.parse(text, mode=self.field.name), self)

    def element_from_json(self, data) -> "GWAElement":
        if isinstance(data, str):
            data = json.loads(data)
        return self.element({int(d): parse_poly(p, self.field) for d, p in data.items()})


class GWAElement:
    """Finitely supported map degree -> nonzero polynomial, bound to a presentation."""

    __slots__ = ("algebra", "components")

    def __init__(self, algebra: GWA, components: Dict[int, Poly]):
        self.algebra = algebra
        self.components = components

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.algebra.add(self, other)

    def __radd__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.algebra.add(other, self)

    def __neg__(self):
        return GWAElement(self.algebra, {d: -p for d, p in self.components.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.algebra.add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.algebra.add(other, -self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.algebra.mul(self, other)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.algebra.mul(other, self)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def _coerce(self, other):
        if isinstance(other, GWAElement):
            return other
        if isinstance(other, Poly):
            return self.algebra.element({0: other})
        if isinstance(other, (int, Fraction, RatFunc)) and not isinstance(other, bool):
            return self.algebra.scalar(other)
        return None

    def __bool__(self):
        return bool(self.components)

    def __eq__(self, other):
        if isinstance(other, GWAElement):
            return self.components == other.components and (
                self.algebra is other.algebra or self.algebra == other.algebra)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.components == o.components

    def __hash__(self):
        return hash(tuple(sorted(self.components.items())))

    @property
    def degrees(self) -> list:
        return sorted(self.components)

    def component(self, d: int) -> Poly:
        return self.components.get(d, Poly.zero(self.algebra.field))

    def homogeneous_degree(self):
        """The single degree of a homogeneous nonzero element, else None."""
        return self.degrees[0] if len(self.components) == 1 else None

    def star(self) -> "GWAElement":
        return self.algebra.star(self)

    def to_json(self) -> dict:
        return {str(d): str(self.components[d]) for d in self.degrees}

    def __repr__(self):
        return f"GWAElement({self})"

    def __str__(self):
        if not self.components:
            return "0"
        order = sorted((d for d in self.components if d > 0), reverse=True)
        order += [0] if 0 in self.components else []
        order += sorted((d for d in self.components if d < 0), reverse=True)
        parts = []
        for d in order:
            p = self.components[d]
            ps = str(p)
            if d == 0:
                text = ps
            else:
                word = ("y" if d > 0 else "x") + (f"^{abs(d)}" if abs(d) > 1 else "")
                if ps in ("1", "-1"):
                    text = ps[:-1] + word
                elif " " in ps or ps.startswith("("):
                    text = f"({ps})*{word}"
                else:
                    text = f"{ps}*{word}"
            if parts and text.startswith("-") and " " not in text:
                parts.append(" - " + text[1:])
            else:
                parts.append((" + " if parts else "") + text)
        return "".join(parts)


# -- module-level operations --------------------------------------------------

def nf_mul(u: GWAElement, v: GWAElement, pres: GWA | None = None) -> GWAElement:
    return (pres or u.algebra).mul(u, v)


def nf_add(u: GWAElement, v: GWAElement) -> GWAElement:
    return u.algebra.add(u, v)


def star(u: GWAElement, pres: GWA | None = None) -> GWAElement:
    return (pres or u.algebra).star(u)


def phi_k(pres: GWA, k: int) -> Poly:
    return pres.phi(k)


def psi_k(pres: GWA, k: int) -> Poly:
    return pres.psi(k)


def eval_to_normal_form(tree, pres: GWA) -> GWAElement:
    atoms = {"h": pres.h, "x": pres.x, "y": pres.y}
    if pres.field.generic:
        atoms["q"] = pres.scalar(RatFunc.q())

    def divide(a: GWAElement, b: GWAElement) -> GWAElement:
        if set(b.components) - {0} or b.component(0).degree > 0:
            raise ValueError("can only divide by a scalar")
        if not b:
            raise ZeroDivisionError("division by zero")
        c = pres.field.one / b.component(0).constant_value()
        return GWAElement(pres, {d: p.scale(c) for d, p in a.components.items()})

    return _expr.evaluate(tree, atoms, pres.scalar, divide)


def conjugate_presentation(pres: GWA, tau: AffineAuto):
    """The isomorphic presentation K[h](tau sigma tau^-1, tau(P)) and the transport map."""
    new = GWA(pres.sigma.conjugate_by(tau), tau(pres.P))

    def transport(u: GWAElement) -> GWAElement:
        pres._own(u)
        return GWAElement(new, {d: tau(p) for d, p in u.components.items()})

    return new, transport


@dataclass
class Canonicalization:
    presentation: GWA
    tag: str
    trace: list = field(default_factory=list)
    source: GWA | None = None

    @property
    def tau(self) -> AffineAuto:
        """Composite automorphism; the new presentation is the conjugate by it."""
        out = AffineAuto.identity(self.presentation.field)
        for _, t in self.trace:
            out = t @ out
        return out

    def transport(self, u: GWAElement) -> GWAElement:
        tau = self.tau
        return GWAElement(self.presentation, {d: tau(p) for d, p in u.components.items()})

    def to_json(self) -> dict:
        return {
            "tag": self.tag,
            "presentation": self.presentation.to_json(),
            "trace": [{"step": label, "tau": str(t)} for label, t in self.trace],
        }


def canonicalize(pres: GWA) -> Canonicalization:
    """Conjugate to sigma = id, h -> h-1 or h -> q*h, then normalize a root of P.

    Classical case: a root in the base field is shifted to 0. Quantum case: a
    nonzero root is scaled to 1. Roots are chosen by smallest height; when the
    required root is not in the base field the tag is
    ``non-canonicalizable-over-field``.
    """
    fld = pres.field
    sigma, P = pres.sigma, pres.P
    trace = []
    cur = pres
    if sigma.is_identity():
        return Canonicalization(pres, "commutative", trace, pres)

    if sigma.q == 1:
        if sigma.h0 != -1:
            tau = AffineAuto(-sigma.h0, 0, fld)
            cur, _ = conjugate_presentation(cur, tau)
            trace.append(("normalize translation to h -> h - 1", tau))
        if cur.P.is_constant() or not cur.P.coeff(0):
            return Canonicalization(cur, "classical", trace, pres)
        roots = rational_roots(cur.P)
        if not roots:
            return Canonicalization(cur, "non-canonicalizable-over-field", trace, pres)
        tau = AffineAuto(1, roots[0], fld)
        cur, _ = conjugate_presentation(cur, tau)
        trace.append((f"shift root {roots[0]} to 0", tau))
        return Canonicalization(cur, "classical", trace, pres)

    if sigma.h0:
        fixed = sigma.h0 / (1 - sigma.q)
        tau = AffineAuto(1, fixed, fld)
        cur, _ = conjugate_presentation(cur, tau)
        trace.append((f"move fixed point {fixed} to 0", tau))
    Pc = cur.P
    nonzero_root_exists = not Pc.is_constant() and any(Pc.coeffs[:-1])
    if not nonzero_root_exists or not Pc(fld.one):
        return Canonicalization(cur, "quantum", trace, pres)
    roots = [r for r in rational_roots(Pc) if r]
    if not roots:
        return Canonicalization(cur, "non-canonicalizable-over-field", trace, pres)
    tau = AffineAuto(roots[0], 0, fld)
    cur, _ = conjugate_presentation(cur, tau)
    trace.append((f"scale root {roots[0]} to 1", tau))
    return Canonicalization(cur, "quantum", trace, pres)


def ideal_generator_lambda(pres: GWA, i: int, j: int):
    """Generator and degree of A_{i+1} A_{-(j+1)}: the normal form of y^{i+1} x^{j+1}."""
    if i < 0 or j < 0:
        raise ValueError("indices must be nonnegative")
    d1, d2 = i + 1, -(j + 1)
    return pres.word_factor(d1, d2), i - j


def ideal_generator_C(pres: GWA, i: int, j: int):
    """Generator and degree of A_i A_{-j} (i, j >= 0)."""
    if i < 0 or j < 0:
        raise ValueError("indices must be nonnegative")
    if i == 0 or j == 0:
        return Poly.one(pres.field), i - j
    return pres.word_factor(i, -j), i - j


def is_graded_for_weights(pres: GWA, wh: int, wx: int, wy: int) -> bool:
    """Whether all defining relations are homogeneous for deg h, x, y = wh, wx, wy."""
    sigma = pres.sigma
    if sigma.h0 and wh != 0:
        return False

    def single_weight(p: Poly, target: int) -> bool:
        return all(k * wh == target for k, c in enumerate(p.coeffs) if c)

    target = wx + wy
    return single_weight(pres.P, target) and single_weight(sigma(pres.P), target)
