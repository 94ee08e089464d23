"""Finitely supported model of the smooth Toeplitz algebra.

An element is ``sum K[i,j] e_ij + sum L[k] v_k`` with coefficients in any ring
whose elements support ``+``, ``-``, ``*`` and truth testing. ``S = v_1`` and
``S* = v_-1``. Structure rules::

    e_ij e_kl = delta_jk e_il      v_k e_ij = e_(i+k),j      e_ij v_k = e_i,(j-k)
    v_a v_b   = v_(a+b)                                   (b >= 0)
    v_a v_-l  = v_(a-l) - sum_{t<l} e_(t+a-l),t            (l > 0)

where any e with a negative index vanishes. Coefficients are multiplied left to
right, so noncommutative coefficient rings (algebra elements, matrices,
Toeplitz elements) are handled correctly.

Grading convention for T_A: ``v_k`` pairs with the degree-k component of A, so
``S`` travels with ``y`` (degree +1) and ``S*`` with ``x``.
"""

from __future__ import annotations

import random
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

from .gwa import GWA, GWAElement
from .poly import Poly, divides
from .sampling import case_rng, random_poly

__all__ = [
    "ToeplitzElement", "t_mul", "S", "Sstar", "e", "v", "one",
    "build_TA_word", "pbar", "section", "lambda_membership", "verify_extension",
    "endpoint_diffotopy", "diffotopy_map", "random_word", "verify_structure",
    "verify_diffotopy",
]


def _acc(d: dict, key, val):
    if not val:
        return
    if key in d:
        s = d[key] + val
        if s:
            d[key] = s
        else:
            del d[key]
    else:
        d[key] = val


class ToeplitzElement:
    __slots__ = ("K", "L")

    def __init__(self, K: Dict[Tuple[int, int], object] | None = None,
                 L: Dict[int, object] | None = None):
        self.K: Dict[Tuple[int, int], object] = {}
        self.L: Dict[int, object] = {}
        for (i, j), c in (K or {}).items():
            if i < 0 or j < 0:
                raise ValueError("matrix unit indices must be nonnegative")
            _acc(self.K, (i, j), c)
        for k, c in (L or {}).items():
            _acc(self.L, k, c)

    @classmethod
    def _raw(cls, K, L):
        obj = object.__new__(cls)
        obj.K, obj.L = K, L
        return obj

    def __add__(self, other):
        if not isinstance(other, ToeplitzElement):
            return NotImplemented
        K, L = dict(self.K), dict(self.L)
        for k, c in other.K.items():
            _acc(K, k, c)
        for k, c in other.L.items():
            _acc(L, k, c)
        return ToeplitzElement._raw(K, L)

    def __neg__(self):
        return ToeplitzElement._raw({k: -c for k, c in self.K.items()},
                                    {k: -c for k, c in self.L.items()})

    def __sub__(self, other):
        if not isinstance(other, ToeplitzElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ToeplitzElement):
            return t_mul(self, other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 1:
            raise ValueError("use a positive exponent; the unit depends on the coefficient ring")
        out = self
        for _ in range(n - 1):
            out = t_mul(out, self)
        return out

    def scale_left(self, c) -> "ToeplitzElement":
        return ToeplitzElement({k: c * x for k, x in self.K.items()}, {k: c * x for k, x in self.L.items()})

    def map_coefficients(self, f: Callable) -> "ToeplitzElement":
        return ToeplitzElement({k: f(x) for k, x in self.K.items()}, {k: f(x) for k, x in self.L.items()})

    def __bool__(self):
        return bool(self.K or self.L)

    def __eq__(self, other):
        if not isinstance(other, ToeplitzElement):
            return NotImplemented
        return self.K == other.K and self.L == other.L

    def __hash__(self):
        return hash((frozenset(self.K.items()), frozenset(self.L.items())))

    def to_json(self, coeff: Callable = None):
        coeff = coeff or _coeff_json
        return {
            "K": [[i, j, coeff(c)] for (i, j), c in sorted(self.K.items())],
            "L": [[k, coeff(c)] for k, c in sorted(self.L.items())],
        }

    def __repr__(self):
        parts = [f"({c})*v{k}" for k, c in sorted(self.L.items())]
        parts += [f"({c})*e{i},{j}" for (i, j), c in sorted(self.K.items())]
        return " + ".join(parts) if parts else "0"

    __str__ = __repr__


def _coeff_json(c):
    if hasattr(c, "to_json"):
        return c.to_json()
    return c if isinstance(c, int) else str(c)


def t_mul(a: ToeplitzElement, b: ToeplitzElement) -> ToeplitzElement:
    K: Dict[Tuple[int, int], object] = {}
    L: Dict[int, object] = {}
    # e * e
    if a.K and b.K:
        by_row: Dict[int, list] = {}
        for (k, l), c in b.K.items():
            by_row.setdefault(k, []).append((l, c))
        for (i, j), c in a.K.items():
            for l, d in by_row.get(j, ()):
                _acc(K, (i, l), c * d)
    # e * v
    for (i, j), c in a.K.items():
        for k, d in b.L.items():
            if j - k >= 0:
                _acc(K, (i, j - k), c * d)
    # v * e
    for k, c in a.L.items():
        for (i, j), d in b.K.items():
            if i + k >= 0:
                _acc(K, (i + k, j), c * d)
    # v * v
    for ka, c in a.L.items():
        for kb, d in b.L.items():
            cd = c * d
            if not cd:
                continue
            _acc(L, ka + kb, cd)
            if kb < 0:
                s = ka + kb
                for t in range(-kb):
                    if t + s >= 0:
                        _acc(K, (t + s, t), -cd)
    return ToeplitzElement._raw(K, L)


# -- generators (integer coefficients unless one is given) -----------------------

def v(k: int, c=1) -> ToeplitzElement:
    return ToeplitzElement(L={k: c})


def e(i: int, j: int, c=1) -> ToeplitzElement:
    return ToeplitzElement(K={(i, j): c})


def one(c=1) -> ToeplitzElement:
    return v(0, c)


def S(c=1) -> ToeplitzElement:
    return v(1, c)


def Sstar(c=1) -> ToeplitzElement:
    return v(-1, c)


# -- T_A for a GWA ----------------------------------------------------------------

def _pick(pres: GWA, kind: str, p) -> ToeplitzElement:
    if not isinstance(p, Poly):
        p = Poly([p], pres.field) if not isinstance(p, str) else pres.parse(p).component(0)
    if kind in ("1", "one"):
        return v(0, pres.element({0: p}))
    if kind == "S":
        return v(1, pres.element({1: p}))
    if kind in ("S*", "Sstar"):
        return v(-1, pres.element({-1: p}))
    raise ValueError(f"unknown generator {kind!r}; expected '1', 'S' or 'S*'")


def build_TA_word(pres: GWA, word: Sequence[Tuple[str, object]]) -> ToeplitzElement:
    """Product of picks ``('1', p)``, ``('S', p)``, ``('S*', p)`` meaning
    1 (x) p, S (x) p*y and S* (x) p*x."""
    if not word:
        return one(pres.one())
    out = _pick(pres, *word[0])
    for pick in word[1:]:
        out = t_mul(out, _pick(pres, *pick))
    return out


def pbar(w: ToeplitzElement, pres: GWA | None = None) -> GWAElement:
    total = None
    for c in w.L.values():
        total = c if total is None else total + c
    if total is None:
        if pres is None:
            for c in w.K.values():
                return c.algebra.zero()
            raise ValueError("cannot infer the algebra of an empty element")
        return pres.zero()
    return total


def section(u: GWAElement) -> ToeplitzElement:
    """Linear lift: the degree-d component goes to v_d (x) u_d."""
    return ToeplitzElement(L={d: u.algebra.element({d: p}) for d, p in u.components.items()})


def lambda_membership(w: ToeplitzElement, pres: GWA) -> bool:
    if w.L:
        return False
    for (i, j), c in w.K.items():
        if not isinstance(c, GWAElement) or c.algebra != pres:
            return False
        if set(c.components) != {i - j}:
            return False
        if not divides(pres.word_factor(i + 1, -(j + 1)), c.components[i - j]):
            return False
    return True


def random_word(pres: GWA, rng: random.Random, length: int, poly_degree: int = 2) -> List[Tuple[str, Poly]]:
    return [(rng.choice(("1", "S", "S*")), random_poly(pres.field, rng, poly_degree, height=5))
            for _ in range(length)]


def _random_generated(pres: GWA, rng: random.Random, max_len: int = 3):
    w = build_TA_word(pres, random_word(pres, rng, rng.randint(1, max_len)))
    if rng.random() < 0.5:
        w = w + build_TA_word(pres, random_word(pres, rng, rng.randint(1, max_len)))
    return w


def verify_extension(pres: GWA, cases: int = 100, seed: int = 0, max_len: int = 3) -> dict:
    """pbar multiplicative on generated pairs; section differences lie in Lambda_A."""
    mult_fail, member_fail = [], []
    kernel_nonzero = 0
    for case in range(cases):
        rng = case_rng(seed, case, "toeplitz-ext")
        w1 = _random_generated(pres, rng, max_len)
        w2 = _random_generated(pres, rng, max_len)
        if pbar(t_mul(w1, w2), pres) != pbar(w1, pres) * pbar(w2, pres):
            mult_fail.append(case)
        for w in (w1, w2, t_mul(w1, w2)):
            diff = w - section(pbar(w, pres))
            if pbar(diff, pres):
                member_fail.append(case)
            elif not lambda_membership(diff, pres):
                member_fail.append(case)
            elif diff:
                kernel_nonzero += 1
    return {
        "suite": "toeplitz-extension",
        "presentation": pres.to_json(),
        "cases": cases,
        "multiplicative_failures": mult_fail,
        "membership_failures": sorted(set(member_fail)),
        "nontrivial_kernel_elements": kernel_nonzero,
        "passed": not mult_fail and not member_fail,
    }


# -- structure relations -----------------------------------------------------------

def verify_structure(bound: int = 6) -> dict:
    """The four relation families for all indices up to ``bound``, plus S*S and SS*."""
    rng = range(bound + 1)
    fails = []
    for i in rng:
        for j in rng:
            for k in rng:
                for l in rng:
                    want = e(i, l) if j == k else ToeplitzElement()
                    if t_mul(e(i, j), e(k, l)) != want:
                        fails.append(("ee", i, j, k, l))
            for k in range(-bound, bound + 1):
                want = e(i + k, j) if i + k >= 0 else ToeplitzElement()
                if t_mul(v(k), e(i, j)) != want:
                    fails.append(("ve", k, i, j))
                want = e(i, j - k) if j - k >= 0 else ToeplitzElement()
                if t_mul(e(i, j), v(k)) != want:
                    fails.append(("ev", i, j, k))
    for k in rng:
        for l in range(1, bound + 1):
            want = v(k - l)
            for t in range(l):
                want = want - t_mul(v(k - l), e(t, t))
            if t_mul(v(k), v(-l)) != want:
                fails.append(("vv", k, l))
    special = {
        "S*S = 1": t_mul(Sstar(), S()) == one(),
        "SS* = 1 - e00": t_mul(S(), Sstar()) == one() - e(0, 0),
    }
    return {"suite": "toeplitz-structure", "bound": bound, "failures": fails,
            "special": special, "passed": not fails and all(special.values())}


# -- endpoint diffotopy in the tensor-square model ----------------------------------
# Outer indices are the first tensor factor; coefficients are the second factor.

def tensor(a: ToeplitzElement, b: ToeplitzElement) -> ToeplitzElement:
    """a (x) b for integer-coefficient a and b."""
    def lift(c):
        return ToeplitzElement({k: c * x for k, x in b.K.items()}, {k: c * x for k, x in b.L.items()})
    return ToeplitzElement({k: lift(c) for k, c in a.K.items()}, {k: lift(c) for k, c in a.L.items()})


def endpoint_diffotopy(generator: str, t: int) -> ToeplitzElement:
    """phi_t(S) = S^2 S* (x) 1 + f(t) e (x) S + g(t) S e (x) 1 with f(0)=0, f(1)=1,
    g = 1 - f; phi_t(S*) is the adjoint expression."""
    if t not in (0, 1):
        raise ValueError("only the endpoints t = 0 and t = 1 are supported")
    ee = e(0, 0)
    if generator == "S":
        base = tensor(t_mul(t_mul(S(), S()), Sstar()), one())
        return base + (tensor(ee, S()) if t else tensor(t_mul(S(), ee), one()))
    if generator in ("S*", "Sstar"):
        base = tensor(t_mul(t_mul(S(), Sstar()), Sstar()), one())
        return base + (tensor(ee, Sstar()) if t else tensor(t_mul(ee, Sstar()), one()))
    raise ValueError(f"unknown generator {generator!r}")


def diffotopy_map(t: int) -> Callable[[ToeplitzElement], ToeplitzElement]:
    """Extend phi_t from S, S* to integer Toeplitz elements, using
    v_k -> phi(S)^k, v_-k -> phi(S*)^k and e_ij -> phi(S)^i (1 - phi(S) phi(S*)) phi(S*)^j."""
    fS, fSs = endpoint_diffotopy("S", t), endpoint_diffotopy("S*", t)
    unit = tensor(one(), one())
    proj = unit - t_mul(fS, fSs)
    powS, powSs = [unit], [unit]

    def pw(cache, g, n):
        while len(cache) <= n:
            cache.append(t_mul(cache[-1], g))
        return cache[n]

    def phi(w: ToeplitzElement) -> ToeplitzElement:
        out = ToeplitzElement()
        for k, c in w.L.items():
            img = pw(powS, fS, k) if k >= 0 else pw(powSs, fSs, -k)
            out = out + img.map_coefficients(lambda x, c=c: x.scale_left(c) if isinstance(x, ToeplitzElement) else c * x)
        for (i, j), c in w.K.items():
            img = t_mul(t_mul(pw(powS, fS, i), proj), pw(powSs, fSs, j))
            out = out + img.map_coefficients(lambda x, c=c: x.scale_left(c))
        return out

    return phi


def verify_diffotopy(cases: int = 100, seed: int = 0, max_len: int = 6) -> dict:
    unit = tensor(one(), one())
    results = {}
    for t in (0, 1):
        phi = diffotopy_map(t)
        fS, fSs = endpoint_diffotopy("S", t), endpoint_diffotopy("S*", t)
        rel = t_mul(fSs, fS) == unit
        fails = []
        for case in range(cases):
            rng = case_rng(seed, case, f"diffotopy-{t}")
            w1 = _int_word(rng, max_len)
            w2 = _int_word(rng, max_len)
            if phi(t_mul(w1, w2)) != t_mul(phi(w1), phi(w2)):
                fails.append(case)
        results[str(t)] = {"S*S preserved": rel, "multiplicative_failures": fails}
    results["phi0(S) = S (x) 1"] = endpoint_diffotopy("S", 0) == tensor(S(), one())
    passed = results["phi0(S) = S (x) 1"] and all(
        r["S*S preserved"] and not r["multiplicative_failures"] for k, r in results.items() if k in ("0", "1"))
    return {"suite": "toeplitz-diffotopy", "cases": cases, "results": results, "passed": passed}


def _int_word(rng: random.Random, max_len: int) -> ToeplitzElement:
    out = one()
    for _ in range(rng.randint(1, max_len)):
        out = t_mul(out, S() if rng.random() < 0.5 else Sstar())
    return out
