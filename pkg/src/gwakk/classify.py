"""KK^alg classification of GWAs K[h](sigma, P) with sigma(h) = q h + h0.

Decision order:

* P constant: P = 0 gives C, P != 0 gives SC + C (no condition on sigma).
* P nonconstant with sigma = id: open (commutative).
* P nonconstant, q != 1 a root of unity: open.
* otherwise C^r with r the number of distinct roots of P.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .gwa import GWA, canonicalize, is_graded_for_weights
from .poly import Poly, distinct_root_count, has_root_other_than, rational_roots, squarefree_part
from .scalar import GENERIC, RATIONAL, is_root_of_unity

__all__ = [
    "KKClass", "Classified", "Open", "Verdict", "classify", "named_example",
    "certificate", "EXAMPLES", "registry", "a1_am1_membership",
]


@dataclass(frozen=True)
class KKClass:
    c_copies: int
    sc_copies: int = 0

    def __post_init__(self):
        if self.c_copies < 0 or self.sc_copies < 0 or self.c_copies + self.sc_copies < 1:
            raise ValueError("a class needs at least one summand")

    def __str__(self):
        if self.sc_copies == 0:
            return f"C^{self.c_copies}"
        sc = "SC" if self.sc_copies == 1 else f"SC^{self.sc_copies}"
        if self.c_copies == 0:
            return sc
        c = "C" if self.c_copies == 1 else f"C^{self.c_copies}"
        return f"{sc}+{c}"


# Short statements of the results behind each verdict.
CITATIONS = {
    "case1-N-graded": "P = 0: A is N-graded for deg h = 0, deg x = deg y = 1 with degree-0 part K[h], "
                      "so A is KK^alg-equivalent to C.",
    "tame-smooth": "P a nonzero constant: A_1 A_-1 = A_0, the crossed product is tame smooth and "
                   "A is KK^alg-equivalent to SC + C; kk_0 = Z and kk_1 = Z.",
    "main-theorem-classical": "P nonconstant with r distinct roots and sigma a nontrivial translation: "
                              "A is KK^alg-equivalent to C^r; kk_0 = Z^r and kk_1 = 0.",
    "main-theorem-quantum": "P nonconstant with r distinct roots, q not a root of unity and P having a root "
                            "other than h0/(1-q): A is KK^alg-equivalent to C^r; kk_0 = Z^r and kk_1 = 0.",
    "case4-N-graded": "q not a root of unity and h0/(1-q) the only root of P: A is N-graded with "
                      "deg h = 2 and deg x = deg y = deg P, so A is KK^alg-equivalent to C.",
    "root_of_unity": "q != 1 a root of unity with P nonconstant: no result is available.",
    "commutative": "sigma = id with P nonconstant: A is commutative and no result is available.",
}


@dataclass(frozen=True)
class Classified:
    kk_class: KKClass
    r: Optional[int]
    case_tag: str
    citation: str

    status = "classified"

    @property
    def k0_rank(self) -> int:
        return self.kk_class.c_copies

    @property
    def k1_rank(self) -> int:
        return self.kk_class.sc_copies

    def to_json(self) -> dict:
        return {"status": "classified", "class": str(self.kk_class), "r": self.r,
                "k0_rank": self.k0_rank, "k1_rank": self.k1_rank,
                "case": self.case_tag, "citation": self.citation}


@dataclass(frozen=True)
class Open:
    reason: str
    citation: str

    status = "open"

    def to_json(self) -> dict:
        return {"status": "open", "reason": self.reason, "citation": self.citation}


Verdict = Classified | Open


def _classified(cls: KKClass, r, tag) -> Classified:
    return Classified(cls, r, tag, CITATIONS[tag])


def fixed_point(pres: GWA):
    """h0/(1-q), the fixed point of sigma (None when q = 1)."""
    q, h0 = pres.sigma.q, pres.sigma.h0
    return None if q == 1 else h0 / (1 - q)


def classify(pres: GWA) -> Verdict:
    P, q, h0 = pres.P, pres.sigma.q, pres.sigma.h0
    if P.is_constant():
        if not P:
            return _classified(KKClass(1), None, "case1-N-graded")
        return _classified(KKClass(1, 1), None, "tame-smooth")
    if q == 1 and not h0:
        return Open("commutative", CITATIONS["commutative"])
    if q != 1 and is_root_of_unity(q):
        return Open("root_of_unity", CITATIONS["root_of_unity"])
    r = distinct_root_count(P)
    if q == 1:
        return _classified(KKClass(r), r, "main-theorem-classical")
    if has_root_other_than(P, fixed_point(pres)):
        return _classified(KKClass(r), r, "main-theorem-quantum")
    return _classified(KKClass(r), r, "case4-N-graded")


def a1_am1_membership(pres: GWA) -> bool:
    """Whether 1 lies in A_1 A_-1 = (P), i.e. P divides 1."""
    return bool(pres.P) and pres.P.is_constant()


# -- named examples -----------------------------------------------------------------

EXAMPLES = {
    "weyl": "first Weyl algebra: sigma(h) = h - 1, P = h",
    "quantum-weyl": "quantum Weyl algebra: sigma(h) = q h, P = h - 1 (q generic unless --q is given)",
    "quantum-plane": "quantum plane: sigma(h) = q h, P = h (q generic unless --q is given)",
    "b-lambda": "primitive quotient of U(sl2): sigma(h) = h - 1, P = -h(h+1) - lambda/4",
    "wpq": "quantum weighted projective line O(WP_q(k,l)): sigma(h) = q^(2l) h, "
           "P = h^k prod_{i<l} (1 - q^(-2i) h), generic q",
}


def _q_value(q, field_name: str | None):
    if q is None or (isinstance(q, str) and q.strip() == "q"):
        return GENERIC, GENERIC.q
    fld = GENERIC if field_name == "generic" else RATIONAL
    val = fld.parse(q) if isinstance(q, str) else fld(q)
    if not val:
        raise ValueError("automorphism parameter must be nonzero")
    return fld, val


def named_example(name: str, lam=None, k: int | None = None, l: int | None = None,
                  q=None, mode: str | None = None) -> GWA:
    if name == "weyl":
        return GWA.from_params(1, -1, "h", name="weyl")
    if name in ("quantum-weyl", "quantum-plane"):
        fld, qv = _q_value(q, mode)
        P = Poly.h(fld) - 1 if name == "quantum-weyl" else Poly.h(fld)
        return GWA.from_params(qv, 0, P, fld.name, name=name)
    if name == "b-lambda":
        if lam is None:
            raise ValueError("b-lambda needs the parameter lambda")
        lv = RATIONAL.parse(lam) if isinstance(lam, str) else RATIONAL(lam)
        h = Poly.h(RATIONAL)
        P = -h * (h + 1) - Poly.const(lv / 4, RATIONAL)
        return GWA.from_params(1, -1, P, name=f"b-lambda({lv})")
    if name == "wpq":
        if k is None or l is None:
            raise ValueError("wpq needs the parameters k and l")
        if isinstance(k, bool) or isinstance(l, bool) or int(k) != k or int(l) != l or k < 1 or l < 1:
            raise ValueError("wpq needs integers k, l >= 1")
        k, l = int(k), int(l)
        fld = GENERIC
        qq = fld.q
        h = Poly.h(fld)
        P = h ** k
        for i in range(l):
            P = P * (Poly.one(fld) - h.scale(qq ** (-2 * i)))
        return GWA.from_params(qq ** (2 * l), 0, P, "generic", name=f"wpq({k},{l})")
    raise ValueError(f"unknown example {name!r}; known: {', '.join(EXAMPLES)}")


def registry() -> list:
    """(label, presentation) pairs used for golden classification output."""
    out = [
        ("weyl", named_example("weyl")),
        ("quantum-weyl", named_example("quantum-weyl")),
        ("quantum-plane", named_example("quantum-plane")),
    ]
    for lam in (0, 1, 5):
        out.append((f"b-lambda-{lam}", named_example("b-lambda", lam=lam)))
    for k in range(1, 5):
        for l in range(1, 5):
            out.append((f"wpq-{k}-{l}", named_example("wpq", k=k, l=l)))
    out += [
        ("zero-poly", GWA.from_params(1, -1, "0")),
        ("constant-poly", GWA.from_params(1, -1, "3")),
        ("root-of-unity", GWA.from_params(-1, 0, "h*(h - 1)")),
        ("commutative", GWA.from_params(1, 0, "h")),
    ]
    return out


# -- certificate ----------------------------------------------------------------------

def certificate(pres: GWA) -> dict:
    verdict = classify(pres)
    canon = canonicalize(pres)
    P = pres.P
    roots: dict = {}
    if not P.is_constant():
        fp = fixed_point(pres)
        sf = squarefree_part(P)
        roots = {
            "r": distinct_root_count(P),
            "squarefree_part": str(sf),
            "roots_in_base_field": [str(x) for x in rational_roots(P)],
            "roots_outside_base_field": sf.degree - len(rational_roots(P)),
            "fixed_point": None if fp is None else str(fp),
            "only_root_is_fixed_point": None if fp is None else not has_root_other_than(P, fp),
        }
    witness = None
    if verdict.status == "classified" and verdict.case_tag == "case1-N-graded":
        witness = {"weights": [0, 1, 1], "homogeneous": is_graded_for_weights(pres, 0, 1, 1)}
    elif verdict.status == "classified" and verdict.case_tag == "case4-N-graded":
        n = canon.presentation.P.degree
        witness = {"weights": [2, n, n],
                   "homogeneous": is_graded_for_weights(canon.presentation, 2, n, n),
                   "checked_on": "canonical presentation"}
    elif verdict.status == "classified" and verdict.case_tag == "tame-smooth":
        witness = {"one_in_A1_Am1": a1_am1_membership(pres)}
    return {
        "presentation": pres.to_json(),
        "verdict": verdict.to_json(),
        "canonical_form": canon.to_json(),
        "root_analysis": roots,
        "grading_witness": witness,
    }


def verdict_json(pres: GWA) -> str:
    return json.dumps(classify(pres).to_json(), sort_keys=True)
