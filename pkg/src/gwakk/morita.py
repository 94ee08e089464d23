"""Morita contexts for the Toeplitz kernel and for the algebra C, checked on cut matrices.

Both contexts use the families

    xi_i  = e_(i,0) (x) U1^i        eta_j = e_(0,j) (x) Um1^j

inside the Toeplitz algebra with matrix coefficients. An element of the ideal
``sum e_ij (x) A_(i+1) A_-(j+1)`` is stored by its polynomial data p_ij, meaning
the entry y^(i+1) p_ij x^(j+1); for ``sum e_ij (x) A_i A_-j`` the entry is
y^i p_ij x^j. Every identity is compared on a top-left window whose size is
recorded in the report.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, Tuple

from .gwa import GWA, GWAElement
from .poly import Poly
from .rep import TruncatedMatrix, basis_matrices, represent, representation_kind
from .sampling import case_rng, random_poly
from .toeplitz import ToeplitzElement, t_mul

__all__ = ["MoritaContext", "build_context", "verify_lambda_context", "verify_C_context",
           "lambda_element", "C_element", "rho_bar", "toeplitz_window_equal"]

Data = Dict[Tuple[int, int], Poly]


@dataclass
class MoritaContext:
    pres: GWA
    truncation: int
    max_index: int
    xi: Dict[int, ToeplitzElement] = field(default_factory=dict)
    eta: Dict[int, ToeplitzElement] = field(default_factory=dict)

    def sum_xi_eta(self) -> ToeplitzElement:
        out = ToeplitzElement()
        for i in range(self.max_index + 1):
            out = out + t_mul(self.xi[i], self.eta[i])
        return out


def build_context(M: int, max_index: int, pres: GWA) -> MoritaContext:
    representation_kind(pres)
    fld = pres.field
    U1 = basis_matrices(M, "U1", field=fld)
    Um1 = basis_matrices(M, "Um1", field=fld)
    ctx = MoritaContext(pres, M, max_index)
    p1 = TruncatedMatrix.identity(M, fld)
    pm1 = TruncatedMatrix.identity(M, fld)
    for i in range(max_index + 1):
        ctx.xi[i] = ToeplitzElement(K={(i, 0): p1})
        ctx.eta[i] = ToeplitzElement(K={(0, i): pm1})
        p1, pm1 = U1 @ p1, Um1 @ pm1
    return ctx


def _word(pres: GWA, n: int, p: Poly, m: int) -> GWAElement:
    """y^n p x^m in normal form."""
    return pres.y ** n * pres.element({0: p}) * pres.x ** m


def lambda_element(pres: GWA, data: Data) -> ToeplitzElement:
    return ToeplitzElement(K={(i, j): _word(pres, i + 1, p, j + 1) for (i, j), p in data.items()})


def C_element(pres: GWA, data: Data) -> ToeplitzElement:
    return ToeplitzElement(K={(i, j): _word(pres, i, p, j) for (i, j), p in data.items()})


def rho_bar(w: ToeplitzElement, pres: GWA, M: int) -> ToeplitzElement:
    return w.map_coefficients(lambda c: represent(c, pres, M))


def toeplitz_window_equal(a: ToeplitzElement, b: ToeplitzElement, w: int) -> bool:
    if a.L or b.L:
        return a.L == b.L and _k_window_equal(a, b, w)
    return _k_window_equal(a, b, w)


def _k_window_equal(a, b, w):
    for key in set(a.K) | set(b.K):
        x = a.K[key].window(w) if key in a.K else {}
        y = b.K[key].window(w) if key in b.K else {}
        if x != y:
            return False
    return True


def _psi0(pres: GWA, k: int) -> Poly:
    """x^k y^k, with the empty product at k = 0."""
    return pres.psi(k) if k else Poly.one(pres.field)


def _rprime(pres: GWA, k: int) -> Poly:
    """The factor with x^k y^(k+1) = y * factor."""
    return pres.shift(_psi0(pres, k), 1)


def _random_data(pres: GWA, rng: random.Random, max_index: int, poly_degree: int) -> Data:
    data: Data = {}
    for _ in range(rng.randint(1, 3)):
        key = (rng.randint(0, max_index), rng.randint(0, max_index))
        p = random_poly(pres.field, rng, poly_degree, height=5)
        if p:
            data[key] = p
    return data


def _budget(M: int, max_index: int, poly_degree: int) -> int:
    w = M - (2 * max_index + 2 + poly_degree)
    if w < 1:
        raise ValueError("truncation too small for the index budget")
    return w


def _check_case(ctx: MoritaContext, data: Data, window: int, kind: str) -> list:
    """Run the context identities on one element; return the names of failed checks."""
    pres, M, n = ctx.pres, ctx.truncation, ctx.max_index
    shift = 1 if kind == "lambda" else 0
    build = lambda_element if kind == "lambda" else C_element
    rb = rho_bar(build(pres, data), pres, M)
    failed = []

    # (a) eta_j rho(w) xi_i is e00 (x) rho(candidate)
    for j in range(n + 1):
        left = t_mul(ctx.eta[j], rb)
        for i in range(n + 1):
            got = t_mul(left, ctx.xi[i])
            if got.L or set(got.K) - {(0, 0)}:
                failed.append(f"block shape ({j},{i})")
                continue
            p = data.get((j, i))
            if p is None:
                want = ToeplitzElement()
            elif kind == "lambda":
                # x^j y^(j+1) = y sigma(psi_j)
                cand = pres.y * pres.element({0: _rprime(pres, j) * p}) * pres.x
                want = ToeplitzElement(K={(0, 0): represent(cand, pres, M)})
            else:
                cand = pres.element({0: _psi0(pres, j) * p})
                want = ToeplitzElement(K={(0, 0): represent(cand, pres, M)})
            if not toeplitz_window_equal(got, want, window):
                failed.append(f"eta_{j} w xi_{i}")

    # (b) (sum xi_i eta_i) w = w
    if not toeplitz_window_equal(t_mul(ctx.sum_xi_eta(), rb), rb, window):
        failed.append("sum xi_i eta_i")

    # (c) closure: w xi_k xi'_0 and eta'_0 eta_l w stay inside the ideal
    for k in range(n + 1):
        for l in range(1, n + 1):
            if t_mul(ctx.xi[k], ctx.xi[l]):
                failed.append(f"xi_{k} xi_{l} != 0")
        got = t_mul(rb, t_mul(ctx.xi[k], ctx.xi[0]))
        right = {(i, 0): _word(pres, i + shift, p, shift) for (i, j), p in data.items() if j == k}
        if not toeplitz_window_equal(got, rho_bar(ToeplitzElement(K=right), pres, M), window):
            failed.append(f"w xi_{k} xi'_0")
        got = t_mul(t_mul(ctx.eta[0], ctx.eta[k]), rb)
        left_data = {}
        for (i, j), p in data.items():
            if i != k:
                continue
            if kind == "lambda":
                left_data[(0, j)] = _word(pres, 1, _rprime(pres, k) * p, j + 1)
            else:
                left_data[(0, j)] = _word(pres, 0, _psi0(pres, k) * p, j)
        if not toeplitz_window_equal(got, rho_bar(ToeplitzElement(K=left_data), pres, M), window):
            failed.append(f"eta'_0 eta_{k} w")
    return failed


def _verify(kind: str, pres: GWA, cases: int, M: int, max_index: int, seed: int,
            poly_degree: int) -> dict:
    ctx = build_context(M, max_index, pres)
    window = _budget(M, max_index, poly_degree)
    failures = []
    for case in range(cases):
        rng = case_rng(seed, case, f"morita-{kind}")
        data = _random_data(pres, rng, max_index, poly_degree)
        bad = _check_case(ctx, data, window, kind)
        if bad:
            failures.append({"case": case, "checks": bad,
                             "data": [[i, j, p.to_json()] for (i, j), p in sorted(data.items())]})
    return {
        "suite": f"morita-{kind}",
        "presentation": pres.to_json(),
        "truncation": M,
        "max_index": max_index,
        "window": window,
        "cases": cases,
        "failures": failures,
        "passed": not failures,
    }


def verify_lambda_context(pres: GWA, cases: int = 100, M: int = 32, max_index: int = 5,
                          seed: int = 0, poly_degree: int = 2) -> dict:
    return _verify("lambda", pres, cases, M, max_index, seed, poly_degree)


def verify_C_context(pres: GWA, cases: int = 100, M: int = 32, max_index: int = 5,
                     seed: int = 0, poly_degree: int = 2) -> dict:
    return _verify("C", pres, cases, M, max_index, seed, poly_degree)
