"""Property suites over the normal-form engine, and the combined report used by the CLI."""

from __future__ import annotations

from .gwa import GWA, canonicalize, conjugate_presentation
from .poly import divides
from .rep import (RepresentationError, representation_kind, verify_faithfulness,
                  verify_representation)
from .sampling import case_rng, random_auto, random_element, random_poly

__all__ = ["verify_gwa", "verify_all", "representable_form"]


def verify_gwa(pres: GWA, cases: int = 200, seed: int = 0, max_deg: int = 4,
               poly_degree: int = 3, height: int = 10, max_k: int = 6) -> dict:
    """Closed forms for y^k x^k and x^k y^k, associativity, star, grading, A_1 A_-1 = (P)
    and transport along a random conjugation."""
    y, x = pres.y, pres.x
    closed = {}
    for k in range(1, max_k + 1):
        closed[f"y^{k} x^{k}"] = y ** k * x ** k == pres.element({0: pres.phi(k)})
        closed[f"x^{k} y^{k}"] = x ** k * y ** k == pres.element({0: pres.psi(k)})
    failures = {"associativity": [], "star": [], "grading": [], "ideal": [], "transport": []}
    for case in range(cases):
        rng = case_rng(seed, case, "gwa")

        def rand():
            return random_element(pres, rng, max_deg, poly_degree, height)

        u, v, w = rand(), rand(), rand()
        if (u * v) * w != u * (v * w):
            failures["associativity"].append(case)
        if (u * v).star() != v.star() * u.star() or u.star().star() != u:
            failures["star"].append(case)
        d1, d2 = rng.randint(-max_deg, max_deg), rng.randint(-max_deg, max_deg)
        hu = pres.element({d1: random_poly(pres.field, rng, poly_degree, height)})
        hv = pres.element({d2: random_poly(pres.field, rng, poly_degree, height)})
        if not set((hu * hv).components) <= {d1 + d2}:
            failures["grading"].append(case)
        p, r = random_poly(pres.field, rng, poly_degree, height), random_poly(pres.field, rng, poly_degree, height)
        prod = (pres.element({1: p}) * pres.element({-1: r})).component(0)
        if pres.P and not divides(pres.P, prod):
            failures["ideal"].append(case)
        if case < cases // 2:
            new, transport = conjugate_presentation(pres, random_auto(pres.field, rng))
            if transport(u * v) != transport(u) * transport(v):
                failures["transport"].append(case)
    ideal_exact = (pres.y * pres.x).component(0) == pres.P
    return {
        "suite": "gwa",
        "presentation": pres.to_json(),
        "cases": cases,
        "closed_forms": closed,
        "yx = P": ideal_exact,
        "failures": failures,
        "passed": all(closed.values()) and ideal_exact and not any(failures.values()),
    }


def representable_form(pres: GWA):
    """The presentation itself if the shift representation applies, else its canonical
    form if that one qualifies, else None."""
    for cand in (pres, canonicalize(pres).presentation):
        try:
            representation_kind(cand)
            return cand
        except RepresentationError:
            continue
    return None


def verify_all(pres: GWA, cases: int = 100, seed: int = 0, truncation: int = 24,
               max_deg: int = 4, morita_truncation: int = 32, max_index: int = 5,
               suites=("gwa", "rep", "toeplitz", "morita")) -> dict:
    from .morita import verify_C_context, verify_lambda_context
    from .toeplitz import verify_diffotopy, verify_extension, verify_structure

    report = {"presentation": pres.to_json(), "seed": seed, "suites": {}}
    out = report["suites"]
    rep_pres = representable_form(pres)
    if rep_pres is not None and rep_pres != pres:
        report["canonical_presentation"] = rep_pres.to_json()
    if "gwa" in suites:
        out["gwa"] = verify_gwa(pres, cases, seed, max_deg)
    if "rep" in suites:
        if rep_pres is None:
            out["rep"] = {"skipped": "no faithful representation available for this presentation"}
        else:
            out["rep"] = verify_representation(rep_pres, cases, truncation, max_deg, seed)
            out["rep-faithfulness"] = verify_faithfulness(rep_pres, cases, seed, max_deg)
    if "toeplitz" in suites:
        out["toeplitz-structure"] = verify_structure()
        out["toeplitz-extension"] = verify_extension(pres, cases, seed)
        out["toeplitz-diffotopy"] = verify_diffotopy(cases, seed)
    if "morita" in suites:
        if rep_pres is None:
            out["morita"] = {"skipped": "no faithful representation available for this presentation"}
        else:
            out["morita-lambda"] = verify_lambda_context(rep_pres, cases, morita_truncation, max_index, seed)
            out["morita-C"] = verify_C_context(rep_pres, cases, morita_truncation, max_index, seed)
    report["passed"] = all(r.get("passed", True) for r in out.values())
    return report
