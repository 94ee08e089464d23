"""Acceptance criteria 1-8. Each test prints one PASS/FAIL line; the lines are
repeated in the pytest terminal summary. Run directly for the lines alone:
``python3 tests/test_acceptance.py``."""

import io
import random
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

from cli_cases import CLASSIFY_ARGV
from conftest import FIXTURE_NAMES, fixture_presentation
from gwakk.classify import Classified, classify, named_example
from gwakk.cli import main
from gwakk.gwa import GWA, star
from gwakk.morita import verify_C_context, verify_lambda_context
from gwakk.poly import Poly, distinct_root_count
from gwakk.rep import relation_checks, verify_faithfulness, verify_representation
from gwakk.sampling import case_rng, random_element
from gwakk.scalar import GENERIC, RATIONAL, RatFunc
from gwakk.toeplitz import verify_diffotopy, verify_extension, verify_structure

RESULTS: dict = {}
GOLDEN = Path(__file__).parent / "golden"


def record(n: int, ok: bool, detail: str):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


def _verdict(pres):
    v = classify(pres)
    if isinstance(v, Classified):
        return str(v.kk_class)
    return f"open:{v.reason}"


def test_criterion_1_classification_table():
    t0 = time.perf_counter()
    expected = [
        (named_example("weyl"), "C^1"),
        (named_example("quantum-weyl"), "C^1"),
        (named_example("quantum-plane"), "C^1"),
        (named_example("b-lambda", lam=1), "C^1"),
        (named_example("b-lambda", lam=0), "C^2"),
        (named_example("b-lambda", lam=5), "C^2"),
        (GWA.from_params(1, -1, "0"), "C^1"),
        (GWA.from_params(1, -1, "3"), "SC+C"),
        (GWA.from_params(-1, 0, "h*(h - 1)"), "open:root_of_unity"),
        (GWA.from_params(1, 0, "h"), "open:commutative"),
    ]
    expected += [(named_example("wpq", k=k, l=l), f"C^{l + 1}") for k in range(1, 5) for l in range(1, 5)]
    wrong = [(p.name or repr(p), want, _verdict(p)) for p, want in expected if _verdict(p) != want]
    elapsed = time.perf_counter() - t0
    record(1, not wrong and elapsed < 1.0,
           f"classification table, {len(expected)} rows, {len(wrong)} mismatches, {elapsed:.3f} s (limit 1 s)")


def test_criterion_2_ranks():
    checks = {
        "b-lambda(0)": (classify(named_example("b-lambda", lam=0)), (2, 0)),
        "P = 3": (classify(GWA.from_params(1, -1, "3")), (1, 1)),
        "P = -1/2, q = 2": (classify(GWA.from_params(2, 0, "-1/2")), (1, 1)),
        "wpq(1,2)": (classify(named_example("wpq", k=1, l=2)), (3, 0)),
    }
    wrong = [k for k, (v, want) in checks.items() if (v.k0_rank, v.k1_rank) != want]
    record(2, not wrong, f"(k0, k1) ranks for {len(checks)} presentations, mismatches: {wrong or 'none'}")


def test_criterion_3_normal_form_engine():
    t0 = time.perf_counter()
    bad = []
    for name in FIXTURE_NAMES:
        pres = fixture_presentation(name)
        for k in range(1, 7):
            if pres.y ** k * pres.x ** k != pres.element({0: pres.phi(k)}):
                bad.append(f"{name} phi_{k}")
            if pres.x ** k * pres.y ** k != pres.element({0: pres.psi(k)}):
                bad.append(f"{name} psi_{k}")
        for case in range(200):
            rng = case_rng(2024, case, "acceptance-3")
            u, v, w = (random_element(pres, rng, max_deg=4, poly_degree=3, height=10) for _ in range(3))
            if (u * v) * w != u * (v * w):
                bad.append(f"{name} assoc {case}")
            if star(u * v) != star(v) * star(u):
                bad.append(f"{name} star {case}")
    elapsed = time.perf_counter() - t0
    record(3, not bad and elapsed < 10.0,
           f"closed forms k<=6, 200 associativity triples and 200 star pairs on {len(FIXTURE_NAMES)} "
           f"fixtures, {len(bad)} failures, {elapsed:.2f} s (limit 10 s)")


def test_criterion_4_representation():
    t0 = time.perf_counter()
    bad = []
    fixtures = [named_example("weyl"), named_example("quantum-weyl"), named_example("b-lambda", lam=0)]
    for pres in fixtures:
        for M in range(2, 9):
            if not all(relation_checks(pres, M).values()):
                bad.append(f"{pres.name} relations M={M}")
        r = verify_representation(pres, cases=200, M=24, max_deg=4, seed=7)
        if not r["passed"] or r["window"] != 16:
            bad.append(f"{pres.name} window")
        if not verify_faithfulness(pres, cases=100, seed=7)["passed"]:
            bad.append(f"{pres.name} faithfulness")
    elapsed = time.perf_counter() - t0
    record(4, not bad and elapsed < 30.0,
           f"relations M=2..8, 200 window-16 products at M=24, 100 faithfulness probes on "
           f"{len(fixtures)} fixtures, failures: {bad or 'none'}, {elapsed:.2f} s (limit 30 s)")


def test_criterion_5_toeplitz():
    t0 = time.perf_counter()
    bad = []
    s = verify_structure(6)
    if not s["passed"]:
        bad.append("structure")
    for name in FIXTURE_NAMES:
        r = verify_extension(fixture_presentation(name), cases=100, seed=11)
        if not r["passed"]:
            bad.append(f"extension {name}")
    if not verify_diffotopy(cases=100, seed=11)["passed"]:
        bad.append("diffotopy")
    elapsed = time.perf_counter() - t0
    record(5, not bad and elapsed < 30.0,
           f"structure relations (indices <= 6), S*S and SS*, pbar and kernel on 100 pairs per fixture, "
           f"endpoint maps on 100 words, failures: {bad or 'none'}, {elapsed:.2f} s (limit 30 s)")


def test_criterion_6_morita():
    t0 = time.perf_counter()
    bad = []
    for pres in (named_example("weyl"), named_example("quantum-weyl")):
        for fn in (verify_lambda_context, verify_C_context):
            r = fn(pres, cases=100, M=32, max_index=5, seed=13)
            if not r["passed"]:
                bad.append(f"{r['suite']} {pres.name}")
    elapsed = time.perf_counter() - t0
    record(6, not bad and elapsed < 60.0,
           f"Lambda and C contexts, 100 elements each, M=32, max_index=5, weyl and quantum-weyl, "
           f"failures: {bad or 'none'}, {elapsed:.2f} s (limit 60 s)")


def _constructed(field, rng):
    q = RatFunc.q()
    pool = sorted({Fraction(n, d) for n in range(-9, 10) for d in (1, 2, 3, 5)})
    while True:
        k = rng.randint(1, 4)
        roots = [field(r) for r in rng.sample(pool, k)]
        if field is GENERIC:
            roots = [r * q ** rng.randint(0, 3) + rng.randint(-2, 2) for r in roots]
        if len(set(roots)) == k:
            break
    p = Poly.const(field(rng.choice([1, -1, 2, Fraction(-3, 4)])), field)
    for r in roots:
        p = p * (Poly.h(field) - r) ** rng.randint(1, 3)
    return p, k


def test_criterion_7_root_count():
    bad = 0
    total = 0
    for field in (RATIONAL, GENERIC):
        rng = random.Random(f"acceptance-7-{field.name}")
        for _ in range(50):
            p, k = _constructed(field, rng)
            total += 1
            bad += distinct_root_count(p) != k
    record(7, bad == 0, f"distinct_root_count on {total} constructed products (both modes), {bad} mismatches")


def _cli(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_criterion_8_cli():
    bad = []
    for label, argv in sorted(CLASSIFY_ARGV.items()):
        code, out = _cli("classify", *argv, "--json")
        if code != 0 or out != (GOLDEN / "classify" / f"{label}.json").read_text():
            bad.append(label)
    if _cli("nf", "--example", "weyl", "--expr", "y*x") != (0, "h\n"):
        bad.append("nf y*x")
    argv = [sys.executable, "-m", "gwakk", "verify", "all", "--example", "weyl", "--cases", "10", "--seed", "3"]
    runs = [subprocess.run(argv, capture_output=True) for _ in range(2)]
    if runs[0].returncode != 0 or runs[0].stdout != runs[1].stdout:
        bad.append("verify all reproducibility")
    record(8, not bad, f"{len(CLASSIFY_ARGV)} golden classify outputs, nf y*x, seeded verify all "
                       f"byte-identical across two runs, failures: {bad or 'none'}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))
