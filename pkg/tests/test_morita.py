import pytest

from gwakk.gwa import GWA
from gwakk.morita import (_check_case, build_context, lambda_element, rho_bar, verify_C_context,
                          verify_lambda_context)
from gwakk.poly import Poly
from gwakk.rep import RepresentationError, basis_matrices, represent, window_equal
from gwakk.toeplitz import ToeplitzElement


def test_context_closed_forms(weyl):
    ctx = build_context(8, 3, weyl)
    I = basis_matrices(8, "U1") ** 0
    assert ctx.xi[0] == ToeplitzElement(K={(0, 0): I})
    assert ctx.eta[1] == ToeplitzElement(K={(0, 1): basis_matrices(8, "Um1")})
    U2 = ctx.xi[2].K[(2, 0)]
    assert U2.entries == {(i + 2, i): 1 for i in range(6)}


def test_context_needs_representation():
    with pytest.raises(RepresentationError):
        build_context(8, 2, GWA.from_params(1, 0, "h"))


def test_single_entry_cases(weyl):
    ctx = build_context(16, 2, weyl)
    assert _check_case(ctx, {(0, 0): Poly.one()}, 8, "lambda") == []
    assert _check_case(ctx, {}, 8, "lambda") == []
    assert _check_case(ctx, {(0, 0): Poly.h()}, 8, "C") == []
    assert _check_case(ctx, {(1, 1): weyl.P * Poly.h()}, 8, "C") == []


def test_wrong_candidate_is_detected(weyl):
    # w = e_00 (x) y x; eta_0 w xi_0 must equal rho(y x), not rho(x y)
    ctx = build_context(12, 1, weyl)
    got = rho_bar(lambda_element(weyl, {(0, 0): Poly.one()}), weyl, 12)
    out = (ctx.eta[0] * got * ctx.xi[0]).K[(0, 0)]
    assert window_equal(out, represent(weyl.y * weyl.x, weyl, 12), 8)
    assert not window_equal(out, represent(weyl.x * weyl.y, weyl, 12), 8)


@pytest.mark.parametrize("kind", ["weyl", "qweyl"])
def test_lambda_context(kind, weyl, qweyl):
    pres = weyl if kind == "weyl" else qweyl
    r = verify_lambda_context(pres, cases=15, M=24, max_index=3, seed=4)
    assert r["passed"], r["failures"][:2]
    assert r["window"] == 24 - (2 * 3 + 2 + 2)


@pytest.mark.parametrize("kind", ["weyl", "qweyl"])
def test_C_context(kind, weyl, qweyl):
    pres = weyl if kind == "weyl" else qweyl
    r = verify_C_context(pres, cases=15, M=24, max_index=3, seed=4)
    assert r["passed"], r["failures"][:2]


def test_budget_error(weyl):
    with pytest.raises(ValueError):
        verify_lambda_context(weyl, cases=1, M=8, max_index=5)
