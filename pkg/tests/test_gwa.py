import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gwakk.gwa import (GWA, AffineAuto, canonicalize, conjugate_presentation,
                       eval_to_normal_form, ideal_generator_C, ideal_generator_lambda,
                       is_graded_for_weights, nf_add, nf_mul, phi_k, psi_k, star)
from gwakk.expr import parse
from gwakk.poly import Poly, divides, parse_poly
from gwakk.sampling import case_rng, random_element
from gwakk.scalar import GENERIC, ModeError, RatFunc

q = RatFunc.q()


def E(pres, comps):
    return pres.element(comps)


def test_phi_psi_examples(weyl):
    assert psi_k(weyl, 1) == parse_poly("h - 1")
    assert psi_k(weyl, 2) == parse_poly("(h - 2)(h - 1)")
    assert phi_k(weyl, 2) == parse_poly("h^2 + h")
    zero = GWA.from_params(1, -1, "0")
    assert phi_k(zero, 3) == 0 and psi_k(zero, 3) == 0
    with pytest.raises(ValueError):
        phi_k(weyl, 0)


def test_nf_mul_examples(weyl):
    assert nf_mul(weyl.x, weyl.y) == E(weyl, {0: "h - 1"})
    assert nf_mul(weyl.x, weyl.h) == E(weyl, {-1: "h - 1"})
    assert nf_mul(weyl.y ** 2, weyl.x ** 2) == E(weyl, {0: "h^2 + h"})
    assert weyl.y * weyl.x == E(weyl, {0: "h"})


def test_nf_mul_mode_mismatch(weyl, qweyl):
    with pytest.raises(ModeError):
        nf_mul(weyl.x, qweyl.y)


def test_nf_add_examples(weyl):
    assert nf_add(E(weyl, {1: "h"}), E(weyl, {-1: "h"})) == E(weyl, {1: "h", -1: "h"})
    assert nf_add(E(weyl, {0: "h"}), E(weyl, {0: "-h"})).components == {}
    assert nf_add(E(weyl, {2: "1"}), E(weyl, {0: "h^3"})) == E(weyl, {0: "h^3", 2: "1"})


def test_star_examples(weyl):
    assert star(E(weyl, {-1: "h - 1"})) == E(weyl, {1: "h"})
    assert star(E(weyl, {0: "h^2 + 3"})) == E(weyl, {0: "h^2 + 3"})
    u = E(weyl, {2: "h"})
    assert star(star(u)) == u


def test_eval_examples(weyl):
    ev = lambda s: eval_to_normal_form(parse(s), weyl)
    assert ev("y*x") == E(weyl, {0: "h"})
    assert ev("x*y - y*x") == E(weyl, {0: "-1"})
    assert ev("h*y - y*h") == E(weyl, {1: "-1"})
    assert ev("(x*y)/2") == E(weyl, {0: "h/2 - 1/2"})
    with pytest.raises(ValueError):
        ev("x / y")


def test_string_form_round_trip(weyl, qweyl):
    u = E(weyl, {2: "h + 1", 0: "h", -1: "h - 1"})
    assert str(u) == "(h + 1)*y^2 + h + (h - 1)*x"
    assert weyl.parse(str(u)) == u
    v = E(qweyl, {1: "q*h", -2: "1/q"})
    assert qweyl.parse(str(v)) == v


def test_conjugate_examples():
    tau = AffineAuto(1, 5)
    new, _ = conjugate_presentation(GWA.from_params(1, -1, "h - 5"), tau)
    assert new.sigma == AffineAuto(1, -1) and new.P == parse_poly("h")
    pres = GWA.from_params(1, -1, "h^2 + 1")
    same, transport = conjugate_presentation(pres, AffineAuto.identity())
    assert same == pres and transport(pres.y) == same.y
    lam = GENERIC(3) / q
    pq = GWA.from_params(q, 0, Poly.h(GENERIC) - lam, "generic")
    new, _ = conjugate_presentation(pq, AffineAuto(lam, 0, GENERIC))
    assert new.sigma == AffineAuto(q, 0, GENERIC)
    assert new.P == (Poly.h(GENERIC) - 1).scale(lam)


def test_conjugate_stated_shift_sends_root_away():
    # tau(h) = h - 5 applied to a = h - 5 gives h - 10, not h; h + 5 is the shift that works
    new, _ = conjugate_presentation(GWA.from_params(1, -1, "h - 5"), AffineAuto(1, -5))
    assert new.P == parse_poly("h - 10")


def test_canonicalize_examples(weyl, qweyl):
    c = canonicalize(weyl)
    assert c.tag == "classical" and c.presentation == weyl and c.trace == []
    c = canonicalize(GWA.from_params(q, 1 - q, Poly.h(GENERIC) - 1, "generic"))
    assert c.tag == "quantum"
    assert c.presentation.sigma == AffineAuto(q, 0, GENERIC)
    assert c.presentation.P == Poly.h(GENERIC)
    c = canonicalize(qweyl)
    assert c.tag == "quantum" and c.presentation == qweyl


def test_canonicalize_other_branches():
    assert canonicalize(GWA.from_params(1, 0, "h^2")).tag == "commutative"
    c = canonicalize(GWA.from_params(1, 2, "h^2 - 4"))
    assert c.tag == "classical" and not c.presentation.P(0)
    assert c.presentation.sigma == AffineAuto(1, -1)
    c = canonicalize(GWA.from_params(3, 0, "(h - 2)(h - 5)"))
    assert c.presentation.P(1) == 0
    assert canonicalize(GWA.from_params(1, -1, "h^2 - 2")).tag == "non-canonicalizable-over-field"


def test_canonical_tau_transports(weyl):
    pres = GWA.from_params(2, 3, "(h - 1)(h + 4)")
    c = canonicalize(pres)
    rng = case_rng(0, 0, "canon")
    u, v = random_element(pres, rng), random_element(pres, rng)
    assert c.transport(u * v) == c.transport(u) * c.transport(v)


def test_ideal_generators(weyl):
    assert ideal_generator_lambda(weyl, 0, 0) == (parse_poly("h"), 0)
    assert ideal_generator_lambda(weyl, 1, 0) == (parse_poly("h + 1"), 1)
    # y x^2 = (y x) x = h x
    assert ideal_generator_lambda(weyl, 0, 1) == (parse_poly("h"), -1)
    assert (weyl.y * weyl.x ** 2) == E(weyl, {-1: "h"})
    assert ideal_generator_C(weyl, 0, 3) == (Poly.one(), -3)
    assert ideal_generator_C(weyl, 2, 2)[0] == phi_k(weyl, 2)


def test_graded_weights():
    assert is_graded_for_weights(GWA.from_params(1, -1, "0"), 0, 1, 1)
    assert is_graded_for_weights(GWA.from_params(q, 0, Poly.h(GENERIC) ** 3 * 5, "generic"), 2, 3, 3)
    assert not is_graded_for_weights(GWA.from_params(1, -1, "h"), 0, 1, 1)


def test_closed_forms(pres):
    for k in range(1, 7):
        assert pres.y ** k * pres.x ** k == E(pres, {0: pres.phi(k)})
        assert pres.x ** k * pres.y ** k == E(pres, {0: pres.psi(k)})


def test_generator_relations(pres):
    sigma = pres.sigma
    for p in (pres.h, pres.h ** 2 + pres.scalar(3)):
        d = p.component(0)
        assert pres.x * p == E(pres, {-1: sigma(d)})
        assert pres.y * p == E(pres, {1: sigma.inverse()(d)})
    assert pres.y * pres.x == E(pres, {0: pres.P})
    assert pres.x * pres.y == E(pres, {0: sigma(pres.P)})


def test_ring_properties(pres):
    for case in range(40):
        rng = case_rng(5, case, "test-gwa")
        u, v, w = (random_element(pres, rng) for _ in range(3))
        assert (u * v) * w == u * (v * w)
        assert u * (v + w) == u * v + u * w
        assert star(u * v) == star(v) * star(u)
        assert star(star(u)) == u


def test_a1_am1_is_ideal_of_P(pres):
    assert (pres.y * pres.x).component(0) == pres.P
    for case in range(20):
        rng = case_rng(2, case, "ideal")
        p = random_element(pres, rng, terms=1).component(0) or Poly.one(pres.field)
        r = random_element(pres, rng, terms=1).component(0) or Poly.one(pres.field)
        assert divides(pres.P, (E(pres, {1: p}) * E(pres, {-1: r})).component(0))


@settings(max_examples=60, deadline=None)
@given(st.integers(-4, 4), st.integers(-4, 4), st.integers(0, 10 ** 6))
def test_grading(d1, d2, seed):
    pres = GWA.from_params(1, -1, "h^2 - h")
    rng = case_rng(seed, 0, "grading")
    u = E(pres, {d1: random_element(pres, rng, terms=1).component(0) or Poly.one()})
    v = E(pres, {d2: random_element(pres, rng, terms=1).component(0) or Poly.one()})
    assert set((u * v).components) <= {d1 + d2}


def test_transport_is_homomorphism(pres):
    tau = AffineAuto(pres.field(2), pres.field(-1), pres.field)
    new, transport = conjugate_presentation(pres, tau)
    for case in range(20):
        rng = case_rng(9, case, "transport")
        u, v = random_element(pres, rng), random_element(pres, rng)
        assert transport(u * v) == transport(u) * transport(v)
