import pytest

from gwakk.gwa import GWA
from gwakk.rep import (RepresentationError, TruncatedMatrix, basis_matrices, faithfulness_probe,
                       relation_checks, represent, verify_faithfulness, verify_representation,
                       window_equal)
from gwakk.sampling import case_rng, random_element
from gwakk.scalar import GENERIC, RatFunc

q = RatFunc.q()


def test_basis_matrices():
    assert basis_matrices(3, "N") == TruncatedMatrix.diagonal([0, -1, -2])
    G = basis_matrices(3, "G", q=q, field=GENERIC)
    assert [G[i, i] for i in range(3)] == [1, q, q ** 2]
    U1, Um1 = basis_matrices(3, "U1"), basis_matrices(3, "Um1")
    assert U1[1, 0] == 1 and U1[0, 1] == 0 and Um1[0, 1] == 1
    assert Um1 @ U1 == TruncatedMatrix.identity(3) - TruncatedMatrix.unit(3, 2, 2)
    with pytest.raises(ValueError):
        basis_matrices(3, "G")
    with pytest.raises(ValueError):
        basis_matrices(3, "G", q=0)


def test_represent_examples(weyl):
    assert represent(weyl.h, weyl, 3) == TruncatedMatrix.diagonal([0, -1, -2])
    Y = represent(weyl.y, weyl, 4)
    assert Y.entries == {(1, 0): -1, (2, 1): -2, (3, 2): -3}
    assert not represent(weyl.zero(), weyl, 5)


def test_represent_generators_match_matrices(weyl, qweyl):
    M = 6
    N, U1, Um1 = (basis_matrices(M, k) for k in ("N", "U1", "Um1"))
    assert represent(weyl.x, weyl, M) == Um1
    assert represent(weyl.y, weyl, M) == N @ U1
    G = basis_matrices(M, "G", q=q, field=GENERIC)
    I = TruncatedMatrix.identity(M, GENERIC)
    U1g = basis_matrices(M, "U1", field=GENERIC)
    assert represent(qweyl.y, qweyl, M) == (G - I) @ U1g


def test_non_representable():
    for pres in (GWA.from_params(1, -1, "h - 1"), GWA.from_params(-1, 0, "h - 1"),
                 GWA.from_params(1, 0, "h"), GWA.from_params(1, -1, "0")):
        with pytest.raises(RepresentationError, match="no faithful representation available"):
            represent(pres.h, pres, 3)


def test_window_equal_examples():
    M = 5
    A = basis_matrices(M, "Um1") @ basis_matrices(M, "U1")
    I = TruncatedMatrix.identity(M)
    assert window_equal(A, I, 4)
    assert not window_equal(A, I, 5)
    assert window_equal(A, A, 5)
    with pytest.raises(ValueError):
        window_equal(A, I, 6)


@pytest.mark.parametrize("M", range(2, 9))
def test_relations_exact(weyl, qweyl, M):
    assert all(relation_checks(weyl, M).values())
    assert all(relation_checks(qweyl, M).values())


def test_linear(weyl):
    for case in range(20):
        rng = case_rng(1, case, "lin")
        u, v = random_element(weyl, rng), random_element(weyl, rng)
        assert represent(u + v, weyl, 12) == represent(u, weyl, 12) + represent(v, weyl, 12)


def test_verify_representation_report(weyl, qweyl):
    for pres in (weyl, qweyl):
        r = verify_representation(pres, cases=30, M=24, max_deg=4, seed=7)
        assert r["passed"] and r["window"] == 16 and r["window_checks"] == 30


def test_homomorphism_fails_outside_window(weyl):
    # the corner of a product of cut shifts is wrong, so the window is needed
    M = 6
    lhs = represent(weyl.x * weyl.y, weyl, M)
    rhs = represent(weyl.x, weyl, M) @ represent(weyl.y, weyl, M)
    assert lhs != rhs and window_equal(lhs, rhs, M - 1)


def test_faithfulness_examples(weyl):
    assert faithfulness_probe(weyl.h, weyl, 3)
    assert not faithfulness_probe(weyl.zero(), weyl, 3)
    assert faithfulness_probe(weyl.element({1: weyl.P}), weyl, 6)
    with pytest.raises(ValueError, match="truncation below faithfulness threshold"):
        faithfulness_probe(weyl.element({3: "h^2"}), weyl, 4)


def test_faithfulness_random(weyl, qweyl):
    assert verify_faithfulness(weyl, 50, seed=3)["passed"]
    assert verify_faithfulness(qweyl, 50, seed=3)["passed"]
