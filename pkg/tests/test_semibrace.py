import pytest

import oracles as O
from trusslab import algebra as alg
from trusslab import semibrace as sb
from trusslab import structfile as sf
from trusslab import truss
from trusslab.errors import IotaNotBijective, NotVerified

Z2, Z3 = alg.cyclic(2), alg.cyclic(3)
INV3 = (0, 2, 1)


def fixture(name):
    return sf.load_fixture(name).to_structure()


@pytest.mark.parametrize(
    "add, mul",
    [
        (alg.right_zero(3), Z3),
        (alg.left_zero(3), Z3),
        (Z2, Z2),
    ],
    ids=["right-zero", "left-zero", "trivial-brace"],
)
def test_left_semi_braces(add, mul):
    assert sb.verify_left_semi_brace(add, mul).passed
    assert O.semi_brace_law(add, mul)
    S = sb.LeftSemiBrace(add, mul)
    A = sb.as_almost(S)
    assert A.iota == A.group.inverse
    assert sb.verify_almost(A.add, A.mul, A.iota).passed


def test_rz3_with_identity_iota_fails_the_twist():
    rep = sb.verify_almost(alg.right_zero(3), Z3, alg.identity_map(3))
    assert not rep.passed
    failing = rep.failures()[0]
    a, b = failing.witness[:2]
    # iota(a*b) = a*b should equal b^-1 * a under the twist
    assert Z3[a][b] != Z3[INV3[b]][a]


def test_almost_fixture_has_nontrivial_iota_one():
    A = fixture("almost-z3")
    assert A.iota[A.one] != A.one
    assert O.almost_axioms(A.add, A.mul, A.iota)
    assert sb.verify_almost(A.add, A.mul, A.iota, strict=True).passed


def test_iota_must_be_bijective():
    A = sb.AlmostLeftSemiBrace(alg.right_zero(3), Z3, (0, 0, 0))
    with pytest.raises(IotaNotBijective):
        A.iota_inv


def test_derived_lambda_rz3():
    A = sb.as_almost(fixture("rz-z3"))
    lam = sb.derived_lambda(A)
    # right-zero: a*(a^-1 + b) = a*b
    assert lam == Z3
    assert lam == sb.semi_brace_lambda(fixture("rz-z3"))


def test_derived_lambda_left_zero_z2_is_constant_identity():
    A = sb.as_almost(sb.LeftSemiBrace(alg.left_zero(2), Z2))
    lam = sb.derived_lambda(A)
    assert all(row == (0, 0) for row in lam)
    assert truss.check_lambda_morphism(Z2, lam).ok


def test_trivial_brace_lambda_is_identity():
    T = sb.almost_to_bracelike(sb.as_almost(sb.LeftSemiBrace(Z2, Z2)))
    assert T.lam == (alg.identity_map(2),) * 2


def test_almost_to_bracelike_rz3():
    T = sb.almost_to_bracelike(sb.as_almost(fixture("rz-z3")))
    assert truss.verify_brace_like(T.add, T.mul, T.lam).passed
    assert O.brace_like(T.add, T.mul, T.lam)


def test_lz2_arises_from_a_left_zero_semi_brace():
    lz2 = fixture("lz2")
    T = sb.almost_to_bracelike(sb.as_almost(sb.LeftSemiBrace(lz2.add, lz2.mul)))
    one = T.one
    assert all(row == (one, one) for row in T.lam)


def test_iota_and_lambda_properties_rz3():
    A = sb.as_almost(fixture("rz-z3"))
    assert sb.iota_properties(A).passed
    assert sb.lambda_properties(A).passed
    assert sb.check_compat(A).ok


def test_associated_rz3_is_right_zero_over_opposite_group():
    A = sb.as_almost(fixture("rz-z3"))
    S = sb.associated_semi_brace(A)
    assert S.add == alg.right_zero(3)
    assert S.mul == alg.transpose(Z3)


def test_associated_trivial_brace_is_itself():
    A = sb.as_almost(sb.LeftSemiBrace(Z2, Z2))
    S = sb.associated_semi_brace(A)
    assert (S.add, S.mul) == (Z2, Z2)


def test_associated_matches_oracle(almost_upto4):
    for A in almost_upto4[::17]:
        S = sb.associated_semi_brace(A)
        oplus, mulop = O.associated(A.add, A.mul, A.iota)
        assert [list(r) for r in S.add] == oplus
        assert [list(r) for r in S.mul] == mulop


def test_compat_matches_oracle(almost_upto4):
    for A in almost_upto4:
        assert sb.check_compat(A).ok == O.compat(A.add, A.mul, A.iota)


def test_iota_inverse_instances_are_semi_braces(almost_upto4):
    seen = 0
    for A in almost_upto4:
        if A.iota == A.group.inverse:
            seen += 1
            assert O.semi_brace_law(A.add, A.mul)
    assert seen > 0


def test_requires_verified_input():
    A = sb.AlmostLeftSemiBrace(alg.right_zero(3), Z3, alg.identity_map(3))
    with pytest.raises(NotVerified):
        sb.derived_lambda(A)


def test_almost_homomorphism_identity_and_relabel():
    A = fixture("almost-z3")
    assert sb.is_almost_homomorphism(alg.identity_map(3), A, A)
    perm = (1, 2, 0)
    B = sb.AlmostLeftSemiBrace(
        alg.relabel_table(A.add, perm), alg.relabel_table(A.mul, perm), alg.relabel_map(A.iota, perm)
    )
    assert sb.is_almost_homomorphism(perm, A, B)
    # a constant map c is a homomorphism exactly when c is fixed by all three operations
    for c in range(3):
        fixed = A.add[c][c] == c and A.mul[c][c] == c and A.iota[c] == c
        assert sb.is_almost_homomorphism((c, c, c), A, A) == fixed
