from itertools import product

import pytest
from hypothesis import given, strategies as st

import oracles as O
from trusslab import algebra as alg
from trusslab import semibrace as sb
from trusslab import structfile as sf
from trusslab import ybe
from trusslab.errors import PreconditionViolated

Z2, Z3 = alg.cyclic(2), alg.cyclic(3)


@pytest.mark.parametrize("n", range(1, 7))
def test_flip_and_identity_are_solutions(n):
    assert ybe.check_ybe(ybe.flip(n)).ok
    assert ybe.check_ybe(ybe.identity_solution(n)).ok
    assert ybe.nondegeneracy(ybe.flip(n)) == (True, True)
    # r(x, y) = (x, y) has lam_x constant, so it is degenerate once n >= 2
    assert ybe.nondegeneracy(ybe.identity_solution(n)) == (n == 1, n == 1)
    ident = ybe.identity_solution(n)
    assert all(ident(x, y) == (x, y) for x, y in product(range(n), repeat=2))


def test_xor_first_example_pinned_by_oracle():
    # r(x, y) = (x xor y, x)
    r = ybe.SolutionMap(Z2, alg.left_zero(2))
    expected = O.braid(lambda x, y: (x ^ y, x), 2)
    res = ybe.check_ybe(r)
    assert res.ok == expected
    if not expected:
        left, right = ybe.braid_sides(r, *res.witness)
        assert left != right


@given(st.integers(1, 3), st.data())
def test_check_ybe_matches_oracle(n, data):
    cells = st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n)
    c1, c2 = data.draw(cells), data.draw(cells)
    out1 = tuple(tuple(c1[i * n:(i + 1) * n]) for i in range(n))
    out2 = tuple(tuple(c2[i * n:(i + 1) * n]) for i in range(n))
    r = ybe.SolutionMap(out1, out2)
    res = ybe.check_ybe(r)
    assert res.ok == O.braid(r, n)
    if not res.ok:
        x, y, z = res.witness
        left, right = ybe.braid_sides(r, x, y, z)
        assert left != right
        # lexicographically first
        for t in product(range(n), repeat=3):
            if t == (x, y, z):
                break
            a, b = ybe.braid_sides(r, *t)
            assert a == b


def test_left_zero_semi_brace_solution_is_left_degenerate():
    S = sb.LeftSemiBrace(alg.left_zero(2), Z2)
    r = ybe.build_r_semibrace(S)
    # r(a, b) = (1, a*b)
    assert r.out1 == ((0, 0), (0, 0))
    assert r.out2 == Z2
    assert ybe.nondegeneracy(r) == (False, True)


def test_left_zero_z3_solution():
    S = sb.LeftSemiBrace(alg.left_zero(3), Z3)
    r = ybe.build_r_semibrace(S)
    assert all(x == 0 for row in r.out1 for x in row)
    assert r.out2 == Z3
    assert ybe.check_cond_solution_semi(S).ok
    assert ybe.check_ybe(r).ok


def test_trivial_brace_gives_the_flip():
    S = sb.LeftSemiBrace(Z2, Z2)
    assert ybe.build_r_semibrace(S) == ybe.flip(2)
    assert ybe.check_cond_solution_semi(S).ok


def test_rz3_solution():
    S = sf.load_fixture("rz-z3").to_structure()
    r = ybe.build_r_semibrace(S)
    assert r.out1 == S.mul
    assert all(x == S.group.identity for row in r.out2 for x in row)
    assert r == ybe.build_r_almost(sb.as_almost(S))
    assert ybe.check_lambda_rho(r, S.mul).ok


def test_build_r_matches_oracle(almost_upto4):
    for A in almost_upto4[::11]:
        r = ybe.build_r_almost(A)
        ref = O.r_map(A.add, A.mul, A.iota)
        assert all(r(a, b) == ref(a, b) for a, b in product(range(A.n), repeat=2))


def test_cond_and_antihom_match_oracle(almost_upto4):
    for A in almost_upto4[::5]:
        r = ybe.build_r_almost(A)
        assert ybe.check_cond_solution(A).ok == O.cond(A.add, A.mul, A.iota)
        assert ybe.check_rho_antihomomorphism(r, A.mul).ok == O.rho_antihom(A.add, A.mul, A.iota)


def test_semi_brace_solution_equals_almost_construction():
    for add, mul in ((alg.right_zero(3), Z3), (alg.left_zero(3), Z3), (Z2, Z2)):
        S = sb.LeftSemiBrace(add, mul)
        assert ybe.build_r_semibrace(S) == ybe.build_r_almost(sb.as_almost(S))


def test_solution_hom_check():
    f = alg.identity_map(3)
    assert ybe.solution_hom_check(f, ybe.flip(3), ybe.flip(3), iso=True)
    assert not ybe.solution_hom_check(f, ybe.flip(3), ybe.identity_solution(3))
    assert not ybe.solution_hom_check((0, 0, 0), ybe.flip(3), ybe.flip(3), iso=True)


def test_find_isomorphism():
    S = sb.LeftSemiBrace(alg.left_zero(3), Z3)
    r = ybe.build_r_semibrace(S)
    perm = (0, 2, 1)
    r2 = ybe.SolutionMap(
        alg.relabel_table(r.out1, perm), alg.relabel_table(r.out2, perm)
    )
    f = ybe.find_isomorphism(r, r2)
    assert f is not None and ybe.solution_hom_check(f, r, r2, iso=True)
    assert ybe.find_isomorphism(ybe.flip(2), ybe.identity_solution(2)) is None


def test_theorem_iso_on_fixture():
    A = sf.load_fixture("almost-z3").to_structure()
    rep = ybe.theorem_iso_check(A)
    assert rep.passed, rep.format_text()


def test_theorem_iso_precondition(almost_upto4):
    bad = next(A for A in almost_upto4 if not O.compat(A.add, A.mul, A.iota))
    with pytest.raises(PreconditionViolated):
        ybe.theorem_iso_check(bad)


def test_solution_report_isocheck_precondition_fails_cleanly(almost_upto4):
    bad = next(A for A in almost_upto4 if not O.compat(A.add, A.mul, A.iota))
    rep = ybe.solution_report(bad, isocheck=True)
    assert not rep.passed
    assert rep.get("iso theorem preconditions").witness is not None
