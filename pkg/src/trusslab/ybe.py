"""Set-theoretic solutions of the Yang-Baxter equation on finite sets.

A solution map stores ``r(a, b) = (out1[a][b], out2[a][b])``; in the usual
notation ``out1[a][b] = lam_a(b)`` and ``out2[a][b] = rho_b(a)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import algebra as alg
from .algebra import SelfMap, Table
from .errors import NotVerified, PostconditionViolated, PreconditionViolated, SizeMismatch
from .report import PASS, Check, VerificationReport, fail
from .semibrace import (
    AlmostLeftSemiBrace,
    LeftSemiBrace,
    as_almost,
    associated_semi_brace,
    check_compat,
    verify,
)

MAX_ISO_SEARCH = 7


@dataclass(frozen=True)
class SolutionMap:
    out1: Table
    out2: Table

    @property
    def n(self):
        return len(self.out1)

    def __call__(self, a, b):
        return self.out1[a][b], self.out2[a][b]

    def lam(self, a, b):
        return self.out1[a][b]

    def rho(self, b, a):
        return self.out2[a][b]

    def to_dict(self):
        return {"order": self.n, "out1": [list(r) for r in self.out1],
                "out2": [list(r) for r in self.out2]}


def flip(n: int) -> SolutionMap:
    return SolutionMap(alg.right_zero(n), alg.left_zero(n))


def identity_solution(n: int) -> SolutionMap:
    return SolutionMap(alg.left_zero(n), alg.right_zero(n))


def braid_sides(r: SolutionMap, x, y, z):
    """Both sides of the braid relation evaluated at (x, y, z)."""
    o1, o2 = r.out1, r.out2
    # (r x id)(id x r)(r x id)
    a, b, c = o1[x][y], o2[x][y], z
    b, c = o1[b][c], o2[b][c]
    left = (o1[a][b], o2[a][b], c)
    # (id x r)(r x id)(id x r)
    a, b, c = x, o1[y][z], o2[y][z]
    a, b = o1[a][b], o2[a][b]
    right = (a, o1[b][c], o2[b][c])
    return left, right


def check_ybe(r: SolutionMap) -> Check:
    n = r.n
    for x, y, z in product(range(n), repeat=3):
        left, right = braid_sides(r, x, y, z)
        if left != right:
            return fail(x, y, z)
    return PASS


def nondegeneracy(r: SolutionMap) -> tuple[bool, bool]:
    n = r.n
    left = all(len(set(r.out1[a])) == n for a in range(n))
    right = all(len({r.out2[a][b] for a in range(n)}) == n for b in range(n))
    return left, right


def _require(A):
    rep = verify(A)
    if not rep:
        raise NotVerified(rep)


def check_lambda_rho(r: SolutionMap, mul: Table) -> Check:
    """lam_x(y) * rho_y(x) = x * y for all x, y."""
    n = r.n
    for x in range(n):
        for y in range(n):
            if mul[r.out1[x][y]][r.out2[x][y]] != mul[x][y]:
                return fail(x, y)
    return PASS


def _solution_from(add, mul, inv, iota) -> SolutionMap:
    n = len(add)
    s = [[add[iota[a]][b] for b in range(n)] for a in range(n)]
    out1 = tuple(tuple(mul[a][s[a][b]] for b in range(n)) for a in range(n))
    out2 = tuple(tuple(mul[inv[s[a][b]]][b] for b in range(n)) for a in range(n))
    return SolutionMap(out1, out2)


def build_r_almost(A: AlmostLeftSemiBrace) -> SolutionMap:
    """r(a, b) = (a*(iota(a)+b), (iota(a)+b)^-1 * b)."""
    _require(A)
    r = _solution_from(A.add, A.mul, A.group.inverse, A.iota)
    w = check_lambda_rho(r, A.mul)
    if not w:
        raise PostconditionViolated(f"lam_x(y)*rho_y(x) != x*y at {w.witness}")
    return r


def build_r_semibrace(S: LeftSemiBrace) -> SolutionMap:
    """r(a, b) = (a*(a^-1+b), (a^-1+b)^-1 * b)."""
    _require(S)
    inv = S.group.inverse
    r = _solution_from(S.add, S.mul, inv, inv)
    w = check_lambda_rho(r, S.mul)
    if not w:
        raise PostconditionViolated(f"lam_x(y)*rho_y(x) != x*y at {w.witness}")
    return r


def _cond(add, mul, r, i1) -> Check:
    """a + lam_b(c)*(i1 + rho_c(b)) = a + b*(i1 + c)."""
    n = len(add)
    lhs = [[mul[r.out1[b][c]][add[i1][r.out2[b][c]]] for c in range(n)] for b in range(n)]
    rhs = [[mul[b][add[i1][c]] for c in range(n)] for b in range(n)]
    for a in range(n):
        row = add[a]
        for b in range(n):
            for c in range(n):
                if row[lhs[b][c]] != row[rhs[b][c]]:
                    return fail(a, b, c)
    return PASS


def check_cond_solution(A: AlmostLeftSemiBrace) -> Check:
    r = build_r_almost(A)
    return _cond(A.add, A.mul, r, A.iota[A.one])


def check_cond_solution_semi(S: LeftSemiBrace) -> Check:
    r = build_r_semibrace(S)
    return _cond(S.add, S.mul, r, S.group.identity)


def check_rho_antihomomorphism(r: SolutionMap, mul: Table) -> Check:
    """rho_(b*c) = rho_c rho_b, i.e. rho_(b*c)(x) = rho_c(rho_b(x))."""
    n = r.n
    for b in range(n):
        for c in range(n):
            bc = mul[b][c]
            for x in range(n):
                if r.out2[x][bc] != r.out2[r.out2[x][b]][c]:
                    return fail(b, c, x)
    return PASS


def check_solution_hom(f: SelfMap, r: SolutionMap, r2: SolutionMap) -> Check:
    """(f(lam_a(b)), f(rho_b(a))) = (lam'_f(a)(f(b)), rho'_f(b)(f(a))) for all a, b."""
    if not (len(f) == r.n == r2.n):
        raise SizeMismatch("solution hom check needs a common carrier")
    n = r.n
    for a in range(n):
        for b in range(n):
            fa, fb = f[a], f[b]
            if f[r.out1[a][b]] != r2.out1[fa][fb] or f[r.out2[a][b]] != r2.out2[fa][fb]:
                return fail(a, b)
    return PASS


def solution_hom_check(f: SelfMap, r: SolutionMap, r2: SolutionMap, iso=False) -> bool:
    if iso and not alg.is_bijective(f):
        return False
    return bool(check_solution_hom(f, r, r2))


def find_isomorphism(r: SolutionMap, r2: SolutionMap) -> SelfMap | None:
    """Brute-force search over bijections, pruning on partially-defined maps."""
    n = r.n
    if r2.n != n:
        return None
    if n > MAX_ISO_SEARCH:
        raise PreconditionViolated(f"isomorphism search capped at n <= {MAX_ISO_SEARCH}")
    f = [-1] * n
    used = [False] * n

    def ok(k):
        for a in range(k + 1):
            for b in range(k + 1):
                if k not in (a, b):
                    continue
                u, v = r.out1[a][b], r.out2[a][b]
                fa, fb = f[a], f[b]
                if u <= k and f[u] != r2.out1[fa][fb]:
                    return False
                if v <= k and f[v] != r2.out2[fa][fb]:
                    return False
        return True

    def go(k):
        if k == n:
            return check_solution_hom(tuple(f), r, r2).ok
        for v in range(n):
            if used[v]:
                continue
            f[k], used[v] = v, True
            if ok(k) and go(k + 1):
                return True
            f[k], used[v] = -1, False
        return False

    return tuple(f) if go(0) else None


def theorem_iso_check(A: AlmostLeftSemiBrace) -> VerificationReport:
    """r_B and the solution of the associated left semi-brace, compared on tables."""
    _require(A)
    compat = check_compat(A)
    if not compat:
        raise PreconditionViolated(f"compatibility identity fails at {compat.witness}")
    cond = check_cond_solution(A)
    if not cond:
        raise PreconditionViolated(f"solution condition fails at {cond.witness}")

    g = A.group
    inv, n = g.inverse, A.n
    r = build_r_almost(A)
    S = associated_semi_brace(A)
    r2 = build_r_semibrace(S)
    rep = VerificationReport("iso theorem")
    rep.add("associated semi-brace satisfies its solution condition", check_cond_solution_semi(S))

    def closed_forms():
        for a in range(n):
            for b in range(n):
                if r2.out1[a][b] != inv[r.out1[inv[a]][inv[b]]]:
                    return fail(a, b)
                if r2.out2[a][b] != inv[r.out2[inv[a]][inv[b]]]:
                    return fail(a, b)
        return PASS

    rep.add("lam'_a(b) = lam_(a^-1)(b^-1)^-1 and rho'_b(a) = rho_(b^-1)(a^-1)^-1", closed_forms())
    rep.add("a -> a^-1 is a bijection", alg.is_bijective(inv))
    rep.add("a -> a^-1 is a solution isomorphism", check_solution_hom(inv, r, r2))
    rep.info["r_B"] = r.to_dict()
    rep.info["r'_B"] = r2.to_dict()
    return rep


def solution_report(A: AlmostLeftSemiBrace, check_ybe_=True, nondegenerate=False,
                    associate=False, isocheck=False) -> VerificationReport:
    """Everything the ``solution`` command reports, for one almost semi-brace."""
    rep = VerificationReport("solution")
    r = build_r_almost(A)
    rep.info["r_B"] = r.to_dict()
    rep.add("lam_x(y)*rho_y(x) = x*y", check_lambda_rho(r, A.mul))
    compat = check_compat(A)
    rep.add("compatibility", compat)
    if check_ybe_:
        ybe = check_ybe(r)
        rep.add("r_B satisfies the braid relation", ybe)
        cond = check_cond_solution(A)
        rep.info["solution condition"] = cond.ok
        if compat:
            rep.add("braid relation <=> solution condition", ybe.ok == cond.ok)
    if nondegenerate:
        left, right = nondegeneracy(r)
        rep.info["left non-degenerate"] = left
        rep.info["right non-degenerate"] = right
    if associate:
        S = associated_semi_brace(A)
        rep.info["associated add"] = [list(x) for x in S.add]
        rep.info["associated mul"] = [list(x) for x in S.mul]
        rep.info["r'_B"] = build_r_semibrace(S).to_dict()
    if isocheck:
        if not compat:
            rep.add("iso theorem preconditions", compat)
            return rep
        cond = check_cond_solution(A)
        if not cond:
            rep.add("iso theorem preconditions", cond)
            return rep
        rep.extend(theorem_iso_check(A), "iso: ")
    return rep


def semibrace_solution_report(S: LeftSemiBrace, **kw) -> VerificationReport:
    return solution_report(as_almost(S), **kw)
