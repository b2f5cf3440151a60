"""Left semi-trusses, brace-like left semi-trusses and skew left trusses.

A lambda family is stored as a table ``lam`` with ``lam[a][b]`` the image of
``b`` under the map attached to ``a``. Composition ``lam_a lam_b`` means
``lam_a`` applied after ``lam_b``.

The lemma checks below never assume the statement they test: each one
recomputes from the tables, so a verified structure on which a lemma fails
shows up as a failed check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from . import algebra as alg
from .algebra import SelfMap, Table
from .errors import (
    MissingInverse,
    NoIdentity,
    NotAssociative,
    NotVerified,
    PostconditionViolated,
    PreconditionViolated,
    SizeMismatch,
)
from .report import PASS, Check, VerificationReport, fail

LambdaFamily = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class LeftSemiTruss:
    add: Table
    mul: Table
    lam: LambdaFamily

    @property
    def n(self):
        return len(self.add)


@dataclass(frozen=True)
class BraceLikeSemiTruss:
    add: Table
    mul: Table
    lam: LambdaFamily

    @property
    def n(self):
        return len(self.add)

    @cached_property
    def group(self) -> alg.FiniteGroup:
        return alg.as_group(self.mul)

    @property
    def one(self) -> int:
        return self.group.identity


@dataclass(frozen=True)
class SkewLeftTruss:
    add: Table
    mul: Table
    sigma: SelfMap

    @property
    def n(self):
        return len(self.add)


def _same_size(*tables):
    sizes = {len(t) for t in tables}
    if len(sizes) != 1:
        raise SizeMismatch(f"carrier sizes differ: {sorted(sizes)}")


def _group_check(op) -> Check:
    try:
        alg.as_group(op)
    except NotAssociative as e:
        return Check(False, e.witness)
    except NoIdentity:
        return Check(False)
    except MissingInverse as e:
        return fail(e.element)
    return PASS


def check_semi_truss_law(add: Table, mul: Table, lam: LambdaFamily) -> Check:
    """a*(b+c) = a*b + lam_a(c) for all a, b, c."""
    n = len(add)
    for a in range(n):
        ma, la = mul[a], lam[a]
        for b in range(n):
            ab = ma[b]
            add_b, add_ab = add[b], add[ab]
            for c in range(n):
                if ma[add_b[c]] != add_ab[la[c]]:
                    return fail(a, b, c)
    return PASS


def check_lambda_endomorphisms(add: Table, lam: LambdaFamily) -> Check:
    for a in range(len(add)):
        w = alg.check_endomorphism(lam[a], add)
        if not w:
            return fail(a, *w.witness)
    return PASS


def check_lambda_morphism(mul: Table, lam: LambdaFamily) -> Check:
    """lam_(a*b) = lam_a lam_b for all a, b."""
    n = len(mul)
    for a in range(n):
        for b in range(n):
            lab, la, lb = lam[mul[a][b]], lam[a], lam[b]
            for x in range(n):
                if lab[x] != la[lb[x]]:
                    return fail(a, b, x)
    return PASS


def verify_left_semi_truss(add, mul, lam) -> VerificationReport:
    _same_size(add, mul, lam)
    rep = VerificationReport("semi-truss")
    rep.run("add associative", alg.check_associative, add)
    rep.run("mul associative", alg.check_associative, mul)
    rep.run("distributive law", check_semi_truss_law, add, mul, lam)
    return rep


def verify_brace_like(add, mul, lam) -> VerificationReport:
    rep = verify_left_semi_truss(add, mul, lam)
    rep.kind = "brace-like"
    rep.run("mul is a group", _group_check, mul)
    rep.run("lambda_a endomorphisms of +", check_lambda_endomorphisms, add, lam)
    rep.run("lambda is a morphism from (B,*)", check_lambda_morphism, mul, lam)
    return rep


def check_skew_truss_law(add: Table, mul: Table, sigma: SelfMap, neg: SelfMap) -> Check:
    """a*(b+c) = a*b - sigma(a) + a*c, with ``neg`` the additive inverse."""
    n = len(add)
    for a, b, c in product(range(n), repeat=3):
        rhs = add[add[mul[a][b]][neg[sigma[a]]]][mul[a][c]]
        if mul[a][add[b][c]] != rhs:
            return fail(a, b, c)
    return PASS


def verify_skew_truss(add, mul, sigma) -> VerificationReport:
    """Both operations must be groups; the law needs the additive inverse."""
    _same_size(add, mul, sigma)
    rep = VerificationReport("skew-truss")
    rep.run("add is a group", _group_check, add)
    rep.run("mul is a group", _group_check, mul)
    if rep.get("add is a group").passed:
        neg = alg.as_group(add).inverse
        rep.run("skew truss law", check_skew_truss_law, add, mul, sigma, neg)
    else:
        rep.add("skew truss law", False, "undefined without additive inverses")
    return rep


def verify(structure) -> VerificationReport:
    if isinstance(structure, BraceLikeSemiTruss):
        return verify_brace_like(structure.add, structure.mul, structure.lam)
    if isinstance(structure, LeftSemiTruss):
        return verify_left_semi_truss(structure.add, structure.mul, structure.lam)
    if isinstance(structure, SkewLeftTruss):
        return verify_skew_truss(structure.add, structure.mul, structure.sigma)
    raise TypeError(f"not a truss structure: {type(structure).__name__}")


def _require_brace_like(T: BraceLikeSemiTruss):
    rep = verify_brace_like(T.add, T.mul, T.lam)
    if not rep:
        raise NotVerified(rep)


def _require_semi_truss(T):
    rep = verify_left_semi_truss(T.add, T.mul, T.lam)
    if not rep:
        raise NotVerified(rep)


def _eq_maps(f, g) -> Check:
    for x, (u, v) in enumerate(zip(f, g)):
        if u != v:
            return fail(x)
    return PASS


def lemma_one_suite(T: BraceLikeSemiTruss) -> VerificationReport:
    _require_brace_like(T)
    n, add, lam, one = T.n, T.add, T.lam, T.one
    l1 = lam[one]
    rep = VerificationReport("lambda_1 properties")

    rep.add("lambda_1 idempotent", _eq_maps(alg.compose(l1, l1), l1))

    def absorbs():
        for a in range(n):
            la = lam[a]
            if alg.compose(l1, la) != la:
                return fail(a)
            if alg.compose(la, l1) != la:
                return fail(a)
        return PASS

    rep.add("lambda_1 lambda_a = lambda_a = lambda_a lambda_1", absorbs())

    def plus_absorbs():
        for a, b in product(range(n), repeat=2):
            if add[a][b] != add[a][l1[b]]:
                return fail(a, b)
        return PASS

    rep.add("a+b = a+lambda_1(b)", plus_absorbs())

    one_plus = sorted(add[one][b] for b in range(n))

    def closed():
        s = set(one_plus)
        for x in one_plus:
            for y in one_plus:
                if T.mul[x][y] not in s:
                    return fail(x, y)
        return PASS

    rep.add("1+B closed under *", closed())
    rep.info["1+B"] = frozenset(one_plus)
    return rep


def lemma_zero_check(T: BraceLikeSemiTruss) -> Check:
    """No additive zero when |B| >= 2; the witness is the zero element."""
    _require_brace_like(T)
    theta = alg.has_zero_element(T.add)
    if T.n >= 2 and theta is not None:
        return fail(theta)
    return PASS


def lemma_bb_suite(T: BraceLikeSemiTruss) -> VerificationReport:
    """Computes B+B and reports each claim about it; nothing is assumed."""
    _require_brace_like(T)
    g = T.group
    every = range(T.n)
    bb = alg.product_set(T.add, every, every)
    rep = VerificationReport("B+B")
    rep.info["B+B"] = bb
    rep.add("1 in B+B", Check(T.one in bb, None if T.one in bb else (T.one,)))
    rep.add("B+B subgroup of (B,*)", alg.check_subgroup(bb, g))
    rest = (set(every) - bb) | {T.one}
    rep.info["(B-(B+B)) u {1}"] = frozenset(rest)
    rep.add("(B-(B+B)) u {1} subgroup of (B,*)", alg.check_subgroup(rest, g))
    missing = sorted(set(every) - bb)
    rep.add("B+B = B", Check(not missing, tuple(missing[:1]) or None))
    return rep


def check_group_under_add(add: Table, h, z: int) -> Check:
    """(h, +) is a group with identity z; the witness names the failing element(s)."""
    hs = sorted(set(h))
    s = set(hs)
    if z not in s:
        return fail(z)
    for x in hs:
        for y in hs:
            if add[x][y] not in s:
                return fail(x, y)
    for x in hs:
        if add[z][x] != x or add[x][z] != x:
            return fail(x)
    for x in hs:
        if not any(add[x][y] == z and add[y][x] == z for y in hs):
            return fail(x)
    return PASS


def sandwich(add: Table, left, z: int) -> frozenset[int]:
    """left + B + z."""
    return alg.product_set(add, alg.product_set(add, left, range(len(add))), (z,))


def check_subgroup_idempotent(T: BraceLikeSemiTruss, z: int) -> VerificationReport:
    """The three assertions about z, recomputed from the tables alone."""
    add, one = T.add, T.one
    rep = VerificationReport("subgroup idempotent")
    rep.add("z+z = z", Check(add[z][z] == z, None if add[z][z] == z else (z,)))
    zbz = sandwich(add, (z,), z)
    obz = sandwich(add, (one,), z)
    diff = sorted(zbz ^ obz)
    rep.add("z+B+z = 1+B+z", Check(not diff, tuple(diff[:1]) or None))
    rep.add("(z+B+z, +) group with identity z", check_group_under_add(add, zbz, z))
    rep.info["z"] = z
    rep.info["z+B+z"] = zbz
    return rep


def _construct_z(T: BraceLikeSemiTruss) -> int:
    add, lam, g, one = T.add, T.lam, T.group, T.one
    n = T.n
    if all(add[one][b] == one for b in range(n)):
        return one
    one_plus = sorted({add[one][b] for b in range(n)})
    candidates = [b for b in one_plus if add[one][b] != one]
    if not candidates:
        candidates = [b for b in range(n) if add[one][b] != one]
    b = candidates[0]
    u = add[one][b]
    order = alg.element_order(g, u)
    z = b
    for i in range(1, order):
        z = add[z][lam[alg.power(T.mul, u, i)][b]]
    return z


def find_subgroup_idempotent(T: BraceLikeSemiTruss) -> tuple[int, frozenset[int]]:
    """An additive idempotent z with z+B+z = 1+B+z a group under +, and that group.

    Follows the constructive argument: if 1+b = 1 for every b then z = 1;
    otherwise take the first b in 1+B with 1+b != 1, let u = 1+b with
    multiplicative order k, and accumulate
    ``z = b + lam_u(b) + lam_{u^2}(b) + ... + lam_{u^(k-1)}(b)`` left to right.
    The returned pair is re-checked against the three assertions before return.
    """
    _require_brace_like(T)
    z = _construct_z(T)
    post = check_subgroup_idempotent(T, z)
    if not post:
        raise PostconditionViolated(
            f"constructed z={z} fails: {[c.name for c in post.failures()]}"
        )
    return z, post.info["z+B+z"]


def lemma_bzb_check(T: BraceLikeSemiTruss, z: int) -> Check:
    """c in c+z+B for every c, and B+z+B = B. Witness: the first failing c."""
    add = T.add
    n = T.n
    zbz = sandwich(add, (z,), z)
    if add[z][z] != z or not check_group_under_add(add, zbz, z):
        raise PreconditionViolated(f"{z} is not an idempotent with z+B+z a group")
    for c in range(n):
        cz = add[c][z]
        if not any(add[cz][b] == c for b in range(n)):
            return fail(c)
    bzb = alg.product_set(add, alg.product_set(add, range(n), (z,)), range(n))
    if len(bzb) != n:
        return fail(min(set(range(n)) - bzb))
    return PASS


def theorem_completely_simple(T: BraceLikeSemiTruss) -> VerificationReport:
    rep = VerificationReport("complete simplicity")
    z, h = find_subgroup_idempotent(T)
    rep.info["z"] = z
    rep.info["H"] = h
    rep.extend(check_subgroup_idempotent(T, z))
    prim = alg.is_primitive_idempotent(z, T.add)
    rep.add("z primitive idempotent", Check(prim, None if prim else (z,)))
    rep.add("(B,+) simple", alg.check_simple(T.add))
    rep.add("(B,+) completely simple", alg.is_completely_simple(T.add))
    return rep


def lemma_lambda_idempotents(T) -> Check:
    """lam_a(e) is idempotent for every a and every additive idempotent e."""
    _require_semi_truss(T)
    es = sorted(alg.idempotents(T.add))
    for a in range(T.n):
        for e in es:
            x = T.lam[a][e]
            if T.add[x][x] != x:
                return fail(a, e)
    return PASS


def idempotents_closed_under_mul(T) -> Check:
    """Whether E(B) is closed under *; the witness is the first pair (e, f) with e*f not in E(B)."""
    _require_semi_truss(T)
    es = sorted(alg.idempotents(T.add))
    eset = set(es)
    for e in es:
        for f in es:
            if T.mul[e][f] not in eset:
                return fail(e, f)
    return PASS


def analyze(T) -> VerificationReport:
    """The whole additive-structure suite on one structure.

    Brace-like inputs get every lemma; a plain left semi-truss only gets the
    checks that make sense for it (idempotent sets and lambda-closure).
    """
    add = T.add
    every = range(T.n)
    brace = isinstance(T, BraceLikeSemiTruss)
    rep = verify_brace_like(T.add, T.mul, T.lam) if brace else verify_left_semi_truss(
        T.add, T.mul, T.lam
    )
    rep.kind = "analysis"
    rep.info["E(B)"] = alg.idempotents(add)
    rep.info["B+B"] = alg.product_set(add, every, every)
    zero = alg.has_zero_element(add)
    rep.info["zero element"] = zero
    if not rep:
        return rep
    rep.info["simple"] = alg.is_simple(add)
    rep.info["completely simple"] = alg.is_completely_simple(add)
    rep.add("lambda_a(E(B)) in E(B)", lemma_lambda_idempotents(T))
    closed = idempotents_closed_under_mul(T)
    rep.info["E(B) closed under *"] = closed.ok
    if not closed.ok:
        rep.info["E(B) not *-closed witness"] = closed.witness
    if not brace:
        return rep
    rep.extend(lemma_one_suite(T), "lambda_1: ")
    rep.add("no additive zero", lemma_zero_check(T))
    rep.extend(lemma_bb_suite(T), "B+B: ")
    thm = theorem_completely_simple(T)
    rep.extend(thm, "complete simplicity: ")
    rep.add("B+z+B = B", lemma_bzb_check(T, thm.info["z"]))
    return rep
