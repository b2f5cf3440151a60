"""Left semi-braces and almost left semi-braces."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from . import algebra as alg
from .algebra import SelfMap, Table
from .errors import IotaNotBijective, NotVerified, PostconditionViolated, SizeMismatch
from .report import PASS, Check, VerificationReport, fail
from .truss import (
    BraceLikeSemiTruss,
    LambdaFamily,
    _group_check,
    check_lambda_endomorphisms,
    check_lambda_morphism,
    verify_brace_like,
)


@dataclass(frozen=True)
class LeftSemiBrace:
    add: Table
    mul: Table

    @property
    def n(self):
        return len(self.add)

    @cached_property
    def group(self) -> alg.FiniteGroup:
        return alg.as_group(self.mul)


@dataclass(frozen=True)
class AlmostLeftSemiBrace:
    add: Table
    mul: Table
    iota: SelfMap

    @property
    def n(self):
        return len(self.add)

    @cached_property
    def group(self) -> alg.FiniteGroup:
        return alg.as_group(self.mul)

    @property
    def one(self) -> int:
        return self.group.identity

    @cached_property
    def iota_inv(self) -> SelfMap:
        if not alg.is_bijective(self.iota):
            raise IotaNotBijective(f"iota = {self.iota} is not a bijection")
        return alg.inverse_map(self.iota)


def _same_size(*xs):
    if len({len(x) for x in xs}) != 1:
        raise SizeMismatch(f"carrier sizes differ: {sorted({len(x) for x in xs})}")


def check_semi_brace_law(add: Table, mul: Table, inv: SelfMap) -> Check:
    """a*(b+c) = a*b + a*(a^-1 + c)."""
    return check_almost_law(add, mul, inv)


def check_almost_law(add: Table, mul: Table, iota: SelfMap) -> Check:
    """a*(b+c) = a*b + a*(iota(a) + c)."""
    n = len(add)
    for a in range(n):
        ma, add_ia = mul[a], add[iota[a]]
        for b in range(n):
            add_b, add_ab = add[b], add[ma[b]]
            for c in range(n):
                if ma[add_b[c]] != add_ab[ma[add_ia[c]]]:
                    return fail(a, b, c)
    return PASS


def check_iota_twist(mul: Table, inv: SelfMap, iota: SelfMap) -> Check:
    """iota(a*b) = b^-1 * iota(a)."""
    n = len(mul)
    for a in range(n):
        for b in range(n):
            if iota[mul[a][b]] != mul[inv[b]][iota[a]]:
                return fail(a, b)
    return PASS


def check_left_cancellative(add: Table) -> Check:
    n = len(add)
    for a in range(n):
        seen = {}
        for b in range(n):
            c = seen.setdefault(add[a][b], b)
            if c != b:
                return fail(a, c, b)
    return PASS


def _compat(add: Table, mul: Table, iota: SelfMap, one: int) -> Check:
    i1 = iota[one]
    n = len(add)
    for a in range(n):
        for b in range(n):
            if mul[add[iota[a]][b]][i1] != add[iota[a]][mul[b][i1]]:
                return fail(a, b)
    return PASS


def verify_left_semi_brace(add, mul) -> VerificationReport:
    _same_size(add, mul)
    rep = VerificationReport("semi-brace")
    rep.run("add associative", alg.check_associative, add)
    rep.run("mul is a group", _group_check, mul)
    if rep.get("mul is a group").passed:
        inv = alg.as_group(mul).inverse
        rep.run("semi-brace law", check_semi_brace_law, add, mul, inv)
    else:
        rep.add("semi-brace law", False, "undefined without a multiplicative group")
    return rep


def verify_almost(add, mul, iota, strict=False) -> VerificationReport:
    """Both almost-semi-brace conditions plus the semigroup/group axioms.

    ``strict`` adds the older, narrower profile: (B,+) left cancellative and the
    compatibility identity (iota(a)+b)*iota(1) = iota(a) + b*iota(1).
    """
    _same_size(add, mul, iota)
    rep = VerificationReport("almost")
    rep.run("add associative", alg.check_associative, add)
    rep.run("mul is a group", _group_check, mul)
    if not rep.get("mul is a group").passed:
        rep.add("iota(a*b) = b^-1 * iota(a)", False, "undefined without a multiplicative group")
        rep.add("almost semi-brace law", False, "undefined without a multiplicative group")
        return rep
    g = alg.as_group(mul)
    rep.run("iota(a*b) = b^-1 * iota(a)", check_iota_twist, mul, g.inverse, iota)
    rep.run("almost semi-brace law", check_almost_law, add, mul, iota)
    if strict:
        rep.kind = "almost (strict)"
        rep.run("add left cancellative", check_left_cancellative, add)
        rep.run("compatibility", _compat, add, mul, iota, g.identity)
    return rep


def verify(structure, strict=False) -> VerificationReport:
    if isinstance(structure, AlmostLeftSemiBrace):
        return verify_almost(structure.add, structure.mul, structure.iota, strict)
    if isinstance(structure, LeftSemiBrace):
        return verify_left_semi_brace(structure.add, structure.mul)
    raise TypeError(f"not a semi-brace structure: {type(structure).__name__}")


def _require(structure):
    rep = verify(structure)
    if not rep:
        raise NotVerified(rep)


def as_almost(S: LeftSemiBrace) -> AlmostLeftSemiBrace:
    """A left semi-brace viewed as an almost left semi-brace with iota(a) = a^-1."""
    return AlmostLeftSemiBrace(S.add, S.mul, S.group.inverse)


def semi_brace_lambda(S: LeftSemiBrace) -> LambdaFamily:
    """lam_a(b) = a*(a^-1 + b)."""
    return _lambda_table(S.add, S.mul, S.group.inverse)


def _lambda_table(add, mul, iota) -> LambdaFamily:
    n = len(add)
    return tuple(tuple(mul[a][add[iota[a]][b]] for b in range(n)) for a in range(n))


def derived_lambda(A: AlmostLeftSemiBrace) -> LambdaFamily:
    """lam_a(b) = a*(iota(a) + b)."""
    _require(A)
    return _lambda_table(A.add, A.mul, A.iota)


def lambda_properties(A: AlmostLeftSemiBrace) -> VerificationReport:
    """What the derived lambda is guaranteed to satisfy, checked on the tables."""
    lam = derived_lambda(A)
    add, one, iota = A.add, A.one, A.iota
    es = sorted(alg.idempotents(add))
    rep = VerificationReport("derived lambda")
    rep.run("lambda_a endomorphisms of +", check_lambda_endomorphisms, add, lam)
    rep.run("lambda is a morphism from (B,*)", check_lambda_morphism, A.mul, lam)

    def keeps_idempotents():
        for a in range(A.n):
            for e in es:
                x = lam[a][e]
                if add[x][x] != x:
                    return fail(a, e)
        return PASS

    def lands_in_iota1_plus_b():
        i1 = iota[one]
        for a in range(A.n):
            for e in es:
                x = lam[a][e]
                if add[i1][x] != x:
                    return fail(a, e)
        return PASS

    rep.add("lambda_a(E(B)) in E(B)", keeps_idempotents())
    rep.add("iota(1) + lambda_a(e) = lambda_a(e)", lands_in_iota1_plus_b())
    return rep


def almost_to_bracelike(A: AlmostLeftSemiBrace) -> BraceLikeSemiTruss:
    lam = derived_lambda(A)
    T = BraceLikeSemiTruss(A.add, A.mul, lam)
    rep = verify_brace_like(T.add, T.mul, T.lam)
    if not rep:
        raise PostconditionViolated(
            f"derived structure is not brace-like: {[c.name for c in rep.failures()]}"
        )
    return T


def iota_properties(A: AlmostLeftSemiBrace) -> VerificationReport:
    _require(A)
    add, mul, iota = A.add, A.mul, A.iota
    g = A.group
    one, inv, n = g.identity, g.inverse, A.n
    i1 = iota[one]
    rep = VerificationReport("iota")

    def absorbs_iota1():
        for a, b in product(range(n), repeat=2):
            if add[a][b] != add[add[a][i1]][b]:
                return fail(a, b)
        return PASS

    def forced_form():
        for a in range(n):
            if iota[a] != mul[inv[a]][i1]:
                return fail(a)
        return PASS

    rep.add("a+b = a+iota(1)+b", absorbs_iota1())
    bij = alg.is_bijective(iota)
    rep.add("iota bijective", bij)
    rep.add("iota(a) = a^-1 * iota(1)", forced_form())
    if not bij:
        rep.add("iota^-1(a*b) = iota^-1(b) * a^-1", False, "iota has no inverse")
        return rep
    iinv = alg.inverse_map(iota)

    def twisted_inverse():
        for a, b in product(range(n), repeat=2):
            if iinv[mul[a][b]] != mul[iinv[b]][inv[a]]:
                return fail(a, b)
        return PASS

    rep.add("iota^-1(a*b) = iota^-1(b) * a^-1", twisted_inverse())
    return rep


def check_compat(A: AlmostLeftSemiBrace) -> Check:
    """(iota(a)+b)*iota(1) = iota(a) + b*iota(1) for all a, b."""
    _require(A)
    return _compat(A.add, A.mul, A.iota, A.one)


def associated_semi_brace(A: AlmostLeftSemiBrace) -> LeftSemiBrace:
    """(B, (+)', *^op) with a (+)' b = iota^-1(iota(a) + iota(b)) and a *^op b = b*a."""
    _require(A)
    iota, iinv, add = A.iota, A.iota_inv, A.add
    n = A.n
    oplus = tuple(
        tuple(iinv[add[iota[a]][iota[b]]] for b in range(n)) for a in range(n)
    )
    S = LeftSemiBrace(oplus, alg.transpose(A.mul))
    rep = verify_left_semi_brace(S.add, S.mul)
    if not rep:
        raise PostconditionViolated(
            f"associated structure is not a left semi-brace: {[c.name for c in rep.failures()]}"
        )
    return S


def is_almost_homomorphism(f: SelfMap, A1: AlmostLeftSemiBrace, A2: AlmostLeftSemiBrace) -> bool:
    """f respects +, * and intertwines the iotas: f iota1 = iota2 f."""
    n = A1.n
    for a in range(n):
        if f[A1.iota[a]] != A2.iota[f[a]]:
            return False
        for b in range(n):
            if f[A1.add[a][b]] != A2.add[f[a]][f[b]]:
                return False
            if f[A1.mul[a][b]] != A2.mul[f[a]][f[b]]:
                return False
    return True
