"""Per-instance check suites and their aggregation over an enumeration.

Checks recorded in a suite report are claims that must hold on every valid
instance; a failure anywhere is a red flag. Properties that legitimately
vary between instances (whether the compatibility identity holds, whether
r_B is a solution) go into ``info`` and are tallied, not judged.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import algebra as alg
from . import semibrace as sb
from . import truss
from . import ybe
from .report import Check, VerificationReport


def semigroup_suite(op) -> VerificationReport:
    rep = VerificationReport("semigroup")
    rep.run("associative", alg.check_associative, op)
    rep.info["idempotents"] = alg.idempotents(op)
    rep.info["simple"] = alg.is_simple(op)
    rep.info["completely simple"] = alg.is_completely_simple(op)
    return rep


def group_suite(g: alg.FiniteGroup) -> VerificationReport:
    rep = VerificationReport("group")
    rep.run("associative", alg.check_associative, g.op)
    inv = g.inverse
    rep.add("inverse round-trips", all(inv[inv[a]] == a for a in range(g.n)))
    rep.add("idempotents = {identity}", alg.idempotents(g.op) == {g.identity})
    rep.add("simple", alg.is_simple(g.op))
    return rep


def brace_like_suite(T: truss.BraceLikeSemiTruss) -> VerificationReport:
    rep = truss.analyze(T)
    rep.kind = "brace-like"
    return rep


def almost_suite(A: sb.AlmostLeftSemiBrace) -> VerificationReport:
    rep = sb.verify_almost(A.add, A.mul, A.iota)
    if not rep:
        return rep
    g = A.group
    rep.extend(sb.iota_properties(A), "iota: ")
    rep.extend(sb.lambda_properties(A), "derived lambda: ")
    T = truss.BraceLikeSemiTruss(A.add, A.mul, sb.derived_lambda(A))
    rep.add("derived structure is brace-like", truss.verify_brace_like(T.add, T.mul, T.lam).passed)
    thm = truss.theorem_completely_simple(T)
    rep.add("(B,+) completely simple", thm.passed)
    i1 = A.iota[g.identity]
    rep.add("iota(1) primitive idempotent of (B,+)",
            A.add[i1][i1] == i1 and alg.is_primitive_idempotent(i1, A.add))
    one_idem = A.add[g.identity][g.identity] == g.identity
    rep.info["1 primitive idempotent of (B,+)"] = (
        one_idem and alg.is_primitive_idempotent(g.identity, A.add)
    )
    S = sb.associated_semi_brace(A)
    rep.add("associated structure is a left semi-brace",
            sb.verify_left_semi_brace(S.add, S.mul).passed)
    if A.iota == g.inverse:
        rep.add("iota = inverse gives a left semi-brace",
                sb.verify_left_semi_brace(A.add, A.mul).passed)

    r = ybe.build_r_almost(A)
    rep.add("lam_x(y)*rho_y(x) = x*y", ybe.check_lambda_rho(r, A.mul))
    compat = sb.check_compat(A)
    braid = ybe.check_ybe(r)
    cond = ybe.check_cond_solution(A)
    anti = ybe.check_rho_antihomomorphism(r, A.mul)
    rep.info["iota(1) = 1"] = A.iota[g.identity] == g.identity
    rep.info["compatibility"] = compat.ok
    rep.info["r_B solution"] = braid.ok
    rep.info["solution condition"] = cond.ok
    rep.info["rho anti-homomorphism"] = anti.ok
    if compat:
        same = braid.ok == cond.ok
        rep.add("braid relation <=> solution condition",
                Check(same, None if same else (braid.witness or cond.witness)))
        if anti:
            rep.add("anti-homomorphic rho => condition", cond)
        if cond:
            rep.extend(ybe.theorem_iso_check(A), "iso theorem: ")
    return rep


def semi_brace_suite(S: sb.LeftSemiBrace) -> VerificationReport:
    rep = sb.verify_left_semi_brace(S.add, S.mul)
    if not rep:
        return rep
    A = sb.as_almost(S)
    rep.extend(almost_suite(A), "as almost: ")
    r = ybe.build_r_semibrace(S)
    rep.add("r_B equals the almost construction with iota = inverse",
            r == ybe.build_r_almost(A))
    braid = ybe.check_ybe(r)
    cond = ybe.check_cond_solution_semi(S)
    rep.add("braid relation <=> semi-brace condition", braid.ok == cond.ok)
    return rep


SUITES = {
    "semigroup": semigroup_suite,
    "group": group_suite,
    "brace-like": brace_like_suite,
    "left-semi-brace": semi_brace_suite,
    "almost": almost_suite,
}


@dataclass
class Tally:
    total: int = 0
    checks: Counter = field(default_factory=Counter)
    passes: Counter = field(default_factory=Counter)
    info: Counter = field(default_factory=Counter)
    failures: list = field(default_factory=list)

    @property
    def all_passed(self):
        return not self.failures

    def add(self, index, rep: VerificationReport):
        self.total += 1
        for c in rep.checks:
            self.checks[c.name] += 1
            self.passes[c.name] += c.passed
            if not c.passed:
                self.failures.append((index, c.name, c.witness))
        for k, v in rep.info.items():
            if isinstance(v, bool):
                self.info[(k, v)] += 1

    def to_dict(self):
        return {
            "total": self.total,
            "checks": {k: {"passed": self.passes[k], "of": self.checks[k]} for k in self.checks},
            "info": {f"{k}={v}": c for (k, v), c in sorted(self.info.items())},
            "failures": [list(f[:2]) + [list(f[2]) if f[2] else None] for f in self.failures],
        }


def _run(args):
    kind, inst = args
    return SUITES[kind](inst)


def check_all(kind, instances, jobs=1) -> Tally:
    tally = Tally()
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            reps = ex.map(_run, [(kind, x) for x in instances], chunksize=32)
            for i, rep in enumerate(reps):
                tally.add(i, rep)
    else:
        for i, inst in enumerate(instances):
            tally.add(i, SUITES[kind](inst))
    return tally
