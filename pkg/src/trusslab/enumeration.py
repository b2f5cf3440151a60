"""Exhaustive enumeration of small structures.

Semigroup tables are generated by row-major backtracking that, after each
cell assignment, re-checks exactly the associativity triples whose four
products have just become defined. Product kinds (brace-like trusses,
semi-braces, almost semi-braces) iterate over additive semigroups and
multiplicative groups and search the auxiliary data with pruning. Every
yielded instance is re-verified with its full verifier before it is yielded.

Streams are deterministic: lexicographic in (add, mul, auxiliary data).
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product

from . import algebra as alg
from .errors import OrderTooLarge, TrussLabError
from .semibrace import AlmostLeftSemiBrace, LeftSemiBrace, check_almost_law, verify_almost
from .semibrace import verify_left_semi_brace
from .truss import BraceLikeSemiTruss, verify_brace_like

KINDS = ("semigroup", "group", "brace-like", "left-semi-brace", "almost")

DEFAULT_MAX = {
    "semigroup": 4,
    "group": 6,
    "brace-like": 3,
    "left-semi-brace": 4,
    "almost": 4,
}
SLOW_MAX = {"brace-like": 4}


def max_order(kind: str, slow=False) -> int:
    env = os.environ.get("TRUSSLAB_MAX_ORDER")
    if env:
        return int(env)
    if slow and kind in SLOW_MAX:
        return SLOW_MAX[kind]
    return DEFAULT_MAX[kind]


def _check_order(kind, n, slow=False):
    if kind not in KINDS:
        raise TrussLabError(f"unknown kind {kind!r}; expected one of {KINDS}")
    if n < 1:
        raise TrussLabError("order must be at least 1")
    cap = max_order(kind, slow)
    if n > cap:
        raise OrderTooLarge(f"order {n} exceeds the cap {cap} for kind {kind!r}")


def associative_tables(n: int, latin=False):
    """Every associative n x n table in lexicographic order.

    With ``latin`` each row and column must be a permutation, which is what
    group enumeration needs and prunes far harder.
    """
    N = n * n
    T = [-1] * N
    rows_used = [set() for _ in range(n)]
    cols_used = [set() for _ in range(n)]

    def consistent(a, b):
        v = T[a * n + b]
        for z in range(n):
            l, bz = T[v * n + z], T[b * n + z]
            if l >= 0 and bz >= 0:
                r = T[a * n + bz]
                if r >= 0 and l != r:
                    return False
        for x in range(n):
            xa = T[x * n + a]
            if xa >= 0:
                l, r = T[xa * n + b], T[x * n + v]
                if l >= 0 and r >= 0 and l != r:
                    return False
        for x in range(n):
            for y in range(n):
                if T[x * n + y] == a:
                    yb = T[y * n + b]
                    if yb >= 0:
                        r = T[x * n + yb]
                        if r >= 0 and r != v:
                            return False
                if T[x * n + y] == b:
                    ax = T[a * n + x]
                    if ax >= 0:
                        l = T[ax * n + y]
                        if l >= 0 and l != v:
                            return False
        return True

    def go(k):
        if k == N:
            yield tuple(tuple(T[i * n:(i + 1) * n]) for i in range(n))
            return
        a, b = divmod(k, n)
        for v in range(n):
            if latin and (v in rows_used[a] or v in cols_used[b]):
                continue
            T[k] = v
            if latin:
                rows_used[a].add(v)
                cols_used[b].add(v)
            if consistent(a, b):
                yield from go(k + 1)
            if latin:
                rows_used[a].discard(v)
                cols_used[b].discard(v)
        T[k] = -1

    yield from go(0)


def _relabel(component, perm):
    if component and isinstance(component[0], tuple):
        return alg.relabel_table(component, perm)
    return alg.relabel_map(component, perm)


def canonical_form(components: tuple, n: int) -> tuple:
    """Lexicographically least relabelling of a tuple of tables and maps."""
    return min(
        tuple(_relabel(c, perm) for c in components) for perm in permutations(range(n))
    )


def _dedupe(stream, n, parts, build):
    seen = set()
    for item in stream:
        key = canonical_form(parts(item), n)
        if key not in seen:
            seen.add(key)
            yield build(key)


def enum_semigroups(n: int, modulo_iso=False):
    _check_order("semigroup", n)
    stream = (t for t in associative_tables(n) if alg.check_associative(t))
    if modulo_iso:
        stream = _dedupe(stream, n, lambda t: (t,), lambda k: k[0])
    yield from stream


def _groups(n):
    for t in associative_tables(n, latin=True):
        if alg.identity_element(t) is not None:
            yield alg.as_group(t)


def enum_groups(n: int, modulo_iso=False):
    _check_order("group", n)
    stream = _groups(n)
    if modulo_iso:
        stream = _dedupe(stream, n, lambda g: (g.op,), lambda k: alg.as_group(k[0]))
    yield from stream


def generators(g: alg.FiniteGroup) -> list[int]:
    """A small generating set, chosen greedily in index order."""
    gens: list[int] = []
    span = {g.identity}
    for x in range(g.n):
        if x in span:
            continue
        gens.append(x)
        span = _closure(g, gens)
        if len(span) == g.n:
            break
    return gens or [g.identity]


def _closure(g, gens):
    span = set(gens)
    frontier = list(gens)
    while frontier:
        x = frontier.pop()
        for s in gens:
            y = g.op[x][s]
            if y not in span:
                span.add(y)
                frontier.append(y)
    return span


def lambda_morphisms(g: alg.FiniteGroup, candidates: list[list[tuple]]):
    """Semigroup morphisms a -> lam_a from (B,*) with lam_a drawn from candidates[a].

    Values are chosen on a generating set and propagated by lam_(x*s) = lam_x lam_s;
    conflicting or out-of-candidate propagations are discarded.
    """
    gens = generators(g)
    allowed = [set(c) for c in candidates]
    out = []
    for choice in product(*(candidates[s] for s in gens)):
        lam = dict(zip(gens, choice))
        frontier = list(gens)
        ok = True
        while frontier and ok:
            x = frontier.pop()
            for s in gens:
                y = g.op[x][s]
                val = alg.compose(lam[x], lam[s])
                if y in lam:
                    if lam[y] != val:
                        ok = False
                        break
                elif val in allowed[y]:
                    lam[y] = val
                    frontier.append(y)
                else:
                    ok = False
                    break
        if ok and len(lam) == g.n:
            out.append(tuple(lam[a] for a in range(g.n)))
    return sorted(set(out))


def _law_candidates(add, mul, ends):
    n = len(add)
    cands = []
    for a in range(n):
        ok = []
        for phi in ends:
            # the law for a fixed a only reads lam_a
            if all(
                mul[a][add[b][c]] == add[mul[a][b]][phi[c]]
                for b in range(n)
                for c in range(n)
            ):
                ok.append(phi)
        cands.append(ok)
    return cands


def _brace_like_for_add(add, groups):
    ends = alg.endomorphisms(add)
    out = []
    for g in groups:
        cands = _law_candidates(add, g.op, ends)
        if any(not c for c in cands):
            continue
        for lam in lambda_morphisms(g, cands):
            if verify_brace_like(add, g.op, lam):
                out.append(BraceLikeSemiTruss(add, g.op, lam))
    return out


def _semi_braces_for_add(add, groups):
    out = []
    for g in groups:
        if check_almost_law(add, g.op, g.inverse):
            if verify_left_semi_brace(add, g.op):
                out.append(LeftSemiBrace(add, g.op))
    return out


def _almost_for_add(add, groups):
    out = []
    for g in groups:
        mul, inv = g.op, g.inverse
        # iota(1) determines iota: iota(a) = a^-1 * iota(1)
        iotas = sorted(
            tuple(mul[inv[a]][i1] for a in range(g.n)) for i1 in range(g.n)
        )
        for iota in iotas:
            if check_almost_law(add, mul, iota) and verify_almost(add, mul, iota):
                out.append(AlmostLeftSemiBrace(add, mul, iota))
    return out


_PER_ADD = {
    "brace-like": _brace_like_for_add,
    "left-semi-brace": _semi_braces_for_add,
    "almost": _almost_for_add,
}


def _per_add_job(args):
    kind, add, groups = args
    return _PER_ADD[kind](add, groups)


def _product_kind(kind, n, jobs=1):
    groups = list(_groups(n))
    adds = list(associative_tables(n))
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            for chunk in ex.map(_per_add_job, [(kind, a, groups) for a in adds], chunksize=16):
                yield from chunk
    else:
        for add in adds:
            yield from _PER_ADD[kind](add, groups)


def _parts(kind):
    if kind == "brace-like":
        return (lambda s: (s.add, s.mul, s.lam)), (lambda k: BraceLikeSemiTruss(*k))
    if kind == "left-semi-brace":
        return (lambda s: (s.add, s.mul)), (lambda k: LeftSemiBrace(*k))
    return (lambda s: (s.add, s.mul, s.iota)), (lambda k: AlmostLeftSemiBrace(*k))


def _enum_product(kind, n, modulo_iso, jobs, slow=False):
    _check_order(kind, n, slow)
    stream = _product_kind(kind, n, jobs)
    if modulo_iso:
        parts, build = _parts(kind)
        stream = _dedupe(stream, n, parts, build)
    yield from stream


def enum_brace_like(n: int, modulo_iso=False, jobs=1, slow=False):
    yield from _enum_product("brace-like", n, modulo_iso, jobs, slow)


def enum_left_semi_braces(n: int, modulo_iso=False, jobs=1):
    yield from _enum_product("left-semi-brace", n, modulo_iso, jobs)


def enum_almost(n: int, modulo_iso=False, jobs=1):
    yield from _enum_product("almost", n, modulo_iso, jobs)


# unpruned oracles -------------------------------------------------------


def brute_semigroups(n):
    return [t for t in alg.all_tables(n) if alg.check_associative(t)]


def brute_groups(n):
    return [alg.as_group(t) for t in alg.all_tables(n) if alg.is_group(t)]


def brute_brace_like(n):
    tables = list(alg.all_tables(n))
    out = []
    for add, mul, lam in product(tables, tables, tables):
        if verify_brace_like(add, mul, lam):
            out.append(BraceLikeSemiTruss(add, mul, lam))
    return out


def brute_left_semi_braces(n):
    tables = list(alg.all_tables(n))
    return [
        LeftSemiBrace(add, mul)
        for add, mul in product(tables, tables)
        if verify_left_semi_brace(add, mul)
    ]


def brute_almost(n):
    tables = list(alg.all_tables(n))
    out = []
    for add, mul in product(tables, tables):
        for iota in alg.all_maps(n):
            if verify_almost(add, mul, iota):
                out.append(AlmostLeftSemiBrace(add, mul, tuple(iota)))
    return out


# driver -----------------------------------------------------------------


@dataclass
class EnumSpec:
    order: int
    kind: str
    modulo_iso: bool = False
    max_count: int | None = None
    time_budget: float | None = None
    jobs: int = 1
    slow: bool = False


@dataclass
class EnumResult:
    spec: EnumSpec
    instances: list = field(default_factory=list)
    complete: bool = True
    reason: str = ""
    elapsed: float = 0.0


def stream(spec: EnumSpec):
    n, kind = spec.order, spec.kind
    if kind == "semigroup":
        return enum_semigroups(n, spec.modulo_iso)
    if kind == "group":
        return enum_groups(n, spec.modulo_iso)
    if kind == "brace-like":
        return enum_brace_like(n, spec.modulo_iso, spec.jobs, spec.slow)
    if kind == "left-semi-brace":
        return enum_left_semi_braces(n, spec.modulo_iso, spec.jobs)
    if kind == "almost":
        return enum_almost(n, spec.modulo_iso, spec.jobs)
    raise TrussLabError(f"unknown kind {kind!r}; expected one of {KINDS}")


def run_enumeration(spec: EnumSpec) -> EnumResult:
    """Collect a stream, stopping cleanly at the count or time cap."""
    _check_order(spec.kind, spec.order, spec.slow)
    res = EnumResult(spec)
    start = time.perf_counter()
    for item in stream(spec):
        res.instances.append(item)
        if spec.max_count is not None and len(res.instances) >= spec.max_count:
            res.complete, res.reason = False, f"instance cap {spec.max_count} reached"
            break
        if spec.time_budget is not None and time.perf_counter() - start > spec.time_budget:
            res.complete, res.reason = False, f"time budget {spec.time_budget}s exceeded"
            break
    res.elapsed = time.perf_counter() - start
    return res
