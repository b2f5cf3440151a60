"""Cayley-table primitives.

Elements are the dense indices ``0..n-1``. A table is a tuple of row tuples with
``op[a][b]`` the product of ``a`` and ``b``; self-maps are tuples with ``f[a]``
the image of ``a``. Every check is a finite loop over the table, and every check
that can fail reports the lexicographically first counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .errors import (
    EmptySubset,
    MissingInverse,
    NoIdentity,
    NotAssociative,
    NotIdempotent,
)
from .report import PASS, Check, fail

Table = tuple[tuple[int, ...], ...]
SelfMap = tuple[int, ...]


def make_table(rows: Sequence[Sequence[int]]) -> Table:
    """Freeze ``rows`` into a square table, checking shape and entry range."""
    n = len(rows)
    if n < 1:
        raise ValueError("table must have at least one row")
    out = []
    for a, row in enumerate(rows):
        if len(row) != n:
            raise ValueError(f"row {a} has length {len(row)}, expected {n}")
        for b, v in enumerate(row):
            if not (isinstance(v, int) and 0 <= v < n):
                raise ValueError(f"entry [{a}][{b}] = {v!r} out of range [0, {n})")
        out.append(tuple(row))
    return tuple(out)


def make_map(images: Sequence[int], n: int) -> SelfMap:
    if len(images) != n:
        raise ValueError(f"map has length {len(images)}, expected {n}")
    for a, v in enumerate(images):
        if not (isinstance(v, int) and 0 <= v < n):
            raise ValueError(f"image [{a}] = {v!r} out of range [0, {n})")
    return tuple(images)


def table_from_function(n: int, fn) -> Table:
    return tuple(tuple(fn(a, b) for b in range(n)) for a in range(n))


def left_zero(n: int) -> Table:
    return table_from_function(n, lambda a, b: a)


def right_zero(n: int) -> Table:
    return table_from_function(n, lambda a, b: b)


def cyclic(n: int) -> Table:
    return table_from_function(n, lambda a, b: (a + b) % n)


def transpose(op: Table) -> Table:
    return tuple(zip(*op))


def identity_map(n: int) -> SelfMap:
    return tuple(range(n))


def compose(f: SelfMap, g: SelfMap) -> SelfMap:
    """The map ``x -> f(g(x))``."""
    return tuple(f[x] for x in g)


def is_bijective(f: SelfMap) -> bool:
    return len(set(f)) == len(f)


def inverse_map(f: SelfMap) -> SelfMap:
    if not is_bijective(f):
        raise ValueError("map is not bijective")
    inv = [0] * len(f)
    for a, b in enumerate(f):
        inv[b] = a
    return tuple(inv)


def check_associative(op: Table) -> Check:
    n = len(op)
    for a in range(n):
        row = op[a]
        for b in range(n):
            ab = op[a][b]
            ab_row = op[ab]
            b_row = op[b]
            for c in range(n):
                if ab_row[c] != row[b_row[c]]:
                    return fail(a, b, c)
    return PASS


@dataclass(frozen=True)
class FiniteGroup:
    op: Table
    identity: int
    inverse: SelfMap

    @property
    def n(self):
        return len(self.op)

    def __call__(self, a, b):
        return self.op[a][b]


def identity_element(op: Table) -> int | None:
    n = len(op)
    for e in range(n):
        if all(op[e][x] == x and op[x][e] == x for x in range(n)):
            return e
    return None


def as_group(op: Table) -> FiniteGroup:
    """Identity and inverse array of ``op``; raises naming the first missing axiom."""
    w = check_associative(op)
    if not w:
        raise NotAssociative(w.witness)
    e = identity_element(op)
    if e is None:
        raise NoIdentity()
    n = len(op)
    inverse = []
    for a in range(n):
        for b in range(n):
            if op[a][b] == e and op[b][a] == e:
                inverse.append(b)
                break
        else:
            raise MissingInverse(a)
    return FiniteGroup(op, e, tuple(inverse))


def is_group(op: Table) -> bool:
    try:
        as_group(op)
    except (NotAssociative, NoIdentity, MissingInverse):
        return False
    return True


def idempotents(op: Table) -> frozenset[int]:
    return frozenset(e for e in range(len(op)) if op[e][e] == e)


def has_zero_element(op: Table) -> int | None:
    n = len(op)
    for t in range(n):
        if all(op[t][x] == t and op[x][t] == t for x in range(n)):
            return t
    return None


def product_set(op: Table, xs: Iterable[int], ys: Iterable[int]) -> frozenset[int]:
    ys = tuple(ys)
    return frozenset(op[x][y] for x in xs for y in ys)


def is_subgroup(subset: Iterable[int], g: FiniteGroup) -> bool:
    s = frozenset(subset)
    if not s:
        raise EmptySubset("subset must be nonempty")
    if g.identity not in s:
        return False
    return all(g.inverse[a] in s for a in s) and all(
        g.op[a][b] in s for a in s for b in s
    )


def check_subgroup(subset: Iterable[int], g: FiniteGroup) -> Check:
    """Like :func:`is_subgroup` but names the offending element or pair."""
    s = sorted(set(subset))
    if not s:
        raise EmptySubset("subset must be nonempty")
    if g.identity not in s:
        return fail(g.identity)
    for a in s:
        if g.inverse[a] not in s:
            return fail(a)
    for a in s:
        for b in s:
            if g.op[a][b] not in s:
                return fail(a, b)
    return PASS


def principal_ideal(op: Table, b: int) -> frozenset[int]:
    """B + b + B."""
    every = range(len(op))
    return product_set(op, product_set(op, every, (b,)), every)


def check_simple(op: Table) -> Check:
    w = check_associative(op)
    if not w:
        raise NotAssociative(w.witness)
    n = len(op)
    if n == 1:
        return PASS
    for b in range(n):
        if len(principal_ideal(op, b)) != n:
            return fail(b)
    return PASS


def is_simple(op: Table) -> bool:
    return bool(check_simple(op))


def below(op: Table, f: int, e: int) -> bool:
    """Natural order on idempotents: f <= e iff e+f = f+e = f."""
    return op[e][f] == f and op[f][e] == f


def is_primitive_idempotent(e: int, op: Table) -> bool:
    if op[e][e] != e:
        raise NotIdempotent(f"{e} is not idempotent")
    return all(f == e for f in idempotents(op) if below(op, f, e))


def primitive_idempotents(op: Table) -> frozenset[int]:
    return frozenset(e for e in idempotents(op) if is_primitive_idempotent(e, op))


def is_completely_simple(op: Table) -> bool:
    return is_simple(op) and bool(primitive_idempotents(op))


def check_endomorphism(f: SelfMap, op: Table) -> Check:
    n = len(op)
    for a in range(n):
        for b in range(n):
            if f[op[a][b]] != op[f[a]][f[b]]:
                return fail(a, b)
    return PASS


def is_endomorphism(f: SelfMap, op: Table) -> bool:
    return bool(check_endomorphism(f, op))


def endomorphisms(op: Table) -> list[SelfMap]:
    """All endomorphisms of ``op`` in lexicographic order, by backtracking."""
    n = len(op)
    out = []
    f = [-1] * n

    def consistent(k):
        # pairs that just became fully assigned: k is an argument or the product
        for a in range(k + 1):
            for b in range(k + 1):
                ab = op[a][b]
                if ab > k or k not in (a, b, ab):
                    continue
                if f[ab] != op[f[a]][f[b]]:
                    return False
        return True

    def go(k):
        if k == n:
            out.append(tuple(f))
            return
        for v in range(n):
            f[k] = v
            if consistent(k):
                go(k + 1)
        f[k] = -1

    go(0)
    return out


def power(g: Table, a: int, k: int) -> int:
    """a^k with a^1 = a and a^(k+1) = a * a^k."""
    x = a
    for _ in range(k - 1):
        x = g[a][x]
    return x


def element_order(g: FiniteGroup, a: int) -> int:
    k, x = 1, a
    while x != g.identity:
        x = g.op[a][x]
        k += 1
    return k


def relabel_table(op: Table, perm: Sequence[int]) -> Table:
    """The table of ``op`` transported along the bijection ``perm`` (old -> new)."""
    n = len(op)
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    return tuple(
        tuple(perm[op[inv[x]][inv[y]]] for y in range(n)) for x in range(n)
    )


def relabel_map(f: SelfMap, perm: Sequence[int]) -> SelfMap:
    n = len(f)
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    return tuple(perm[f[inv[x]]] for x in range(n))


def all_tables(n: int):
    """Every n x n table, lexicographically. Only sensible for tiny n."""
    cells = range(n)
    for flat in product(cells, repeat=n * n):
        yield tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))


def all_maps(n: int):
    return product(range(n), repeat=n)
