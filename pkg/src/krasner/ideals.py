"""Hyperideal and multiplicative-set machinery.

Hyperideals are represented as plain frozensets of element ids, always
carried alongside their ambient :class:`~krasner.core.HyperringTable`.
Recognition checks exactly the four defining closure properties (zero,
negation, hyperaddition, product absorption); generation is a least fixed
point over the same rules.  All enumerations are deterministic: results are
ordered by size, then by sorted membership.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Sequence

from .core import HyperringTable
from .errors import ArityError, PreconditionError

Ideal = frozenset


@dataclass(frozen=True)
class IdealCheck:
    ok: bool
    reason: str | None = None
    witness: tuple[str, ...] = ()


def _cache(table: HyperringTable) -> dict:
    cache = getattr(table, "_krasner_cache", None)
    if cache is None:
        cache = {}
        setattr(table, "_krasner_cache", cache)
    return cache


def ideal_sort_key(q: frozenset[int]):
    return (len(q), tuple(sorted(q)))


def is_hyperideal(A: HyperringTable, Q: Iterable[int]) -> IdealCheck:
    """Check the four closure properties, reporting the first violation."""
    Q = frozenset(Q)
    lab = A.labels
    if not Q <= frozenset(A.elements):
        bad = min(set(Q) - set(A.elements))
        return IdealCheck(False, "outside-carrier", (str(bad),))
    if A.zero not in Q:
        return IdealCheck(False, "missing-zero", (lab[A.zero],))
    for q in sorted(Q):
        if A.negation[q] not in Q:
            return IdealCheck(False, "negation-escape", (lab[q],))
    for key in combinations_with_replacement(sorted(Q), A.m):
        val = A.f(*key)
        if not val <= Q:
            out = min(val - Q)
            return IdealCheck(False, "hyperaddition-escape",
                              tuple(lab[x] for x in key) + (lab[out],))
    for q in sorted(Q):
        for rest in combinations_with_replacement(A.elements, A.n - 1):
            if A.g(q, *rest) not in Q:
                return IdealCheck(False, "absorption-escape",
                                  (lab[q],) + tuple(lab[x] for x in rest))
    return IdealCheck(True)


def generate_hyperideal(A: HyperringTable, seed: Iterable[int]) -> frozenset[int]:
    """Smallest hyperideal containing the seed."""
    current = set(seed) | {A.zero}
    while True:
        new = set(current)
        new |= {A.negation[x] for x in current}
        for q in list(new):
            for rest in combinations_with_replacement(A.elements, A.n - 1):
                new.add(A.g(q, *rest))
        for key in combinations_with_replacement(sorted(new), A.m):
            new |= A.f(*key)
        if new == current:
            return frozenset(current)
        current = new


def principal(A: HyperringTable, x: int) -> frozenset[int]:
    """The hyperideal {g(r, x, 1, ..., 1) : r in A} generated by one element."""
    out = frozenset(A.mul2(r, x) for r in A.elements)
    check = is_hyperideal(A, out)
    if not check.ok:
        raise PreconditionError(
            f"principal set of {A.label(x)} is not a hyperideal "
            f"({check.reason} at {check.witness}); structure likely fails axioms"
        )
    return out


def enumerate_hyperideals(A: HyperringTable) -> list[frozenset[int]]:
    """All hyperideals, by closure-seeded search, smallest first."""
    cache = _cache(A)
    if "ideals" not in cache:
        base = generate_hyperideal(A, ())
        found = {base}
        frontier = [base]
        while frontier:
            current = frontier.pop()
            for x in A.elements:
                if x in current:
                    continue
                grown = generate_hyperideal(A, current | {x})
                if grown not in found:
                    found.add(grown)
                    frontier.append(grown)
        cache["ideals"] = sorted(found, key=ideal_sort_key)
    return cache["ideals"]


def hyperideals_by_powerset(A: HyperringTable) -> list[frozenset[int]]:
    """Brute-force oracle: filter the whole powerset. Only for small carriers."""
    out = []
    members = sorted(A.elements)
    for r in range(1, A.size + 1):
        for sub in combinations(members, r):
            q = frozenset(sub)
            if is_hyperideal(A, q).ok:
                out.append(q)
    return sorted(out, key=ideal_sort_key)


def colon(A: HyperringTable, Q: Iterable[int], x: int) -> frozenset[int]:
    """(Q : x) = {a : g(a, x, 1, ..., 1) in Q}."""
    Q = frozenset(Q)
    out = frozenset(a for a in A.elements if A.mul2(a, x) in Q)
    check = is_hyperideal(A, out)
    if not check.ok:
        raise PreconditionError(
            f"colon set (Q : {A.label(x)}) is not a hyperideal ({check.reason})"
        )
    return out


def intersect_ideals(ideals: Sequence[Iterable[int]]) -> frozenset[int]:
    if not ideals:
        raise ArityError("intersection of an empty family")
    out = frozenset(ideals[0])
    for q in ideals[1:]:
        out &= frozenset(q)
    return out


def set_product(A: HyperringTable, sets: Sequence[Iterable[int]]) -> frozenset[int]:
    """Elementwise product set g(Q1, ..., Qn) over all choices."""
    if len(sets) != A.n:
        raise ArityError(f"set product expects {A.n} sets, got {len(sets)}")
    return A.g_on_sets(*sets)


def fold_product_sets(A: HyperringTable, sets: Sequence[Iterable[int]]) -> frozenset[int]:
    """Same value as :func:`set_product` on associative tables, but folded
    pairwise with deduplication between steps; used by the bulk scans."""
    if len(sets) != A.n:
        raise ArityError(f"set product expects {A.n} sets, got {len(sets)}")
    acc = frozenset(sets[0])
    for s in sets[1:]:
        acc = frozenset(A.mul2(x, y) for x in acc for y in frozenset(s))
    return acc


def product_ideal(A: HyperringTable, ideals: Sequence[Iterable[int]]) -> frozenset[int]:
    """Hyperideal generated by the elementwise product set."""
    return generate_hyperideal(A, set_product(A, ideals))


def is_multiplicative(A: HyperringTable, S: Iterable[int]) -> bool:
    S = frozenset(S)
    if not S:
        return False
    for t in combinations_with_replacement(sorted(S), A.n):
        if A.g(*t) not in S:
            return False
    return True


def multiplicative_closure(A: HyperringTable, seed: Iterable[int]) -> frozenset[int]:
    """Least superset of the seed closed under g; rejects closures hitting zero."""
    current = frozenset(seed)
    if not current:
        raise PreconditionError("empty seed for multiplicative closure")
    while True:
        new = set(current)
        for t in combinations_with_replacement(sorted(current), A.n):
            new.add(A.g(*t))
        if A.zero in new:
            raise PreconditionError(
                "degenerate multiplicative set: closure reaches zero"
            )
        if frozenset(new) == current:
            return current
        current = frozenset(new)


def mul_set(A: HyperringTable, members: Iterable[int]) -> frozenset[int]:
    """Validate a multiplicative set: nonempty, zero-free, closed under g."""
    S = frozenset(members)
    if not S:
        raise PreconditionError("multiplicative set must be nonempty")
    if A.zero in S:
        raise PreconditionError("multiplicative set must not contain zero")
    if not is_multiplicative(A, S):
        raise PreconditionError(
            f"set {{{','.join(A.label_set(S))}}} is not closed under g"
        )
    return S


def enumerate_mul_sets(A: HyperringTable, max_size: int = 4) -> list[frozenset[int]]:
    """All zero-free multiplicative subsets up to the size cap, deterministic order."""
    cache = _cache(A)
    key = ("mulsets", max_size)
    if key not in cache:
        nonzero = [x for x in A.elements if x != A.zero]
        out = []
        for r in range(1, max_size + 1):
            for sub in combinations(nonzero, r):
                S = frozenset(sub)
                if is_multiplicative(A, S):
                    out.append(S)
        cache[key] = sorted(out, key=ideal_sort_key)
    return cache[key]
