"""Radicals via prime intersection and via power membership.

The two algorithms are deliberately independent: one intersects the prime
hyperideals above Q, the other searches for an exponent k with x^k in Q.
Power membership is monotone in k on hyperideals (absorption), so the
exponent search needs no special exponent shapes and can stop at the
carrier size (the power sequence is deterministic, hence eventually cyclic).
Agreement of the two algorithms is measured by the test suite, not assumed
here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable

from .core import HyperringTable
from .ideals import _cache, enumerate_hyperideals, ideal_sort_key


@dataclass(frozen=True)
class RadicalResult:
    members: frozenset[int]
    exponents: dict[int, int]  # least k with x^k in Q, for members where one exists


def product_multisets(A: HyperringTable) -> list[tuple[tuple[int, ...], int]]:
    """All n-multisets with their products, cached per structure."""
    cache = _cache(A)
    if "g_multisets" not in cache:
        cache["g_multisets"] = [
            (t, A.g(*t)) for t in combinations_with_replacement(A.elements, A.n)
        ]
    return cache["g_multisets"]


def is_prime_set(A: HyperringTable, Q: frozenset[int]) -> tuple[bool, tuple[int, ...] | None]:
    """Elementwise primality; returns the first offending multiset if any."""
    if len(Q) == A.size:
        return False, None
    for t, p in product_multisets(A):
        if p in Q and not any(x in Q for x in t):
            return False, t
    return True, None


def enumerate_primes(A: HyperringTable) -> list[frozenset[int]]:
    cache = _cache(A)
    if "primes" not in cache:
        cache["primes"] = sorted(
            (q for q in enumerate_hyperideals(A)
             if len(q) < A.size and is_prime_set(A, q)[0]),
            key=ideal_sort_key,
        )
    return cache["primes"]


def _least_exponent(A: HyperringTable, Q: frozenset[int], x: int) -> int | None:
    acc = x
    for k in range(1, A.size + 1):
        if acc in Q:
            return k
        acc = A.mul2(acc, x)
    return None


def radical_by_primes(A: HyperringTable, Q: Iterable[int]) -> RadicalResult:
    """Intersection of the primes above Q; the whole carrier if there are none."""
    Q = frozenset(Q)
    above = [p for p in enumerate_primes(A) if Q <= p]
    if above:
        members = frozenset(A.elements)
        for p in above:
            members &= p
    else:
        members = frozenset(A.elements)
    exps = {}
    for x in sorted(members):
        k = _least_exponent(A, Q, x)
        if k is not None:
            exps[x] = k
    return RadicalResult(members, exps)


def radical_by_powers(A: HyperringTable, Q: Iterable[int]) -> RadicalResult:
    """Elements with some power inside Q, with the least exponent recorded."""
    Q = frozenset(Q)
    exps = {}
    for x in A.elements:
        k = _least_exponent(A, Q, x)
        if k is not None:
            exps[x] = k
    return RadicalResult(frozenset(exps), exps)


def radical_members(A: HyperringTable, Q: frozenset[int], mode: str = "primes") -> frozenset[int]:
    """Cached radical membership set, used by the predicate scans."""
    cache = _cache(A)
    key = ("rad", mode, Q)
    if key not in cache:
        if mode == "primes":
            cache[key] = radical_by_primes(A, Q).members
        elif mode == "powers":
            cache[key] = radical_by_powers(A, Q).members
        else:
            raise ValueError(f"unknown radical mode {mode!r}")
    return cache[key]
