"""Decision procedures for the primality-type predicates, with witnesses.

Two families share one scan skeleton:

* prime family (``prime``, ``sPrime``, ``weaklySPrime``): a product landing
  in Q needs *some* slot whose (s-scaled) factor lies in Q.
* primary family (``primary``, ``sPrimary``, ``weaklySPrimary``,
  ``stronglyWeaklySPrimary``): a product landing in Q constrains *every*
  slot: the slot's factor must be absorbed into Q by the witness, or the
  product with that slot replaced by the witness must fall into rad(Q).

The per-slot reading for the primary family is forced by the collapse
requirement (S = {1} must reproduce plain primality exactly) and by the
radical promotion law (rad of a primary hyperideal must be prime); the
slot-existential variant satisfies neither.

``weakly`` variants quantify only over tuples with nonzero product; the
``strongly`` variant quantifies over n-tuples of hyperideals with nonzero
product set.  Witness search is in ascending element order, and a failed
predicate stores the counterexample found for the least candidate witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .core import HyperringTable
from .errors import PreconditionError
from .ideals import _cache, enumerate_hyperideals, fold_product_sets, mul_set
from .radical import product_multisets, radical_members

PRIME_FAMILY = ("prime", "sPrime", "weaklySPrime")
PRIMARY_FAMILY = ("primary", "sPrimary", "weaklySPrimary", "stronglyWeaklySPrimary")
ALL_PREDICATES = (
    "prime", "primary", "sPrime", "sPrimary",
    "weaklySPrime", "weaklySPrimary", "stronglyWeaklySPrimary",
)

IMPLICATIONS = (
    ("prime", "primary"),
    ("primary", "sPrimary"),
    ("sPrimary", "weaklySPrimary"),
    ("prime", "sPrime"),
    ("sPrime", "weaklySPrime"),
    ("weaklySPrime", "weaklySPrimary"),
    ("stronglyWeaklySPrimary", "weaklySPrimary"),
)


@dataclass(frozen=True)
class PredicateVerdict:
    predicate: str
    holds: bool
    witness: str | None = None
    counterexample: tuple | None = None
    detail: str | None = None


@dataclass(frozen=True)
class ClassificationReport:
    structure: str
    ideal: tuple[str, ...]
    mulset: tuple[str, ...]
    verdicts: tuple[PredicateVerdict, ...]
    consistency: tuple[tuple[str, bool], ...]

    @property
    def consistent(self) -> bool:
        return all(ok for _, ok in self.consistency)

    def verdict(self, predicate: str) -> PredicateVerdict:
        for v in self.verdicts:
            if v.predicate == predicate:
                return v
        raise KeyError(predicate)


def _require_proper(A: HyperringTable, Q: frozenset[int]) -> None:
    if len(Q) == A.size:
        raise PreconditionError("predicate requires a proper hyperideal")


def _require_disjoint(A: HyperringTable, Q: frozenset[int], S: frozenset[int]) -> None:
    meet = Q & S
    if meet:
        raise PreconditionError(
            f"Q meets S at {{{','.join(A.label_set(meet))}}}"
        )


def _subjects(A: HyperringTable, Q: frozenset[int], weak: bool):
    """Product multisets subject to the predicate: product in Q (nonzero if weak)."""
    for t, p in product_multisets(A):
        if p not in Q:
            continue
        if weak and p == A.zero:
            continue
        yield t, p


def _slot_failure(A, Q, rad_q, t, s) -> tuple | None:
    """First slot of t violating the primary condition under witness s, if any.

    Slot i passes when g(s, t_i, 1...) lies in Q, or the product with slot i
    replaced by s lies in rad(Q).
    """
    seen = set()
    for i, x in enumerate(t):
        if x in seen:
            continue
        seen.add(x)
        if A.mul2(s, x) in Q:
            continue
        repl = list(t)
        repl[i] = s
        if A.g(*repl) in rad_q:
            continue
        return (i, x)
    return None


def _scan_prime(A, Q, S, weak: bool, name: str) -> PredicateVerdict:
    lab = A.labels
    first_cx = None
    for s in sorted(S):
        cx = None
        for t, _p in _subjects(A, Q, weak):
            if not any(A.mul2(s, x) in Q for x in set(t)):
                cx = t
                break
        if cx is None:
            return PredicateVerdict(name, True, witness=lab[s])
        if first_cx is None:
            first_cx = (s, cx)
    s, cx = first_cx
    return PredicateVerdict(
        name, False,
        counterexample=tuple(lab[x] for x in cx),
        detail=f"for s={lab[s]} no slot of the tuple is absorbed into Q",
    )


def _scan_primary(A, Q, S, weak: bool, name: str, rad_mode: str) -> PredicateVerdict:
    lab = A.labels
    rad_q = radical_members(A, Q, rad_mode)
    first_cx = None
    for s in sorted(S):
        cx = None
        for t, _p in _subjects(A, Q, weak):
            bad = _slot_failure(A, Q, rad_q, t, s)
            if bad is not None:
                cx = (t, bad)
                break
        if cx is None:
            return PredicateVerdict(name, True, witness=lab[s])
        if first_cx is None:
            first_cx = (s, cx)
    s, (t, (i, x)) = first_cx
    return PredicateVerdict(
        name, False,
        counterexample=tuple(lab[y] for y in t),
        detail=(
            f"for s={lab[s]} slot {i} (element {lab[x]}) fails: "
            f"g(s,{lab[x]},1..) outside Q and the s-substituted product outside rad(Q)"
        ),
    )


def is_prime(A: HyperringTable, Q: frozenset[int]) -> PredicateVerdict:
    _require_proper(A, Q)
    Q = frozenset(Q)
    for t, p in _subjects(A, Q, weak=False):
        if not any(x in Q for x in t):
            return PredicateVerdict(
                "prime", False,
                counterexample=tuple(A.labels[x] for x in t),
                detail="product lies in Q but no factor does",
            )
    return PredicateVerdict("prime", True)


def is_primary(A: HyperringTable, Q: frozenset[int], rad_mode: str = "primes") -> PredicateVerdict:
    _require_proper(A, Q)
    Q = frozenset(Q)
    rad_q = radical_members(A, Q, rad_mode)
    for t, _p in _subjects(A, Q, weak=False):
        bad = None
        seen = set()
        for i, x in enumerate(t):
            if x in seen:
                continue
            seen.add(x)
            if x in Q:
                continue
            repl = list(t)
            repl[i] = A.one
            if A.g(*repl) in rad_q:
                continue
            bad = (i, x)
            break
        if bad is not None:
            i, x = bad
            return PredicateVerdict(
                "primary", False,
                counterexample=tuple(A.labels[y] for y in t),
                detail=(
                    f"slot {i} (element {A.labels[x]}) outside Q and its "
                    f"1-substituted product outside rad(Q)"
                ),
            )
    return PredicateVerdict("primary", True)


def is_s_prime(A, Q, S) -> PredicateVerdict:
    Q, S = frozenset(Q), frozenset(S)
    _require_disjoint(A, Q, S)
    return _scan_prime(A, Q, S, weak=False, name="sPrime")


def is_weakly_s_prime(A, Q, S) -> PredicateVerdict:
    Q, S = frozenset(Q), frozenset(S)
    _require_disjoint(A, Q, S)
    return _scan_prime(A, Q, S, weak=True, name="weaklySPrime")


def is_s_primary(A, Q, S, rad_mode: str = "primes") -> PredicateVerdict:
    Q, S = frozenset(Q), frozenset(S)
    _require_disjoint(A, Q, S)
    return _scan_primary(A, Q, S, weak=False, name="sPrimary", rad_mode=rad_mode)


def is_weakly_s_primary(A, Q, S, rad_mode: str = "primes") -> PredicateVerdict:
    Q, S = frozenset(Q), frozenset(S)
    _require_disjoint(A, Q, S)
    return _scan_primary(A, Q, S, weak=True, name="weaklySPrimary", rad_mode=rad_mode)


def ideal_product_subjects(A: HyperringTable):
    """n-multisets of hyperideals with their product sets, cached."""
    cache = _cache(A)
    if "ideal_products" not in cache:
        ideals = enumerate_hyperideals(A)
        cache["ideal_products"] = [
            (key, fold_product_sets(A, [ideals[i] for i in key]))
            for key in combinations_with_replacement(range(len(ideals)), A.n)
        ]
    return cache["ideal_products"]


def is_strongly_weakly_s_primary(A, Q, S, rad_mode: str = "primes") -> PredicateVerdict:
    """Ideal-tuple analogue of weaklySPrimary.

    Quantifies over n-tuples of hyperideals whose product set is nonzero and
    contained in Q; each slot must be absorbed into Q by the witness or have
    its s-substituted product set inside rad(Q).
    """
    Q, S = frozenset(Q), frozenset(S)
    _require_disjoint(A, Q, S)
    lab = A.labels
    ideals = enumerate_hyperideals(A)
    rad_q = radical_members(A, Q, rad_mode)
    zero_only = frozenset([A.zero])
    subjects = [
        (key, prod) for key, prod in ideal_product_subjects(A)
        if prod != zero_only and prod <= Q
    ]

    def slot_fails(key, s):
        seen = set()
        for i, qi in enumerate(key):
            if qi in seen:
                continue
            seen.add(qi)
            if all(A.mul2(s, q) in Q for q in ideals[qi]):
                continue
            rest = [ideals[key[j]] for j in range(A.n) if j != i]
            if fold_product_sets(A, rest + [frozenset([s])]) <= rad_q:
                continue
            return i
        return None

    first_cx = None
    for s in sorted(S):
        cx = None
        for key, _prod in subjects:
            i = slot_fails(key, s)
            if i is not None:
                cx = (key, i)
                break
        if cx is None:
            return PredicateVerdict("stronglyWeaklySPrimary", True, witness=lab[s])
        if first_cx is None:
            first_cx = (s, cx)
    s, (key, i) = first_cx
    tuple_desc = tuple("{" + ",".join(A.label_set(ideals[q])) + "}" for q in key)
    return PredicateVerdict(
        "stronglyWeaklySPrimary", False,
        counterexample=tuple_desc,
        detail=f"for s={lab[s]} ideal slot {i} fails both clauses",
    )


def classify_all(A: HyperringTable, Q, S, rad_mode: str = "primes") -> ClassificationReport:
    """Run every predicate and check the implication lattice on the outcome."""
    Q, S = frozenset(Q), frozenset(S)
    _require_proper(A, Q)
    S = mul_set(A, S)
    _require_disjoint(A, Q, S)
    verdicts = (
        is_prime(A, Q),
        is_primary(A, Q, rad_mode),
        is_s_prime(A, Q, S),
        is_s_primary(A, Q, S, rad_mode),
        is_weakly_s_prime(A, Q, S),
        is_weakly_s_primary(A, Q, S, rad_mode),
        is_strongly_weakly_s_primary(A, Q, S, rad_mode),
    )
    held = {v.predicate: v.holds for v in verdicts}
    consistency = tuple(
        (f"{a} => {b}", (not held[a]) or held[b]) for a, b in IMPLICATIONS
    )
    return ClassificationReport(
        structure=A.name,
        ideal=tuple(A.label_set(Q)),
        mulset=tuple(A.label_set(S)),
        verdicts=verdicts,
        consistency=consistency,
    )


def cached_verdict(A: HyperringTable, predicate: str, Q: frozenset[int],
                   S: frozenset[int] | None, rad_mode: str = "primes") -> PredicateVerdict:
    """Memoized predicate evaluation keyed on (predicate, Q, S)."""
    cache = _cache(A)
    key = ("pred", predicate, Q, S, rad_mode)
    if key not in cache:
        if predicate == "prime":
            cache[key] = is_prime(A, Q)
        elif predicate == "primary":
            cache[key] = is_primary(A, Q, rad_mode)
        elif predicate == "sPrime":
            cache[key] = is_s_prime(A, Q, S)
        elif predicate == "sPrimary":
            cache[key] = is_s_primary(A, Q, S, rad_mode)
        elif predicate == "weaklySPrime":
            cache[key] = is_weakly_s_prime(A, Q, S)
        elif predicate == "weaklySPrimary":
            cache[key] = is_weakly_s_primary(A, Q, S, rad_mode)
        elif predicate == "stronglyWeaklySPrimary":
            cache[key] = is_strongly_weakly_s_primary(A, Q, S, rad_mode)
        else:
            raise ValueError(f"unknown predicate {predicate!r}")
    return cache[key]
